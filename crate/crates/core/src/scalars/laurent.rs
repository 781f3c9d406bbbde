use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{forward_owned_ops, write_terms};
use super::{rat, Rational, Scalar};
use crate::error::{Error, Result};

/// A Laurent polynomial in `s`, where `s` stands for `q^(1/2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentS {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentS {
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentS { terms }
    }

    pub fn s_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `q^e = s^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::s_pow(2 * e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = LaurentS::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Evaluates at a nonzero rational `s`.
    pub fn eval(&self, s: &Rational) -> Result<Rational> {
        if s.is_zero() {
            if self.terms.keys().any(|&e| e < 0) {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.coeff(0));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| c * rational_pow(s, *e))
            .fold(Rational::zero(), |a, b| a + b))
    }

    /// The substitution `s -> s^(-1)`.
    pub fn invert_variable(&self) -> Self {
        LaurentS {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }
}

pub(crate) fn rational_pow(s: &Rational, e: i64) -> Rational {
    let p = Scalar::pow(s, e.unsigned_abs() as usize);
    if e < 0 {
        Rational::one() / p
    } else {
        p
    }
}

/// `1 - q - q^(-1)` written as `1 - s^2 - s^(-2)`.
pub fn zeta_q() -> LaurentS {
    LaurentS::from_terms([(0, rat(1)), (2, rat(-1)), (-2, rat(-1))])
}

impl Zero for LaurentS {
    fn zero() -> Self {
        LaurentS::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentS {
    fn one() -> Self {
        Self::s_pow(0)
    }
}

impl Scalar for LaurentS {
    fn from_rational(r: Rational) -> Self {
        Self::monomial(r, 0)
    }
}

impl<'a> Add<&'a LaurentS> for &'a LaurentS {
    type Output = LaurentS;
    fn add(self, o: &LaurentS) -> LaurentS {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentS> for &'a LaurentS {
    type Output = LaurentS;
    fn sub(self, o: &LaurentS) -> LaurentS {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentS> for &'a LaurentS {
    type Output = LaurentS;
    fn mul(self, o: &LaurentS) -> LaurentS {
        let mut out = LaurentS::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentS {
    type Output = LaurentS;
    fn neg(self) -> LaurentS {
        LaurentS {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

forward_owned_ops!(LaurentS);

impl fmt::Display for LaurentS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "s", self.terms.iter().rev().map(|(e, c)| (*e, c)))
    }
}

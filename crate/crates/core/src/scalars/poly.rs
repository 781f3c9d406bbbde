use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rational, Scalar};
use crate::error::{Error, Result};

/// A univariate polynomial in `x` over the rationals, stored densely from the
/// constant term up with trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyX {
    coeffs: Vec<Rational>,
}

impl PolyX {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyX { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    pub fn x_pow(e: usize) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyX {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * at + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Returns `p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = Self::new(vec![c.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &lin) + &Self::constant(a.clone())
        })
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => Self::zero(),
        }
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::NotPolynomial(format!("({self}) / ({d})")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Zero for PolyX {
    fn zero() -> Self {
        PolyX { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for PolyX {
    fn one() -> Self {
        Self::from_ints(&[1])
    }
}

impl Scalar for PolyX {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl<'a> Add<&'a PolyX> for &'a PolyX {
    type Output = PolyX;
    fn add(self, o: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyX::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a PolyX> for &'a PolyX {
    type Output = PolyX;
    fn sub(self, o: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyX::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a PolyX> for &'a PolyX {
    type Output = PolyX;
    fn mul(self, o: &PolyX) -> PolyX {
        if self.is_zero() || o.is_zero() {
            return PolyX::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyX::new(out)
    }
}

impl Neg for &PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        PolyX {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;

forward_owned_ops!(PolyX);

/// Writes `c*var^e` terms from the highest exponent down, e.g. `x^2 - 2*x + 1`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: impl Iterator<Item = (i64, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag.is_one();
        match e {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            "x",
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(e, c)| (e as i64, c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;

    #[test]
    fn product_of_conjugates() {
        let a = PolyX::from_ints(&[-1, 1]);
        let b = PolyX::from_ints(&[1, 1]);
        assert_eq!(&a * &b, PolyX::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PolyX::from_ints(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(PolyX::from_ints(&[1, -2, 1]).to_string(), "x^2 - 2*x + 1");
        assert_eq!(PolyX::zero().to_string(), "0");
        assert_eq!(PolyX::from_ints(&[0, -1]).to_string(), "-x");
        let p = PolyX::new(vec![ratio(1, 2), ratio(-3, 4)]);
        assert_eq!(p.to_string(), "-3/4*x + 1/2");
    }

    #[test]
    fn division_and_gcd() {
        let a = PolyX::from_ints(&[-1, 0, 1]);
        let b = PolyX::from_ints(&[2, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, PolyX::new(vec![ratio(-1, 2), ratio(1, 2)]));
        assert_eq!(a.gcd(&b), PolyX::from_ints(&[1, 1]));
        assert!(a.div_rem(&PolyX::zero()).is_err());
        assert!(a.div_exact(&PolyX::from_ints(&[0, 1])).is_err());
    }

    #[test]
    fn shift_substitutes() {
        let p = PolyX::from_ints(&[0, 0, 1]);
        assert_eq!(p.shift(&rat(-1)), PolyX::from_ints(&[1, -2, 1]));
        assert_eq!(p.eval(&rat(3)), rat(9));
    }
}

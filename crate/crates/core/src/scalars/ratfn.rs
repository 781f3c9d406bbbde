use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::forward_owned_ops;
use super::{PolyX, Rational, Scalar};
use crate::error::{Error, Result};

/// A rational function `num / den` in `x`, kept in lowest terms with a monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFnX {
    num: PolyX,
    den: PolyX,
}

impl RatFnX {
    pub fn new(num: PolyX, den: PolyX) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lead = den.leading().cloned().expect("nonzero denominator");
        let inv = Rational::one() / lead;
        Ok(RatFnX {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: PolyX) -> Self {
        RatFnX {
            num: p,
            den: PolyX::one(),
        }
    }

    pub fn num(&self) -> &PolyX {
        &self.num
    }

    pub fn den(&self) -> &PolyX {
        &self.den
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// The polynomial this function equals, or an error if the reduced
    /// denominator is not constant.
    pub fn to_poly(&self) -> Result<PolyX> {
        if self.den.degree() == Some(0) {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }
}

impl Zero for RatFnX {
    fn zero() -> Self {
        Self::from_poly(PolyX::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFnX {
    fn one() -> Self {
        Self::from_poly(PolyX::one())
    }
}

impl Scalar for RatFnX {
    fn from_rational(r: Rational) -> Self {
        Self::from_poly(PolyX::constant(r))
    }
}

impl From<PolyX> for RatFnX {
    fn from(p: PolyX) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFnX> for &'a RatFnX {
    type Output = RatFnX;
    fn add(self, o: &RatFnX) -> RatFnX {
        if self.den == o.den {
            return RatFnX::new(&self.num + &o.num, self.den.clone()).expect("nonzero denominator");
        }
        RatFnX::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RatFnX> for &'a RatFnX {
    type Output = RatFnX;
    fn sub(self, o: &RatFnX) -> RatFnX {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFnX> for &'a RatFnX {
    type Output = RatFnX;
    fn mul(self, o: &RatFnX) -> RatFnX {
        if self.is_zero() || o.is_zero() {
            return RatFnX::zero();
        }
        RatFnX::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl Neg for &RatFnX {
    type Output = RatFnX;
    fn neg(self) -> RatFnX {
        RatFnX {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_ops!(RatFnX);

impl fmt::Display for RatFnX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

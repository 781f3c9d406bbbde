//! Exact coefficient rings: rationals, polynomials in `x`, Laurent polynomials
//! in `s` (with `s^2 = q`) and reduced rational functions in `x`.

mod chebyshev;
mod laurent;
mod poly;
mod ratfn;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use chebyshev::{chebyshev_shifted_roots, chebyshev_u, chebyshev_u_shifted};
pub use laurent::{zeta_q, LaurentS};
pub use poly::PolyX;
pub use ratfn::RatFnX;

pub type Rational = num_rational::BigRational;

/// A commutative ring with exact equality, used as the coefficient type of
/// algebra elements, path vectors and tensor operators.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

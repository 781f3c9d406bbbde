//! Sparse vectors and operators on `V^{⊗k}` with `V` spanned by
//! `v_{-1}, v_0, v_1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{LaurentS, Rational, Scalar};

/// `3^k`.
pub fn tensor_dim(k: usize) -> usize {
    3usize.pow(k as u32)
}

/// Index of `v_{i_1} ⊗ ... ⊗ v_{i_k}`: base 3 with digit `i_j + 1`, first
/// factor most significant.
pub fn encode(labels: &[i8]) -> usize {
    labels.iter().fold(0, |acc, &a| acc * 3 + (a + 1) as usize)
}

pub fn decode(k: usize, mut index: usize) -> Vec<i8> {
    let mut labels = vec![0i8; k];
    for slot in labels.iter_mut().rev() {
        *slot = (index % 3) as i8 - 1;
        index /= 3;
    }
    labels
}

fn add_into<S: Scalar>(map: &mut BTreeMap<usize, S>, key: usize, c: S) {
    if c.is_zero() {
        return;
    }
    match map.remove(&key) {
        Some(old) => {
            let sum = old + c;
            if !sum.is_zero() {
                map.insert(key, sum);
            }
        }
        None => {
            map.insert(key, c);
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct TensorVector<S> {
    k: usize,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> TensorVector<S> {
    pub fn zero(k: usize) -> Self {
        TensorVector {
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(labels: &[i8]) -> Self {
        let mut v = Self::zero(labels.len());
        v.coeffs.insert(encode(labels), S::one());
        v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeff(&self, labels: &[i8]) -> S {
        self.coeffs
            .get(&encode(labels))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// Nonzero coordinates keyed by encoded index.
    pub fn coords(&self) -> &BTreeMap<usize, S> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, labels: &[i8], c: S) {
        add_into(&mut self.coeffs, encode(labels), c);
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.k);
        for (&i, a) in &self.coeffs {
            add_into(&mut out.coeffs, i, a.clone() * c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, a) in &other.coeffs {
            add_into(&mut out.coeffs, i, -a.clone());
        }
        out
    }
}

impl TensorVector<LaurentS> {
    pub fn eval(&self, s: &Rational) -> Result<TensorVector<Rational>> {
        let mut out = TensorVector::zero(self.k);
        for (&i, a) in &self.coeffs {
            add_into(&mut out.coeffs, i, a.eval(s)?);
        }
        Ok(out)
    }
}

impl<S: Scalar> fmt::Display for TensorVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) * ")?;
            for a in decode(self.k, i) {
                write!(f, "v_{{{a}}}")?;
            }
        }
        Ok(())
    }
}

/// A linear map on `V^{⊗k}`, stored column by column: `cols[i]` is the image
/// of the `i`-th basis tensor.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorOperator<S> {
    k: usize,
    cols: Vec<BTreeMap<usize, S>>,
}

impl<S: Scalar> TensorOperator<S> {
    pub fn zero(k: usize) -> Self {
        TensorOperator {
            k,
            cols: vec![BTreeMap::new(); tensor_dim(k)],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut op = Self::zero(k);
        for (i, col) in op.cols.iter_mut().enumerate() {
            col.insert(i, S::one());
        }
        op
    }

    /// Builds the operator whose image of each basis tensor is given by `f`.
    pub fn from_fn(k: usize, f: impl Fn(&[i8]) -> Vec<(Vec<i8>, S)>) -> Self {
        let mut op = Self::zero(k);
        for (i, col) in op.cols.iter_mut().enumerate() {
            for (out, c) in f(&decode(k, i)) {
                add_into(col, encode(&out), c);
            }
        }
        op
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Matrix entry: coefficient of `output` in the image of `input`.
    pub fn entry(&self, output: &[i8], input: &[i8]) -> S {
        self.cols[encode(input)]
            .get(&encode(output))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nonzeros(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    fn check_size(&self, k: usize) -> Result<()> {
        if self.k != k {
            return Err(Error::SizeMismatch(self.k, k));
        }
        Ok(())
    }

    pub fn apply(&self, v: &TensorVector<S>) -> Result<TensorVector<S>> {
        self.check_size(v.k)?;
        let mut out = TensorVector::zero(self.k);
        for (&i, a) in &v.coeffs {
            for (&o, c) in &self.cols[i] {
                add_into(&mut out.coeffs, o, c.clone() * a.clone());
            }
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_size(other.k)?;
        let mut out = Self::zero(self.k);
        for (col, src) in out.cols.iter_mut().zip(&other.cols) {
            for (&m, b) in src {
                for (&o, a) in &self.cols[m] {
                    add_into(col, o, a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_size(other.k)?;
        let mut out = self.clone();
        for (col, src) in out.cols.iter_mut().zip(&other.cols) {
            for (&o, b) in src {
                add_into(col, o, -b.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.k);
        for (col, src) in out.cols.iter_mut().zip(&self.cols) {
            for (&o, a) in src {
                add_into(col, o, a.clone() * c.clone());
            }
        }
        out
    }

    /// `self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Entries keyed by `output * 3^k + input`, for rank computations.
    pub fn flatten(&self) -> BTreeMap<usize, S> {
        let n = tensor_dim(self.k);
        let mut out = BTreeMap::new();
        for (i, col) in self.cols.iter().enumerate() {
            for (&o, c) in col {
                out.insert(o * n + i, c.clone());
            }
        }
        out
    }
}

impl TensorOperator<LaurentS> {
    pub fn eval(&self, s: &Rational) -> Result<TensorOperator<Rational>> {
        let mut out = TensorOperator::zero(self.k);
        for (col, src) in out.cols.iter_mut().zip(&self.cols) {
            for (&o, a) in src {
                add_into(col, o, a.eval(s)?);
            }
        }
        Ok(out)
    }
}

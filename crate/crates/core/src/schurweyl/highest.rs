//! Highest-weight vectors `w_p = π(d_p^p) u_p` and the decomposition of
//! `V^{⊗k}` they certify.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::combinatorics::{enumerate_paths, m_count, MotzkinPath};
use crate::diagrams::diagram_from_paths;
use crate::error::Result;
use crate::linalg;
use crate::scalars::{LaurentS, Rational, Scalar};

use super::{decode, diagram_operator, qgroup_operator, Param, QGen, TensorOperator, TensorVector};

/// Labels of `u_p`: `v_{-1}` at left ends of edges, `v_1` at right ends and
/// at white vertices, `v_0` elsewhere.
pub fn source_vector(p: &MotzkinPath) -> Vec<i8> {
    let f = p.to_factor();
    let mut labels = vec![0i8; p.len()];
    for &(a, b) in f.edges() {
        labels[a - 1] = -1;
        labels[b - 1] = 1;
    }
    for &w in f.whites() {
        labels[w - 1] = 1;
    }
    labels
}

pub fn highest_weight_vector<S: Scalar>(
    p: &MotzkinPath,
    param: &Param<S>,
) -> Result<TensorVector<S>> {
    let d = diagram_from_paths(p, p)?;
    diagram_operator(&d, param).apply(&TensorVector::basis(&source_vector(p)))
}

/// For each vector, the largest `n` with `F^n w != 0`, or `None` when the
/// string is longer than `limit`.
pub fn f_string_lengths<S: Scalar>(
    vectors: &[TensorVector<S>],
    k: usize,
    param: &Param<S>,
    limit: usize,
) -> Result<Vec<Option<usize>>> {
    let f = qgroup_operator(QGen::F, k, param);
    vectors
        .iter()
        .map(|w| {
            let mut cur = w.clone();
            for n in 0..=limit {
                let next = f.apply(&cur)?;
                if next.is_zero() {
                    return Ok(Some(n));
                }
                cur = next;
            }
            Ok(None)
        })
        .collect()
}

/// Result of checking the highest-weight vectors `w_p` for all `p` in `P_k`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct DecompositionReport {
    pub k: usize,
    /// Number of `w_p` of `K`-weight `q^r`, indexed by `r`.
    pub multiplicities: Vec<usize>,
    /// `m_{k,r}`, indexed by `r`.
    pub expected: Vec<usize>,
    /// `Σ_r (r + 1) m_{k,r}`.
    pub dimension_total: usize,
    pub tensor_dimension: usize,
    /// Every `w_p` is killed by `E` and has `K`-weight `q^{rank(p)}`.
    pub highest_weight: bool,
    /// The coefficient of `u_p` in `w_p` is `(-s^{-2})^{ε(p)}`.
    pub leading_coefficients: bool,
    /// `F^{rank(p)} w_p != 0 = F^{rank(p)+1} w_p`.
    pub f_strings: bool,
    /// Rank of `{w_p}` at the sample value of `s`, against `|P_k|`.
    pub independent_rank: usize,
    pub path_count: usize,
    pub pass: bool,
}

/// Symbolic highest-weight checks for every `p` in `P_k`, plus the rank of
/// `{w_p}` after setting `s = s_val`.
pub fn decomposition_audit(k: usize, s_val: &Rational) -> Result<DecompositionReport> {
    let param = Param::<LaurentS>::symbolic();
    let e = qgroup_operator(QGen::E, k, &param);
    let kk = qgroup_operator(QGen::K, k, &param);
    let paths = enumerate_paths(k, None);
    let mut multiplicities = vec![0usize; k + 1];
    let mut highest_weight = true;
    let mut leading_coefficients = true;
    let mut vectors = Vec::with_capacity(paths.len());
    for p in &paths {
        let w = highest_weight_vector(p, &param)?;
        let weight = weight_of(&w, &kk, &param)?;
        match weight {
            Some(r) if r >= 0 && (r as usize) <= k => multiplicities[r as usize] += 1,
            _ => highest_weight = false,
        }
        if weight != Some(p.rank() as i64) || !e.apply(&w)?.is_zero() {
            highest_weight = false;
        }
        let lead = LaurentS::monomial(Rational::from_i64(-1), -2).pow(p.edge_count());
        if w.coeff(&source_vector(p)) != lead {
            leading_coefficients = false;
        }
        vectors.push(w);
    }
    let lengths = f_string_lengths(&vectors, k, &param, 2 * k + 1)?;
    let f_strings = lengths
        .iter()
        .zip(&paths)
        .all(|(n, p)| *n == Some(p.rank()));
    let rows = vectors
        .iter()
        .map(|w| w.eval(s_val).map(|v| v.coords().clone()))
        .collect::<Result<Vec<BTreeMap<usize, Rational>>>>()?;
    let independent_rank = linalg::rank(rows);
    let expected: Vec<usize> = (0..=k)
        .map(|r| usize::try_from(m_count(k, r)).expect("small count"))
        .collect();
    let dimension_total = expected.iter().enumerate().map(|(r, m)| (r + 1) * m).sum();
    let tensor_dimension = super::tensor_dim(k);
    let pass = highest_weight
        && leading_coefficients
        && f_strings
        && multiplicities == expected
        && dimension_total == tensor_dimension
        && independent_rank == paths.len();
    Ok(DecompositionReport {
        k,
        multiplicities,
        expected,
        dimension_total,
        tensor_dimension,
        highest_weight,
        leading_coefficients,
        f_strings,
        independent_rank,
        path_count: paths.len(),
        pass,
    })
}

/// The `r` with `K w = q^r w`, if `w` is a nonzero `K`-eigenvector.
fn weight_of(
    w: &TensorVector<LaurentS>,
    kk: &TensorOperator<LaurentS>,
    param: &Param<LaurentS>,
) -> Result<Option<i64>> {
    let Some((&i, _)) = w.coords().iter().next() else {
        return Ok(None);
    };
    let r: i64 = decode(w.k(), i).iter().map(|&a| a as i64).sum();
    let kw = kk.apply(w)?;
    Ok((kw == w.scale(&param.s_pow(2 * r))).then_some(r))
}

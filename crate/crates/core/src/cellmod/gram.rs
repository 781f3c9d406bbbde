//! Gram matrices of the cell modules, their determinants and the
//! semisimplicity criterion.

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{enumerate_paths, m_count, MotzkinPath};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::{chebyshev_u_shifted, PolyX, RatFnX, Rational, Scalar};

use super::bilinear;

/// `G_k^(r)` with rows and columns indexed by `paths` in increasing order.
#[derive(Clone, PartialEq, Debug)]
pub struct GramMatrix {
    pub k: usize,
    pub r: usize,
    pub paths: Vec<MotzkinPath>,
    pub entries: Vec<Vec<PolyX>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Entries as polynomial strings, row by row.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "r": self.r,
            "paths": self.paths,
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

pub fn gram_matrix(k: usize, r: usize) -> GramMatrix {
    let paths = enumerate_paths(k, Some(r));
    let entries = paths
        .par_iter()
        .map(|p| {
            paths
                .iter()
                .map(|q| bilinear(p, q).expect("paths share length and rank"))
                .collect()
        })
        .collect();
    GramMatrix {
        k,
        r,
        paths,
        entries,
    }
}

/// `det G_k^(r)` by fraction-free elimination.
pub fn gram_det_direct(k: usize, r: usize) -> PolyX {
    linalg::det_poly(&gram_matrix(k, r).entries)
}

/// `det G_k^(r)` by evaluation at integer points and interpolation.
pub fn gram_det_interpolated(k: usize, r: usize) -> PolyX {
    let g = gram_matrix(k, r);
    linalg::det_poly_by_interpolation(&g.entries, linalg::row_degree_bound(&g.entries))
}

/// `prod_{s=1}^{floor((k-r)/2)} (u_{s+r}(x-1) / u_{s-1}(x-1))^{m_{k,r+2s}}`,
/// reduced to a polynomial.
pub fn gram_det_formula(k: usize, r: usize) -> Result<PolyX> {
    if r > k {
        return Err(Error::IndexOutOfRange {
            what: "rank",
            index: r,
            k,
        });
    }
    let mut acc = RatFnX::one();
    for s in 1..=(k - r) / 2 {
        let num = RatFnX::from_poly(chebyshev_u_shifted(s + r));
        let den = RatFnX::from_poly(chebyshev_u_shifted(s - 1));
        let e = m_count(k, r + 2 * s).to_usize().expect("small exponent");
        acc = acc * num.checked_div(&den)?.pow(e);
    }
    acc.to_poly()
}

/// Outcome of the semisimplicity test at a specialized parameter.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SemisimpleReport {
    pub k: usize,
    pub x: String,
    pub semisimple: bool,
    pub failing_j: Vec<usize>,
}

/// `M_k(x)` is semisimple iff `u_j(x - 1) != 0` for `1 <= j <= k - 1`.
pub fn is_semisimple(k: usize, x: &Rational) -> SemisimpleReport {
    let failing_j: Vec<usize> = (1..k)
        .filter(|&j| chebyshev_u_shifted(j).eval(x).is_zero())
        .collect();
    SemisimpleReport {
        k,
        x: x.to_string(),
        semisimple: failing_j.is_empty(),
        failing_j,
    }
}

//! The basis change `p -> [p]` on paths ending in `-1`, which makes the
//! Gram matrix block diagonal.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::combinatorics::{enumerate_paths, MotzkinPath, OneFactor};
use crate::error::{Error, Result};
use crate::scalars::{chebyshev_u_shifted, RatFnX};

use super::gram::{gram_matrix, GramMatrix};
use super::PathVector;

/// A 1-factor with one of its edges marked as the pivot. The mark moves left
/// under [`PivotedFactor::next`], so it is stored rather than recomputed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PivotedFactor {
    factor: OneFactor,
    pivot: (usize, usize),
}

impl PivotedFactor {
    /// The factor of a path ending in `-1`, pivoting on the edge at vertex `k`.
    pub fn from_path(p: &MotzkinPath) -> Result<Self> {
        if p.last_step() != Some(-1) {
            return Err(Error::InvalidPath(
                p.steps().to_vec(),
                "pivot needs a final -1 step",
            ));
        }
        let factor = p.to_factor();
        let k = p.len();
        let pivot = *factor
            .edges()
            .iter()
            .find(|e| e.1 == k)
            .expect("a final -1 closes an edge");
        Ok(PivotedFactor { factor, pivot })
    }

    pub fn factor(&self) -> &OneFactor {
        &self.factor
    }

    pub fn pivot(&self) -> (usize, usize) {
        self.pivot
    }

    pub fn path(&self) -> MotzkinPath {
        self.factor.to_path()
    }

    /// Number of white vertices left of the pivot.
    pub fn whites_left(&self) -> usize {
        self.factor
            .whites()
            .iter()
            .filter(|&&w| w < self.pivot.0)
            .count()
    }

    fn other_edges(&self) -> Vec<(usize, usize)> {
        self.factor
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != self.pivot)
            .collect()
    }

    /// `f_•`: the pivot edge deleted.
    pub fn dot(&self) -> OneFactor {
        OneFactor::new(
            self.factor.k(),
            self.factor.whites().to_vec(),
            self.other_edges(),
        )
        .expect("deleting an edge keeps a valid factor")
    }

    /// `f_+`: both ends of the pivot edge turned white.
    pub fn plus(&self) -> OneFactor {
        let mut whites = self.factor.whites().to_vec();
        whites.extend([self.pivot.0, self.pivot.1]);
        OneFactor::new(self.factor.k(), whites, self.other_edges())
            .expect("an unnested pivot can open into two whites")
    }

    /// `f^(1)`: the left end of the pivot is joined to the rightmost white
    /// vertex before it, which becomes the new pivot, and the right end turns
    /// white. `None` when there is no such white vertex.
    pub fn next(&self) -> Option<PivotedFactor> {
        let (left, right) = self.pivot;
        let j = *self.factor.whites().iter().rev().find(|&&w| w < left)?;
        let mut whites: Vec<usize> = self
            .factor
            .whites()
            .iter()
            .copied()
            .filter(|&w| w != j)
            .collect();
        whites.push(right);
        let mut edges = self.other_edges();
        edges.push((j, left));
        let factor =
            OneFactor::new(self.factor.k(), whites, edges).expect("moved pivot stays planar");
        Some(PivotedFactor {
            factor,
            pivot: (j, left),
        })
    }
}

fn u_ratio(a: usize, b: usize) -> RatFnX {
    RatFnX::new(chebyshev_u_shifted(a), chebyshev_u_shifted(b)).expect("u_b is nonzero")
}

fn bracket_of(f: &PivotedFactor) -> PathVector<RatFnX> {
    let mut v = PathVector::basis(f.path());
    v.add_term(f.dot().to_path(), -RatFnX::one())
        .expect("same shape");
    if let Some(next) = f.next() {
        let s = f.whites_left();
        let tail = bracket_of(&next).scale(&-u_ratio(s - 1, s));
        v = v.add(&tail).expect("same shape");
    }
    v
}

/// `[p] = p - p_• - (u_{s-1}(x-1)/u_s(x-1)) [p^(1)]` with `s` the number of
/// whites left of the pivot, recursively along the moving pivot.
pub fn bracket_vector(p: &MotzkinPath) -> Result<PathVector<RatFnX>> {
    Ok(bracket_of(&PivotedFactor::from_path(p)?))
}

/// Whether the pivot of `f` closes a loop with the edges of `q` when the two
/// are glued along the middle row of `d_f^f d_q^q`.
pub fn pivot_in_loop(f: &PivotedFactor, q: &MotzkinPath) -> bool {
    let fp = f.factor.partners();
    let qp = q.to_factor().partners();
    let (start, mut cur) = f.pivot;
    loop {
        let Some(n) = qp[cur] else { return false };
        if n == start {
            return true;
        }
        let Some(m) = fp[n] else { return false };
        cur = m;
    }
}

/// The bilinear form extended to vectors, read from a precomputed Gram matrix.
struct Form {
    gram: GramMatrix,
    index: HashMap<MotzkinPath, usize>,
}

impl Form {
    fn new(k: usize, r: usize) -> Self {
        let gram = gram_matrix(k, r);
        let index = gram
            .paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Form { gram, index }
    }

    fn entry(&self, p: &MotzkinPath, q: &MotzkinPath) -> RatFnX {
        RatFnX::from_poly(self.gram.entries[self.index[p]][self.index[q]].clone())
    }

    fn pair(&self, u: &PathVector<RatFnX>, v: &PathVector<RatFnX>) -> RatFnX {
        let mut acc = RatFnX::zero();
        for (p, a) in u.terms() {
            for (q, b) in v.terms() {
                let g = &self.gram.entries[self.index[p]][self.index[q]];
                if !g.is_zero() {
                    acc = acc + a.clone() * b.clone() * RatFnX::from_poly(g.clone());
                }
            }
        }
        acc
    }
}

/// Checks the pivot loop identity on `P_k`: for `p` ending in `-1` with `s` whites
/// and every `q` of the same rank, `<[p], q>` equals `(u_{s+1}/u_s) <p_•, q>`
/// when the pivot lies on a closed loop and 0 otherwise. For the factors
/// `p^(m)` further along the recursion, whose pivot has a white vertex to its
/// right, only the loop case is asserted: with no white left of the pivot a
/// strand can run through the pivot to the white on the right, and then
/// `<[p^(m)], q> = <p^(m), q>` need not vanish.
pub fn pivot_loop_check(k: usize) -> bool {
    for r in 0..=k {
        let form = Form::new(k, r);
        for p in enumerate_paths(k, Some(r))
            .into_iter()
            .filter(|p| p.last_step() == Some(-1))
        {
            let mut f = PivotedFactor::from_path(&p).ok();
            let mut first = true;
            while let Some(cur) = f {
                let b = bracket_of(&cur);
                let dot = cur.dot().to_path();
                let s = cur.whites_left();
                for q in &form.gram.paths {
                    let in_loop = pivot_in_loop(&cur, q);
                    if !first && !in_loop {
                        continue;
                    }
                    let lhs = form.pair(&b, &PathVector::basis(q.clone()));
                    let rhs = if in_loop {
                        u_ratio(s + 1, s) * form.entry(&dot, q)
                    } else {
                        RatFnX::zero()
                    };
                    if lhs != rhs {
                        return false;
                    }
                }
                f = cur.next();
                first = false;
            }
        }
    }
    true
}

/// Checks `<[p], q> = 0` for `q` ending in `+1` or `0`, and
/// `<[p], [q]> = (u_{r+1}/u_r) <p_+, q_+>` for `p, q` ending in `-1`.
pub fn bracket_pairing_check(k: usize) -> bool {
    for r in 0..=k.saturating_sub(2) {
        let form = Form::new(k, r);
        // opening the pivot adds two whites
        let plus_form = Form::new(k, r + 2);
        let (ends_down, rest): (Vec<_>, Vec<_>) = form
            .gram
            .paths
            .iter()
            .cloned()
            .partition(|p| p.last_step() == Some(-1));
        let brackets: Vec<_> = ends_down
            .iter()
            .map(|p| bracket_vector(p).expect("ends in -1"))
            .collect();
        let pluses: Vec<_> = ends_down
            .iter()
            .map(|p| {
                PivotedFactor::from_path(p)
                    .expect("ends in -1")
                    .plus()
                    .to_path()
            })
            .collect();
        for b in &brackets {
            if rest
                .iter()
                .any(|q| !form.pair(b, &PathVector::basis(q.clone())).is_zero())
            {
                return false;
            }
        }
        let scale = u_ratio(r + 1, r);
        for (bp, pp) in brackets.iter().zip(&pluses) {
            for (bq, qp) in brackets.iter().zip(&pluses) {
                if form.pair(bp, bq) != scale.clone() * plus_form.entry(pp, qp) {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that in the basis `P_k^{r,1} ⊔ P_k^{r,0} ⊔ {[p]}` the Gram matrix
/// is block diagonal with blocks `G_{k-1}^(r-1)`, `G_{k-1}^(r)` and
/// `(u_{r+1}/u_r) G_{k-1}^(r+1)`.
pub fn gram_block_check(k: usize, r: usize) -> Result<bool> {
    if k == 0 || r > k {
        return Err(Error::IndexOutOfRange {
            what: "gram block",
            index: r,
            k,
        });
    }
    let form = Form::new(k, r);
    let mut basis = Vec::new();
    for last in [1i8, 0] {
        for p in form
            .gram
            .paths
            .iter()
            .filter(|p| p.last_step() == Some(last))
        {
            basis.push(PathVector::basis(p.clone()));
        }
    }
    for p in form.gram.paths.iter().filter(|p| p.last_step() == Some(-1)) {
        basis.push(bracket_vector(p)?);
    }
    let mut expected: Vec<Vec<RatFnX>> = vec![vec![RatFnX::zero(); basis.len()]; basis.len()];
    let mut offset = 0;
    let blocks = [
        (r.checked_sub(1), RatFnX::one()),
        (Some(r), RatFnX::one()),
        (
            Some(r + 1),
            if r < k {
                u_ratio(r + 1, r)
            } else {
                RatFnX::one()
            },
        ),
    ];
    for (rank, scale) in blocks {
        let Some(rank) = rank.filter(|&t| t < k) else {
            continue;
        };
        let g = gram_matrix(k - 1, rank);
        for (i, row) in g.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                expected[offset + i][offset + j] = scale.clone() * RatFnX::from_poly(e.clone());
            }
        }
        offset += g.size();
    }
    if offset != basis.len() {
        return Ok(false);
    }
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate().skip(i) {
            let got = form.pair(u, v);
            if got != expected[i][j] || got != expected[j][i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

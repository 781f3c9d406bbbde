//! Cell modules `C_k^(r)`: the action of diagrams on Motzkin paths, the
//! characters of the modules and the invariant bilinear form.

mod bracket;
mod gram;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::{cell_coefficient_table, AlgebraElement};
use crate::combinatorics::{enumerate_paths, m_count, MotzkinPath, OneFactor};
use crate::diagrams::{diagram_from_paths, generator, GeneratorKind, MotzkinDiagram};
use crate::error::{Error, Result};
use crate::scalars::{PolyX, Scalar};

pub use bracket::{
    bracket_pairing_check, bracket_vector, gram_block_check, pivot_in_loop, pivot_loop_check,
    PivotedFactor,
};
pub use gram::{
    gram_det_direct, gram_det_formula, gram_det_interpolated, gram_matrix, is_semisimple,
    GramMatrix, SemisimpleReport,
};

/// A vector in `C_k^(r)` written in the path basis.
#[derive(Clone, PartialEq, Debug)]
pub struct PathVector<S> {
    k: usize,
    r: usize,
    coeffs: BTreeMap<MotzkinPath, S>,
}

impl<S: Scalar> PathVector<S> {
    pub fn zero(k: usize, r: usize) -> Self {
        PathVector {
            k,
            r,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(p: MotzkinPath) -> Self {
        let mut v = Self::zero(p.len(), p.rank());
        v.coeffs.insert(p, S::one());
        v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MotzkinPath, &S)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, p: &MotzkinPath) -> S {
        self.coeffs.get(p).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c p`; `p` must have length `k` and rank `r`.
    pub fn add_term(&mut self, p: MotzkinPath, c: S) -> Result<()> {
        if p.len() != self.k {
            return Err(Error::SizeMismatch(p.len(), self.k));
        }
        if p.rank() != self.r {
            return Err(Error::RankMismatch(p.rank(), self.r));
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.coeffs.remove(&p) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(p, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.k, self.r);
        for (p, a) in &self.coeffs {
            let v = a.clone() * c.clone();
            if !v.is_zero() {
                out.coeffs.insert(p.clone(), v);
            }
        }
        out
    }

    /// `d · v` in `C_k^(r)`.
    pub fn act(&self, d: &MotzkinDiagram, x: &S) -> Result<Self> {
        let mut out = Self::zero(self.k, self.r);
        for (p, c) in &self.coeffs {
            let img = cell_act(d, p, x)?;
            for (q, b) in img.coeffs {
                out.add_term(q, b * c.clone())?;
            }
        }
        Ok(out)
    }
}

impl<S: Scalar> fmt::Display for PathVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(p, c)| format!("({c}) {p}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Places `p` under `d` and follows every strand: returns the number of
/// closed loops formed between the two and the 1-factor read off the top.
/// The rank of the result may be smaller than the rank of `p`.
pub fn act_on_path(d: &MotzkinDiagram, p: &MotzkinPath) -> Result<(usize, MotzkinPath)> {
    let k = d.k();
    if p.len() != k {
        return Err(Error::SizeMismatch(k, p.len()));
    }
    let f = p.to_factor();
    let pf = f.partners();
    // bottom row of d, by position 0..k: Some(Ok(pos)) bottom arc, Some(Err(top)) vertical
    let below = |b: usize| {
        d.partner(k + b)
            .map(|v| if v >= k { Ok(v - k) } else { Err(v) })
    };
    let mut seen = vec![false; k];
    let mut whites = Vec::new();
    let mut arcs = Vec::new();
    for t in 0..k {
        let Some(u) = d.partner(t) else { continue };
        if u < k {
            if t < u {
                arcs.push((t + 1, u + 1));
            }
            continue;
        }
        let mut b = u - k;
        loop {
            seen[b] = true;
            if f.is_white(b + 1) {
                whites.push(t + 1);
                break;
            }
            let Some(c) = pf[b + 1] else { break };
            seen[c - 1] = true;
            match below(c - 1) {
                None => break,
                Some(Err(top)) => {
                    if t < top {
                        arcs.push((t + 1, top + 1));
                    }
                    break;
                }
                Some(Ok(next)) => b = next,
            }
        }
    }
    let mut loops = 0;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut cur = start;
        loop {
            seen[cur] = true;
            let Some(c) = pf[cur + 1] else { break };
            seen[c - 1] = true;
            match below(c - 1) {
                Some(Ok(next)) if next == start => {
                    loops += 1;
                    break;
                }
                Some(Ok(next)) => cur = next,
                _ => break,
            }
        }
    }
    let q = OneFactor::new(k, whites, arcs)?;
    Ok((loops, q.to_path()))
}

/// `d · p` in `C_k^(r)` with `r = rank(p)`: `x^κ q`, or zero when the rank drops.
pub fn cell_act<S: Scalar>(d: &MotzkinDiagram, p: &MotzkinPath, x: &S) -> Result<PathVector<S>> {
    let (loops, q) = act_on_path(d, p)?;
    let mut out = PathVector::zero(p.len(), p.rank());
    if q.rank() == p.rank() {
        out.add_term(q, x.pow(loops))?;
    }
    Ok(out)
}

/// Trace of `1_{l,k}` on `C_k^(r)`.
pub fn character(k: usize, r: usize, l: usize) -> Result<BigUint> {
    let d = generator(GeneratorKind::OnePartial, k, l, None)?;
    let mut n = BigUint::default();
    for p in enumerate_paths(k, Some(r)) {
        let (loops, q) = act_on_path(&d, &p)?;
        if loops == 0 && q == p {
            n += 1u32;
        }
    }
    Ok(n)
}

/// `<p, q>`: `x^κ` when `d_p^p d_q^q = x^κ d_q^p` keeps rank `r`, else 0.
pub fn bilinear(p: &MotzkinPath, q: &MotzkinPath) -> Result<PolyX> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    if p.rank() != q.rank() {
        return Err(Error::RankMismatch(p.rank(), q.rank()));
    }
    let prod = diagram_from_paths(p, p)?.multiply(&diagram_from_paths(q, q)?)?;
    if prod.diagram.rank() < p.rank() {
        return Ok(PolyX::zero());
    }
    debug_assert_eq!(prod.diagram, diagram_from_paths(q, p)?);
    Ok(PolyX::x_pow(prod.loops))
}

/// Checks the restriction of `C_k^(r)` to `M_{k-1}`: truncation sorts the
/// paths by last step into copies of `P_{k-1}^(r-1)`, `P_{k-1}^(r)` and
/// `P_{k-1}^(r+1)`, and the action of every generator of `M_{k-1}` (with a
/// strand appended) agrees with the action on truncated paths, exactly on
/// paths ending in `+1` or `0`, and up to lower terms on paths ending in `-1`.
pub fn restriction_check(k: usize, r: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::IndexOutOfRange {
            what: "restriction size",
            index: k,
            k,
        });
    }
    let paths = enumerate_paths(k, Some(r));
    let sizes = [r.checked_sub(1), Some(r), Some(r + 1)].map(|t| {
        t.filter(|&t| t < k)
            .map_or(0, |t| enumerate_paths(k - 1, Some(t)).len())
    });
    let counted = [1i8, 0, -1].map(|a| paths.iter().filter(|p| p.last_step() == Some(a)).count());
    if sizes != counted || m_count(k, r) != BigUint::from(paths.len()) {
        return Ok(false);
    }
    for d in restriction_generators(k - 1)? {
        let lifted = append_strand(&d)?;
        for p in &paths {
            let (loops, q) = act_on_path(&lifted, p)?;
            let (small_loops, small_q) = act_on_path(&d, &p.truncate())?;
            let kept = q.rank() == r;
            let small_kept = small_q.rank() == p.truncate().rank();
            let ok = match p.last_step() {
                Some(a @ (0 | 1)) => {
                    kept == small_kept
                        && (!kept
                            || (loops == small_loops
                                && q.truncate() == small_q
                                && q.last_step() == Some(a)))
                }
                _ => {
                    if small_kept {
                        kept && loops == small_loops
                            && q.last_step() == Some(-1)
                            && q.truncate() == small_q
                    } else {
                        !kept || q.last_step() != Some(-1)
                    }
                }
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `a · (b · p) = (ab) · p` in every `C_k^(r)`, for all generators
/// `a, b` of `M_k` and all paths `p`, with `x` symbolic.
pub fn module_axiom_check(k: usize) -> Result<bool> {
    let x = PolyX::x();
    let gens = restriction_generators(k)?;
    for p in enumerate_paths(k, None) {
        let v = PathVector::<PolyX>::basis(p);
        for b in &gens {
            let bv = v.act(b, &x)?;
            for a in &gens {
                let prod = a.multiply(b)?;
                let lhs = bv.act(a, &x)?;
                let rhs = v.act(&prod.diagram, &x)?.scale(&x.pow(prod.loops));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether, for every generator `a` of `M_k` and every rank `r`, the
/// coefficients `μ(q', q)` of `a d_p^q ≡ Σ μ(q', q) d_p^{q'}` modulo lower
/// rank do not depend on `p` and agree with the action on `C_k^(r)`.
pub fn cellularity_check(k: usize) -> Result<bool> {
    let x = PolyX::x();
    for a in restriction_generators(k)? {
        let elem = AlgebraElement::<PolyX>::basis(a.clone());
        for r in 0..=k {
            let paths = enumerate_paths(k, Some(r));
            let mut expected = BTreeMap::new();
            for q in &paths {
                for (q2, c) in cell_act(&a, q, &x)?.coeffs {
                    expected.insert((q2, q.clone()), c);
                }
            }
            for p in &paths {
                if cell_coefficient_table(&elem, r, p, &x)? != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn restriction_generators(k: usize) -> Result<Vec<MotzkinDiagram>> {
    use GeneratorKind::*;
    let mut out = vec![MotzkinDiagram::identity(k)];
    for i in 1..=k {
        out.push(generator(P, k, i, None)?);
        if i < k {
            for kind in [T, L, R] {
                out.push(generator(kind, k, i, None)?);
            }
        }
    }
    Ok(out)
}

/// `d ⊗ 1`: the diagram with one more vertical strand on the right.
fn append_strand(d: &MotzkinDiagram) -> Result<MotzkinDiagram> {
    let n = d.k();
    let k = n + 1;
    let lift = |v: usize| if v < n { v } else { v + 1 };
    let mut edges: Vec<(usize, usize)> = d
        .edges()
        .into_iter()
        .map(|(a, b)| (lift(a), lift(b)))
        .collect();
    edges.push((n, k + n));
    MotzkinDiagram::from_edges(k, &edges)
}

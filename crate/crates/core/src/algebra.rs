//! Linear combinations of diagrams: algebra arithmetic, the rank filtration
//! `J_0 ⊆ J_1 ⊆ ... ⊆ J_k`, the idempotent `e_k = (1/x) t_{k-1}` and the
//! cellular structure constants.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::combinatorics::{enumerate_paths, MotzkinPath};
use crate::diagrams::{diagram_from_paths, generator, GeneratorKind, MotzkinDiagram};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::{checked_div, Rational, Scalar};

/// A finite linear combination of `k`-diagrams.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<S> {
    k: usize,
    coeffs: BTreeMap<MotzkinDiagram, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(k: usize) -> Self {
        AlgebraElement {
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(d: MotzkinDiagram) -> Self {
        Self::term(S::one(), d)
    }

    pub fn term(c: S, d: MotzkinDiagram) -> Self {
        let mut out = Self::zero(d.k());
        out.add_term(d, c);
        out
    }

    pub fn identity(k: usize) -> Self {
        Self::basis(MotzkinDiagram::identity(k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MotzkinDiagram, &S)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, d: &MotzkinDiagram) -> S {
        self.coeffs.get(d).cloned().unwrap_or_else(S::zero)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, d: MotzkinDiagram, c: S) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&d) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(d, sum);
                }
            }
            None => {
                self.coeffs.insert(d, c);
            }
        }
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::SizeMismatch(self.k, other.k));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.k);
        for (d, a) in &self.coeffs {
            out.add_term(d.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Product with loop parameter `x`: `d1 d2 = x^loops d3`.
    pub fn mul(&self, other: &Self, x: &S) -> Result<Self> {
        self.check_size(other)?;
        let mut out = Self::zero(self.k);
        for (d1, a) in &self.coeffs {
            for (d2, b) in &other.coeffs {
                let p = d1.multiply(d2)?;
                out.add_term(p.diagram, a.clone() * b.clone() * x.pow(p.loops));
            }
        }
        Ok(out)
    }

    /// The anti-automorphism swapping the two rows of every diagram.
    pub fn involution(&self) -> Self {
        let mut out = Self::zero(self.k);
        for (d, c) in &self.coeffs {
            out.add_term(d.involution(), c.clone());
        }
        out
    }

    /// The coset modulo `J_r`: drops every diagram of rank at most `r`.
    /// `r = None` stands for `J_{-1} = 0`.
    pub fn reduce_mod_j(&self, r: Option<usize>) -> Self {
        let mut out = self.clone();
        if let Some(r) = r {
            out.coeffs.retain(|d, _| d.rank() > r);
        }
        out
    }

    /// Maps every coefficient through `f`.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AlgebraElement<T> {
        let mut out = AlgebraElement::zero(self.k);
        for (d, c) in &self.coeffs {
            out.add_term(d.clone(), f(c));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(d, c)| serde_json::json!({"coeff": c.to_string(), "diagram": d.to_json()}))
                .collect(),
        )
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, c)| format!("({c}) {d}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `e_k = (1/x) t_{k-1}`.
pub fn e_k(k: usize, x: &Rational) -> Result<AlgebraElement<Rational>> {
    if k < 2 {
        return Err(Error::IndexOutOfRange {
            what: "e_k",
            index: k,
            k,
        });
    }
    let inv = checked_div(&Rational::one(), x)?;
    Ok(AlgebraElement::term(
        inv,
        generator(GeneratorKind::T, k, k - 1, None)?,
    ))
}

/// Appends two vertical strands on the right of a `(k-2)`-diagram.
pub fn embed_diagram(d: &MotzkinDiagram, k: usize) -> Result<MotzkinDiagram> {
    let n = d.k();
    if n + 2 != k {
        return Err(Error::SizeMismatch(n + 2, k));
    }
    let lift = |v: usize| if v < n { v } else { v + 2 };
    let mut edges: Vec<(usize, usize)> = d
        .edges()
        .into_iter()
        .map(|(a, b)| (lift(a), lift(b)))
        .collect();
    edges.push((n, k + n));
    edges.push((n + 1, k + n + 1));
    MotzkinDiagram::from_edges(k, &edges)
}

/// `d -> e_k d e_k` from `M_{k-2}` into `M_k`.
pub fn basic_construction_embed(
    d: &MotzkinDiagram,
    k: usize,
    x: &Rational,
) -> Result<AlgebraElement<Rational>> {
    let e = e_k(k, x)?;
    let lifted = AlgebraElement::basis(embed_diagram(d, k)?);
    e.mul(&lifted, x)?.mul(&e, x)
}

/// Whether `φ(a) φ(b) = x^κ φ(ab)` for each pair of `(k-2)`-diagrams, where
/// `φ(d) = e_k d e_k` and `ab = x^κ d'`.
pub fn embedding_check(
    pairs: &[(MotzkinDiagram, MotzkinDiagram)],
    k: usize,
    x: &Rational,
) -> Result<bool> {
    for (a, b) in pairs {
        let prod = a.multiply(b)?;
        let lhs = basic_construction_embed(a, k, x)?.mul(&basic_construction_embed(b, k, x)?, x)?;
        let rhs = basic_construction_embed(&prod.diagram, k, x)?.scale(&Scalar::pow(x, prod.loops));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `d_q^p d_t^s = δ_{q,s} d_t^p` modulo `J_{k-2}` for all
/// `p, q, s, t` of rank `k - 1`. Here `d_q^p` has bottom `q` and top `p`.
pub fn matrix_unit_check(k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let paths = enumerate_paths(k, Some(k - 1));
    let x = crate::scalars::PolyX::x();
    let below = k.checked_sub(2);
    let unit = |bottom: &MotzkinPath, top: &MotzkinPath| {
        AlgebraElement::basis(diagram_from_paths(bottom, top).expect("equal ranks"))
    };
    for p in &paths {
        for q in &paths {
            let left = unit(q, p);
            for s in &paths {
                for t in &paths {
                    let prod = left
                        .mul(&unit(t, s), &x)
                        .expect("equal sizes")
                        .reduce_mod_j(below);
                    let expect = if q == s {
                        unit(t, p)
                    } else {
                        AlgebraElement::zero(k)
                    };
                    if prod != expect {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Dimension of `M_k / J_{k-2}`, computed as the rank of the reduced images
/// of all diagrams and of all their pairwise products.
pub fn quotient_dimension(k: usize) -> usize {
    let below = k.checked_sub(2);
    let diagrams = crate::diagrams::enumerate_diagrams(k);
    let x = Rational::from_integer(2.into());
    let survivors: Vec<AlgebraElement<Rational>> = diagrams
        .iter()
        .map(|d| AlgebraElement::basis(d.clone()).reduce_mod_j(below))
        .filter(|e| !e.is_zero())
        .collect();
    let mut rows: Vec<BTreeMap<MotzkinDiagram, Rational>> =
        survivors.iter().map(|e| e.coeffs.clone()).collect();
    for a in &survivors {
        for b in &survivors {
            let prod = a.mul(b, &x).expect("equal sizes").reduce_mod_j(below);
            rows.push(prod.coeffs);
        }
    }
    linalg::rank(rows)
}

/// Structure constants of `a` on the cell layer of rank `r`:
/// `a d_p^q = sum_{q'} mu(q', q) d_p^{q'}` modulo `J_{r-1}`, keyed by
/// `(q', q)`.
pub fn cell_coefficient_table<S: Scalar>(
    a: &AlgebraElement<S>,
    r: usize,
    p: &MotzkinPath,
    x: &S,
) -> Result<BTreeMap<(MotzkinPath, MotzkinPath), S>> {
    if p.rank() != r {
        return Err(Error::RankMismatch(p.rank(), r));
    }
    let k = a.k();
    let mut table = BTreeMap::new();
    for q in enumerate_paths(k, Some(r)) {
        let cell = AlgebraElement::basis(diagram_from_paths(p, &q)?);
        let prod = a.mul(&cell, x)?.reduce_mod_j(r.checked_sub(1));
        for (d, c) in prod.terms() {
            let bottom = d.bottom_factor().to_path();
            if &bottom != p {
                return Err(Error::InvalidFactor(format!(
                    "product term {d} does not have bottom row {p}"
                )));
            }
            table.insert((d.top_factor().to_path(), q.clone()), c.clone());
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate_diagrams;
    use crate::scalars::{rat, PolyX};
    use GeneratorKind::*;

    fn g(kind: GeneratorKind, k: usize, i: usize) -> AlgebraElement<PolyX> {
        AlgebraElement::basis(generator(kind, k, i, None).unwrap())
    }

    #[test]
    fn identity_is_two_sided() {
        let x = PolyX::x();
        for d in enumerate_diagrams(3) {
            let e = AlgebraElement::<PolyX>::basis(d);
            let id = AlgebraElement::identity(3);
            assert_eq!(id.mul(&e, &x).unwrap(), e);
            assert_eq!(e.mul(&id, &x).unwrap(), e);
        }
    }

    #[test]
    fn t_squared_and_projections() {
        let x = PolyX::x();
        for k in 2..=4 {
            for i in 1..k {
                let t = g(T, k, i);
                assert_eq!(t.mul(&t, &x).unwrap(), t.scale(&x));
            }
        }
        assert_eq!(g(R, 2, 1).mul(&g(L, 2, 1), &x).unwrap(), g(P, 2, 1));
        assert_eq!(g(L, 3, 1).mul(&g(R, 3, 1), &x).unwrap(), g(P, 3, 2));
    }

    #[test]
    fn linear_structure() {
        let x = PolyX::x();
        let a = g(T, 3, 1)
            .add(&g(P, 3, 3).scale(&PolyX::from_ints(&[2])))
            .unwrap();
        let b = g(L, 3, 2).sub(&g(R, 3, 1)).unwrap();
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a.add(&g(T, 2, 1)).is_err());
        // distributivity
        let c = g(T, 3, 2);
        let lhs = a.add(&b).unwrap().mul(&c, &x).unwrap();
        let rhs = a.mul(&c, &x).unwrap().add(&b.mul(&c, &x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // anti-automorphism on a linear combination
        let ab = a.mul(&b, &x).unwrap().involution();
        let ba = b.involution().mul(&a.involution(), &x).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(a.involution().involution(), a);
    }

    #[test]
    fn filtration_reduction() {
        for k in 1..=3 {
            let id = AlgebraElement::<PolyX>::identity(k);
            assert!(id.reduce_mod_j(Some(k)).is_zero());
            assert_eq!(id.reduce_mod_j(Some(k - 1)), id);
        }
        assert!(g(T, 2, 1).reduce_mod_j(Some(0)).is_zero());
        assert_eq!(g(T, 2, 1).reduce_mod_j(None), g(T, 2, 1));
    }

    #[test]
    fn basic_construction_identities() {
        let x = rat(3);
        for k in 2..=4 {
            let e = e_k(k, &x).unwrap();
            assert_eq!(e.mul(&e, &x).unwrap(), e);
            let id = MotzkinDiagram::identity(k - 2);
            assert_eq!(basic_construction_embed(&id, k, &x).unwrap(), e);
        }
        assert_eq!(e_k(3, &rat(0)), Err(Error::DivisionByZero));
        assert!(e_k(1, &rat(1)).is_err());
    }

    #[test]
    fn basic_construction_is_multiplicative_from_m1() {
        let x = rat(2);
        let small = enumerate_diagrams(1);
        for a in &small {
            for b in &small {
                let prod = a.multiply(b).unwrap();
                let lhs = basic_construction_embed(a, 3, &x)
                    .unwrap()
                    .mul(&basic_construction_embed(b, 3, &x).unwrap(), &x)
                    .unwrap();
                let rhs = basic_construction_embed(&prod.diagram, 3, &x)
                    .unwrap()
                    .scale(&Scalar::pow(&x, prod.loops));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn embedding_check_agrees() {
        let small = enumerate_diagrams(1);
        let pairs: Vec<_> = small
            .iter()
            .flat_map(|a| small.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        for x in [rat(2), rat(-1)] {
            assert!(embedding_check(&pairs, 3, &x).unwrap());
        }
    }

    #[test]
    fn matrix_units() {
        for k in 1..=3 {
            assert!(matrix_unit_check(k));
        }
    }

    #[test]
    fn quotient_dimensions() {
        for k in 1..=3 {
            assert_eq!(quotient_dimension(k), k * k + 1);
        }
    }

    #[test]
    fn coefficient_table_of_identity() {
        let x = PolyX::x();
        for r in 0..=3 {
            for p in enumerate_paths(3, Some(r)) {
                let table =
                    cell_coefficient_table(&AlgebraElement::identity(3), r, &p, &x).unwrap();
                let paths = enumerate_paths(3, Some(r));
                assert_eq!(table.len(), paths.len());
                for q in paths {
                    assert_eq!(table[&(q.clone(), q)], PolyX::one());
                }
            }
        }
    }
}

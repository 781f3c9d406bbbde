//! The action of `M_k(ζ_q)`, `ζ_q = 1 - q - q^{-1}`, on `V^{⊗k}` where
//! `V = V(0) ⊕ V(1)` for quantum `gl_2`, and the action of the quantum group
//! generators on the same space. Coefficients live in `Z[s, s^{-1}]` with
//! `s = q^{1/2}`, or in the rationals after specializing `s`.

mod highest;
mod tensor;

use serde::Serialize;

use crate::diagrams::{generator, GeneratorKind, MotzkinDiagram};
use crate::error::{Error, Result};
use crate::scalars::{checked_div, LaurentS, Rational, Scalar};

pub use highest::{
    decomposition_audit, f_string_lengths, highest_weight_vector, source_vector,
    DecompositionReport,
};
pub use tensor::{decode, encode, tensor_dim, TensorOperator, TensorVector};

/// The value of `s = q^{1/2}` in a coefficient ring, with its inverse.
#[derive(Clone, Debug)]
pub struct Param<S> {
    s: S,
    s_inv: S,
}

impl Param<LaurentS> {
    pub fn symbolic() -> Self {
        Param {
            s: LaurentS::s_pow(1),
            s_inv: LaurentS::s_pow(-1),
        }
    }
}

impl Param<Rational> {
    pub fn at(s: &Rational) -> Result<Self> {
        Ok(Param {
            s: s.clone(),
            s_inv: checked_div(&Rational::from_i64(1), s)?,
        })
    }
}

impl<S: Scalar> Param<S> {
    pub fn s_pow(&self, e: i64) -> S {
        if e >= 0 {
            self.s.pow(e as usize)
        } else {
            self.s_inv.pow(e.unsigned_abs() as usize)
        }
    }

    /// `ζ_q = 1 - s^2 - s^{-2}`.
    pub fn zeta(&self) -> S {
        S::one() - self.s_pow(2) - self.s_pow(-2)
    }

    /// `⟨v_a, v_b⟩` for an arc in the top row, `a` at the left end.
    pub fn form_top(&self, a: i8, b: i8) -> S {
        match (a, b) {
            (-1, 1) => self.s_pow(-1),
            (0, 0) => S::one(),
            (1, -1) => -self.s_pow(1),
            _ => S::zero(),
        }
    }

    /// `⟨v_a, v_b⟩` for an arc in the bottom row, `a` at the left end.
    pub fn form_bot(&self, a: i8, b: i8) -> S {
        match (a, b) {
            (-1, 1) => -self.s_pow(-1),
            (0, 0) => S::one(),
            (1, -1) => self.s_pow(1),
            _ => S::zero(),
        }
    }

    /// Eigenvalue of `K` on `v_a`: `q^a`.
    fn k_weight(&self, a: i8) -> S {
        self.s_pow(2 * a as i64)
    }
}

pub fn form_top(a: i8, b: i8) -> LaurentS {
    Param::symbolic().form_top(a, b)
}

pub fn form_bot(a: i8, b: i8) -> LaurentS {
    Param::symbolic().form_bot(a, b)
}

const LABELS: [i8; 3] = [-1, 0, 1];

/// `π(d)`: bottom-row labels are read as the input tensor, top-row labels
/// as the output, and each entry is the product of the component weights.
pub fn diagram_operator<S: Scalar>(d: &MotzkinDiagram, param: &Param<S>) -> TensorOperator<S> {
    let k = d.k();
    let top_arcs = d.top_arcs();
    let bottom_arcs = d.bottom_arcs();
    let verticals = d.verticals();
    let isolated_bottom: Vec<usize> = (0..k).filter(|&b| d.partner(k + b).is_none()).collect();
    TensorOperator::from_fn(k, |input| {
        if isolated_bottom.iter().any(|&b| input[b] != 0) {
            return Vec::new();
        }
        let mut weight = S::one();
        for &(a, b) in &bottom_arcs {
            weight = weight * param.form_bot(input[a], input[b]);
        }
        if weight.is_zero() {
            return Vec::new();
        }
        let mut base = vec![0i8; k];
        for &(t, b) in &verticals {
            base[t] = input[b];
        }
        let mut outs = vec![(base, weight)];
        for &(a, b) in &top_arcs {
            let mut next = Vec::with_capacity(outs.len() * 3);
            for (labels, w) in &outs {
                for x in LABELS {
                    let f = param.form_top(x, -x);
                    let mut l = labels.clone();
                    l[a] = x;
                    l[b] = -x;
                    next.push((l, w.clone() * f));
                }
            }
            outs = next;
        }
        outs
    })
}

/// The local generator `T`, `L`, `R` (on slots `i, i+1`) or `P` (on slot `i`)
/// acting in place on `V^{⊗k}`, built from its two-site matrix.
pub fn positioned_operator<S: Scalar>(
    kind: GeneratorKind,
    k: usize,
    i: usize,
    param: &Param<S>,
) -> Result<TensorOperator<S>> {
    let range = |ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "tensor position",
                index: i,
                k,
            })
        }
    };
    match kind {
        GeneratorKind::P => range(i >= 1 && i <= k)?,
        GeneratorKind::T | GeneratorKind::L | GeneratorKind::R => range(i >= 1 && i < k)?,
        _ => {
            return Err(Error::InvalidFactor(format!(
                "{kind:?} has no two-site tensor form"
            )))
        }
    }
    let p = i - 1;
    Ok(TensorOperator::from_fn(k, |input| {
        let with = |a: i8, b: Option<i8>| {
            let mut l = input.to_vec();
            l[p] = a;
            if let Some(b) = b {
                l[p + 1] = b;
            }
            l
        };
        match kind {
            GeneratorKind::P => {
                if input[p] == 0 {
                    vec![(input.to_vec(), S::one())]
                } else {
                    Vec::new()
                }
            }
            GeneratorKind::T => {
                let w = param.form_bot(input[p], input[p + 1]);
                if w.is_zero() {
                    return Vec::new();
                }
                LABELS
                    .iter()
                    .map(|&x| (with(x, Some(-x)), w.clone() * param.form_top(x, -x)))
                    .collect()
            }
            // L(v_a ⊗ v_b) = δ_{a,0} v_b ⊗ v_0
            GeneratorKind::L => {
                if input[p] == 0 {
                    vec![(with(input[p + 1], Some(0)), S::one())]
                } else {
                    Vec::new()
                }
            }
            // R(v_a ⊗ v_b) = δ_{b,0} v_0 ⊗ v_a
            _ => {
                if input[p + 1] == 0 {
                    vec![(with(0, Some(input[p])), S::one())]
                } else {
                    Vec::new()
                }
            }
        }
    }))
}

/// Generators of the quantum group acting on `V^{⊗k}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum QGen {
    E,
    F,
    /// `K = K_1 K_2^{-1}`.
    K,
    Kinv,
    K1,
    K2,
    Kinv1,
    Kinv2,
}

impl QGen {
    pub const ALL: [QGen; 8] = [
        QGen::E,
        QGen::F,
        QGen::K,
        QGen::Kinv,
        QGen::K1,
        QGen::K2,
        QGen::Kinv1,
        QGen::Kinv2,
    ];
}

/// How `K_1` and `K_2` act on the trivial summand `V(0) = span(v_0)`.
/// `K = K_1 K_2^{-1}`, `E` and `F` do not depend on the choice.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub enum ZeroWeight {
    /// `K_i v_0 = v_0`.
    #[default]
    Trivial,
    /// `K_i v_0 = s v_0`, the square root of the determinant.
    HalfDeterminant,
}

/// `E` acts as `Σ_j 1^{⊗j} ⊗ E ⊗ K^{⊗(k-1-j)}`, `F` as
/// `Σ_j (K^{-1})^{⊗j} ⊗ F ⊗ 1^{⊗(k-1-j)}`, with `E v_{-1} = v_1`,
/// `F v_1 = v_{-1}` and `E`, `F` zero elsewhere. `K_1` and `K_2` multiply by
/// `q` per `v_1` and per `v_{-1}` respectively, and act trivially on `v_0`.
pub fn qgroup_operator<S: Scalar>(gen: QGen, k: usize, param: &Param<S>) -> TensorOperator<S> {
    qgroup_operator_with(gen, k, param, ZeroWeight::Trivial)
}

pub fn qgroup_operator_with<S: Scalar>(
    gen: QGen,
    k: usize,
    param: &Param<S>,
    zero: ZeroWeight,
) -> TensorOperator<S> {
    TensorOperator::from_fn(k, |input| {
        let ups = input.iter().filter(|&&a| a == 1).count() as i64;
        let downs = input.iter().filter(|&&a| a == -1).count() as i64;
        let zeros = match zero {
            ZeroWeight::Trivial => 0,
            ZeroWeight::HalfDeterminant => input.iter().filter(|&&a| a == 0).count() as i64,
        };
        let diag = |e: i64| vec![(input.to_vec(), param.s_pow(e))];
        match gen {
            QGen::K => diag(2 * (ups - downs)),
            QGen::Kinv => diag(2 * (downs - ups)),
            QGen::K1 => diag(2 * ups + zeros),
            QGen::K2 => diag(2 * downs + zeros),
            QGen::Kinv1 => diag(-2 * ups - zeros),
            QGen::Kinv2 => diag(-2 * downs - zeros),
            QGen::E => (0..k)
                .filter(|&j| input[j] == -1)
                .map(|j| {
                    let mut out = input.to_vec();
                    out[j] = 1;
                    let w = input[j + 1..]
                        .iter()
                        .fold(S::one(), |w, &a| w * param.k_weight(a));
                    (out, w)
                })
                .collect(),
            QGen::F => (0..k)
                .filter(|&j| input[j] == 1)
                .map(|j| {
                    let mut out = input.to_vec();
                    out[j] = -1;
                    let w = input[..j]
                        .iter()
                        .fold(S::one(), |w, &a| w * param.k_weight(-a));
                    (out, w)
                })
                .collect(),
        }
    })
}

fn two_site_generators(k: usize) -> Result<Vec<MotzkinDiagram>> {
    let mut out = Vec::new();
    for i in 1..k {
        for kind in [GeneratorKind::T, GeneratorKind::L, GeneratorKind::R] {
            out.push(generator(kind, k, i, None)?);
        }
    }
    Ok(out)
}

/// For each quantum group generator, whether it commutes with every
/// `π(t_i)`, `π(ℓ_i)`, `π(r_i)`, `π(p_i)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CommutationReport {
    pub k: usize,
    pub zero_weight: ZeroWeight,
    pub results: Vec<(QGen, bool)>,
}

impl CommutationReport {
    pub fn commutes(&self, gen: QGen) -> bool {
        self.results.iter().any(|&(g, ok)| g == gen && ok)
    }

    /// `E`, `F`, `K^{±1}` all commute.
    pub fn sl2_commutes(&self) -> bool {
        [QGen::E, QGen::F, QGen::K, QGen::Kinv]
            .iter()
            .all(|&g| self.commutes(g))
    }

    pub fn all_commute(&self) -> bool {
        self.results.iter().all(|&(_, ok)| ok)
    }
}

pub fn commutation_report<S: Scalar>(
    k: usize,
    param: &Param<S>,
    zero: ZeroWeight,
) -> Result<CommutationReport> {
    let mut diagrams = two_site_generators(k)?;
    for i in 1..=k {
        diagrams.push(generator(GeneratorKind::P, k, i, None)?);
    }
    let ops: Vec<_> = diagrams
        .iter()
        .map(|d| diagram_operator(d, param))
        .collect();
    let mut results = Vec::with_capacity(QGen::ALL.len());
    for gen in QGen::ALL {
        let u = qgroup_operator_with(gen, k, param, zero);
        let mut ok = true;
        for op in &ops {
            if !op.commutator(&u)?.is_zero() {
                ok = false;
                break;
            }
        }
        results.push((gen, ok));
    }
    Ok(CommutationReport {
        k,
        zero_weight: zero,
        results,
    })
}

/// Whether every generator image `π(t_i)`, `π(ℓ_i)`, `π(r_i)`, `π(p_i)`
/// commutes with `E`, `F`, `K_1^{±1}` and `K_2^{±1}`, with `K_i v_0 = v_0`.
/// For `k >= 2` this is false: `π(t_i)` sends `v_{-1} ⊗ v_1` (of `K_1`-weight
/// `q`) to a combination involving `v_0 ⊗ v_0` (of `K_1`-weight 1). See
/// [`commutation_report`] for the generators that do commute.
pub fn commutation_check<S: Scalar>(k: usize, param: &Param<S>) -> Result<bool> {
    Ok(commutation_report(k, param, ZeroWeight::Trivial)?.all_commute())
}

/// Whether `π(d1) π(d2) = ζ_q^κ π(d3)` for each pair, where `d1 d2 = (κ, d3)`.
pub fn representation_check<S: Scalar>(
    pairs: &[(MotzkinDiagram, MotzkinDiagram)],
    param: &Param<S>,
) -> Result<bool> {
    let zeta = param.zeta();
    for (a, b) in pairs {
        let prod = a.multiply(b)?;
        let lhs = diagram_operator(a, param).compose(&diagram_operator(b, param))?;
        let rhs = diagram_operator(&prod.diagram, param).scale(&zeta.pow(prod.loops));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `count` pairs of `k`-diagrams drawn uniformly with a seeded generator.
pub fn sampled_pairs(k: usize, count: usize, seed: u64) -> Vec<(MotzkinDiagram, MotzkinDiagram)> {
    use rand::{Rng, SeedableRng};
    let all = crate::diagrams::enumerate_diagrams(k);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = all[rng.gen_range(0..all.len())].clone();
            let b = all[rng.gen_range(0..all.len())].clone();
            (a, b)
        })
        .collect()
}

/// Rank over the rationals of the flattened operators `π(d)`, `d` ranging
/// over all `k`-diagrams, at `s = s_val`.
pub fn faithfulness_rank(k: usize, s_val: &Rational) -> Result<usize> {
    use rayon::prelude::*;
    let param = Param::at(s_val)?;
    let rows: Vec<_> = crate::diagrams::enumerate_diagrams(k)
        .par_iter()
        .map(|d| diagram_operator(d, &param).flatten())
        .collect();
    Ok(crate::linalg::rank(rows))
}

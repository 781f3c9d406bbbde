//! Acceptance suite. Prints one PASS/FAIL line per criterion, with the
//! individual checks listed underneath, and exits nonzero on any failure
//! not listed in `KNOWN_RED`.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use motzkin_core::algebra::{embedding_check, matrix_unit_check, quotient_dimension};
use motzkin_core::cellmod::{
    bracket_pairing_check, cellularity_check, character, gram_block_check, gram_det_direct,
    gram_det_formula, gram_det_interpolated, is_semisimple, module_axiom_check, pivot_loop_check,
    restriction_check,
};
use motzkin_core::combinatorics::{
    binomial, catalan, enumerate_paths, m_count, m_via_temperley_lieb, motzkin_number,
};
use motzkin_core::diagrams::{
    classify, enumerate_diagrams, factor_rtl, generator, GeneratorKind, MotzkinDiagram,
};
use motzkin_core::scalars::{chebyshev_u_shifted, rat, ratio, LaurentS, PolyX, Rational};
use motzkin_core::schurweyl::{
    commutation_check, commutation_report, decomposition_audit, faithfulness_rank,
    positioned_operator, representation_check, Param, ZeroWeight,
};

const SEED: u64 = 0x6d6f_747a;

/// Wall-clock budgets per criterion.
const BUDGETS: [Duration; 7] = [
    Duration::from_secs(10),
    Duration::from_secs(60),
    Duration::from_secs(30),
    Duration::from_secs(120),
    Duration::from_secs(600),
    Duration::from_secs(60),
    Duration::from_secs(600),
];

/// Criteria that cannot pass as stated, with the single sub-check expected
/// to fail. Everything else in those criteria must still pass.
const KNOWN_RED: &[(usize, &str)] = &[(7, "commutation_check with E, F, K1, K2 (K_i v_0 = v_0)")];

struct Report {
    checks: Vec<(String, bool)>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    fn failing(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

type Res = motzkin_core::Result<Report>;
type Criterion = (&'static str, fn() -> Res);

fn counting() -> Res {
    let mut rep = Report::new();
    let mut sizes = true;
    for k in 1..=5 {
        sizes &= BigUint::from(enumerate_diagrams(k).len()) == motzkin_number(2 * k);
    }
    sizes &= enumerate_diagrams(2).len() == 9
        && enumerate_diagrams(4).len() == 323
        && enumerate_diagrams(5).len() == 2188;
    rep.check("|diagrams(k)| = M_2k for k <= 5 (9, 323, 2188)", sizes);
    let mut squares = true;
    let mut binomials = true;
    for k in 0..=10 {
        let m2k = motzkin_number(2 * k);
        let sq: BigUint = (0..=k).map(|r| m_count(k, r).pow(2)).sum();
        let bc: BigUint = (0..=k).map(|n| binomial(2 * k, 2 * n) * catalan(n)).sum();
        squares &= sq == m2k;
        binomials &= bc == m2k;
    }
    rep.check("sum_r m_{k,r}^2 = M_2k, k <= 10", squares);
    rep.check("sum_n binom(2k,2n) C_n = M_2k, k <= 10", binomials);
    let mut ledger = true;
    let mut tl = true;
    for k in 0..=12 {
        let total: BigUint = (0..=k).map(|r| m_count(k, r) * BigUint::from(r + 1)).sum();
        ledger &= total == BigUint::from(3u32).pow(k as u32);
        tl &= (0..=k).all(|r| m_via_temperley_lieb(k, r) == m_count(k, r));
    }
    rep.check("sum_r (r+1) m_{k,r} = 3^k, k <= 12", ledger);
    rep.check("m_via_temperley_lieb agrees, k <= 12", tl);
    let table: Vec<BigUint> = (0..=4).map(|r| m_count(4, r)).collect();
    let expected: Vec<BigUint> = [9u32, 12, 9, 4, 1].map(BigUint::from).to_vec();
    rep.check("m_{4,.} = (9, 12, 9, 4, 1)", table == expected);
    Ok(rep)
}

fn gen(kind: GeneratorKind, k: usize, i: usize) -> MotzkinDiagram {
    generator(kind, k, i, None).expect("valid generator")
}

/// `(ab)c = a(bc)` with loop counts added up.
fn associates(
    a: &MotzkinDiagram,
    b: &MotzkinDiagram,
    c: &MotzkinDiagram,
) -> motzkin_core::Result<bool> {
    let ab = a.multiply(b)?;
    let bc = b.multiply(c)?;
    let left = ab.diagram.multiply(c)?;
    let right = a.multiply(&bc.diagram)?;
    Ok(left.diagram == right.diagram && ab.loops + left.loops == bc.loops + right.loops)
}

fn diagram_algebra() -> Res {
    let mut rep = Report::new();
    let k2 = enumerate_diagrams(2);
    let mut triples = 0;
    let mut ok = true;
    for a in &k2 {
        for b in &k2 {
            for c in &k2 {
                ok &= associates(a, b, c)?;
                triples += 1;
            }
        }
    }
    rep.check(
        format!("associativity exhaustive at k=2 ({triples} triples)"),
        ok && triples == 729,
    );
    let k4 = enumerate_diagrams(4);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = true;
    for _ in 0..10_000 {
        let [a, b, c] = [0; 3].map(|_| &k4[rng.gen_range(0..k4.len())]);
        ok &= associates(a, b, c)?;
    }
    rep.check("associativity on 10^4 random triples at k=4", ok);
    let mut ok = true;
    for a in &k2 {
        for b in &k2 {
            let ab = a.multiply(b)?;
            let ba = b.involution().multiply(&a.involution())?;
            ok &= ab.loops == ba.loops && ab.diagram.involution() == ba.diagram;
        }
    }
    rep.check("involution is an anti-automorphism at k=2", ok);
    let mut ok = true;
    for k in 2..=5 {
        use GeneratorKind::*;
        for i in 1..=k {
            if i < k {
                let rl = gen(R, k, i).multiply(&gen(L, k, i))?;
                ok &= rl.loops == 0 && rl.diagram == gen(P, k, i);
            }
            if i > 1 {
                let lr = gen(L, k, i - 1).multiply(&gen(R, k, i - 1))?;
                ok &= lr.loops == 0 && lr.diagram == gen(P, k, i);
            }
        }
    }
    rep.check("p_i = r_i l_i = l_{i-1} r_{i-1}, k <= 5", ok);
    let mut ok = true;
    for k in 1..=4 {
        for d in enumerate_diagrams(k) {
            let (r, t, l) = factor_rtl(&d);
            let rt = r.multiply(&t)?;
            let rtl = rt.diagram.multiply(&l)?;
            let (cr, ct, cl) = (classify(&r), classify(&t), classify(&l));
            ok &= rt.loops + rtl.loops == 0 && rtl.diagram == d && cr.rp && ct.tl && cl.lp;
        }
    }
    rep.check("d = r t l with kappa = 0 for every diagram, k <= 4", ok);
    let mut ok = true;
    for k in 1..=5 {
        let all = enumerate_diagrams(k);
        let tl = all.iter().filter(|d| classify(d).tl).count();
        let rp = all.iter().filter(|d| classify(d).rp).count();
        ok &= BigUint::from(tl) == catalan(k) && BigUint::from(rp) == catalan(k + 1);
    }
    rep.check("#TL = C_k and #RP = C_{k+1}, k <= 5", ok);
    Ok(rep)
}

fn all_pairs(k: usize) -> Vec<(MotzkinDiagram, MotzkinDiagram)> {
    let all = enumerate_diagrams(k);
    all.iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn basic_construction() -> Res {
    let mut rep = Report::new();
    let xs = [rat(2), rat(3), rat(-1)];
    let mut ok = true;
    for x in &xs {
        ok &= embedding_check(&all_pairs(1), 3, x)?;
    }
    rep.check(
        "e d e multiplicative M_1 -> M_3, all pairs, x in {2, 3, -1}",
        ok,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let k2 = enumerate_diagrams(2);
    let sample: Vec<_> = (0..60)
        .map(|_| {
            (
                k2[rng.gen_range(0..9)].clone(),
                k2[rng.gen_range(0..9)].clone(),
            )
        })
        .collect();
    let mut ok = true;
    for x in &xs {
        ok &= embedding_check(&sample, 4, x)?;
    }
    rep.check(
        "e d e multiplicative M_2 -> M_4, 60 sampled pairs, x in {2, 3, -1}",
        ok,
    );
    rep.check(
        "matrix units for k = 2, 3, 4",
        (2..=4).all(matrix_unit_check),
    );
    rep.check(
        "dim M_k / J_{k-2} = k^2 + 1, k <= 4",
        (1..=4).all(|k| quotient_dimension(k) == k * k + 1),
    );
    Ok(rep)
}

fn cell_modules() -> Res {
    let mut rep = Report::new();
    let mut ok = true;
    for k in 1..=4 {
        ok &= module_axiom_check(k)?;
    }
    rep.check(
        "a (b v) = (ab) v over generators x paths, k <= 4, symbolic x",
        ok,
    );
    let mut ok = true;
    for k in 0..=5 {
        for r in 0..=k {
            for l in 0..=k {
                ok &= character(k, r, l)? == m_count(l, r);
            }
        }
    }
    rep.check("chi_r(1_{l,k}) = m_{l,r}, 0 <= r, l <= k <= 5", ok);
    let mut ok = true;
    for k in 2..=10 {
        for r in 0..=k {
            let paths = enumerate_paths(k, Some(r));
            let by_last = |a: i8| paths.iter().filter(|p| p.last_step() == Some(a)).count();
            let below = |t: Option<usize>| {
                t.filter(|&t| t < k)
                    .map_or(0, |t| enumerate_paths(k - 1, Some(t)).len())
            };
            ok &= by_last(1) == below(r.checked_sub(1))
                && by_last(0) == below(Some(r))
                && by_last(-1) == below(Some(r + 1));
        }
    }
    rep.check(
        "restriction cardinalities m_{k-1,r-1} + m_{k-1,r} + m_{k-1,r+1}, k <= 10",
        ok,
    );
    let mut ok = true;
    for k in 2..=4 {
        for r in 0..=k {
            ok &= restriction_check(k, r)?;
        }
    }
    rep.check("restriction module maps, k <= 4", ok);
    let mut ok = true;
    for k in 1..=4 {
        ok &= cellularity_check(k)?;
    }
    rep.check("cell coefficients independent of p, generators, k <= 4", ok);
    Ok(rep)
}

fn gram() -> Res {
    let mut rep = Report::new();
    let mut ok = true;
    for k in 0..=6 {
        for r in 0..=k {
            ok &= gram_det_direct(k, r) == gram_det_formula(k, r)?;
        }
    }
    rep.check("det G_k^(r) direct = product formula, 0 <= r <= k <= 6", ok);
    let mut ok = true;
    for k in 0..=5 {
        for r in 0..=k {
            ok &= gram_det_interpolated(k, r) == gram_det_direct(k, r);
        }
    }
    rep.check("det by interpolation = direct, k <= 5", ok);
    let u = chebyshev_u_shifted;
    let mut ok = true;
    for k in 1..=6 {
        ok &= gram_det_direct(k, k - 1).is_one();
        if k >= 2 {
            ok &= gram_det_direct(k, k - 2) == u(k - 1);
        }
        if k >= 3 {
            let want = (0..k).fold(PolyX::one(), |acc, _| &acc * &u(k - 2));
            ok &= gram_det_direct(k, k - 3) == want;
        }
    }
    rep.check(
        "det G^(k-1) = 1, G^(k-2) = u_{k-1}(x-1), G^(k-3) = u_{k-2}(x-1)^k, k <= 6",
        ok,
    );
    let mut ok = true;
    for k in 1..=5 {
        for r in 0..=k {
            ok &= gram_block_check(k, r)?;
        }
    }
    rep.check("block diagonalization over Q(x), k <= 5, all r", ok);
    rep.check("pivot loop identity, k <= 5", (1..=5).all(pivot_loop_check));
    rep.check(
        "bracket orthogonality, k <= 5",
        (1..=5).all(bracket_pairing_check),
    );
    Ok(rep)
}

/// Integer roots of a monic integer polynomial, from the divisors of its
/// lowest nonzero coefficient.
fn integer_roots(p: &PolyX) -> Vec<Rational> {
    let coeffs = p.coeffs();
    let mut out = Vec::new();
    let Some(low) = coeffs.iter().position(|c| !c.is_zero()) else {
        return out;
    };
    if low > 0 {
        out.push(rat(0));
    }
    let c = coeffs[low].to_integer();
    let c: i64 = c.try_into().expect("small constant term");
    for d in 1..=c.abs() {
        if c % d == 0 {
            for cand in [rat(d), rat(-d)] {
                if p.eval(&cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn semisimplicity() -> Res {
    let mut rep = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut xs: Vec<Rational> = (0..25)
        .map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=10)))
        .collect();
    xs.extend([rat(0), rat(1), rat(2)]);
    let dets: Vec<Vec<PolyX>> = (0..=5)
        .map(|k| (0..=k).map(|r| gram_det_direct(k, r)).collect())
        .collect();
    let mut ok = true;
    for (k, dk) in dets.iter().enumerate().skip(1) {
        for x in &xs {
            let nonzero = dk.iter().all(|d| !d.eval(x).is_zero());
            ok &= is_semisimple(k, x).semisimple == nonzero;
        }
    }
    rep.check(
        "semisimple <=> all Gram determinants nonzero, k <= 5, 28 values of x",
        ok,
    );
    let mut ok = true;
    let mut roots_seen = 0;
    for (k, dk) in dets.iter().enumerate().skip(2) {
        for j in 1..k {
            for root in integer_roots(&u_shift(j)) {
                roots_seen += 1;
                ok &= dk.iter().any(|d| d.eval(&root).is_zero());
                ok &= !is_semisimple(k, &root).semisimple;
            }
        }
    }
    rep.check(
        format!("a determinant vanishes at each rational root of u_j(x-1) ({roots_seen} cases)"),
        ok && roots_seen > 0,
    );
    Ok(rep)
}

fn u_shift(j: usize) -> PolyX {
    chebyshev_u_shifted(j)
}

fn schur_weyl() -> Res {
    let mut rep = Report::new();
    let sym = Param::<LaurentS>::symbolic();
    let generic = ratio(5, 7);
    let at = Param::at(&generic)?;
    rep.check(
        "representation, all 81 pairs at k=2, symbolic",
        representation_check(&all_pairs(2), &sym)?,
    );
    let gens = |k: usize| {
        use GeneratorKind::*;
        let mut out = vec![MotzkinDiagram::identity(k)];
        for i in 1..=k {
            out.push(gen(P, k, i));
            if i < k {
                out.extend([T, L, R].map(|kind| gen(kind, k, i)));
            }
        }
        out
    };
    let g3 = gens(3);
    let pairs: Vec<_> = g3
        .iter()
        .flat_map(|a| g3.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    rep.check(
        "representation, generator pairs at k=3, symbolic",
        representation_check(&pairs, &sym)?,
    );

    let mut sl2 = true;
    let mut literal = true;
    for k in 2..=3 {
        sl2 &= commutation_report(k, &sym, ZeroWeight::Trivial)?.sl2_commutes();
        literal &= commutation_check(k, &sym)?;
    }
    sl2 &= commutation_report(4, &at, ZeroWeight::Trivial)?.sl2_commutes();
    literal &= commutation_check(4, &at)?;
    rep.check(
        "commutation with E, F, K^{+-1}: symbolic k <= 3, s = 5/7 at k = 4",
        sl2,
    );
    rep.check(KNOWN_RED[0].1, literal);
    let mut alt = true;
    for k in 2..=3 {
        alt &= commutation_report(k, &sym, ZeroWeight::HalfDeterminant)?.all_commute();
    }
    rep.check(
        "commutation with E, F, K1, K2 when K_i v_0 = s v_0, k <= 3",
        alt,
    );

    let mut ok = true;
    for k in 2..=3 {
        for i in 1..k {
            let t = positioned_operator(GeneratorKind::T, k, i, &sym)?;
            ok &= t.compose(&t)? == t.scale(&sym.zeta());
        }
    }
    rep.check("T_i^2 = zeta_q T_i, symbolic, k <= 3", ok);
    let mut ok = true;
    for s in [ratio(5, 7), rat(3), ratio(-2, 5)] {
        ok &= faithfulness_rank(2, &s)? == 9 && faithfulness_rank(3, &s)? == 51;
    }
    rep.check(
        "faithfulness rank 9 (k=2) and 51 (k=3) at s in {5/7, 3, -2/5}",
        ok,
    );

    let expected: [&[usize]; 4] = [&[1, 1], &[2, 2, 1], &[4, 5, 3, 1], &[9, 12, 9, 4, 1]];
    let mut hw = true;
    let mut mult = true;
    for k in 1..=4 {
        let audit = decomposition_audit(k, &generic)?;
        hw &= audit.highest_weight
            && audit.leading_coefficients
            && audit.f_strings
            && audit.independent_rank == audit.path_count
            && audit.dimension_total == audit.tensor_dimension;
        mult &= audit.multiplicities == expected[k - 1];
    }
    rep.check(
        "highest weight: E w = 0, K w = q^r w, lead (-s^-2)^l, F-strings, rank |P_k|, k <= 4",
        hw,
    );
    rep.check(
        "multiplicities (1,1), (2,2,1), (4,5,3,1), (9,12,9,4,1)",
        mult,
    );
    Ok(rep)
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("counting", counting),
        ("diagram algebra", diagram_algebra),
        ("basic construction", basic_construction),
        ("cell modules", cell_modules),
        ("Gram determinants", gram),
        ("semisimplicity", semisimplicity),
        ("Schur-Weyl", schur_weyl),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let within = elapsed <= BUDGETS[i];
        let (pass, lines, failing) = match &result {
            Ok(rep) => {
                let failing: Vec<String> = rep.failing().iter().map(|s| s.to_string()).collect();
                (failing.is_empty() && within, rep.checks.clone(), failing)
            }
            Err(e) => (
                false,
                vec![(format!("error: {e}"), false)],
                vec![format!("error: {e}")],
            ),
        };
        println!(
            "criterion {n} [{}] {name} ({:.2}s, budget {}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            BUDGETS[i].as_secs()
        );
        for (check, ok) in &lines {
            println!("    {} {check}", if *ok { "ok  " } else { "FAIL" });
        }
        if !within {
            unexpected.push(format!("criterion {n}: over time budget"));
        }
        let known: Vec<&str> = KNOWN_RED
            .iter()
            .filter(|(c, _)| *c == n)
            .map(|(_, s)| *s)
            .collect();
        for f in &failing {
            if !known.contains(&f.as_str()) {
                unexpected.push(format!("criterion {n}: {f}"));
            }
        }
        for k in &known {
            if !failing.iter().any(|f| f == k) {
                unexpected.push(format!("criterion {n}: expected red check now passes: {k}"));
            }
        }
    }
    if !KNOWN_RED.is_empty() {
        println!("known red: {:?}", KNOWN_RED);
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected");
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}

//! Motzkin and Catalan numbers, the multiplicities `m_{k,r}`, Motzkin paths
//! and their 1-factor encoding.

use std::cmp::Ordering;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `M_n` from `M_n = M_{n-1} + sum_{i=0}^{n-2} M_i M_{n-2-i}`.
pub fn motzkin_number(n: usize) -> BigUint {
    let mut m: Vec<BigUint> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let next = if j == 0 {
            BigUint::one()
        } else {
            let conv = (0..j.saturating_sub(1))
                .map(|i| &m[i] * &m[j - 2 - i])
                .fold(BigUint::zero(), |a, b| a + b);
            &m[j - 1] + conv
        };
        m.push(next);
    }
    m.pop().expect("nonempty")
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

static M_TABLE: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());

/// Number of Motzkin paths of length `k` and rank `r`; zero outside `0..=k`.
pub fn m_count(k: usize, r: usize) -> BigUint {
    if r > k {
        return BigUint::zero();
    }
    if let Some(row) = M_TABLE.read().expect("table lock").get(k) {
        return row[r].clone();
    }
    let mut table = M_TABLE.write().expect("table lock");
    if table.is_empty() {
        table.push(vec![BigUint::one()]);
    }
    while table.len() <= k {
        let prev = table.last().expect("nonempty");
        let n = table.len();
        let get = |j: isize| -> BigUint {
            if j < 0 || j as usize >= prev.len() {
                BigUint::zero()
            } else {
                prev[j as usize].clone()
            }
        };
        let row = (0..=n as isize)
            .map(|j| get(j - 1) + get(j) + get(j + 1))
            .collect();
        table.push(row);
    }
    table[k][r].clone()
}

/// `m_{k,r}` as a sum of binomials times Temperley-Lieb dimensions.
pub fn m_via_temperley_lieb(k: usize, r: usize) -> BigUint {
    let mut total = BigInt::zero();
    let mut l = 0;
    while r + 2 * l <= k {
        let n = r + 2 * l;
        let tl = BigInt::from(binomial(n, l))
            - if l == 0 {
                BigInt::zero()
            } else {
                BigInt::from(binomial(n, l - 1))
            };
        total += BigInt::from(binomial(k, n)) * tl;
        l += 1;
    }
    total.to_biguint().expect("nonnegative count")
}

/// A sequence in `{-1, 0, 1}` with nonnegative prefix sums.
///
/// The `Ord` instance is the recursive order used for Gram matrices: compare
/// last steps first with `+1 < 0 < -1`, then the prefixes the same way.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct MotzkinPath {
    steps: Vec<i8>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        let mut h: i64 = 0;
        for &a in &steps {
            if !(-1..=1).contains(&a) {
                return Err(Error::InvalidPath(steps, "entries must lie in {-1, 0, 1}"));
            }
            h += a as i64;
            if h < 0 {
                return Err(Error::InvalidPath(steps, "prefix sum became negative"));
            }
        }
        Ok(MotzkinPath { steps })
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.steps.iter().map(|&a| a as i64).sum::<i64>() as usize
    }

    pub fn last_step(&self) -> Option<i8> {
        self.steps.last().copied()
    }

    /// The path with its last step removed.
    pub fn truncate(&self) -> MotzkinPath {
        let mut steps = self.steps.clone();
        steps.pop();
        MotzkinPath { steps }
    }

    pub fn push(&self, a: i8) -> Result<MotzkinPath> {
        let mut steps = self.steps.clone();
        steps.push(a);
        MotzkinPath::new(steps)
    }

    pub fn all_zero(k: usize) -> MotzkinPath {
        MotzkinPath { steps: vec![0; k] }
    }

    pub fn all_up(k: usize) -> MotzkinPath {
        MotzkinPath { steps: vec![1; k] }
    }

    /// Number of paired `(+1, -1)` steps.
    pub fn edge_count(&self) -> usize {
        self.steps.iter().filter(|&&a| a == -1).count()
    }

    pub fn to_factor(&self) -> OneFactor {
        path_to_factor(self)
    }
}

impl TryFrom<Vec<i8>> for MotzkinPath {
    type Error = Error;
    fn try_from(v: Vec<i8>) -> Result<Self> {
        MotzkinPath::new(v)
    }
}

impl From<MotzkinPath> for Vec<i8> {
    fn from(p: MotzkinPath) -> Self {
        p.steps
    }
}

impl Ord for MotzkinPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.steps.iter().rev().zip(other.steps.iter().rev()) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for MotzkinPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Paths of length `k` (and rank `r`, when given) in increasing path order.
pub fn enumerate_paths(k: usize, r: Option<usize>) -> Vec<MotzkinPath> {
    match r {
        Some(r) => paths_of_rank(k, r as i64),
        None => {
            if k == 0 {
                return vec![MotzkinPath { steps: vec![] }];
            }
            let prefixes = enumerate_paths(k - 1, None);
            let mut out = Vec::new();
            for last in [1i8, 0, -1] {
                for p in &prefixes {
                    if let Ok(q) = p.push(last) {
                        out.push(q);
                    }
                }
            }
            out
        }
    }
}

fn paths_of_rank(k: usize, r: i64) -> Vec<MotzkinPath> {
    if r < 0 || r > k as i64 {
        return Vec::new();
    }
    if k == 0 {
        return vec![MotzkinPath { steps: vec![] }];
    }
    let mut out = Vec::new();
    for last in [1i8, 0, -1] {
        for mut p in paths_of_rank(k - 1, r - last as i64) {
            p.steps.push(last);
            out.push(p);
        }
    }
    out
}

/// A colored 1-factor on vertices `1..=k`: white vertices plus non-crossing
/// edges, with no white vertex strictly inside an edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawFactor")]
pub struct OneFactor {
    k: usize,
    whites: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawFactor {
    k: usize,
    whites: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawFactor> for OneFactor {
    type Error = Error;
    fn try_from(raw: RawFactor) -> Result<Self> {
        OneFactor::new(raw.k, raw.whites, raw.edges)
    }
}

impl OneFactor {
    pub fn new(k: usize, mut whites: Vec<usize>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFactor(msg));
        let mut used = vec![false; k + 1];
        let mut mark = |v: usize| -> Result<()> {
            if v == 0 || v > k {
                return Err(Error::InvalidFactor(format!("vertex {v} outside 1..={k}")));
            }
            if std::mem::replace(&mut used[v], true) {
                return Err(Error::InvalidFactor(format!("vertex {v} used twice")));
            }
            Ok(())
        };
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        for &(a, b) in &edges {
            if a == b {
                return bad(format!("loop at vertex {a}"));
            }
            mark(a)?;
            mark(b)?;
        }
        for &w in &whites {
            mark(w)?;
        }
        edges.sort_unstable();
        whites.sort_unstable();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::Crossing((a, b), (c, d)));
                }
            }
            if let Some(w) = whites.iter().find(|&&w| a < w && w < b) {
                return bad(format!("white vertex {w} lies under edge ({a}, {b})"));
            }
        }
        Ok(OneFactor { k, whites, edges })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn whites(&self) -> &[usize] {
        &self.whites
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rank(&self) -> usize {
        self.whites.len()
    }

    /// Partner of each vertex (index 0 unused), `None` for whites and blacks.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.k + 1];
        for &(a, b) in &self.edges {
            p[a] = Some(b);
            p[b] = Some(a);
        }
        p
    }

    pub fn is_white(&self, v: usize) -> bool {
        self.whites.binary_search(&v).is_ok()
    }

    pub fn to_path(&self) -> MotzkinPath {
        factor_to_path(self)
    }
}

/// Pairs each `+1` with the first later index at which the running sum
/// returns to zero; unpaired `+1` steps become white vertices.
pub fn path_to_factor(p: &MotzkinPath) -> OneFactor {
    let mut stack = Vec::new();
    let mut edges = Vec::new();
    for (i, &a) in p.steps.iter().enumerate() {
        match a {
            1 => stack.push(i + 1),
            -1 => edges.push((stack.pop().expect("valid path"), i + 1)),
            _ => {}
        }
    }
    edges.sort_unstable();
    OneFactor {
        k: p.len(),
        whites: stack,
        edges,
    }
}

pub fn factor_to_path(f: &OneFactor) -> MotzkinPath {
    let mut steps = vec![0i8; f.k];
    for &w in &f.whites {
        steps[w - 1] = 1;
    }
    for &(a, b) in &f.edges {
        steps[a - 1] = 1;
        steps[b - 1] = -1;
    }
    MotzkinPath { steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn motzkin_series() {
        let expect = [1u64, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188];
        for (n, &m) in expect.iter().enumerate() {
            assert_eq!(motzkin_number(n), big(m));
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(10), big(16796));
    }

    #[test]
    fn catalan_matches_ballot_count() {
        // Balanced +1/-1 sequences of length 20 with nonnegative prefix sums.
        let n = 10;
        let mut count = 0u64;
        for mask in 0u32..(1 << (2 * n)) {
            if mask.count_ones() != n {
                continue;
            }
            let mut h = 0i32;
            let mut ok = true;
            for i in 0..2 * n {
                h += if mask >> i & 1 == 1 { 1 } else { -1 };
                if h < 0 {
                    ok = false;
                    break;
                }
            }
            count += ok as u64;
        }
        assert_eq!(catalan(10), big(count));
    }

    #[test]
    fn m_table_row_four() {
        let row: Vec<_> = (0..=4).map(|r| m_count(4, r)).collect();
        assert_eq!(row, vec![big(9), big(12), big(9), big(4), big(1)]);
        assert_eq!(m_count(4, 5), big(0));
        for k in 0..12 {
            assert_eq!(m_count(k, k), big(1));
        }
    }

    #[test]
    fn temperley_lieb_route() {
        assert_eq!(m_via_temperley_lieb(4, 2), big(9));
        assert_eq!(m_via_temperley_lieb(4, 3), big(4));
        assert_eq!(m_via_temperley_lieb(6, 0), big(51));
        for k in 0..=8 {
            for r in 0..=k {
                let n = enumerate_paths(k, Some(r)).len();
                assert_eq!(m_count(k, r), big(n as u64));
                assert_eq!(m_via_temperley_lieb(k, r), big(n as u64));
            }
        }
    }

    #[test]
    fn counting_identities() {
        for k in 0..=10 {
            let sq: BigUint = (0..=k).map(|r| m_count(k, r).pow(2)).sum();
            assert_eq!(sq, motzkin_number(2 * k));
            let cat: BigUint = (0..=k).map(|n| binomial(2 * k, 2 * n) * catalan(n)).sum();
            assert_eq!(cat, motzkin_number(2 * k));
        }
        for k in 0..=12 {
            let dim: BigUint = (0..=k).map(|r| BigUint::from(r + 1) * m_count(k, r)).sum();
            assert_eq!(dim, BigUint::from(3u32).pow(k as u32));
        }
    }

    #[test]
    fn small_enumerations() {
        let p = enumerate_paths(2, Some(0));
        let steps: Vec<_> = p.iter().map(|p| p.steps().to_vec()).collect();
        assert_eq!(steps, vec![vec![0, 0], vec![1, -1]]);
        assert_eq!(enumerate_paths(4, None).len(), 35);
        for k in 0..=10 {
            assert_eq!(
                big(enumerate_paths(k, Some(0)).len() as u64),
                motzkin_number(k)
            );
        }
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for k in 0..=7 {
            let all = enumerate_paths(k, None);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            // brute force over {-1,0,1}^k
            let mut brute = 0;
            for code in 0..3usize.pow(k as u32) {
                let steps: Vec<i8> = (0..k)
                    .map(|i| (code / 3usize.pow(i as u32) % 3) as i8 - 1)
                    .collect();
                brute += MotzkinPath::new(steps).is_ok() as usize;
            }
            assert_eq!(all.len(), brute);
        }
        for k in 0..=8 {
            for p in enumerate_paths(k, None) {
                assert_eq!(factor_to_path(&path_to_factor(&p)), p);
            }
        }
    }

    #[test]
    fn order_compares_last_step_first() {
        let a = MotzkinPath::new(vec![1, 0, 1]).unwrap();
        let b = MotzkinPath::new(vec![1, 1, 0]).unwrap();
        let c = MotzkinPath::new(vec![1, 1, -1]).unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn twenty_step_pairing() {
        let p = MotzkinPath::new(vec![
            1, 1, 1, -1, 1, -1, -1, 0, 1, -1, 1, 0, 1, 1, 0, 1, -1, -1, 0, 1,
        ])
        .unwrap();
        let f = path_to_factor(&p);
        assert_eq!(
            f.edges(),
            &[(2, 7), (3, 4), (5, 6), (9, 10), (14, 18), (16, 17)]
        );
        assert_eq!(f.whites(), &[1, 11, 13, 20]);
        assert_eq!(factor_to_path(&f), p);
    }

    #[test]
    fn trivial_factors() {
        let f = path_to_factor(&MotzkinPath::all_zero(5));
        assert!(f.whites().is_empty() && f.edges().is_empty());
        let f = path_to_factor(&MotzkinPath::all_up(4));
        assert_eq!(f.whites(), &[1, 2, 3, 4]);
        let white = OneFactor::new(3, vec![1, 2, 3], vec![]).unwrap();
        assert_eq!(factor_to_path(&white), MotzkinPath::all_up(3));
        let arc = OneFactor::new(2, vec![], vec![(1, 2)]).unwrap();
        assert_eq!(factor_to_path(&arc).steps(), &[1, -1]);
    }

    #[test]
    fn invalid_factors_rejected() {
        assert!(matches!(
            OneFactor::new(4, vec![], vec![(1, 3), (2, 4)]),
            Err(Error::Crossing(..))
        ));
        assert!(OneFactor::new(3, vec![2], vec![(1, 3)]).is_err());
        assert!(OneFactor::new(3, vec![1], vec![(1, 3)]).is_err());
        assert!(OneFactor::new(3, vec![4], vec![]).is_err());
        assert!(MotzkinPath::new(vec![0, -1]).is_err());
        assert!(MotzkinPath::new(vec![2]).is_err());
    }

    #[test]
    fn json_shapes() {
        let p = MotzkinPath::new(vec![1, 0, -1]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,-1]");
        assert!(serde_json::from_str::<MotzkinPath>("[-1]").is_err());
        let f = p.to_factor();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"k":3,"whites":[],"edges":[[1,3]]}"#);
        assert_eq!(serde_json::from_str::<OneFactor>(&s).unwrap(), f);
    }

    /// Literal reading of the pairing rule: `i` pairs with the smallest
    /// `j > i` such that `a_i + ... + a_j = 0`.
    fn pairing_oracle(steps: &[i8]) -> (Vec<(usize, usize)>, Vec<usize>) {
        let mut edges = Vec::new();
        let mut whites = Vec::new();
        for i in 0..steps.len() {
            if steps[i] != 1 {
                continue;
            }
            let mut sum = 0i32;
            let mut partner = None;
            for (j, &a) in steps.iter().enumerate().skip(i) {
                sum += a as i32;
                if sum == 0 {
                    partner = Some(j);
                    break;
                }
            }
            match partner {
                Some(j) => edges.push((i + 1, j + 1)),
                None => whites.push(i + 1),
            }
        }
        (edges, whites)
    }

    fn arb_path(max_len: usize) -> impl Strategy<Value = MotzkinPath> {
        prop::collection::vec(-1i8..=1, 0..max_len).prop_map(|raw| {
            let mut h = 0i8;
            let steps = raw
                .into_iter()
                .map(|a| {
                    let a = if h + a < 0 { 0 } else { a };
                    h += a;
                    a
                })
                .collect();
            MotzkinPath::new(steps).unwrap()
        })
    }

    proptest! {
        #[test]
        fn pairing_matches_literal_rule(p in arb_path(24)) {
            let f = path_to_factor(&p);
            let (edges, whites) = pairing_oracle(p.steps());
            prop_assert_eq!(f.edges(), &edges[..]);
            prop_assert_eq!(f.whites(), &whites[..]);
            prop_assert_eq!(f.rank(), p.rank());
            let checked = OneFactor::new(f.k(), f.whites().to_vec(), f.edges().to_vec());
            prop_assert_eq!(checked.as_ref(), Ok(&f));
            prop_assert_eq!(factor_to_path(&f), p);
        }
    }
}

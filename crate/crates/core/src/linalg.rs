//! Exact elimination: sparse rank over the rationals, fraction-free
//! determinants over `Z[x]` and `Z`, and polynomial interpolation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::{PolyX, Rational};

/// Rank of a set of sparse rational row vectors.
pub fn rank<K: Ord + Clone>(rows: impl IntoIterator<Item = BTreeMap<K, Rational>>) -> usize {
    // Echelon rows keyed by their leading column, normalized to a leading 1.
    let mut pivots: BTreeMap<K, BTreeMap<K, Rational>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((col, lead)) = row.iter().next().map(|(c, v)| (c.clone(), v.clone())) else {
                break;
            };
            match pivots.get(&col) {
                Some(p) => {
                    for (c, v) in p {
                        let e = row.entry(c.clone()).or_insert_with(Rational::zero);
                        *e -= &lead * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = Rational::one() / lead;
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dense polynomial with integer coefficients, used inside Bareiss
/// elimination where every division is exact.
#[derive(Clone, PartialEq, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly(out).trim()
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        IntPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
        .trim()
    }

    fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Exact division; panics if the quotient leaves `Z[x]`.
    fn div_exact(&self, d: &Self) -> Self {
        let dd = d.0.len() - 1;
        let lead = &d.0[dd];
        if lead.is_one() && dd == 0 {
            return self.clone();
        }
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            assert!(self.is_zero(), "inexact division in elimination");
            return IntPoly(Vec::new());
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let (c, r) = rem[i + dd].div_rem(lead);
            assert!(r.is_zero(), "inexact division in elimination");
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact division in elimination"
        );
        IntPoly(q).trim()
    }
}

/// Clears denominators row by row; returns integer rows and the factor the
/// determinant must be divided by.
fn integral_rows(m: &[Vec<PolyX>]) -> (Vec<Vec<IntPoly>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .flat_map(|p| p.coeffs().iter())
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter()
                .map(|p| {
                    IntPoly(
                        p.coeffs()
                            .iter()
                            .map(|c| c.numer() * (&l / c.denom()))
                            .collect(),
                    )
                    .trim()
                })
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Determinant of a square matrix over `Q[x]` by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn det_poly(m: &[Vec<PolyX>]) -> PolyX {
    let n = m.len();
    if n == 0 {
        return PolyX::one();
    }
    let (mut a, scale) = integral_rows(m);
    let mut negate = false;
    let mut prev = IntPoly(vec![BigInt::one()]);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return PolyX::zero(),
            }
        }
        if k + 1 == n {
            break;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = pivot.mul(&row[j]);
                let t = if lead.is_zero() || pivot_row[j].is_zero() {
                    t
                } else {
                    t.sub(&lead.mul(&pivot_row[j]))
                };
                row[j] = t.div_exact(&prev);
            }
            row[k] = IntPoly(Vec::new());
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = det.neg();
    }
    let inv = Rational::new(BigInt::one(), scale);
    PolyX::new(
        det.0
            .into_iter()
            .map(|c| Rational::from_integer(c) * &inv)
            .collect(),
    )
}

/// Determinant of a rational matrix by Bareiss elimination on cleared rows.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if negate { -prev } else { prev };
    Rational::new(det, scale)
}

/// The unique polynomial of degree `< points.len()` through the points
/// (Newton divided differences).
pub fn interpolate(points: &[(Rational, Rational)]) -> PolyX {
    let n = points.len();
    let mut coef: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            coef[i] = (&coef[i] - &coef[i - 1]) / dx;
        }
    }
    let mut poly = PolyX::zero();
    for i in (0..n).rev() {
        let lin = PolyX::new(vec![-points[i].0.clone(), Rational::one()]);
        poly = &(&poly * &lin) + &PolyX::constant(coef[i].clone());
    }
    poly
}

/// Determinant by evaluating at `degree_bound + 1` integer points and
/// interpolating. `degree_bound` must bound the degree of the determinant.
pub fn det_poly_by_interpolation(m: &[Vec<PolyX>], degree_bound: usize) -> PolyX {
    let points: Vec<(Rational, Rational)> = (0..=degree_bound as i64)
        .map(|t| {
            let at = Rational::from_integer(BigInt::from(t));
            let mv: Vec<Vec<Rational>> = m
                .iter()
                .map(|row| row.iter().map(|p| p.eval(&at)).collect())
                .collect();
            (at, det_rational(&mv))
        })
        .collect();
    interpolate(&points)
}

/// Sum over rows of the largest entry degree, an upper bound for the
/// degree of the determinant.
pub fn row_degree_bound(m: &[Vec<PolyX>]) -> usize {
    m.iter()
        .map(|row| row.iter().filter_map(|p| p.degree()).max().unwrap_or(0))
        .sum()
}

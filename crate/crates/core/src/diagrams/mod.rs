//! Motzkin `k`-diagrams: planar partial matchings on a top and a bottom row
//! of `k` vertices each.
//!
//! Vertex `i < k` is the `(i+1)`-th top vertex from the left and vertex
//! `k + i` the `(i+1)`-th bottom vertex from the left.

mod factor;
mod generators;
mod render;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{MotzkinPath, OneFactor};
use crate::error::{Error, Result};

pub use factor::{classify, factor_rtl, DiagramClass};
pub use generators::{generator, GeneratorKind};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MotzkinDiagram {
    k: usize,
    partner: Vec<Option<usize>>,
}

/// The product `d1 d2 = x^loops diagram`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramProduct {
    pub loops: usize,
    pub diagram: MotzkinDiagram,
}

/// Position of a vertex on the circle: top row left to right, then bottom
/// row right to left.
fn circular(k: usize, v: usize) -> usize {
    if v < k {
        v
    } else {
        3 * k - 1 - v
    }
}

impl MotzkinDiagram {
    /// Checks the partner table and returns the diagram.
    pub fn validate(k: usize, partner: Vec<Option<usize>>) -> Result<Self> {
        if partner.len() != 2 * k {
            return Err(Error::SizeMismatch(partner.len(), 2 * k));
        }
        for (v, &p) in partner.iter().enumerate() {
            if let Some(w) = p {
                if w == v {
                    return Err(Error::FixedPoint(v));
                }
                if w >= 2 * k || partner[w] != Some(v) {
                    return Err(Error::NotInvolution(v));
                }
            }
        }
        let d = MotzkinDiagram { k, partner };
        let chords: Vec<(usize, usize)> = d
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (ca, cb) = (circular(k, a), circular(k, b));
                (ca.min(cb), ca.max(cb))
            })
            .collect();
        let original = d.edges();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                let ((a, b), (c, e)) = (chords[i], chords[j]);
                if (a < c && c < b && b < e) || (c < a && a < e && e < b) {
                    return Err(Error::Crossing(original[i], original[j]));
                }
            }
        }
        Ok(d)
    }

    /// Builds a diagram from 0-based vertex pairs.
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![None; 2 * k];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= 2 * k {
                    return Err(Error::IndexOutOfRange {
                        what: "vertex",
                        index: v,
                        k,
                    });
                }
                if partner[v].is_some() {
                    return Err(Error::NotInvolution(v));
                }
            }
            if a == b {
                return Err(Error::FixedPoint(a));
            }
            partner[a] = Some(b);
            partner[b] = Some(a);
        }
        Self::validate(k, partner)
    }

    /// Builds a diagram from 1-based `(top, bottom)` verticals, top arcs and
    /// bottom arcs, the way diagrams are usually drawn.
    pub fn from_rows(
        k: usize,
        verticals: &[(usize, usize)],
        top_arcs: &[(usize, usize)],
        bottom_arcs: &[(usize, usize)],
    ) -> Result<Self> {
        let mut edges = Vec::new();
        let pos = |v: usize| -> Result<usize> {
            if v == 0 || v > k {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    index: v,
                    k,
                });
            }
            Ok(v - 1)
        };
        for &(t, b) in verticals {
            edges.push((pos(t)?, k + pos(b)?));
        }
        for &(a, b) in top_arcs {
            edges.push((pos(a)?, pos(b)?));
        }
        for &(a, b) in bottom_arcs {
            edges.push((k + pos(a)?, k + pos(b)?));
        }
        Self::from_edges(k, &edges)
    }

    pub fn identity(k: usize) -> Self {
        let partner = (0..2 * k)
            .map(|v| Some(if v < k { v + k } else { v - k }))
            .collect();
        MotzkinDiagram { k, partner }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner[v]
    }

    pub fn partners(&self) -> &[Option<usize>] {
        &self.partner
    }

    pub fn is_top(&self, v: usize) -> bool {
        v < self.k
    }

    /// Edges as 0-based pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(a, p)| p.filter(|&b| a < b).map(|b| (a, b)))
            .collect()
    }

    /// Vertical edges as 0-based `(top, bottom)` row positions.
    pub fn verticals(&self) -> Vec<(usize, usize)> {
        (0..self.k)
            .filter_map(|i| match self.partner[i] {
                Some(b) if b >= self.k => Some((i, b - self.k)),
                _ => None,
            })
            .collect()
    }

    /// Horizontal edges in the top row as 0-based positions.
    pub fn top_arcs(&self) -> Vec<(usize, usize)> {
        (0..self.k)
            .filter_map(|i| match self.partner[i] {
                Some(j) if j < self.k && i < j => Some((i, j)),
                _ => None,
            })
            .collect()
    }

    /// Horizontal edges in the bottom row as 0-based positions.
    pub fn bottom_arcs(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        (k..2 * k)
            .filter_map(|i| match self.partner[i] {
                Some(j) if j >= k && i < j => Some((i - k, j - k)),
                _ => None,
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.partner.iter().flatten().count() / 2
    }

    /// Number of vertical edges.
    pub fn rank(&self) -> usize {
        (0..self.k)
            .filter(|&i| self.partner[i].is_some_and(|b| b >= self.k))
            .count()
    }

    /// Swaps the two rows.
    pub fn involution(&self) -> Self {
        let k = self.k;
        let flip = |v: usize| if v < k { v + k } else { v - k };
        let mut partner = vec![None; 2 * k];
        for (v, p) in self.partner.iter().enumerate() {
            partner[flip(v)] = p.map(flip);
        }
        MotzkinDiagram { k, partner }
    }

    /// The top row read as a 1-factor: top arcs plus a white vertex at the top
    /// end of every vertical edge.
    pub fn top_factor(&self) -> OneFactor {
        let whites = self.verticals().iter().map(|&(t, _)| t + 1).collect();
        let edges = self
            .top_arcs()
            .iter()
            .map(|&(a, b)| (a + 1, b + 1))
            .collect();
        OneFactor::new(self.k, whites, edges).expect("planar top row")
    }

    /// The bottom row read as a 1-factor.
    pub fn bottom_factor(&self) -> OneFactor {
        self.involution().top_factor()
    }

    /// Stacks `self` over `other` and traces the middle row.
    pub fn multiply(&self, other: &Self) -> Result<DiagramProduct> {
        let k = self.k;
        if other.k != k {
            return Err(Error::SizeMismatch(k, other.k));
        }
        // Outer vertices: 0..k are the top of self, k..2k the bottom of other.
        // Middle vertex m is self's bottom vertex k+m and other's top vertex m.
        let mut visited = vec![false; k];
        let mut partner = vec![None; 2 * k];

        // Walks from an outer vertex to the outer vertex it is joined to.
        let walk = |start: usize, visited: &mut Vec<bool>| -> Option<usize> {
            let (mut in_upper, mut v) = (start < k, start);
            loop {
                if in_upper {
                    match self.partner[v]? {
                        t if t < k => return Some(t),
                        b => {
                            let m = b - k;
                            visited[m] = true;
                            in_upper = false;
                            v = m;
                        }
                    }
                } else {
                    match other.partner[v]? {
                        b if b >= k => return Some(b),
                        m => {
                            visited[m] = true;
                            in_upper = true;
                            v = m + k;
                        }
                    }
                }
            }
        };
        for start in 0..2 * k {
            if partner[start].is_some() {
                continue;
            }
            if let Some(end) = walk(start, &mut visited) {
                partner[start] = Some(end);
                partner[end] = Some(start);
            }
        }

        // The remaining middle components are closed loops when every vertex
        // carries an arc from both sides, and open paths otherwise.
        let upper_arc = |m: usize| self.partner[m + k].filter(|&b| b >= k).map(|b| b - k);
        let lower_arc = |m: usize| other.partner[m].filter(|&t| t < k);
        let mut loops = 0;
        for m0 in 0..k {
            if visited[m0] {
                continue;
            }
            let mut stack = vec![m0];
            visited[m0] = true;
            let mut closed = true;
            while let Some(m) = stack.pop() {
                for next in [upper_arc(m), lower_arc(m)] {
                    match next {
                        Some(n) if !visited[n] => {
                            visited[n] = true;
                            stack.push(n);
                        }
                        Some(_) => {}
                        None => closed = false,
                    }
                }
            }
            loops += closed as usize;
        }
        // Outer walks used indices 0..2k with bottom vertices of `other` at
        // k..2k already, which is the layout of the result.
        Ok(DiagramProduct {
            loops,
            diagram: MotzkinDiagram { k, partner },
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DiagramJson::from(self)).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: DiagramJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    pub fn render(&self) -> String {
        render::ascii(self)
    }
}

/// `d_p^q`: bottom row from `p`, top row from `q`, with the `i`-th white
/// vertex of `p` joined to the `i`-th white vertex of `q`.
pub fn diagram_from_paths(p: &MotzkinPath, q: &MotzkinPath) -> Result<MotzkinDiagram> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    if p.rank() != q.rank() {
        return Err(Error::RankMismatch(p.rank(), q.rank()));
    }
    let (fp, fq) = (p.to_factor(), q.to_factor());
    let verticals: Vec<(usize, usize)> = fq
        .whites()
        .iter()
        .zip(fp.whites())
        .map(|(&t, &b)| (t, b))
        .collect();
    MotzkinDiagram::from_rows(p.len(), &verticals, fq.edges(), fp.edges())
}

/// Enumerates all diagrams on `k + k` vertices, sorted by partner table.
pub fn enumerate_diagrams(k: usize) -> Vec<MotzkinDiagram> {
    let n = 2 * k;
    // circular position -> vertex
    let vertex = |c: usize| if c < k { c } else { 3 * k - 1 - c };
    let mut out = Vec::new();
    let mut partner = vec![None; n];
    let mut pending = vec![(0, n)];
    fill(&mut pending, &mut partner, &mut |chords: &[Option<
        usize,
    >]| {
        let mut p = vec![None; n];
        for (c, q) in chords.iter().enumerate() {
            p[vertex(c)] = q.map(vertex);
        }
        out.push(MotzkinDiagram { k, partner: p });
    });
    out.sort();
    out
}

/// Visits every non-crossing partial matching of the pending position
/// intervals, writing chords into `partner` (indexed by circular position).
fn fill(
    pending: &mut Vec<(usize, usize)>,
    partner: &mut [Option<usize>],
    emit: &mut dyn FnMut(&[Option<usize>]),
) {
    let Some((lo, hi)) = pending.pop() else {
        emit(partner);
        return;
    };
    if lo >= hi {
        fill(pending, partner, emit);
    } else {
        pending.push((lo + 1, hi));
        fill(pending, partner, emit);
        pending.pop();
        for j in lo + 1..hi {
            partner[lo] = Some(j);
            partner[j] = Some(lo);
            pending.push((j + 1, hi));
            pending.push((lo + 1, j));
            fill(pending, partner, emit);
            pending.pop();
            pending.pop();
            partner[lo] = None;
            partner[j] = None;
        }
    }
    pending.push((lo, hi));
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    k: usize,
    edges: Vec<[String; 2]>,
}

fn label(k: usize, v: usize) -> String {
    if v < k {
        format!("T{}", v + 1)
    } else {
        format!("B{}", v - k + 1)
    }
}

fn parse_label(k: usize, s: &str) -> Result<usize> {
    let bad = || Error::Parse(format!("bad vertex label {s:?}"));
    let (row, num) = s.split_at(1.min(s.len()));
    let i: usize = num.parse().map_err(|_| bad())?;
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange {
            what: "vertex label",
            index: i,
            k,
        });
    }
    match row {
        "T" | "t" => Ok(i - 1),
        "B" | "b" => Ok(k + i - 1),
        _ => Err(bad()),
    }
}

impl From<&MotzkinDiagram> for DiagramJson {
    fn from(d: &MotzkinDiagram) -> Self {
        DiagramJson {
            k: d.k,
            edges: d
                .edges()
                .into_iter()
                .map(|(a, b)| [label(d.k, a), label(d.k, b)])
                .collect(),
        }
    }
}

impl TryFrom<DiagramJson> for MotzkinDiagram {
    type Error = Error;
    fn try_from(raw: DiagramJson) -> Result<Self> {
        let edges = raw
            .edges
            .iter()
            .map(|[a, b]| Ok((parse_label(raw.k, a)?, parse_label(raw.k, b)?)))
            .collect::<Result<Vec<_>>>()?;
        MotzkinDiagram::from_edges(raw.k, &edges)
    }
}

impl Serialize for MotzkinDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotzkinDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        raw.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MotzkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", label(self.k, a), label(self.k, b)))
            .collect();
        write!(f, "[k={}; {}]", self.k, parts.join(" "))
    }
}

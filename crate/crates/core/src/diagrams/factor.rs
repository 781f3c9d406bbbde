use super::MotzkinDiagram;

/// Membership in the Temperley-Lieb, right-planar-rook and left-planar-rook
/// families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct DiagramClass {
    pub tl: bool,
    pub rp: bool,
    pub lp: bool,
}

pub fn classify(d: &MotzkinDiagram) -> DiagramClass {
    let k = d.k();
    let no_arcs = d.top_arcs().is_empty() && d.bottom_arcs().is_empty();
    let verticals = d.verticals();
    DiagramClass {
        tl: d.edge_count() == k,
        rp: no_arcs && verticals.iter().all(|&(t, b)| b <= t),
        lp: no_arcs && verticals.iter().all(|&(t, b)| t <= b),
    }
}

/// Writes `d = r t l` with `r` right-planar-rook, `t` Temperley-Lieb and
/// `l` left-planar-rook.
///
/// The isolated vertices of each row are pushed to the right. If one row then
/// has fewer arcs than the other, adjacent arcs are added to it immediately
/// after its occupied positions, and the remaining positions are filled with
/// vertical strands.
pub fn factor_rtl(d: &MotzkinDiagram) -> (MotzkinDiagram, MotzkinDiagram, MotzkinDiagram) {
    let k = d.k();
    let occupied = |row: std::ops::Range<usize>| -> Vec<usize> {
        row.filter(|&v| d.partner(v).is_some()).collect()
    };
    let top = occupied(0..k);
    let bottom: Vec<usize> = occupied(k..2 * k).into_iter().map(|v| v - k).collect();
    let new_top = |i: usize| top.binary_search(&i).expect("occupied top vertex");
    let new_bottom = |i: usize| bottom.binary_search(&i).expect("occupied bottom vertex");

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (t, b) in d.verticals() {
        edges.push((new_top(t), k + new_bottom(b)));
    }
    let top_arcs = d.top_arcs();
    let bottom_arcs = d.bottom_arcs();
    for &(a, b) in &top_arcs {
        edges.push((new_top(a), new_top(b)));
    }
    for &(a, b) in &bottom_arcs {
        edges.push((k + new_bottom(a), k + new_bottom(b)));
    }
    let (ht, hb) = (top_arcs.len(), bottom_arcs.len());
    let h = ht.max(hb);
    for extra in 0..h - ht {
        let a = top.len() + 2 * extra;
        edges.push((a, a + 1));
    }
    for extra in 0..h - hb {
        let a = bottom.len() + 2 * extra;
        edges.push((k + a, k + a + 1));
    }
    let filled = d.rank() + 2 * h;
    for i in filled..k {
        edges.push((i, k + i));
    }
    let t = MotzkinDiagram::from_edges(k, &edges).expect("middle factor is planar");

    let r_edges: Vec<(usize, usize)> = top.iter().enumerate().map(|(m, &v)| (v, k + m)).collect();
    let l_edges: Vec<(usize, usize)> = bottom
        .iter()
        .enumerate()
        .map(|(m, &v)| (m, k + v))
        .collect();
    let r = MotzkinDiagram::from_edges(k, &r_edges).expect("rook diagram is planar");
    let l = MotzkinDiagram::from_edges(k, &l_edges).expect("rook diagram is planar");
    (r, t, l)
}

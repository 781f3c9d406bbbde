use super::MotzkinDiagram;
use crate::error::{Error, Result};

/// Named diagrams. Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    Identity,
    /// `t_i`: arcs `(i, i+1)` in both rows.
    T,
    /// `l_i`: top `i` joined to bottom `i+1`.
    L,
    /// `r_i`: bottom `i` joined to top `i+1`.
    R,
    /// `p_i`: vertex `i` isolated in both rows.
    P,
    /// `1_{l,k}`: verticals at `1..=l`, isolated vertices after.
    OnePartial,
    /// `r_{i,j} = r_{i-1} ... r_j`: bottom `j` joined to top `i`.
    RChain,
}

fn out_of_range(what: &'static str, index: usize, k: usize) -> Error {
    Error::IndexOutOfRange { what, index, k }
}

/// Identity strands at every 1-based position outside `skip`, plus the given
/// verticals and arcs.
fn build(
    k: usize,
    skip: &[usize],
    verticals: &[(usize, usize)],
    top_arcs: &[(usize, usize)],
    bottom_arcs: &[(usize, usize)],
) -> MotzkinDiagram {
    let mut vs: Vec<(usize, usize)> = (1..=k)
        .filter(|i| !skip.contains(i))
        .map(|i| (i, i))
        .collect();
    vs.extend_from_slice(verticals);
    MotzkinDiagram::from_rows(k, &vs, top_arcs, bottom_arcs).expect("generator is planar")
}

/// Builds a named generator. `i` is ignored for `Identity`; `j` is only read
/// by `RChain`.
pub fn generator(
    kind: GeneratorKind,
    k: usize,
    i: usize,
    j: Option<usize>,
) -> Result<MotzkinDiagram> {
    use GeneratorKind::*;
    let two_site = |name| {
        if i == 0 || i >= k {
            Err(out_of_range(name, i, k))
        } else {
            Ok(())
        }
    };
    Ok(match kind {
        Identity => MotzkinDiagram::identity(k),
        T => {
            two_site("t_i")?;
            build(k, &[i, i + 1], &[], &[(i, i + 1)], &[(i, i + 1)])
        }
        L => {
            two_site("l_i")?;
            build(k, &[i, i + 1], &[(i, i + 1)], &[], &[])
        }
        R => {
            two_site("r_i")?;
            build(k, &[i, i + 1], &[(i + 1, i)], &[], &[])
        }
        P => {
            if i == 0 || i > k {
                return Err(out_of_range("p_i", i, k));
            }
            build(k, &[i], &[], &[], &[])
        }
        OnePartial => {
            if i > k {
                return Err(out_of_range("1_{l,k}", i, k));
            }
            let tail: Vec<usize> = (i + 1..=k).collect();
            build(k, &tail, &[], &[], &[])
        }
        RChain => {
            let j = j.unwrap_or(i);
            if i == 0 || i > k {
                return Err(out_of_range("r_{i,j}", i, k));
            }
            if j == 0 || j > i {
                return Err(out_of_range("r_{i,j} lower index", j, k));
            }
            let span: Vec<usize> = (j..=i).collect();
            build(k, &span, &[(i, j)], &[], &[])
        }
    })
}

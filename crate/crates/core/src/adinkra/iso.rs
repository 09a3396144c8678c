//! Cayley graphs of GF(2) matrices and color-preserving isomorphism.

use super::{ColoredGraph, Edge};
use crate::codes::{BitVector, Gf2Matrix};
use crate::error::{Error, Result};
use crate::limits;

/// The Cayley graph of `GF(2)^r` with generators the columns of `m`: an
/// edge of color `i` joins `h` and `h + m_i`.
pub fn cayley_graph(m: &Gf2Matrix) -> Result<ColoredGraph> {
    let (r, n) = (m.nrows(), m.ncols());
    if m.rank() != r {
        return Err(Error::InvalidParameter(format!("matrix has rank {} < {r} rows", m.rank())));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("matrix has no columns".into()));
    }
    limits::check(r as u128, limits::MAX_QUOTIENT_LOG2 as u128, "Cayley graph dimension")?;
    let columns: Vec<BitVector> = (0..n).map(|j| m.column(j)).collect();
    let all: Vec<BitVector> = (0..1u64 << r).map(|x| BitVector::from_u64(r, x)).collect();
    let graph = ColoredGraph::new(n, all, Vec::new())?;
    let order = graph.canonical_order();
    let labels: Vec<BitVector> = order.iter().map(|&i| graph.label(i).clone()).collect();
    let base = ColoredGraph::new(n, labels, Vec::new())?;
    let mut edges = Vec::with_capacity(n << r >> 1);
    for (color, g) in columns.iter().enumerate() {
        for i in 0..base.num_vertices() {
            let j = base.index_of(&base.label(i).xor(g)).expect("closed under translation");
            if i < j {
                edges.push(Edge { u: i, v: j, color });
            }
        }
    }
    ColoredGraph::new(n, base.labels().to_vec(), edges)
}

/// True iff the columns of `m` sum to a nonzero vector.
pub fn is_generic(m: &Gf2Matrix) -> bool {
    !m.mul_vec(&BitVector::ones(m.ncols())).expect("length matches").is_zero()
}

/// A bijection `f` from the vertices of `g1` to those of `g2` such that
/// `u -c- v` in `g1` iff `f(u) -c- f(v)` in `g2`. Each component is anchored
/// at its first vertex; the rest of the component is then forced color by color.
pub fn color_isomorphism(g1: &ColoredGraph, g2: &ColoredGraph) -> Option<Vec<usize>> {
    if g1.n_colors() != g2.n_colors()
        || g1.num_vertices() != g2.num_vertices()
        || g1.edges().len() != g2.edges().len()
        || !g1.is_color_regular()
        || !g2.is_color_regular()
    {
        return None;
    }
    let n = g1.num_vertices();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &mut map, &mut used) {
        debug_assert!(g1.edges().iter().all(|e| {
            g2.neighbor(map[e.u], e.color) == Some(map[e.v])
        }));
        Some(map)
    } else {
        None
    }
}

fn extend(g1: &ColoredGraph, g2: &ColoredGraph, map: &mut [usize], used: &mut [bool]) -> bool {
    let Some(anchor) = map.iter().position(|&m| m == usize::MAX) else {
        return true;
    };
    for target in 0..g2.num_vertices() {
        if used[target] {
            continue;
        }
        let mut assigned = Vec::new();
        if propagate(g1, g2, anchor, target, map, used, &mut assigned) && extend(g1, g2, map, used) {
            return true;
        }
        for v in assigned {
            used[map[v]] = false;
            map[v] = usize::MAX;
        }
    }
    false
}

fn propagate(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    anchor: usize,
    target: usize,
    map: &mut [usize],
    used: &mut [bool],
    assigned: &mut Vec<usize>,
) -> bool {
    map[anchor] = target;
    used[target] = true;
    assigned.push(anchor);
    let mut stack = vec![anchor];
    while let Some(x) = stack.pop() {
        for c in 0..g1.n_colors() {
            let (Some(x2), Some(y2)) = (g1.neighbor(x, c), g2.neighbor(map[x], c)) else {
                return false;
            };
            if map[x2] == usize::MAX {
                if used[y2] {
                    return false;
                }
                map[x2] = y2;
                used[y2] = true;
                assigned.push(x2);
                stack.push(x2);
            } else if map[x2] != y2 {
                return false;
            }
        }
    }
    true
}

//! Totally odd signatures as solutions of a GF(2) parity system.

use std::collections::HashSet;

use super::{Adinkra, ColoredGraph};
use crate::codes::{BitVector, Gf2Matrix};
use crate::error::{Error, Result};
use crate::limits;

/// One equation per two-colored cycle, over one variable per edge (1 = dashed):
/// the dashed edges on every cycle must sum to 1. Edges met twice on a
/// degenerate cycle cancel, which makes such cycles unsatisfiable.
pub fn parity_system(g: &ColoredGraph) -> Result<(Gf2Matrix, BitVector)> {
    if !g.is_color_regular() {
        return Err(Error::InvalidParameter(
            "graph does not have exactly one edge of each color at every vertex".into(),
        ));
    }
    let n_edges = g.edges().len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut rows = Vec::new();
    for v in 0..g.num_vertices() {
        for i in 0..g.n_colors() {
            for j in i + 1..g.n_colors() {
                let step = |x: usize, c: usize| {
                    let e = g.edge_at(x, c).expect("color regular");
                    (e, g.edges()[e].other(x))
                };
                let (a, x) = step(v, i);
                let (b, _) = step(x, j);
                let (c, y) = step(v, j);
                let (d, _) = step(y, i);
                let mut row = BitVector::zeros(n_edges);
                for e in [a, b, c, d] {
                    row.flip(e);
                }
                let key = row.ones_positions();
                if seen.insert(key) {
                    rows.push(row);
                }
            }
        }
    }
    let rhs = BitVector::ones(rows.len());
    Ok((Gf2Matrix::from_rows(n_edges, rows)?, rhs))
}

fn to_signs(x: &BitVector) -> Vec<i8> {
    x.bits().map(|b| if b { -1 } else { 1 }).collect()
}

/// A totally odd signature on `g`, or `None` when the parity system is inconsistent.
pub fn solve_totally_odd(g: &ColoredGraph) -> Result<Option<Vec<i8>>> {
    let (m, rhs) = parity_system(g)?;
    Ok(m.solve(&rhs)?.map(|x| to_signs(&x)))
}

/// One Adinkra per switching class of totally odd signatures on the graph of `a`.
/// The first class is the one containing the particular solution of the parity system.
pub fn signature_classes(a: &Adinkra) -> Result<Vec<Adinkra>> {
    let g = a.graph();
    let (m, rhs) = parity_system(g)?;
    let Some(particular) = m.solve(&rhs)? else {
        return Err(Error::Infeasible("the graph has no totally odd signature".into()));
    };
    let n_edges = g.edges().len();
    let switches: Vec<BitVector> = (0..g.num_vertices())
        .map(|v| {
            let mut s = BitVector::zeros(n_edges);
            for c in 0..g.n_colors() {
                s.set(g.edge_at(v, c).expect("color regular"), true);
            }
            s
        })
        .collect();

    // Extend an echelon basis of the switching span by kernel vectors; the
    // kernel vectors that survive span a complement.
    let mut basis: Vec<(usize, BitVector)> = Vec::new();
    let insert = |mut v: BitVector, basis: &mut Vec<(usize, BitVector)>| -> bool {
        for (p, row) in basis.iter() {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        match v.first_one() {
            Some(p) => {
                for (_, row) in basis.iter_mut() {
                    if row.get(p) {
                        row.xor_assign(&v);
                    }
                }
                basis.push((p, v));
                true
            }
            None => false,
        }
    };
    for s in switches {
        insert(s, &mut basis);
    }
    let complement: Vec<BitVector> = m.kernel().into_iter().filter(|k| insert(k.clone(), &mut basis)).collect();

    let count_log2 = complement.len();
    let vertex_log2 = g.num_vertices().trailing_zeros() as usize;
    if !g.num_vertices().is_power_of_two() || vertex_log2 > g.n_colors() {
        return Err(Error::InvalidParameter("vertex count is not 2^(N-k)".into()));
    }
    let k = g.n_colors() - vertex_log2;
    if count_log2 != k {
        return Err(Error::Internal(format!(
            "found 2^{count_log2} switching classes, expected 2^{k} (one per codeword)"
        )));
    }
    limits::check(k as u128, limits::MAX_CLASS_DIM as u128, "code dimension for class enumeration")?;

    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let mut x = particular.clone();
        for (i, q) in complement.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                x.xor_assign(q);
            }
        }
        out.push(Adinkra::new(g.clone(), to_signs(&x))?);
    }
    Ok(out)
}

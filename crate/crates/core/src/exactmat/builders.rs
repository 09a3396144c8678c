//! Matrices attached to an Adinkra and the maps between coefficient rings.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{FpPoly, MultiPoly, ZPoly};
use super::ring::{Fp, FpX, Integers, MultiZ};
use super::{FpMatrix, FpPolyMatrix, IntMatrix, MultiPolyMatrix, ZPolyMatrix};
use crate::adinkra::{Adinkra, ColoredGraph};
use crate::error::{Error, Result};

/// Signed adjacency matrix in the Adinkra's vertex order.
pub fn adjacency_matrix(a: &Adinkra) -> IntMatrix {
    let n = a.num_vertices();
    let mut m = IntMatrix::zeros(n, n, &Integers);
    for (e, &s) in a.graph().edges().iter().zip(a.signs()) {
        m[(e.u, e.v)] += s as i64;
        m[(e.v, e.u)] += s as i64;
    }
    m
}

fn degrees(g: &ColoredGraph) -> Vec<i64> {
    let mut d = vec![0i64; g.num_vertices()];
    for e in g.edges() {
        d[e.u] += 1;
        d[e.v] += 1;
    }
    d
}

/// `L = D - A`.
pub fn laplacian_matrix(a: &Adinkra) -> IntMatrix {
    let mut m = adjacency_matrix(a).map(|x| -x);
    for (i, d) in degrees(a.graph()).into_iter().enumerate() {
        m[(i, i)] += d;
    }
    m
}

/// `D - |A|` for the underlying unsigned graph.
pub fn unsigned_laplacian(g: &ColoredGraph) -> IntMatrix {
    let n = g.num_vertices();
    let mut m = IntMatrix::zeros(n, n, &Integers);
    for e in g.edges() {
        m[(e.u, e.v)] -= 1;
        m[(e.v, e.u)] -= 1;
    }
    for (i, d) in degrees(g).into_iter().enumerate() {
        m[(i, i)] += d;
    }
    m
}

fn check_block_order(a: &Adinkra) -> Result<usize> {
    let g = a.graph();
    let half = g.num_vertices() / 2;
    if !g.is_boson_first() || g.boson_count() != half || g.num_vertices() % 2 == 1 {
        return Err(Error::Internal(
            "vertex order is not bosons first with equally many bosons and fermions".into(),
        ));
    }
    Ok(half)
}

/// The boson-by-fermion block of the adjacency matrix.
pub fn block_x(a: &Adinkra) -> Result<IntMatrix> {
    let half = check_block_order(a)?;
    Ok(adjacency_matrix(a).block(0, half, half, half))
}

/// Entry `(u, v)` is `±x_c` when `u` and `v` are joined by an edge of color `c`.
pub fn colored_adjacency(a: &Adinkra) -> MultiPolyMatrix {
    let n = a.num_vertices();
    let nvars = a.n_colors();
    let ring = MultiZ { nvars };
    let mut m = MultiPolyMatrix::zeros(n, n, &ring);
    for (e, &s) in a.graph().edges().iter().zip(a.signs()) {
        let term = MultiPoly::variable(nvars, e.color, s as i64);
        m[(e.u, e.v)] = m[(e.u, e.v)].add(&term);
        m[(e.v, e.u)] = m[(e.v, e.u)].add(&term);
    }
    m
}

/// `sigma I - colored_adjacency` with `sigma = x1 + ... + xN`.
pub fn colored_laplacian(a: &Adinkra) -> MultiPolyMatrix {
    let ring = MultiZ { nvars: a.n_colors() };
    let sigma = MultiPoly::sigma(a.n_colors());
    let n = a.num_vertices();
    MultiPolyMatrix::scalar(n, &ring, &sigma)
        .sub(&colored_adjacency(a), &ring)
        .expect("same shape")
}

/// Upper-right block of [`colored_adjacency`]; setting every `x_i = 1` gives [`block_x`].
pub fn colored_block_x(a: &Adinkra) -> Result<MultiPolyMatrix> {
    let half = check_block_order(a)?;
    Ok(colored_adjacency(a).block(0, half, half, half))
}

/// What to substitute for one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    Value(BigInt),
    /// Keep as the indeterminate `x`.
    Symbol,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Int(IntMatrix),
    Poly(ZPolyMatrix),
}

pub fn specialize(m: &MultiPolyMatrix, nvars: usize, assignment: &[Assignment]) -> Result<Specialized> {
    if assignment.len() != nvars {
        return Err(Error::Dimension(format!("{} assignments for {nvars} variables", assignment.len())));
    }
    let symbols: Vec<usize> =
        assignment.iter().enumerate().filter(|(_, a)| **a == Assignment::Symbol).map(|(i, _)| i).collect();
    let point: Vec<BigInt> = assignment
        .iter()
        .map(|a| match a {
            Assignment::Value(v) => v.clone(),
            Assignment::Symbol => BigInt::one(),
        })
        .collect();
    match symbols.as_slice() {
        [] => Ok(Specialized::Int(m.map(|p| p.eval(&point)))),
        [keep] => Ok(Specialized::Poly(m.map(|p| p.to_univariate(&point, *keep)))),
        _ => Err(Error::InvalidParameter("at most one variable may stay symbolic".into())),
    }
}

/// `x1 = x`, every other variable 1.
pub fn specialize_first(m: &MultiPolyMatrix, nvars: usize) -> ZPolyMatrix {
    let mut assignment = vec![Assignment::Value(BigInt::one()); nvars];
    assignment[0] = Assignment::Symbol;
    match specialize(m, nvars, &assignment).expect("one symbol") {
        Specialized::Poly(p) => p,
        Specialized::Int(_) => unreachable!("one variable kept"),
    }
}

pub fn evaluate_at(m: &ZPolyMatrix, x: &BigInt) -> IntMatrix {
    m.map(|p| p.eval(x))
}

pub fn reduce_int_mod_p(m: &IntMatrix, p: u64) -> Result<FpMatrix> {
    let f = Fp::new(p)?;
    Ok(m.map(|v| f.reduce(v)))
}

pub fn reduce_poly_mod_p(m: &ZPolyMatrix, p: u64) -> Result<FpPolyMatrix> {
    let f = Fp::new(p)?;
    Ok(m.map(|v| v.reduce(&f)))
}

impl ZPolyMatrix {
    pub fn from_int(m: &IntMatrix) -> ZPolyMatrix {
        m.map(|v| ZPoly::constant(v.clone()))
    }
}

impl FpPolyMatrix {
    pub fn eval_at(&self, ring: &FpX, x: u64) -> FpMatrix {
        self.map(|p| p.eval(&ring.field, x))
    }

    pub fn from_fp(m: &FpMatrix) -> FpPolyMatrix {
        m.map(|&v| FpPoly::from_coeffs(vec![v]))
    }
}

/// Largest total degree among the entries.
pub fn max_total_degree(m: &MultiPolyMatrix) -> u32 {
    m.data().iter().filter_map(MultiPoly::total_degree).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adinkra::hypercube_adinkra;
    use crate::codes::standard_code;

    #[test]
    fn one_cube_matrices() {
        let a = hypercube_adinkra(1).unwrap();
        assert_eq!(adjacency_matrix(&a), IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]).unwrap());
        assert_eq!(laplacian_matrix(&a), IntMatrix::from_i64(2, 2, &[1, -1, -1, 1]).unwrap());
        let ahat = colored_adjacency(&a);
        assert_eq!(ahat[(0, 1)], MultiPoly::variable(1, 0, 1));
        assert!(ahat[(0, 0)].is_zero());
    }

    #[test]
    fn specialization_recovers_integer_matrices() {
        let a = Adinkra::from_code(&standard_code("d4").unwrap()).unwrap();
        let ones = vec![Assignment::Value(BigInt::one()); 4];
        assert_eq!(
            specialize(&colored_adjacency(&a), 4, &ones).unwrap(),
            Specialized::Int(adjacency_matrix(&a))
        );
        assert_eq!(
            specialize(&colored_laplacian(&a), 4, &ones).unwrap(),
            Specialized::Int(laplacian_matrix(&a))
        );
        assert_eq!(
            specialize(&colored_block_x(&a).unwrap(), 4, &ones).unwrap(),
            Specialized::Int(block_x(&a).unwrap())
        );
        let lhat = specialize_first(&colored_laplacian(&a), 4);
        for i in 0..8 {
            assert_eq!(lhat[(i, i)], ZPoly::linear(1, 3));
        }
        let two = vec![Assignment::Symbol, Assignment::Symbol, ones[0].clone(), ones[0].clone()];
        assert!(specialize(&colored_adjacency(&a), 4, &two).is_err());
    }

    #[test]
    fn abs_row_sums_equal_n() {
        let a = Adinkra::from_code(&standard_code("e8").unwrap()).unwrap();
        let m = adjacency_matrix(&a);
        for row in m.rows_iter() {
            let s: i64 = row.iter().map(|v| i64::try_from(v).unwrap().abs()).sum();
            assert_eq!(s, 8);
        }
        assert_eq!(max_total_degree(&colored_adjacency(&a)), 1);
    }

    #[test]
    fn cube_laplacian_mod_2_is_unsigned() {
        let a = hypercube_adinkra(3).unwrap();
        let signed = reduce_int_mod_p(&laplacian_matrix(&a), 2).unwrap();
        let unsigned = reduce_int_mod_p(&unsigned_laplacian(a.graph()), 2).unwrap();
        assert_eq!(signed, unsigned);
        let id = IntMatrix::identity(4, &Integers);
        assert_eq!(reduce_int_mod_p(&id, 5).unwrap(), FpMatrix::identity(4, &Fp::new(5).unwrap()));
        assert!(reduce_int_mod_p(&id, 4).is_err());
    }

    #[test]
    fn reduction_commutes_with_specialization() {
        let a = Adinkra::from_code(&standard_code("d4+t").unwrap()).unwrap();
        let lhat = specialize_first(&colored_laplacian(&a), 5);
        for p in [2u64, 3, 5, 7] {
            let ring = FpX::new(p).unwrap();
            let down = reduce_poly_mod_p(&lhat, p).unwrap();
            for x in 0..p {
                let left = down.eval_at(&ring, x);
                let right = reduce_int_mod_p(&evaluate_at(&lhat, &BigInt::from(x)), p).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

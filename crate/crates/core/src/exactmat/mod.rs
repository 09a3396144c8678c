//! Dense matrices over exact rings: the integers, `Z/p`, `Z[x]`, `Fp[x]` and
//! multivariate integer polynomials.

mod builders;
mod det;
mod identities;
mod json;
pub mod poly;
pub mod ring;

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use builders::{
    adjacency_matrix, block_x, colored_adjacency, colored_block_x, colored_laplacian, evaluate_at, laplacian_matrix,
    max_total_degree, reduce_int_mod_p, reduce_poly_mod_p, specialize, specialize_first, unsigned_laplacian, Assignment, Specialized,
};
pub use det::{det_fp, det_int, det_laplacian_hat, det_zpoly, laplacian_hat, x_hat};
pub use identities::{matrix_identity_check, IdentityCheck, IdentityReport};
pub use json::{AnyMatrix, MatrixDoc};
pub use poly::{FpPoly, MultiPoly, ZPoly};
pub use ring::{is_prime, EuclideanRing, Fp, FpX, Integers, MultiZ, Ring, ZX};

pub type IntMatrix = Matrix<BigInt>;
pub type FpMatrix = Matrix<u64>;
pub type ZPolyMatrix = Matrix<ZPoly>;
pub type FpPolyMatrix = Matrix<FpPoly>;
pub type MultiPolyMatrix = Matrix<MultiPoly>;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Mutable access to two distinct rows.
    pub fn two_rows_mut(&mut self, a: usize, b: usize) -> (&mut [T], &mut [T]) {
        assert_ne!(a, b);
        let c = self.cols;
        if a < b {
            let (lo, hi) = self.data.split_at_mut(b * c);
            (&mut lo[a * c..(a + 1) * c], &mut hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(a * c);
            (&mut hi[..c], &mut lo[b * c..(b + 1) * c])
        }
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            let (ra, rb) = self.two_rows_mut(a, b);
            ra.swap_with_slice(rb);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// The block with top-left corner `(r0, c0)` and the given shape.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Matrix::from_fn(nr, nc, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone + Send + Sync + PartialEq + fmt::Debug> Matrix<T> {
    pub fn zeros<R: Ring<Elem = T>>(rows: usize, cols: usize, ring: &R) -> Self {
        Matrix::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = T>>(n: usize, ring: &R) -> Self {
        Self::scalar(n, ring, &ring.one())
    }

    pub fn scalar<R: Ring<Elem = T>>(n: usize, ring: &R, c: &T) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { ring.zero() })
    }

    pub fn diagonal<R: Ring<Elem = T>>(rows: usize, cols: usize, ring: &R, diag: &[T]) -> Self {
        Matrix::from_fn(rows, cols, |i, j| if i == j && i < diag.len() { diag[i].clone() } else { ring.zero() })
    }

    /// Product, skipping zero entries of the left factor. Rows are computed in parallel.
    pub fn mul<R: Ring<Elem = T>>(&self, rhs: &Matrix<T>, ring: &R) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = rhs.cols;
        let mut data = vec![ring.zero(); self.rows * n];
        let work = |(i, out): (usize, &mut [T])| {
            for (k, a) in self.row(i).iter().enumerate() {
                if ring.is_zero(a) {
                    continue;
                }
                for (o, b) in out.iter_mut().zip(rhs.row(k)) {
                    if !ring.is_zero(b) {
                        ring.add_mul_assign(o, a, b);
                    }
                }
            }
        };
        if n > 0 {
            if self.rows * self.cols * n >= 1 << 16 {
                data.par_chunks_mut(n).enumerate().for_each(work);
            } else {
                data.chunks_mut(n).enumerate().for_each(work);
            }
        }
        Ok(Matrix { rows: self.rows, cols: n, data })
    }

    fn zip_with(&self, rhs: &Matrix<T>, f: impl Fn(&T, &T) -> T) -> Result<Matrix<T>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add<R: Ring<Elem = T>>(&self, rhs: &Matrix<T>, ring: &R) -> Result<Matrix<T>> {
        self.zip_with(rhs, |a, b| ring.add(a, b))
    }

    pub fn sub<R: Ring<Elem = T>>(&self, rhs: &Matrix<T>, ring: &R) -> Result<Matrix<T>> {
        self.zip_with(rhs, |a, b| ring.sub(a, b))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Matrix<T> {
        self.map(|a| ring.mul(c, a))
    }

    /// The first entry where `self` differs from `c * I`, if any.
    pub fn first_deviation_from_scalar<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Option<(usize, usize)> {
        let zero = ring.zero();
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != if i == j { c.clone() } else { zero.clone() })
    }

    pub fn is_zero_matrix<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.data.iter().all(|a| ring.is_zero(a))
    }
}

impl IntMatrix {
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Matrix::from_vec(rows, cols, entries.iter().map(|&v| BigInt::from(v)).collect())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::builders::{colored_block_x, colored_laplacian, evaluate_at, specialize_first};
use super::poly::ZPoly;
use super::ring::{Fp, Ring, ZX};
use super::{FpMatrix, IntMatrix, ZPolyMatrix};
use crate::adinkra::Adinkra;
use crate::error::{Error, Result};

fn require_square<T: Clone>(m: &super::Matrix<T>) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("determinant of a {}x{} matrix", m.nrows(), m.ncols())));
    }
    Ok(m.nrows())
}

fn triangular_diagonal_product(m: &IntMatrix) -> Option<BigInt> {
    let n = m.nrows();
    let upper = (0..n).all(|i| (0..i).all(|j| m[(i, j)].is_zero()));
    let lower = upper || (0..n).all(|i| (i + 1..n).all(|j| m[(i, j)].is_zero()));
    if upper || lower {
        Some((0..n).map(|i| m[(i, i)].clone()).product())
    } else {
        None
    }
}

/// Fraction-free (Bareiss) elimination.
pub fn det_int(m: &IntMatrix) -> Result<BigInt> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if let Some(d) = triangular_diagonal_product(m) {
        return Ok(d);
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot_row: Vec<BigInt> = a.row(k).to_vec();
        let pivot = pivot_row[k].clone();
        let cols = a.ncols();
        let rest = &mut a.data_mut()[(k + 1) * cols..];
        let update = |row: &mut [BigInt]| {
            let factor = row[k].clone();
            for j in k + 1..n {
                let mut v = &pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        };
        if (n - k) * (n - k) >= 4096 {
            rest.par_chunks_mut(cols).for_each(update);
        } else {
            rest.chunks_mut(cols).for_each(update);
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

pub fn det_fp(m: &FpMatrix, p: u64) -> Result<u64> {
    let n = require_square(m)?;
    let f = Fp::new(p)?;
    let mut a = m.clone();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[(i, k)] != 0) else {
            return Ok(0);
        };
        if piv != k {
            a.swap_rows(piv, k);
            det = f.neg(&det);
        }
        det = f.mul_mod(det, a[(k, k)]);
        let inv = f.inv(a[(k, k)]);
        for i in k + 1..n {
            let factor = f.mul_mod(a[(i, k)], inv);
            if factor == 0 {
                continue;
            }
            let (pk, pi) = a.two_rows_mut(k, i);
            for j in k..n {
                pi[j] = f.sub_mod(pi[j], f.mul_mod(factor, pk[j]));
            }
        }
    }
    Ok(det)
}

/// Determinant of a `Z[x]` matrix by evaluation at `x = 0..=d` and exact
/// interpolation, where `d` bounds the degree by the sum of row degrees.
pub fn det_zpoly(m: &ZPolyMatrix) -> Result<ZPoly> {
    let n = require_square(m)?;
    let mut bound = 0usize;
    for i in 0..n {
        match m.row(i).iter().filter_map(ZPoly::degree).max() {
            Some(d) => bound += d,
            None => return Ok(ZPoly::zero()),
        }
    }
    let values = (0..=bound)
        .into_par_iter()
        .map(|x| det_int(&evaluate_at(m, &BigInt::from(x))))
        .collect::<Result<Vec<BigInt>>>()?;
    ZPoly::interpolate(&values)
}

/// `X̂`: the boson-by-fermion block with `x1 = x` and the other variables 1.
pub fn x_hat(a: &Adinkra) -> Result<ZPolyMatrix> {
    Ok(specialize_first(&colored_block_x(a)?, a.n_colors()))
}

/// `L̂`: the colored Laplacian with `x1 = x` and the other variables 1.
pub fn laplacian_hat(a: &Adinkra) -> ZPolyMatrix {
    specialize_first(&colored_laplacian(a), a.n_colors())
}

/// `det L̂`. When `L̂ = [[sI, -Y], [-Y^T, sI]]` for a scalar `s` this equals
/// `det(s^2 I - Y^T Y)`, a matrix of half the size; otherwise the full matrix is used.
pub fn det_laplacian_hat(a: &Adinkra) -> Result<ZPoly> {
    let lhat = laplacian_hat(a);
    let n = lhat.nrows();
    if n.is_multiple_of(2) && n > 0 {
        let h = n / 2;
        let s = lhat[(0, 0)].clone();
        let top_left = lhat.block(0, 0, h, h);
        let bottom_right = lhat.block(h, h, h, h);
        let upper = lhat.block(0, h, h, h);
        let lower = lhat.block(h, 0, h, h);
        let scalar = ZPolyMatrix::scalar(h, &ZX, &s);
        if top_left == scalar && bottom_right == scalar && lower == upper.transpose() {
            let y = upper.map(|p| -p);
            let yty = y.transpose().mul(&y, &ZX)?;
            let schur = ZPolyMatrix::scalar(h, &ZX, &(&s * &s)).sub(&yty, &ZX)?;
            return det_zpoly(&schur);
        }
    }
    det_zpoly(&lhat)
}

impl<T> super::Matrix<T> {
    pub(crate) fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }
}

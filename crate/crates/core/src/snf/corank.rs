use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{snf_with, SnfOptions, SnfResult};
use crate::codes::{BitVector, Gf2Matrix};
use crate::error::{Error, Result};
use crate::exactmat::{Fp, FpPoly, IntMatrix, Integers, Matrix, ZPoly, ZPolyMatrix, ZX};

/// Rank of an integer matrix reduced mod `p`. `p = 2` uses packed rows.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    let f = Fp::new(p)?;
    if p == 2 {
        let two = BigInt::from(2);
        let rows = m.rows_iter().map(|r| BitVector::from_bits(r.iter().map(|v| !v.is_multiple_of(&two)))).collect();
        return Ok(Gf2Matrix::from_rows(m.ncols(), rows)?.rank());
    }
    let mut a = m.map(|v| f.reduce(v));
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[(i, c)] != 0) else { continue };
        a.swap_rows(rank, piv);
        let inv = f.inv(a[(rank, c)]);
        for v in a.row_mut(rank)[c..].iter_mut() {
            *v = f.mul_mod(*v, inv);
        }
        for i in rank + 1..rows {
            let factor = a[(i, c)];
            if factor == 0 {
                continue;
            }
            let (dst, src) = a.two_rows_mut(i, rank);
            for (d, s) in dst[c..].iter_mut().zip(&src[c..]) {
                *d = f.sub_mod(*d, f.mul_mod(factor, *s));
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}

/// Number of invariant factors divisible by `p`, i.e. `min(rows, cols) - rank_p`.
pub fn p_corank(m: &IntMatrix, p: u64) -> Result<usize> {
    Ok(m.nrows().min(m.ncols()) - rank_mod_p(m, p)?)
}

/// Total multiplicity of the root `x = 1` across a polynomial Smith form.
pub fn x_minus_one_multiplicity(r: &SnfResult<FpPoly>, p: u64) -> Result<usize> {
    let f = Fp::new(p)?;
    let mut total = 0;
    for d in &r.diag {
        total += d
            .root_multiplicity(&f, 1)
            .ok_or_else(|| Error::InvalidParameter("a zero invariant factor has unbounded multiplicity".into()))?;
    }
    Ok(total)
}

/// For a nonsingular integer `M`, an integer polynomial matrix `M̂` with
/// `M̂(1) = M` whose determinant mod `p` has `(x - 1)`-multiplicity equal to
/// the `p`-corank of `M`: `M̂ = B^-1 diag(d_1..d_k, x - 1 + d_{k+1}, ..) C^-1`
/// where `d_1..d_k` are the invariant factors prime to `p`.
pub fn corank_witness_lift(m: &IntMatrix, p: u64) -> Result<ZPolyMatrix> {
    Fp::new(p)?;
    if !m.is_square() {
        return Err(Error::Dimension(format!("{}x{} is not square", m.nrows(), m.ncols())));
    }
    let r = snf_with(m, &Integers, SnfOptions { inverses: true })?;
    if r.diag.iter().any(Zero::is_zero) {
        return Err(Error::Singular);
    }
    let pb = BigInt::from(p);
    let diag: Vec<ZPoly> = r
        .diag
        .iter()
        .map(|d| {
            if d.is_multiple_of(&pb) {
                ZPoly::from_coeffs(vec![d - BigInt::one(), BigInt::one()])
            } else {
                ZPoly::constant(d.clone())
            }
        })
        .collect();
    let n = m.nrows();
    let d_hat = Matrix::diagonal(n, n, &ZX, &diag);
    let b_inv = ZPolyMatrix::from_int(r.b_inv.as_ref().expect("inverses requested"));
    let c_inv = ZPolyMatrix::from_int(r.c_inv.as_ref().expect("inverses requested"));
    b_inv.mul(&d_hat, &ZX)?.mul(&c_inv, &ZX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{det_zpoly, evaluate_at};

    #[test]
    fn coranks() {
        let m = IntMatrix::from_i64(3, 3, &[2, 0, 0, 0, 6, 0, 0, 0, 5]).unwrap();
        assert_eq!(p_corank(&m, 2).unwrap(), 2);
        assert_eq!(p_corank(&m, 3).unwrap(), 1);
        assert_eq!(p_corank(&m, 5).unwrap(), 1);
        assert_eq!(p_corank(&m, 7).unwrap(), 0);
        assert!(p_corank(&m, 4).is_err());
        let wide = IntMatrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]).unwrap();
        assert_eq!(rank_mod_p(&wide, 5).unwrap(), 1);
        assert_eq!(p_corank(&wide, 5).unwrap(), 1);
    }

    #[test]
    fn lift_recovers_matrix_and_corank() {
        let m = IntMatrix::from_i64(3, 3, &[3, 1, 0, 1, 3, 1, 0, 1, 3]).unwrap();
        for p in [2u64, 3, 7] {
            let lift = corank_witness_lift(&m, p).unwrap();
            assert_eq!(evaluate_at(&lift, &BigInt::one()), m);
            let f = Fp::new(p).unwrap();
            let det = det_zpoly(&lift).unwrap().reduce(&f);
            assert_eq!(det.root_multiplicity(&f, 1).unwrap(), p_corank(&m, p).unwrap(), "p = {p}");
        }
        let singular = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]).unwrap();
        assert!(matches!(corank_witness_lift(&singular, 2), Err(Error::Singular)));
    }
}

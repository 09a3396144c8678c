use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{det_int, IntMatrix};
use crate::limits::{check, MAX_MINOR_COUNT};

/// Calls `f` on every increasing `k`-subset of `0..n`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return Ok(()) };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The gcd of all `k x k` minors (the k-th determinantal divisor).
/// `k = 0` gives 1 by convention.
pub fn minor_gcd_oracle(m: &IntMatrix, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::from(1));
    }
    if k > m.nrows().min(m.ncols()) {
        return Err(Error::InvalidParameter(format!("no {k}x{k} minors in a {}x{} matrix", m.nrows(), m.ncols())));
    }
    let count = binomial(m.nrows() as u128, k as u128) * binomial(m.ncols() as u128, k as u128);
    check(count, MAX_MINOR_COUNT, "number of minors")?;
    let mut g = BigInt::zero();
    for_each_subset(m.nrows(), k, |rows| {
        for_each_subset(m.ncols(), k, |cols| {
            let d = det_int(&m.submatrix(rows, cols))?;
            g = g.gcd(&d);
            Ok(())
        })
    })?;
    Ok(g)
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}`,
/// zero once `D_k` vanishes.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = m.nrows().min(m.ncols());
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 1..=n {
        let dk = minor_gcd_oracle(m, k)?;
        if dk.is_zero() {
            out.extend(std::iter::repeat_n(BigInt::zero(), n - k + 1));
            break;
        }
        out.push(&dk / &prev);
        prev = dk;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerated() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            Ok(())
        })
        .unwrap();
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }

    #[test]
    fn known_divisors() {
        let m = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]).unwrap();
        assert_eq!(minor_gcd_oracle(&m, 1).unwrap(), BigInt::from(2));
        assert_eq!(minor_gcd_oracle(&m, 2).unwrap(), BigInt::from(8));
        let f: Vec<i64> = invariant_factors_by_minors(&m).unwrap().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(f, vec![2, 4]);
        assert!(minor_gcd_oracle(&m, 3).is_err());
    }

    #[test]
    fn guard_applies() {
        let m = IntMatrix::from_fn(40, 40, |i, j| BigInt::from((i + j) as i64));
        if !crate::limits::guards_lifted() {
            assert!(matches!(minor_gcd_oracle(&m, 10), Err(Error::Guard(_))));
        }
    }
}

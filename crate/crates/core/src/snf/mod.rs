//! Smith normal form over Euclidean domains with unimodular witnesses.

mod corank;
mod oracle;
mod profile;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmat::{EuclideanRing, FpPoly, FpPolyMatrix, FpX, IntMatrix, Integers, Matrix, Ring};

pub use corank::{corank_witness_lift, p_corank, rank_mod_p, x_minus_one_multiplicity};
pub use oracle::{invariant_factors_by_minors, minor_gcd_oracle};
pub use profile::FactorProfile;

/// `D = B M C` with `B`, `C` invertible over the ring and `D` diagonal with
/// each entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub diag: Vec<T>,
    pub b: Matrix<T>,
    pub c: Matrix<T>,
    pub b_inv: Option<Matrix<T>>,
    pub c_inv: Option<Matrix<T>>,
    pub ring: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SnfOptions {
    /// Also accumulate `B^-1` and `C^-1`.
    pub inverses: bool,
}

struct Work<'r, R: EuclideanRing> {
    ring: &'r R,
    a: Matrix<R::Elem>,
    b: Matrix<R::Elem>,
    c: Matrix<R::Elem>,
    b_inv: Option<Matrix<R::Elem>>,
    c_inv: Option<Matrix<R::Elem>>,
}

fn row_axpy<R: Ring>(ring: &R, m: &mut Matrix<R::Elem>, target: usize, q: &R::Elem, source: usize, subtract: bool) {
    let (dst, src) = m.two_rows_mut(target, source);
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !ring.is_zero(s) {
            if subtract {
                ring.sub_mul_assign(d, q, s);
            } else {
                ring.add_mul_assign(d, q, s);
            }
        }
    }
}

fn col_axpy<R: Ring>(ring: &R, m: &mut Matrix<R::Elem>, target: usize, q: &R::Elem, source: usize, subtract: bool) {
    for i in 0..m.nrows() {
        let s = m[(i, source)].clone();
        if !ring.is_zero(&s) {
            let d = &mut m[(i, target)];
            if subtract {
                ring.sub_mul_assign(d, q, &s);
            } else {
                ring.add_mul_assign(d, q, &s);
            }
        }
    }
}

impl<R: EuclideanRing> Work<'_, R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_rows(i, j);
        self.b.swap_rows(i, j);
        if let Some(bi) = &mut self.b_inv {
            bi.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_cols(i, j);
        self.c.swap_cols(i, j);
        if let Some(ci) = &mut self.c_inv {
            ci.swap_rows(i, j);
        }
    }

    /// row_i -= q row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &R::Elem) {
        row_axpy(self.ring, &mut self.a, i, q, t, true);
        row_axpy(self.ring, &mut self.b, i, q, t, true);
        if let Some(bi) = &mut self.b_inv {
            col_axpy(self.ring, bi, t, q, i, false);
        }
    }

    /// col_j -= q col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &R::Elem) {
        col_axpy(self.ring, &mut self.a, j, q, t, true);
        col_axpy(self.ring, &mut self.c, j, q, t, true);
        if let Some(ci) = &mut self.c_inv {
            row_axpy(self.ring, ci, t, q, j, false);
        }
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) {
        let one = self.ring.one();
        row_axpy(self.ring, &mut self.a, t, &one, i, false);
        row_axpy(self.ring, &mut self.b, t, &one, i, false);
        if let Some(bi) = &mut self.b_inv {
            col_axpy(self.ring, bi, i, &one, t, true);
        }
    }

    fn scale_row(&mut self, t: usize, u: &R::Elem, u_inv: &R::Elem) {
        let ring = self.ring;
        for v in self.a.row_mut(t).iter_mut().chain(self.b.row_mut(t).iter_mut()) {
            *v = ring.mul(u, v);
        }
        if let Some(bi) = &mut self.b_inv {
            for i in 0..bi.nrows() {
                bi[(i, t)] = ring.mul(&bi[(i, t)], u_inv);
            }
        }
    }

    /// Smallest nonzero entry of the trailing submatrix at `t`; ties go to the
    /// lowest `(row, col)`. Stops early at a unit.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.nrows() {
            for j in t..self.a.ncols() {
                let v = &self.a[(i, j)];
                if self.ring.is_zero(v) {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| self.ring.size_cmp(v, &self.a[(bi, bj)]).is_lt()) {
                    best = Some((i, j));
                    if self.ring.is_unit(v) {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn reduce_at(&mut self, t: usize) {
        let (m, n) = (self.a.nrows(), self.a.ncols());
        loop {
            let pivot = self.a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if self.ring.is_zero(&self.a[(i, t)]) {
                    continue;
                }
                let (q, r) = self.ring.div_rem(&self.a[(i, t)], &pivot);
                if !self.ring.is_zero(&q) {
                    self.row_sub(i, t, &q);
                }
                clean &= self.ring.is_zero(&r);
            }
            for j in t + 1..n {
                if self.ring.is_zero(&self.a[(t, j)]) {
                    continue;
                }
                let (q, r) = self.ring.div_rem(&self.a[(t, j)], &pivot);
                if !self.ring.is_zero(&q) {
                    self.col_sub(j, t, &q);
                }
                clean &= self.ring.is_zero(&r);
            }
            if !clean {
                // A remainder smaller than the pivot is left in row or column t.
                let mut best: Option<(usize, usize)> = None;
                let candidates = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                for (i, j) in candidates {
                    let v = &self.a[(i, j)];
                    if !self.ring.is_zero(v)
                        && best.is_none_or(|(bi, bj)| self.ring.size_cmp(v, &self.a[(bi, bj)]).is_lt())
                    {
                        best = Some((i, j));
                    }
                }
                let (i, j) = best.expect("a nonzero remainder exists");
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                continue;
            }
            if self.ring.is_unit(&pivot) {
                return;
            }
            // Every later entry must be a multiple of the pivot.
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.ring.divides(&pivot, &self.a[(i, j)])));
            match offending {
                Some(i) => self.row_add(t, i),
                None => return,
            }
        }
    }
}

/// Smith normal form with witnesses, checked by recomputing `B M C`.
pub fn snf_with<R: EuclideanRing>(m: &Matrix<R::Elem>, ring: &R, opts: SnfOptions) -> Result<SnfResult<R::Elem>> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut w = Work {
        ring,
        a: m.clone(),
        b: Matrix::identity(rows, ring),
        c: Matrix::identity(cols, ring),
        b_inv: opts.inverses.then(|| Matrix::identity(rows, ring)),
        c_inv: opts.inverses.then(|| Matrix::identity(cols, ring)),
    };
    let steps = rows.min(cols);
    for t in 0..steps {
        let Some((i, j)) = w.find_pivot(t) else { break };
        w.swap_rows(t, i);
        w.swap_cols(t, j);
        w.reduce_at(t);
        let (u, u_inv) = ring.normalizing_unit(&w.a[(t, t)]);
        if !ring.is_one(&u) {
            w.scale_row(t, &u, &u_inv);
        }
    }
    let diag: Vec<R::Elem> = (0..steps).map(|i| w.a[(i, i)].clone()).collect();
    let result = SnfResult { diag, b: w.b, c: w.c, b_inv: w.b_inv, c_inv: w.c_inv, ring: ring.tag() };
    verify(&result, m, ring)?;
    Ok(result)
}

fn verify<R: EuclideanRing>(r: &SnfResult<R::Elem>, m: &Matrix<R::Elem>, ring: &R) -> Result<()> {
    let product = r.b.mul(m, ring)?.mul(&r.c, ring)?;
    let expected = Matrix::diagonal(m.nrows(), m.ncols(), ring, &r.diag);
    if product != expected {
        return Err(Error::Internal("B M C does not equal the computed diagonal".into()));
    }
    for w in r.diag.windows(2) {
        if !ring.divides(&w[0], &w[1]) {
            return Err(Error::Internal(format!("{:?} does not divide {:?}", w[0], w[1])));
        }
    }
    if r.diag.iter().any(|d| !ring.is_zero(d) && ring.normalize(d) != *d) {
        return Err(Error::Internal("diagonal entry not in normal form".into()));
    }
    Ok(())
}

pub fn snf_int(m: &IntMatrix) -> Result<SnfResult<num_bigint::BigInt>> {
    snf_with(m, &Integers, SnfOptions::default())
}

pub fn snf_fpx(m: &FpPolyMatrix, p: u64) -> Result<SnfResult<FpPoly>> {
    snf_with(m, &FpX::new(p)?, SnfOptions::default())
}

/// Invariant-factor profile of an integer matrix.
pub fn profile_int(m: &IntMatrix) -> Result<FactorProfile<num_bigint::BigInt>> {
    Ok(FactorProfile::from_diagonal(&snf_int(m)?.diag))
}

impl<T: Clone + PartialEq> SnfResult<T> {
    pub fn profile(&self) -> FactorProfile<T> {
        FactorProfile::from_diagonal(&self.diag)
    }
}

/// How a matrix entry is written in SNF JSON.
pub trait JsonEntry {
    fn to_json_value(&self) -> Value;
}

impl JsonEntry for num_bigint::BigInt {
    fn to_json_value(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonEntry for FpPoly {
    fn to_json_value(&self) -> Value {
        json!(self.coeffs())
    }
}

impl JsonEntry for u64 {
    fn to_json_value(&self) -> Value {
        json!(self)
    }
}

impl<T: JsonEntry + Clone + PartialEq> SnfResult<T> {
    pub fn to_json(&self, p: Option<u64>, witnesses: bool) -> Value {
        let matrix = |m: &Matrix<T>| -> Value {
            Value::Array(m.rows_iter().map(|r| Value::Array(r.iter().map(JsonEntry::to_json_value).collect())).collect())
        };
        let mut doc = json!({
            "ring": self.ring,
            "profile": self.profile().entries().iter().map(|(v, k)| json!([v.to_json_value(), k])).collect::<Vec<_>>(),
            "diag": self.diag.iter().map(JsonEntry::to_json_value).collect::<Vec<_>>(),
        });
        if let Some(p) = p {
            doc["p"] = json!(p);
        }
        if witnesses {
            doc["B"] = matrix(&self.b);
            doc["C"] = matrix(&self.c);
        }
        doc
    }
}

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Fp;
use crate::error::{Error, Result};

/// A polynomial in `x` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `a x + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(b), BigInt::from(a)])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut e: u32) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn reduce(&self, f: &Fp) -> FpPoly {
        FpPoly::from_coeffs(self.coeffs.iter().map(|c| f.reduce(c)).collect())
    }

    /// Interpolates from values at `x = 0, 1, ..., values.len() - 1` using
    /// Newton forward differences. Fails if the data do not come from an
    /// integer polynomial of degree below `values.len()`.
    pub fn interpolate(values: &[BigInt]) -> Result<ZPoly> {
        let mut diffs = values.to_vec();
        let mut leading = Vec::with_capacity(values.len());
        while let Some(first) = diffs.first() {
            leading.push(first.clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        // f(x) = sum_k D^k f(0) * x(x-1)...(x-k+1) / k!
        let mut result = ZPoly::zero();
        let mut falling = ZPoly::constant(BigInt::one());
        let mut factorial = BigInt::one();
        for (k, d) in leading.iter().enumerate() {
            if k > 0 {
                factorial *= k;
                falling = &falling * &ZPoly::linear(1, -(k as i64 - 1));
            }
            let prod = falling.scale(d);
            let mut coeffs = Vec::with_capacity(prod.coeffs.len());
            for c in prod.coeffs {
                let (q, r) = c.div_rem(&factorial);
                if !r.is_zero() {
                    return Err(Error::Internal("interpolated coefficients are not integers".into()));
                }
                coeffs.push(q);
            }
            result = &result + &ZPoly::from_coeffs(coeffs);
        }
        Ok(result)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(out)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

fn write_terms<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, C, bool)>,
) -> fmt::Result {
    // terms: (degree, |coefficient|, negative), highest degree first
    let mut first = true;
    for (deg, mag, negative) in terms {
        let mag = mag.to_string();
        let sign = match (first, negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let coef = if mag == "1" && deg > 0 { String::new() } else { mag };
        let var = match deg {
            0 => String::new(),
            1 => "x".into(),
            d => format!("x^{d}"),
        };
        write!(f, "{sign}{coef}{var}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| (d, c.abs(), c.is_negative())),
        )
    }
}

/// A polynomial over `Z/p`, lowest degree first; arithmetic takes the field explicitly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly { coeffs: Vec::new() }
    }

    pub fn constant(f: &Fp, c: u64) -> Self {
        Self::from_coeffs(vec![c % f.p()])
    }

    /// `x - a`
    pub fn x_minus(f: &Fp, a: u64) -> Self {
        Self::from_coeffs(vec![f.sub_mod(0, a % f.p()), 1])
    }

    /// Coefficients must already be reduced.
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, f: &Fp, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add_mod(f.mul_mod(acc, x), c))
    }

    pub fn add(&self, f: &Fp, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::from_coeffs((0..n).map(|i| f.add_mod(self.coeff(i), rhs.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Fp, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::from_coeffs((0..n).map(|i| f.sub_mod(self.coeff(i), rhs.coeff(i))).collect())
    }

    pub fn mul(&self, f: &Fp, rhs: &FpPoly) -> FpPoly {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add_mod(out[i + j], f.mul_mod(a, b));
            }
        }
        FpPoly::from_coeffs(out)
    }

    pub fn div_rem(&self, f: &Fp, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = f.mul_mod(*rem.last().expect("nonempty"), inv);
            let shift = top - dd;
            quot[shift] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub_mod(rem[shift + i], f.mul_mod(c, b));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (FpPoly::from_coeffs(quot), FpPoly::from_coeffs(rem))
    }

    /// How many times `x - a` divides this polynomial; `None` for the zero polynomial.
    pub fn root_multiplicity(&self, f: &Fp, a: u64) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let factor = FpPoly::x_minus(f, a);
        let mut count = 0;
        let mut g = self.clone();
        loop {
            let (q, r) = g.div_rem(f, &factor);
            if !r.is_zero() {
                return Some(count);
            }
            g = q;
            count += 1;
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().enumerate().rev().filter(|(_, &c)| c != 0).map(|(d, &c)| (d, c, false)),
        )
    }
}

/// A sparse integer polynomial in `x1..xN`; keys are exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![0; nvars], c);
        p
    }

    /// `c * x_i` with `i` 0-based.
    pub fn variable(nvars: usize, i: usize, c: i64) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero();
        p.add_term(e, BigInt::from(c));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow::pow(x.clone(), k as usize))
            })
            .sum()
    }

    /// Substitutes integers for every variable except `keep`, which becomes `x`.
    pub fn to_univariate(&self, point: &[BigInt], keep: usize) -> ZPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for (i, (&k, x)) in e.iter().zip(point).enumerate() {
                if i != keep {
                    value *= num_traits::pow::pow(x.clone(), k as usize);
                }
            }
            let d = e[keep] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += value;
        }
        ZPoly::from_coeffs(coeffs)
    }

    /// `x1 + ... + xN`
    pub fn sigma(nvars: usize) -> MultiPoly {
        (0..nvars).fold(MultiPoly::zero(), |acc, i| acc.add(&MultiPoly::variable(nvars, i, 1)))
    }

    /// `x1^2 + ... + xN^2`
    pub fn rho(nvars: usize) -> MultiPoly {
        (0..nvars).fold(MultiPoly::zero(), |acc, i| {
            let v = MultiPoly::variable(nvars, i, 1);
            acc.add(&v.mul(&v))
        })
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = match (idx == 0, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            let mag = c.abs();
            if vars.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else if mag.is_one() {
                write!(f, "{sign}{}", vars.join("*"))?;
            } else {
                write!(f, "{sign}{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

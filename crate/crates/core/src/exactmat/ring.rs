//! Coefficient rings as values, so that `Fp` can carry its modulus at runtime.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{FpPoly, MultiPoly, ZPoly};
use crate::error::{Error, Result};

pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn embed_i64(&self, v: i64) -> Self::Elem;

    /// `a -= q * b`
    fn sub_mul_assign(&self, a: &mut Self::Elem, q: &Self::Elem, b: &Self::Elem) {
        *a = self.sub(a, &self.mul(q, b));
    }

    /// `a += q * b`
    fn add_mul_assign(&self, a: &mut Self::Elem, q: &Self::Elem, b: &Self::Elem) {
        *a = self.add(a, &self.mul(q, b));
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Short ring tag used in JSON documents.
    fn tag(&self) -> String;
}

/// A Euclidean domain with a normal form modulo units.
pub trait EuclideanRing: Ring {
    /// Orders elements by Euclidean size; used to pick pivots.
    fn size_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// `a = q b + r` with `r` smaller than `b`. `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// A unit `u` and its inverse such that `u a` is the normal form of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        let (u, _) = self.normalizing_unit(a);
        self.mul(&u, a)
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !self.is_zero(&b) {
            let r = self.div_rem(&a, &b).1;
            a = b;
            b = r;
        }
        if self.is_zero(&a) {
            a
        } else {
            self.normalize(&a)
        }
    }
}

/// The integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn embed_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn sub_mul_assign(&self, a: &mut BigInt, q: &BigInt, b: &BigInt) {
        if q.is_one() {
            *a -= b;
        } else {
            *a -= q * b;
        }
    }
    fn add_mul_assign(&self, a: &mut BigInt, q: &BigInt, b: &BigInt) {
        if q.is_one() {
            *a += b;
        } else {
            *a += q * b;
        }
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn tag(&self) -> String {
        "Z".into()
    }
}

impl EuclideanRing for Integers {
    fn size_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }

    /// Rounds the quotient to nearest so that `|r| <= |b| / 2`.
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let (mut q, mut r) = a.div_rem(b);
        let twice: BigInt = &r * 2;
        if twice.magnitude() > b.magnitude() {
            if r.is_negative() == b.is_negative() {
                q += 1;
                r -= b;
            } else {
                q -= 1;
                r += b;
            }
        }
        (q, r)
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }

    fn normalizing_unit(&self, a: &BigInt) -> (BigInt, BigInt) {
        let u = if a.is_negative() { BigInt::from(-1) } else { BigInt::one() };
        (u.clone(), u)
    }

    fn divides(&self, a: &BigInt, b: &BigInt) -> bool {
        if a.is_zero() {
            return b.is_zero();
        }
        b.is_multiple_of(a)
    }

    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p.is_multiple_of(small) {
            return p == small;
        }
    }
    let (mut d, mut s) = (p - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field `Z/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn lift_centered(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    #[inline]
    pub fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn add_mod(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    pub fn sub_mod(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        let (mut e, mut base, mut r) = (self.p - 2, a % self.p, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_mod(r, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        r
    }
}

impl Ring for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.add_mod(*a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub_mod(*a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_mod(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.sub_mod(0, *a)
    }
    fn embed_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn tag(&self) -> String {
        "Fp".into()
    }
}

impl EuclideanRing for Fp {
    fn size_cmp(&self, a: &u64, b: &u64) -> Ordering {
        (*a != 0).cmp(&(*b != 0))
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.mul_mod(*a, self.inv(*b)), 0)
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn normalizing_unit(&self, a: &u64) -> (u64, u64) {
        if *a == 0 {
            (1, 1)
        } else {
            (self.inv(*a), *a)
        }
    }
}

/// Polynomials over `Z/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpX {
    pub field: Fp,
}

impl FpX {
    pub fn new(p: u64) -> Result<Self> {
        Ok(FpX { field: Fp::new(p)? })
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }
}

impl Ring for FpX {
    type Elem = FpPoly;

    fn zero(&self) -> FpPoly {
        FpPoly::zero()
    }
    fn one(&self) -> FpPoly {
        FpPoly::constant(&self.field, 1)
    }
    fn is_zero(&self, a: &FpPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.add(&self.field, b)
    }
    fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.sub(&self.field, b)
    }
    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.mul(&self.field, b)
    }
    fn neg(&self, a: &FpPoly) -> FpPoly {
        FpPoly::zero().sub(&self.field, a)
    }
    fn embed_i64(&self, v: i64) -> FpPoly {
        FpPoly::constant(&self.field, self.field.reduce_i64(v))
    }
    fn tag(&self) -> String {
        "Fp[x]".into()
    }
}

impl EuclideanRing for FpX {
    fn size_cmp(&self, a: &FpPoly, b: &FpPoly) -> Ordering {
        let key = |f: &FpPoly| f.degree().map(|d| (d, f.leading()));
        key(a).cmp(&key(b))
    }
    fn div_rem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        a.div_rem(&self.field, b)
    }
    fn is_unit(&self, a: &FpPoly) -> bool {
        a.degree() == Some(0)
    }
    fn normalizing_unit(&self, a: &FpPoly) -> (FpPoly, FpPoly) {
        if a.is_zero() {
            return (self.one(), self.one());
        }
        let lc = a.leading();
        (FpPoly::constant(&self.field, self.field.inv(lc)), FpPoly::constant(&self.field, lc))
    }
}

/// Polynomials over the integers in one variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ZX;

impl Ring for ZX {
    type Elem = ZPoly;

    fn zero(&self) -> ZPoly {
        ZPoly::zero()
    }
    fn one(&self) -> ZPoly {
        ZPoly::constant(BigInt::one())
    }
    fn is_zero(&self, a: &ZPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        a + b
    }
    fn sub(&self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        a - b
    }
    fn mul(&self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        a * b
    }
    fn neg(&self, a: &ZPoly) -> ZPoly {
        -a
    }
    fn embed_i64(&self, v: i64) -> ZPoly {
        ZPoly::constant(BigInt::from(v))
    }
    fn tag(&self) -> String {
        "Z[x]".into()
    }
}

/// Integer polynomials in `nvars` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiZ {
    pub nvars: usize,
}

impl Ring for MultiZ {
    type Elem = MultiPoly;

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero()
    }
    fn one(&self) -> MultiPoly {
        MultiPoly::constant(self.nvars, BigInt::one())
    }
    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b)
    }
    fn sub(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(&b.neg())
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul(b)
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        a.neg()
    }
    fn embed_i64(&self, v: i64) -> MultiPoly {
        MultiPoly::constant(self.nvars, BigInt::from(v))
    }
    fn tag(&self) -> String {
        format!("Z[x1..x{}]", self.nvars)
    }
}

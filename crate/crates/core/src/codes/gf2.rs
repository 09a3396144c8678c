//! Packed GF(2) vectors and matrices.
//!
//! Bit `i` of a vector is stored most-significant-first inside its word, so the
//! derived ordering on the word array is the lexicographic order of the
//! printed `0`/`1` string.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn mask(i: usize) -> u64 {
    1u64 << (WORD - 1 - (i % WORD))
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    // Field order matters for the derived `Ord`: words first gives string order.
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { words: vec![0; len.div_ceil(WORD)], len }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    /// The standard basis vector with a single 1 at position `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Bits of `value`, most significant of the low `len` bits first.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= 64);
        Self::from_bits((0..len).map(|i| (value >> (len - 1 - i)) & 1 == 1))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] & mask(i) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        if bit {
            self.words[i / WORD] |= mask(i);
        } else {
            self.words[i / WORD] &= !mask(i);
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= mask(i);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Positions of the 1-bits in increasing order.
    pub fn ones_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let lz = w.leading_zeros() as usize;
                out.push(wi * WORD + lz);
                w &= !(1u64 << (WORD - 1 - lz));
            }
        }
        out
    }

    /// First position holding a 1, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, w)| wi * WORD + w.leading_zeros() as usize)
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        BitVector::from_bits((0..self.len).map(|i| self.get(i)).chain((0..other.len).map(|i| other.get(i))))
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses `0`/`1` characters, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::new();
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(Error::Parse(format!("unexpected character {c:?} in bit string {s:?}"))),
            }
        }
        Ok(BitVector::from_bits(bits))
    }
}

/// Dense matrix over GF(2), one packed `BitVector` per row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    rows: Vec<BitVector>,
    cols: usize,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Gf2Matrix,
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows: vec![BitVector::zeros(cols); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix { rows: (0..n).map(|i| BitVector::unit(n, i)).collect(), cols: n }
    }

    /// Builds a matrix from rows; `cols` is needed so that zero-row matrices keep their width.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("row of length {} in a matrix with {cols} columns", bad.len())));
        }
        Ok(Gf2Matrix { rows, cols })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<BitVector> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        let cols = rows.first().map_or(0, BitVector::len);
        Self::from_rows(cols, rows)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.rows[i].set(j, bit)
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bits(self.rows.iter().map(|r| r.get(j)))
    }

    pub fn transpose(&self) -> Gf2Matrix {
        Gf2Matrix { rows: (0..self.cols).map(|j| self.column(j)).collect(), cols: self.nrows() }
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok(BitVector::from_bits(self.rows.iter().map(|r| r.dot(v))))
    }

    pub fn echelon(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let pivots = eliminate(&mut rows, self.cols, None);
        rows.truncate(pivots.len());
        Echelon { matrix: Gf2Matrix { rows, cols: self.cols }, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        eliminate(&mut rows, self.cols, None).len()
    }

    /// Any `x` with `self * x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &BitVector) -> Result<Option<BitVector>> {
        if rhs.len() != self.nrows() {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} equations",
                rhs.len(),
                self.nrows()
            )));
        }
        let mut rows = self.rows.clone();
        let mut aug: Vec<bool> = rhs.bits().collect();
        let pivots = eliminate(&mut rows, self.cols, Some(&mut aug));
        if aug[pivots.len()..].iter().any(|&b| b) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x.set(c, aug[r]);
        }
        Ok(Some(x))
    }

    /// A basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<BitVector> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVector::unit(self.cols, f);
                for (r, &p) in ech.pivots.iter().enumerate() {
                    if ech.matrix.get(r, f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

/// In-place Gauss-Jordan elimination. Returns pivot columns; rows are permuted so
/// that the first `pivots.len()` rows are the reduced basis and the rest are zero.
fn eliminate(rows: &mut [BitVector], cols: usize, mut aug: Option<&mut Vec<bool>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(a) = aug.as_deref_mut() {
            a.swap(r, p);
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("pivot row exists");
        let pivot_bit = aug.as_deref().map(|a| a[r]);
        for (i, row) in head.iter_mut().enumerate() {
            if row.get(c) {
                row.xor_assign(pivot_row);
                if let (Some(a), Some(b)) = (aug.as_deref_mut(), pivot_bit) {
                    a[i] ^= b;
                }
            }
        }
        for (off, row) in below.iter_mut().enumerate() {
            if row.get(c) {
                row.xor_assign(pivot_row);
                if let (Some(a), Some(b)) = (aug.as_deref_mut(), pivot_bit) {
                    a[r + 1 + off] ^= b;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

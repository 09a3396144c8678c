//! Binary linear codes: the named doubly even codes, direct sums, weight
//! enumeration and the coset machinery used to label quotient vertices.

mod gf2;

use std::fmt;
use std::sync::OnceLock;

pub use gf2::{BitVector, Echelon, Gf2Matrix};

use crate::error::{Error, Result};
use crate::limits;

/// How a coset of a code is labeled by one of its members.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CosetLabeling {
    /// The lexicographically smallest member.
    #[default]
    LexMin,
    /// The member that vanishes on the rightmost pivot of every generator.
    /// For `d4` this is the member whose last coordinate is 0.
    TrailingPivot,
}

/// A binary linear code given by independent generator rows.
#[derive(Clone)]
pub struct BinaryCode {
    length: usize,
    generators: Vec<BitVector>,
    name: Option<String>,
    doubly_even: OnceLock<bool>,
    min_weight: OnceLock<Option<usize>>,
    leading: OnceLock<Echelon>,
    trailing: OnceLock<Echelon>,
}

impl BinaryCode {
    /// Builds a code from generator rows; rows must be independent and all of length `length`.
    pub fn new(length: usize, generators: Vec<BitVector>) -> Result<Self> {
        let m = Gf2Matrix::from_rows(length, generators.clone())?;
        if m.rank() != generators.len() {
            return Err(Error::InvalidParameter("generator rows are linearly dependent".into()));
        }
        Ok(BinaryCode {
            length,
            generators,
            name: None,
            doubly_even: OnceLock::new(),
            min_weight: OnceLock::new(),
            leading: OnceLock::new(),
            trailing: OnceLock::new(),
        })
    }

    pub fn from_rows(length: usize, rows: &[&str]) -> Result<Self> {
        let gens = rows.iter().map(|r| r.parse()).collect::<Result<Vec<BitVector>>>()?;
        Self::new(length, gens)
    }

    /// Parses the generator-matrix text format: one generator per line, `0`/`1`
    /// characters with optional whitespace, `#` starts a comment. The length is
    /// taken from the first row.
    pub fn parse_generator_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let row: BitVector = content
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            rows.push(row);
        }
        let Some(first) = rows.first() else {
            return Err(Error::Parse("generator text has no rows".into()));
        };
        let length = first.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != length) {
            return Err(Error::Parse(format!(
                "row {} has length {}, expected {length}",
                bad + 1,
                rows[bad].len()
            )));
        }
        // an all-zero row stands for the trivial code of that length
        rows.retain(|r| !r.is_zero());
        Self::new(length, rows)
    }

    pub fn to_generator_text(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            s.push_str(&format!("# {name}\n"));
        }
        for g in &self.generators {
            s.push_str(&format!("{g}\n"));
        }
        if self.generators.is_empty() {
            s.push_str(&format!("{}\n", BitVector::zeros(self.length)));
        }
        s
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("[{},{}]", self.length, self.dimension()))
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[BitVector] {
        &self.generators
    }

    pub fn generator_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.length, self.generators.clone()).expect("lengths checked on construction")
    }

    /// The trivial code `t^n = {0...0}`.
    pub fn trivial(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("empty generator set").with_name(if n == 1 {
            "t".to_string()
        } else {
            format!("t{n}")
        })
    }

    /// `d_n` for even `n >= 4`: rows of four ones, each shifted two columns right.
    pub fn d(n: usize) -> Result<Self> {
        if n < 4 || n % 2 == 1 {
            return Err(Error::InvalidParameter(format!("d_N needs even N >= 4, got {n}")));
        }
        let gens = (0..n / 2 - 1)
            .map(|r| BitVector::from_bits((0..n).map(|c| c >= 2 * r && c < 2 * r + 4)))
            .collect();
        Ok(Self::new(n, gens)?.with_name(format!("d{n}")))
    }

    pub fn e7() -> Self {
        Self::from_rows(7, &["1111000", "0011110", "1010101"])
            .expect("e7 generators")
            .with_name("e7")
    }

    pub fn e8() -> Self {
        Self::from_rows(8, &["11110000", "00111100", "00001111", "10101010"])
            .expect("e8 generators")
            .with_name("e8")
    }

    pub fn h8() -> Self {
        Self::from_rows(8, &["11111111"]).expect("h8 generator").with_name("h8")
    }

    pub fn e16() -> Self {
        Self::from_rows(
            16,
            &[
                "1111000000000000",
                "0011110000000000",
                "0000111100000000",
                "0000001111000000",
                "0000000011110000",
                "0000000000111100",
                "0000000000001111",
                "1010101010101010",
            ],
        )
        .expect("e16 generators")
        .with_name("e16")
    }

    /// The extended binary Golay code, generator rows as commonly printed in standard form.
    pub fn golay24() -> Self {
        Self::from_rows(
            24,
            &[
                "100000000000100111110001",
                "010000000000010011111010",
                "001000000000001001111101",
                "000100000000100100111110",
                "000010000000110010011101",
                "000001000000111001001110",
                "000000100000111100100101",
                "000000010000111110010010",
                "000000001000011111001001",
                "000000000100001111100110",
                "000000000010010101010111",
                "000000000001101010101011",
            ],
        )
        .expect("golay generators")
        .with_name("golay24")
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &BinaryCode) -> BinaryCode {
        let len = self.length + other.length;
        let gens = self
            .generators
            .iter()
            .map(|g| g.concat(&BitVector::zeros(other.length)))
            .chain(other.generators.iter().map(|g| BitVector::zeros(self.length).concat(g)))
            .collect();
        let name = match (self.name.as_deref(), other.name.as_deref()) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        let mut code = BinaryCode::new(len, gens).expect("block-diagonal rows are independent");
        code.name = name;
        code
    }

    /// The dual code `{v : v . c = 0 for all c in C}`.
    pub fn dual(&self) -> BinaryCode {
        let basis = self.generator_matrix().kernel();
        BinaryCode::new(self.length, basis).expect("kernel basis is independent")
    }

    /// Every codeword, enumerated in Gray-code order starting from zero.
    pub fn codewords(&self) -> Result<Vec<BitVector>> {
        let k = self.dimension();
        limits::check(k as u128, limits::MAX_ENUMERATION_DIM as u128, "code dimension for enumeration")?;
        let mut out = Vec::with_capacity(1 << k);
        let mut word = BitVector::zeros(self.length);
        out.push(word.clone());
        for i in 1u64..(1u64 << k) {
            word.xor_assign(&self.generators[i.trailing_zeros() as usize]);
            out.push(word.clone());
        }
        Ok(out)
    }

    fn for_each_nonzero_weight(&self, mut f: impl FnMut(usize)) -> Result<()> {
        let k = self.dimension();
        limits::check(k as u128, limits::MAX_ENUMERATION_DIM as u128, "code dimension for enumeration")?;
        let mut word = BitVector::zeros(self.length);
        for i in 1u64..(1u64 << k) {
            word.xor_assign(&self.generators[i.trailing_zeros() as usize]);
            f(word.weight());
        }
        Ok(())
    }

    /// True iff every codeword has weight divisible by 4, by exhaustive enumeration.
    pub fn is_doubly_even(&self) -> Result<bool> {
        if let Some(&b) = self.doubly_even.get() {
            return Ok(b);
        }
        let mut ok = true;
        self.for_each_nonzero_weight(|w| ok &= w % 4 == 0)?;
        Ok(*self.doubly_even.get_or_init(|| ok))
    }

    /// Generator-level sufficient test: every generator has weight 0 mod 4 and
    /// every pair of generators overlaps in an even number of positions.
    pub fn generators_doubly_even(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|r| r.weight() % 4 == 0)
            && (0..g.len()).all(|i| (i + 1..g.len()).all(|j| !g[i].dot(&g[j])))
    }

    /// Minimum weight over nonzero codewords; `None` for the trivial code.
    pub fn min_weight(&self) -> Result<Option<usize>> {
        if let Some(&w) = self.min_weight.get() {
            return Ok(w);
        }
        let mut best: Option<usize> = None;
        self.for_each_nonzero_weight(|w| best = Some(best.map_or(w, |b| b.min(w))))?;
        Ok(*self.min_weight.get_or_init(|| best))
    }

    /// Membership test by GF(2) solve against the generator rows.
    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.length {
            return Err(Error::Dimension(format!("word of length {} for code of length {}", v.len(), self.length)));
        }
        // x G = v  <=>  G^T x^T = v^T
        Ok(self.generator_matrix().transpose().solve(v)?.is_some())
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains(&BitVector::ones(self.length)).expect("lengths agree")
    }

    fn leading_echelon(&self) -> &Echelon {
        self.leading.get_or_init(|| self.generator_matrix().echelon())
    }

    fn trailing_echelon(&self) -> &Echelon {
        self.trailing.get_or_init(|| {
            // Echelon form of the column-reversed matrix, mapped back.
            let n = self.length;
            let reversed: Vec<BitVector> = self
                .generators
                .iter()
                .map(|g| BitVector::from_bits((0..n).rev().map(|i| g.get(i))))
                .collect();
            let ech = Gf2Matrix::from_rows(n, reversed).expect("lengths").echelon();
            let rows = ech
                .matrix
                .rows()
                .iter()
                .map(|r| BitVector::from_bits((0..n).rev().map(|i| r.get(i))))
                .collect();
            Echelon {
                matrix: Gf2Matrix::from_rows(n, rows).expect("lengths"),
                pivots: ech.pivots.iter().map(|&p| n - 1 - p).collect(),
            }
        })
    }

    fn echelon_for(&self, labeling: CosetLabeling) -> &Echelon {
        match labeling {
            CosetLabeling::LexMin => self.leading_echelon(),
            CosetLabeling::TrailingPivot => self.trailing_echelon(),
        }
    }

    /// Row-reduced echelon form; two codes are equal iff these agree.
    pub fn rref(&self) -> Gf2Matrix {
        self.leading_echelon().matrix.clone()
    }

    /// Canonical representative of `v + C`.
    ///
    /// Under `LexMin`, reducing by the leading-pivot echelon form clears every
    /// pivot column; any other member differs at the first pivot of the added
    /// codeword, where it carries a 1, so the reduced word is the smallest.
    pub fn coset_rep(&self, v: &BitVector, labeling: CosetLabeling) -> BitVector {
        let ech = self.echelon_for(labeling);
        let mut w = v.clone();
        for (row, &p) in ech.matrix.rows().iter().zip(&ech.pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w
    }

    /// One representative per coset of `C` in `GF(2)^N`, sorted lexicographically.
    pub fn cosets(&self, labeling: CosetLabeling) -> Result<Vec<BitVector>> {
        let n = self.length;
        let free_count = n - self.dimension();
        limits::check(free_count as u128, limits::MAX_QUOTIENT_LOG2 as u128, "N - k for coset listing")?;
        let ech = self.echelon_for(labeling);
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        // Counting in binary over the free positions (first free position most
        // significant) visits the representatives in lexicographic order.
        let mut reps = Vec::with_capacity(1 << free_count);
        for bits in 0u64..(1u64 << free_count) {
            let mut v = BitVector::zeros(n);
            for (j, &pos) in free.iter().enumerate() {
                if (bits >> (free_count - 1 - j)) & 1 == 1 {
                    v.set(pos, true);
                }
            }
            reps.push(v);
        }
        Ok(reps)
    }
}

impl PartialEq for BinaryCode {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length && self.rref() == other.rref()
    }
}

impl Eq for BinaryCode {}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryCode")
            .field("name", &self.name())
            .field("length", &self.length)
            .field("generators", &self.generators)
            .finish()
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Looks up a named code. Names are lowercase ASCII: `t`, `t<j>`, `d<N>`, `e7`,
/// `e8`, `h8`, `e16`, `golay24`; direct sums are joined with `+` (or `⊕`).
/// Underscores and carets are ignored so `d_4` and `t^3` also parse.
pub fn standard_code(name: &str) -> Result<BinaryCode> {
    let cleaned: String = name
        .trim()
        .to_ascii_lowercase()
        .replace('⊕', "+")
        .chars()
        .filter(|c| !matches!(c, '_' | '^' | ' '))
        .collect();
    if cleaned.is_empty() {
        return Err(Error::UnknownCode(name.to_string()));
    }
    let mut acc: Option<BinaryCode> = None;
    for part in cleaned.split('+') {
        let code = single_code(part).map_err(|e| match e {
            Error::UnknownCode(_) => Error::UnknownCode(name.to_string()),
            other => other,
        })?;
        acc = Some(match acc {
            None => code,
            Some(prev) => prev.direct_sum(&code),
        });
    }
    Ok(acc.expect("at least one summand"))
}

fn single_code(part: &str) -> Result<BinaryCode> {
    let number = |s: &str| -> Result<usize> { s.parse().map_err(|_| Error::UnknownCode(part.to_string())) };
    match part {
        "e7" => Ok(BinaryCode::e7()),
        "e8" => Ok(BinaryCode::e8()),
        "h8" => Ok(BinaryCode::h8()),
        "e16" => Ok(BinaryCode::e16()),
        "golay24" | "g24" | "golay" => Ok(BinaryCode::golay24()),
        "t" => Ok(BinaryCode::trivial(1)),
        _ if part.starts_with('t') => {
            let n = number(&part[1..])?;
            if n == 0 {
                return Err(Error::InvalidParameter("t^0 has no coordinates".into()));
            }
            Ok(BinaryCode::trivial(n))
        }
        _ if part.starts_with('d') => BinaryCode::d(number(&part[1..])?),
        _ => Err(Error::UnknownCode(part.to_string())),
    }
}

/// Largest `k` for which a doubly even `[N, k]` code exists, by `N mod 8`.
pub fn max_doubly_even_dimension(n: usize) -> usize {
    let (m, p) = (n / 8, n % 8);
    4 * m
        + match p {
            0..=3 => 0,
            4 | 5 => 1,
            6 => 2,
            _ => 3,
        }
}

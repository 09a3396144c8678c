#![allow(dead_code)]

use std::collections::HashMap;

use ::adinkra::codes::{standard_code, BitVector, CosetLabeling};
use ::adinkra::exactmat::IntMatrix;
use ::adinkra::Adinkra;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const S: i8 = 1;
pub const D: i8 = -1;

/// The signed quotient of the 4-cube by d4 as drawn in the worked example:
/// cosets labeled by the representative with last coordinate 0, colors
/// 1 (black), 2 (red), 3 (blue), 4 (green).
pub const LK4_EDGES: [(&str, &str, usize, i8); 16] = [
    ("0000", "1110", 4, D),
    ("1000", "0110", 4, S),
    ("0100", "1010", 4, D),
    ("1100", "0010", 4, S),
    ("0010", "1010", 1, S),
    ("0110", "1110", 1, S),
    ("0000", "1000", 1, S),
    ("0100", "1100", 1, S),
    ("0010", "0110", 2, S),
    ("1010", "1110", 2, D),
    ("0000", "0100", 2, S),
    ("1000", "1100", 2, D),
    ("0000", "0010", 3, S),
    ("1000", "1010", 3, D),
    ("0100", "0110", 3, D),
    ("1100", "1110", 3, S),
];

/// Bosons left to right, then fermions left to right.
pub const LK4_ORDER: [&str; 8] = ["0000", "1100", "1010", "0110", "1000", "0100", "0010", "1110"];

pub const LK4_PRINTED_A: [i64; 64] = [
    0, 0, 0, 0, 1, 1, 1, -1, //
    0, 0, 0, 0, -1, 1, 1, 1, //
    0, 0, 0, 0, -1, -1, 1, -1, //
    0, 0, 0, 0, 1, -1, 1, 1, //
    1, -1, -1, 1, 0, 0, 0, 0, //
    1, 1, -1, -1, 0, 0, 0, 0, //
    1, 1, 1, 1, 0, 0, 0, 0, //
    -1, 1, -1, 1, 0, 0, 0, 0,
];

pub const LK4_PRINTED_L: [i64; 64] = [
    4, 0, 0, 0, -1, -1, -1, 1, //
    0, 4, 0, 0, 1, -1, -1, -1, //
    0, 0, 4, 0, 1, 1, -1, 1, //
    0, 0, 0, 4, -1, 1, -1, -1, //
    -1, 1, 1, -1, 4, 0, 0, 0, //
    -1, -1, -1, -1, 0, 4, 0, 0, //
    -1, -1, -1, -1, 0, 0, 4, 0, //
    1, -1, 1, -1, 0, 0, 0, 4,
];

pub fn lk4_fixture() -> Adinkra {
    let code = standard_code("d4").unwrap();
    let unsigned = Adinkra::from_code_labeled(&code, CosetLabeling::TrailingPivot).unwrap();
    let order: Vec<BitVector> = LK4_ORDER.iter().map(|s| s.parse().unwrap()).collect();
    let reordered = unsigned.with_vertex_order(&order).unwrap();
    let g = reordered.graph();
    let mut sign_of = HashMap::new();
    for (u, v, color, sign) in LK4_EDGES {
        let (iu, iv) = (g.index_of(&u.parse().unwrap()).unwrap(), g.index_of(&v.parse().unwrap()).unwrap());
        sign_of.insert((iu.min(iv), iu.max(iv), color - 1), sign);
    }
    let signs = g.edges().iter().map(|e| sign_of[&(e.u, e.v, e.color)]).collect();
    Adinkra::new(g.clone(), signs).unwrap()
}

pub fn int_matrix(rows: usize, cols: usize, v: &[i64]) -> IntMatrix {
    IntMatrix::from_i64(rows, cols, v).unwrap()
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Catalog codes containing the all-ones word.
pub const WITH_ALL_ONES: [&str; 5] = ["d4", "h8", "d4+d4", "d8", "e8"];

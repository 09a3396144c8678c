mod common;

use ::adinkra::exactmat::{det_int, Fp, FpPoly, FpPolyMatrix, FpX, IntMatrix, Integers, Matrix};
use ::adinkra::snf::{
    invariant_factors_by_minors, minor_gcd_oracle, p_corank, rank_mod_p, snf_fpx, snf_int, snf_with, SnfOptions,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| IntMatrix::from_i64(r, c, &v).unwrap())
    })
}

fn poly_matrix_strategy(p: u64) -> impl Strategy<Value = FpPolyMatrix> {
    (1..=4usize, 1..=4usize).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(0..p, 0..=3), r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(FpPoly::from_coeffs).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn integer_smith_form_is_valid(m in int_matrix_strategy(6, 30)) {
        let r = snf_with(&m, &Integers, SnfOptions { inverses: true }).unwrap();
        let z = Integers;
        prop_assert_eq!(r.b.mul(&m, &z).unwrap().mul(&r.c, &z).unwrap(), Matrix::diagonal(m.nrows(), m.ncols(), &z, &r.diag));
        prop_assert_eq!(r.b.mul(r.b_inv.as_ref().unwrap(), &z).unwrap(), IntMatrix::identity(m.nrows(), &z));
        prop_assert_eq!(r.c.mul(r.c_inv.as_ref().unwrap(), &z).unwrap(), IntMatrix::identity(m.ncols(), &z));
        for w in r.diag.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero());
        }
        prop_assert!(r.diag.iter().all(|d| !d.is_negative()));
        let nonzero_then_zero = r.diag.iter().skip_while(|d| !d.is_zero()).all(Zero::is_zero);
        prop_assert!(nonzero_then_zero);
    }

    #[test]
    fn smith_form_matches_minor_gcds(m in int_matrix_strategy(5, 12)) {
        let diag = snf_int(&m).unwrap().diag;
        prop_assert_eq!(&diag, &invariant_factors_by_minors(&m).unwrap());
        let mut prefix = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            prefix *= d;
            prop_assert_eq!(&prefix, &minor_gcd_oracle(&m, k + 1).unwrap());
        }
    }

    #[test]
    fn determinant_is_product_of_factors(v in prop::collection::vec(-9i64..=9, 16)) {
        let m = IntMatrix::from_i64(4, 4, &v).unwrap();
        let product: BigInt = snf_int(&m).unwrap().diag.iter().product();
        prop_assert_eq!(product, det_int(&m).unwrap().abs());
    }

    #[test]
    fn corank_counts_divisible_factors(m in int_matrix_strategy(6, 20), pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let diag = snf_int(&m).unwrap().diag;
        let count = diag.iter().filter(|d| d.is_multiple_of(&BigInt::from(p))).count();
        prop_assert_eq!(p_corank(&m, p).unwrap(), count);
        // reducing mod p commutes with taking the Smith form
        let f = Fp::new(p).unwrap();
        let reduced = m.map(|v| f.reduce(v));
        let over_fp = snf_with(&reduced, &f, SnfOptions::default()).unwrap();
        let rank = over_fp.diag.iter().filter(|d| **d != 0).count();
        prop_assert_eq!(rank, rank_mod_p(&m, p).unwrap());
        prop_assert!(over_fp.diag.iter().all(|d| *d <= 1));
    }

    #[test]
    fn polynomial_smith_form_is_valid(m in poly_matrix_strategy(5)) {
        let ring = FpX::new(5).unwrap();
        let r = snf_fpx(&m, 5).unwrap();
        prop_assert_eq!(r.b.mul(&m, &ring).unwrap().mul(&r.c, &ring).unwrap(), Matrix::diagonal(m.nrows(), m.ncols(), &ring, &r.diag));
        let f = Fp::new(5).unwrap();
        for w in r.diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero());
                prop_assert!(w[1].div_rem(&f, &w[0]).1.is_zero());
            }
        }
        prop_assert!(r.diag.iter().all(|d| d.is_zero() || d.is_monic()));
    }
}

#[test]
fn seeded_random_matrices_against_oracle() {
    let mut rng = common::seeded(11);
    for _ in 0..50 {
        let m = common::random_int_matrix(&mut rng, 6, 6, 9);
        assert_eq!(snf_int(&m).unwrap().diag, invariant_factors_by_minors(&m).unwrap());
    }
}

#[test]
fn large_entries() {
    let big: BigInt = "340282366920938463463374607431768211457".parse().unwrap();
    let m = Matrix::from_vec(2, 2, vec![big.clone(), BigInt::zero(), BigInt::zero(), &big * 6]).unwrap();
    let diag = snf_int(&m).unwrap().diag;
    assert_eq!(diag, vec![big.clone(), &big * 6]);
}

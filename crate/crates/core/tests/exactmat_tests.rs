mod common;

use ::adinkra::analysis::catalog_adinkras;
use ::adinkra::exactmat::{
    adjacency_matrix, block_x, colored_adjacency, colored_block_x, colored_laplacian, det_fp, det_int, det_zpoly,
    evaluate_at, laplacian_matrix, reduce_int_mod_p, reduce_poly_mod_p, specialize, specialize_first, AnyMatrix,
    Assignment, FpX, IntMatrix, Matrix, MultiPoly, Specialized, ZPoly, ZPolyMatrix,
};
use ::adinkra::Adinkra;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn specialize_int(m: &::adinkra::exactmat::MultiPolyMatrix, nvars: usize, point: &[i64]) -> IntMatrix {
    let assignment: Vec<Assignment> = point.iter().map(|&v| Assignment::Value(BigInt::from(v))).collect();
    match specialize(m, nvars, &assignment).unwrap() {
        Specialized::Int(m) => m,
        Specialized::Poly(_) => panic!("no symbol was kept"),
    }
}

/// Weighted signed adjacency straight from the edge list.
fn weighted_adjacency(a: &Adinkra, point: &[i64]) -> IntMatrix {
    let n = a.num_vertices();
    let mut m = IntMatrix::from_fn(n, n, |_, _| BigInt::zero());
    for (e, &s) in a.graph().edges().iter().zip(a.signs()) {
        let w = BigInt::from(s as i64 * point[e.color]);
        m[(e.u, e.v)] += &w;
        m[(e.v, e.u)] += &w;
    }
    m
}

/// Cofactor expansion along the first row.
fn det_by_cofactors(m: &IntMatrix) -> BigInt {
    let n = m.nrows();
    if n == 0 {
        return BigInt::one();
    }
    let rest: Vec<usize> = (1..n).collect();
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = det_by_cofactors(&m.submatrix(&rest, &cols));
        let term = &m[(0, j)] * minor;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn small_adinkras() -> Vec<Adinkra> {
    catalog_adinkras(6).unwrap().into_iter().map(|(_, a)| a).collect()
}

#[test]
fn all_ones_specialization_recovers_integer_matrices() {
    for a in small_adinkras() {
        let n = a.n_colors();
        let ones = vec![1; n];
        assert_eq!(specialize_int(&colored_adjacency(&a), n, &ones), adjacency_matrix(&a));
        assert_eq!(specialize_int(&colored_laplacian(&a), n, &ones), laplacian_matrix(&a));
        assert_eq!(specialize_int(&colored_block_x(&a).unwrap(), n, &ones), block_x(&a).unwrap());
    }
}

#[test]
fn reduction_and_specialization_commute() {
    for a in small_adinkras() {
        let lx = specialize_first(&colored_laplacian(&a), a.n_colors());
        for p in [2u64, 3, 5, 7] {
            let ring = FpX::new(p).unwrap();
            let reduced = reduce_poly_mod_p(&lx, p).unwrap();
            for x in -3i64..=3 {
                let at_x = reduce_int_mod_p(&evaluate_at(&lx, &BigInt::from(x)), p).unwrap();
                assert_eq!(reduced.eval_at(&ring, x.rem_euclid(p as i64) as u64), at_x);
            }
        }
    }
}

#[test]
fn polynomial_determinant_agrees_with_evaluation() {
    let a = small_adinkras().into_iter().find(|a| a.n_colors() == 3).unwrap();
    let lx = specialize_first(&colored_laplacian(&a), a.n_colors());
    let d = det_zpoly(&lx).unwrap();
    for x in -4i64..=4 {
        let x = BigInt::from(x);
        assert_eq!(d.eval(&x), det_int(&evaluate_at(&lx, &x)).unwrap());
    }
}

#[test]
fn any_matrix_json_round_trips() {
    let a = small_adinkras().into_iter().find(|a| a.n_colors() == 4).unwrap();
    let big = IntMatrix::from_fn(2, 2, |i, j| BigInt::from(7u8).pow(40) * (i as i64 - j as i64));
    let lx = specialize_first(&colored_laplacian(&a), 4);
    let cases = vec![
        AnyMatrix::Int(laplacian_matrix(&a)),
        AnyMatrix::Int(big),
        AnyMatrix::Fp { p: 5, m: reduce_int_mod_p(&laplacian_matrix(&a), 5).unwrap() },
        AnyMatrix::ZX(lx.clone()),
        AnyMatrix::FpX { p: 3, m: reduce_poly_mod_p(&lx, 3).unwrap() },
        AnyMatrix::Multi { nvars: 4, m: colored_laplacian(&a) },
    ];
    for m in cases {
        let back = AnyMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }
}

#[test]
fn malformed_matrix_json_is_rejected() {
    for text in [
        r#"{"rows":2,"cols":2,"ring":"Z","entries":[1,2,3]}"#,
        r#"{"rows":1,"cols":1,"ring":"Fp","entries":[1]}"#,
        r#"{"rows":1,"cols":1,"ring":"Fp","p":4,"entries":[1]}"#,
        r#"{"rows":1,"cols":1,"ring":"Q","entries":[1]}"#,
        r#"{"rows":1,"cols":1,"ring":"Z","entries":["x"]}"#,
        r#"{"rows":1,"cols":1,"ring":"Z[x1..x2]","entries":[[[1,[1]]]]}"#,
    ] {
        assert!(AnyMatrix::from_json(text).is_err(), "{text}");
    }
}

#[test]
fn integer_json_accepts_strings_for_large_entries() {
    let text = r#"{"rows":1,"cols":2,"ring":"Z","entries":["123456789012345678901234567890",-4]}"#;
    match AnyMatrix::from_json(text).unwrap() {
        AnyMatrix::Int(m) => {
            assert_eq!(m[(0, 0)].to_string(), "123456789012345678901234567890");
            assert_eq!(m[(0, 1)], BigInt::from(-4));
        }
        other => panic!("parsed as {other:?}"),
    }
}

#[test]
fn sigma_and_laplacian_diagonal() {
    let a = small_adinkras().into_iter().find(|a| a.n_colors() == 5).unwrap();
    let l = colored_laplacian(&a);
    for i in 0..a.num_vertices() {
        assert_eq!(l[(i, i)], MultiPoly::sigma(5));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weighted_specialization_matches_edge_sum(idx in 0usize..15, point in prop::collection::vec(-5i64..=5, 6)) {
        let adinkras = small_adinkras();
        let a = &adinkras[idx % adinkras.len()];
        let n = a.n_colors();
        let point = &point[..n];
        let adj = specialize_int(&colored_adjacency(a), n, point);
        prop_assert_eq!(&adj, &weighted_adjacency(a, point));
        let sigma: i64 = point.iter().sum();
        let lap = specialize_int(&colored_laplacian(a), n, point);
        let expected = IntMatrix::from_fn(adj.nrows(), adj.ncols(), |i, j| {
            let d = if i == j { BigInt::from(sigma) } else { BigInt::zero() };
            d - &adj[(i, j)]
        });
        prop_assert_eq!(lap, expected);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(n in 1usize..=6, v in prop::collection::vec(-20i64..=20, 36)) {
        let m = IntMatrix::from_i64(n, n, &v[..n * n]).unwrap();
        let d = det_int(&m).unwrap();
        prop_assert_eq!(&d, &det_by_cofactors(&m));
        for p in [2u64, 3, 13] {
            let expected = d.clone() % BigInt::from(p);
            let expected = ((expected + BigInt::from(p)) % BigInt::from(p)).to_string();
            prop_assert_eq!(det_fp(&reduce_int_mod_p(&m, p).unwrap(), p).unwrap().to_string(), expected);
        }
    }

    #[test]
    fn polynomial_determinant_interpolates(n in 1usize..=4, v in prop::collection::vec(prop::collection::vec(-3i64..=3, 0..=2), 16)) {
        let m: ZPolyMatrix = Matrix::from_vec(n, n, v[..n * n].iter().map(|c| ZPoly::from_i64s(c)).collect()).unwrap();
        let d = det_zpoly(&m).unwrap();
        for x in -3i64..=3 {
            let x = BigInt::from(x);
            prop_assert_eq!(d.eval(&x), det_by_cofactors(&evaluate_at(&m, &x)));
        }
    }
}

mod common;

use ::adinkra::exactmat::{adjacency_matrix, block_x, laplacian_matrix};
use ::adinkra::snf::profile_int;
use common::*;

#[test]
fn fixture_is_a_valid_adinkra() {
    let a = lk4_fixture();
    assert!(a.validate().is_clean(), "{}", a.validate());
    assert_eq!(a.n_colors(), 4);
    assert_eq!(a.num_vertices(), 8);
    assert_eq!(a.graph().boson_count(), 4);
    assert!(a.graph().is_boson_first());
}

#[test]
fn fixture_matrices_match_printed_example() {
    let a = lk4_fixture();
    assert_eq!(adjacency_matrix(&a), int_matrix(8, 8, &LK4_PRINTED_A));
    let x = block_x(&a).unwrap();
    assert_eq!(x, int_matrix(8, 8, &LK4_PRINTED_A).block(0, 4, 4, 4));
    let l = laplacian_matrix(&a);
    let four_minus_a: Vec<i64> =
        LK4_PRINTED_A.iter().enumerate().map(|(i, &v)| if i / 8 == i % 8 { 4 - v } else { -v }).collect();
    assert_eq!(l, int_matrix(8, 8, &four_minus_a));
}

#[test]
fn printed_laplacian_differs_only_where_it_is_asymmetric() {
    let l = laplacian_matrix(&lk4_fixture());
    let printed = int_matrix(8, 8, &LK4_PRINTED_L);
    let mut differing = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            if l[(i, j)] != printed[(i, j)] {
                differing.push((i, j));
                assert_ne!(printed[(i, j)], printed[(j, i)], "printed entry ({i}, {j}) is symmetric yet differs");
            }
        }
    }
    assert_eq!(differing, vec![(5, 2), (5, 3)]);
}

#[test]
fn fixture_profile() {
    let a = lk4_fixture();
    assert_eq!(profile_int(&laplacian_matrix(&a)).unwrap().to_string(), "(1^2,2^2,6^2,12^2)");
    assert_eq!(profile_int(&block_x(&a).unwrap()).unwrap().to_string(), "(1,2^2,4)");
}

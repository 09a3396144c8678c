mod common;

use ::adinkra::adinkra::{color_isomorphism, hypercube_adinkra, prism, quotient_graph, signature_classes, solve_totally_odd, Violation};
use ::adinkra::codes::{standard_code, BinaryCode, BitVector};
use ::adinkra::exactmat::laplacian_matrix;
use ::adinkra::snf::profile_int;
use ::adinkra::{Adinkra, Error};
use proptest::prelude::*;

const PIECES: [&str; 5] = ["t", "t2", "d4", "d6", "e7"];

/// Direct sums of catalog pieces: doubly even codes of length at most 9.
fn code_strategy() -> impl Strategy<Value = BinaryCode> {
    prop::collection::vec(0usize..PIECES.len(), 1..=3).prop_filter_map("length at most 9", |picks| {
        let mut code = standard_code(PIECES[picks[0]]).unwrap();
        for &p in &picks[1..] {
            code = code.direct_sum(&standard_code(PIECES[p]).unwrap());
        }
        (code.length() <= 9).then_some(code)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotients_of_doubly_even_codes_are_adinkras(code in code_strategy()) {
        let a = Adinkra::from_code(&code).unwrap();
        prop_assert!(a.validate().is_clean());
        prop_assert_eq!(a.num_vertices(), 1 << (code.length() - code.dimension()));
        prop_assert!(a.graph().is_boson_first());
        prop_assert_eq!(signature_classes(&a).unwrap().len(), 1 << code.dimension());
        let back = Adinkra::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn switching_preserves_the_adinkra_conditions(n in 1usize..=6, seed in any::<u64>()) {
        let a = hypercube_adinkra(n).unwrap();
        let w = ::adinkra::analysis::random_switch_sets(a.num_vertices(), 1, seed).remove(0);
        let s = a.vertex_switch(&w).unwrap();
        prop_assert!(s.validate().is_clean());
        prop_assert_eq!(profile_int(&laplacian_matrix(&s)).unwrap(), profile_int(&laplacian_matrix(&a)).unwrap());
        // switching twice is the identity
        prop_assert_eq!(s.vertex_switch(&w).unwrap(), a);
    }

    #[test]
    fn flipping_one_edge_breaks_total_oddness(n in 2usize..=5, edge in any::<prop::sample::Index>()) {
        let a = hypercube_adinkra(n).unwrap();
        let e = edge.index(a.graph().edges().len());
        let mut signs = a.signs().to_vec();
        signs[e] = -signs[e];
        let bad = Adinkra::new(a.graph().clone(), signs).unwrap();
        let report = bad.validate();
        // the edge lies on one bicolor 4-cycle for each other color
        prop_assert_eq!(report.violations.len(), n - 1);
        let all_even_cycles = report.violations.iter().all(|v| matches!(v, Violation::EvenCycle { .. }));
        prop_assert!(all_even_cycles);
    }
}

#[test]
fn prisms_of_cubes_are_cubes() {
    let mut a = hypercube_adinkra(1).unwrap();
    for n in 2..=7 {
        a = prism(&a);
        assert!(a.validate().is_clean());
        assert_eq!(a.n_colors(), n);
        let cube = quotient_graph(n, &BinaryCode::trivial(n)).unwrap();
        assert!(color_isomorphism(a.graph(), &cube).is_some());
    }
}

#[test]
fn codes_that_are_not_doubly_even_have_no_signature() {
    let even = BinaryCode::from_rows(4, &["1100"]).unwrap();
    assert!(matches!(Adinkra::from_code(&even), Err(Error::Infeasible(_))));
    let weight6 = BinaryCode::from_rows(6, &["111111"]).unwrap();
    let g = quotient_graph(6, &weight6).unwrap();
    assert_eq!(solve_totally_odd(&g).unwrap(), None);
    let weight4 = BinaryCode::from_rows(6, &["111100"]).unwrap();
    assert!(solve_totally_odd(&quotient_graph(6, &weight4).unwrap()).unwrap().is_some());
}

#[test]
fn catalog_codes_parse_and_round_trip() {
    for row in ::adinkra::analysis::TABLE {
        let c = row.code().unwrap();
        let text = c.to_generator_text();
        let back = BinaryCode::parse_generator_text(&text).unwrap();
        assert_eq!(back, c, "{}", row.code);
    }
    assert!(matches!(standard_code("q7"), Err(Error::UnknownCode(_))));
    let ones = BitVector::ones(8);
    assert!(standard_code("e8").unwrap().contains(&ones).unwrap());
    assert!(!standard_code("d6+t2").unwrap().contains_all_ones());
}

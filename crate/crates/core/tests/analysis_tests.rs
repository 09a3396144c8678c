mod common;

use ::adinkra::adinkra::{hypercube_adinkra, prism, quotient_graph};
use ::adinkra::analysis::{
    catalog_adinkras, catalog_codes, check_corank_lift, check_odd_prime, check_prism, check_profile_structure,
    compute_table, derive_l_profile_from_x, format_table, profiles, run_suite, table_diff, Counterexample, Suite,
    SuiteOptions, TableEntry, TheoremReport,
};
use ::adinkra::codes::{standard_code, BinaryCode};
use ::adinkra::exactmat::unsigned_laplacian;
use ::adinkra::snf::{profile_int, FactorProfile};
use ::adinkra::{Adinkra, Error};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};

fn binomial(n: u32, k: u32) -> u32 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Product of the nonzero invariant factors.
fn torsion_order(p: &FactorProfile<BigInt>) -> BigInt {
    p.diagonal().into_iter().filter(|d| !d.is_zero()).product()
}

#[test]
fn laplacian_profile_follows_from_x_profile() {
    for (c, a) in catalog_adinkras(7).unwrap() {
        let (lp, xp) = profiles(&a).unwrap();
        assert_eq!(derive_l_profile_from_x(&xp, a.n_colors()).unwrap(), lp, "{}", c.name());
    }
    for name in ["e8", "d8", "h8"] {
        let a = Adinkra::from_code(&standard_code(name).unwrap()).unwrap();
        let (lp, xp) = profiles(&a).unwrap();
        assert_eq!(derive_l_profile_from_x(&xp, 8).unwrap(), lp, "{name}");
    }
}

#[test]
fn derivation_rejects_profiles_that_are_not_symmetric() {
    let xp: FactorProfile<BigInt> = "(1,2,3,4)".parse().unwrap();
    assert!(matches!(derive_l_profile_from_x(&xp, 4), Err(Error::InvalidParameter(_))));
    let one: FactorProfile<BigInt> = "(1)".parse().unwrap();
    assert_eq!(derive_l_profile_from_x(&one, 1).unwrap().to_string(), "(1,0)");
}

#[test]
fn signed_laplacian_torsion_is_determinant() {
    // A^2 = N I, so L = N I - A has determinant (N^2 - N)^(#V/2)
    for (c, a) in catalog_adinkras(7).unwrap() {
        let n = a.n_colors() as u64;
        if n < 2 {
            continue;
        }
        let (lp, _) = profiles(&a).unwrap();
        let expected = BigInt::from(n * (n - 1)).pow(a.num_vertices() as u32 / 2);
        assert_eq!(torsion_order(&lp), expected, "{}", c.name());
    }
}

#[test]
fn structure_holds_on_catalog() {
    for (c, a) in catalog_adinkras(7).unwrap() {
        if a.n_colors() < 2 {
            continue;
        }
        let (lp, _) = profiles(&a).unwrap();
        let r = check_profile_structure(&lp, a.n_colors()).unwrap();
        assert!(r.pass, "{}\n{r}", c.name());
    }
    let broken: FactorProfile<BigInt> = "(1^2,3^2,4^2,12^2)".parse().unwrap();
    assert!(!check_profile_structure(&broken, 4).unwrap().pass);
}

#[test]
fn prisms_up_to_ten_colors() {
    let mut bases: Vec<Adinkra> = catalog_adinkras(6).unwrap().into_iter().map(|(_, a)| a).collect();
    let e8 = Adinkra::from_code(&standard_code("e8").unwrap()).unwrap();
    bases.push(e8.clone());
    bases.push(prism(&e8));
    for base in &bases {
        let r = check_prism(base).unwrap();
        assert!(r.pass, "{r}");
    }
    assert_eq!(prism(&prism(&e8)).n_colors(), 10);
}

#[test]
fn cube_critical_group() {
    // matrix tree count of the N-cube: 2^(2^N - N - 1) * prod k^C(N,k)
    for n in 1..=6u32 {
        let g = quotient_graph(n as usize, &BinaryCode::trivial(n as usize)).unwrap();
        let p = profile_int(&unsigned_laplacian(&g)).unwrap();
        let mut trees = BigInt::from(2u8).pow((1u32 << n) - n - 1);
        for k in 1..=n {
            trees *= BigInt::from(k).pow(binomial(n, k));
        }
        assert_eq!(torsion_order(&p), trees, "N={n}");
        assert_eq!(p.multiplicity(&BigInt::zero()), 1);
        let even_nontrivial = p.diagonal().iter().filter(|d| !d.is_zero() && (*d % 2u8).is_zero()).count();
        assert_eq!(even_nontrivial, (1 << (n - 1)) - 1, "N={n}");
    }
}

#[test]
fn corank_lifts_on_catalog() {
    for (c, a) in catalog_adinkras(6).unwrap() {
        if a.n_colors() < 2 {
            continue;
        }
        let r = check_corank_lift(&a).unwrap();
        assert!(r.pass, "{}\n{r}", c.name());
        assert!(!r.instances.is_empty());
    }
}

#[test]
fn odd_prime_rejects_bad_primes() {
    let a = hypercube_adinkra(6).unwrap();
    assert!(check_odd_prime(&a, 3).unwrap().pass);
    for p in [2, 5, 9] {
        assert!(check_odd_prime(&a, p).is_err(), "p={p}");
    }
}

#[test]
fn counterexample_round_trips_and_replays() {
    let code = standard_code("d4").unwrap();
    let a = Adinkra::from_code(&code).unwrap();
    let switch = vec![0, 3, 5];
    let mut r = TheoremReport::new("demo");
    r.check("fine", true, "ok");
    r.record("broken", false, "made up", || {
        Counterexample::default().with_code(&code).with_adinkra(&a).with_switch(&switch, 17)
    });
    r.record("also broken", false, "second", || panic!("only the first failure is bundled"));
    assert!(!r.pass);
    assert_eq!(r.failures().count(), 2);

    let back: TheoremReport = serde_json::from_value(r.to_json()).unwrap();
    assert_eq!(back, r);
    let cx = back.counterexample.unwrap();
    assert_eq!(cx.instance, "broken");
    assert_eq!(cx.seed, Some(17));
    assert_eq!(BinaryCode::parse_generator_text(cx.code.as_deref().unwrap()).unwrap(), code);
    assert_eq!(cx.replay_adinkra().unwrap().unwrap(), a.vertex_switch(&switch).unwrap());
}

#[test]
fn table_subset_serializes_and_diffs() {
    let entries = compute_table(6, 2).unwrap();
    assert!(table_diff(&entries, 6, 2).is_empty());
    let text = serde_json::to_string(&entries).unwrap();
    let back: Vec<TableEntry> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, entries);
    let d6 = entries.iter().find(|e| e.code == "d6").unwrap();
    assert_eq!(d6.profile.to_string(), "(1^8,30^8)");
    assert_eq!(format_table(&entries).lines().count(), entries.len() + 1);
}

#[test]
fn every_suite_passes_on_small_codes() {
    let codes = catalog_codes(6).unwrap();
    let opts = SuiteOptions { trials: 10, ..SuiteOptions::default() };
    for suite in Suite::ALL {
        let reports = run_suite(suite, &codes, opts).unwrap();
        assert!(!reports.is_empty(), "{suite}");
        for r in &reports {
            assert!(r.pass, "{r}");
        }
    }
    let odd = run_suite(Suite::OddPrime, &[standard_code("d6").unwrap()], opts).unwrap();
    assert_eq!(odd.len(), 1);
    assert_eq!(odd[0].theorem, "oddprime d6 p=3");
    assert!("nonsense".parse::<Suite>().is_err());
    assert_eq!("Cayley".parse::<Suite>().unwrap(), Suite::Cayley);
}

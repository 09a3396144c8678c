//! Switching, signature-class, Cayley-graph and corank experiments.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{Counterexample, TheoremReport};
use super::table::profiles;
use super::theorems::{check_profile_structure, derive_l_profile_from_x, prime_factors};
use crate::adinkra::{cayley_graph, color_isomorphism, is_generic, prism, quotient_graph, signature_classes, Adinkra, ColoredGraph, Edge};
use crate::codes::{BinaryCode, Gf2Matrix};
use crate::error::Result;
use crate::exactmat::{block_x, det_int, laplacian_hat, laplacian_matrix, reduce_poly_mod_p, unsigned_laplacian, ZPoly, ZPolyMatrix};
use crate::limits;
use crate::snf::{corank_witness_lift, p_corank, profile_int, snf_fpx, snf_int, x_minus_one_multiplicity, FactorProfile};

pub const DEFAULT_SEED: u64 = 0x00ad_1a4a;

/// Largest graph for which the unsigned Laplacian gets a full Smith form.
const FULL_UNSIGNED_SNF_LIMIT: usize = 128;
/// Largest Adinkra whose Laplacian gets the corank lift.
const LIFT_LIMIT: usize = 64;

/// Random switch sets: each vertex independently with probability 1/2.
pub fn random_switch_sets(num_vertices: usize, trials: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| (0..num_vertices).filter(|_| rng.gen::<bool>()).collect()).collect()
}

/// Vertex switching leaves the Laplacian profile unchanged and acts on `L`
/// by negating the rows and columns of the switched vertices. Also checks
/// that switching a single boson negates a row of `X` and the sign of `det X`.
pub fn check_switching_invariance(a: &Adinkra, trials: usize, seed: u64) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("switching");
    let lap = laplacian_matrix(a);
    let base = profile_int(&lap)?;
    let mut sets = vec![Vec::new()];
    sets.extend(random_switch_sets(a.num_vertices(), trials, seed));
    let outcomes: Vec<(Vec<usize>, bool, String)> = sets
        .into_par_iter()
        .map(|w| -> Result<_> {
            let s = a.vertex_switch(&w)?;
            let ls = laplacian_matrix(&s);
            let mut sign = vec![1i64; a.num_vertices()];
            for &v in &w {
                sign[v] = -1;
            }
            let conj = (0..ls.nrows()).all(|i| (0..ls.ncols()).all(|j| ls[(i, j)] == &lap[(i, j)] * (sign[i] * sign[j])));
            let p = profile_int(&ls)?;
            let pass = conj && p == base;
            let detail = if conj { p.to_string() } else { "L is not S L S".to_string() };
            Ok((w, pass, detail))
        })
        .collect::<Result<_>>()?;
    for (i, (w, pass, detail)) in outcomes.into_iter().enumerate() {
        let name = if i == 0 { "empty switch set".to_string() } else { format!("trial {i} ({} vertices)", w.len()) };
        r.record(name, pass, detail, || Counterexample::default().with_adinkra(a).with_switch(&w, seed));
    }

    if a.n_colors() >= 2 {
        let x = block_x(a)?;
        let s = a.vertex_switch(&[0])?;
        let xs = block_x(&s)?;
        let negated = (0..x.nrows()).all(|i| {
            (0..x.ncols()).all(|j| if i == 0 { xs[(i, j)] == -&x[(i, j)] } else { xs[(i, j)] == x[(i, j)] })
        });
        let (d, ds) = (det_int(&x)?, det_int(&xs)?);
        r.record(
            "single boson switch",
            negated && ds == -&d && !d.is_zero(),
            format!("det X {d} -> {ds}"),
            || Counterexample::default().with_adinkra(a).with_switch(&[0], seed),
        );
    }
    Ok(r)
}

/// Profiles of one representative per switching class of totally odd
/// signatures. All classes are expected to agree; without the all-ones word
/// the profile is forced to `(1^(#V/2), (N^2-N)^(#V/2))`.
pub fn signature_independence_experiment(c: &BinaryCode) -> Result<TheoremReport> {
    let n = c.length();
    let k = c.dimension();
    limits::check(1u128 << k, 256, "number of signature classes")?;
    limits::check(1u128 << (n - k), 1024, "number of vertices")?;
    let a = Adinkra::from_code(c)?;
    let classes = signature_classes(&a)?;
    let mut r = TheoremReport::new("signature-independence");
    let name = c.name();
    r.check(format!("{name}: class count"), classes.len() == 1 << k, format!("{} classes, 2^k = {}", classes.len(), 1 << k));
    let computed: Vec<FactorProfile<BigInt>> =
        classes.par_iter().map(|s| profile_int(&laplacian_matrix(s))).collect::<Result<_>>()?;
    let first = computed[0].clone();
    for (i, (s, p)) in classes.iter().zip(&computed).enumerate() {
        let valid = s.validate().is_clean();
        r.record(
            format!("{name}: class {i}"),
            valid && *p == first,
            if valid { p.to_string() } else { "signature is not totally odd".into() },
            || Counterexample::default().with_code(c).with_adinkra(s),
        );
    }
    if !c.contains_all_ones() {
        let h = a.num_vertices() / 2;
        let forced = FactorProfile::from_entries(vec![(BigInt::one(), h), (BigInt::from(n * n - n), h)]);
        r.record(
            format!("{name}: forced profile without the all-ones word"),
            computed.iter().all(|p| *p == forced),
            format!("expected {forced}"),
            || Counterexample::default().with_code(c).with_adinkra(&a),
        );
    }
    Ok(r)
}

/// The generator matrix `M` with kernel `C`, in reduced echelon form, and the
/// column order that puts it in the form `[I | A]`.
pub fn standard_form(c: &BinaryCode) -> (Gf2Matrix, Vec<usize>) {
    let ech = c.dual().generator_matrix().echelon();
    let r = ech.pivots.len();
    let m = Gf2Matrix::from_rows(c.length(), ech.matrix.rows()[..r].to_vec()).expect("rows have the code length");
    let mut order = ech.pivots.clone();
    order.extend((0..c.length()).filter(|j| !ech.pivots.contains(j)));
    (m, order)
}

fn permute_columns(m: &Gf2Matrix, order: &[usize]) -> Gf2Matrix {
    let mut out = Gf2Matrix::zeros(m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        for (j, &src) in order.iter().enumerate() {
            out.set(i, j, m.get(i, src));
        }
    }
    out
}

fn recolor(g: &ColoredGraph, color_of: &[usize]) -> Result<ColoredGraph> {
    let edges = g.edges().iter().map(|e| Edge { u: e.u, v: e.v, color: color_of[e.color] }).collect();
    ColoredGraph::new(g.n_colors(), g.labels().to_vec(), edges)
}

/// Number of factors divisible by 2 (zeros included) of the unsigned Laplacian.
pub fn unsigned_even_factor_count(g: &ColoredGraph) -> Result<usize> {
    p_corank(&unsigned_laplacian(g), 2)
}

/// Compares the Cayley graph of `[I | A]` with the quotient of the cube by `C`,
/// genericity of `M` with the all-ones word, and the 2-part of the unsigned
/// critical group with its predicted size.
pub fn check_cayley_correspondence(c: &BinaryCode) -> Result<TheoremReport> {
    let n = c.length();
    let rdim = n - c.dimension();
    let name = c.name();
    let mut r = TheoremReport::new("cayley");
    let bundle = || Counterexample::default().with_code(c);

    let (m, order) = standard_form(c);
    let kernel = BinaryCode::new(n, m.kernel())?;
    r.record(format!("{name}: ker M = C"), kernel == *c, format!("{} x {} matrix", m.nrows(), m.ncols()), bundle);

    let std = permute_columns(&m, &order);
    let identity_part = (0..rdim).all(|i| (0..rdim).all(|j| std.get(i, j) == (i == j)));
    r.record(format!("{name}: [I|A] form"), identity_part, format!("column order {order:?}"), bundle);

    // color j of the standard form is color order[j] of the cube
    let cayley = recolor(&cayley_graph(&std)?, &order)?;
    let quotient = quotient_graph(n, c)?;
    let iso = color_isomorphism(&cayley, &quotient);
    r.record(format!("{name}: color isomorphism"), iso.is_some(), format!("{} vertices", quotient.num_vertices()), bundle);

    let generic = is_generic(&std);
    let has_ones = c.contains_all_ones();
    r.record(
        format!("{name}: generic iff all-ones word absent"),
        generic != has_ones,
        format!("generic {generic}, contains 1 {has_ones}"),
        bundle,
    );

    let even = unsigned_even_factor_count(&quotient)?;
    let sylow = even.saturating_sub(1);
    let predicted = (1usize << (rdim - 1)) - 1;
    r.record(
        format!("{name}: Sylow-2 factor count at least 2^(r-1)-1"),
        even >= 1 && sylow >= predicted,
        format!("{sylow} vs {predicted}"),
        bundle,
    );
    if generic {
        r.record(format!("{name}: generic Sylow-2 factor count"), sylow == predicted, format!("{sylow} vs {predicted}"), bundle);
    }
    if quotient.num_vertices() <= FULL_UNSIGNED_SNF_LIMIT {
        let diag = snf_int(&unsigned_laplacian(&quotient))?.diag;
        let two = BigInt::from(2);
        let even_full = diag.iter().filter(|d| d.is_multiple_of(&two)).count();
        r.record(
            format!("{name}: even factors by Smith form"),
            even_full == even,
            format!("{even_full} by Smith form, {even} by 2-rank"),
            bundle,
        );
        if c.dimension() == 0 {
            let nontrivial = diag.iter().filter(|d| !d.is_zero() && !d.is_one()).count();
            r.record(
                format!("{name}: cube critical group has 2^(N-1)-1 factors"),
                nontrivial == predicted,
                format!("{nontrivial}"),
                bundle,
            );
        }
    }
    Ok(r)
}

/// Invariant factors of `X` and `L` for one Adinkra: symmetry of the `X`
/// profile, the first and last factors, the predicted `L` profile, the
/// structure of the `L` profile and `p`-corank counts.
pub fn check_invariant_factors(a: &Adinkra) -> Result<TheoremReport> {
    let n = a.n_colors();
    let nv = a.num_vertices();
    let mut r = TheoremReport::new("invariant-factors");
    let bundle = || Counterexample::default().with_adinkra(a);
    let lap = laplacian_matrix(a);
    let x = block_x(a)?;
    let (lp, xp) = profiles(a)?;
    r.record("profile sizes", lp.len() == nv && xp.len() == nv / 2, format!("{lp} / {xp}"), bundle);

    let xd = xp.diagonal();
    let nb = BigInt::from(n);
    let symmetric = xd.iter().zip(xd.iter().rev()).all(|(u, v)| u * v == nb) || n == 1;
    r.record("X factors pair to N", symmetric, xp.to_string(), bundle);
    r.record(
        "first X factor 1, last N",
        xd.first().is_some_and(One::is_one) && xd.last() == Some(&nb),
        xp.to_string(),
        bundle,
    );
    match derive_l_profile_from_x(&xp, n) {
        Ok(derived) => r.record("L profile from X profile", derived == lp, format!("derived {derived}, computed {lp}"), bundle),
        Err(e) => r.record("L profile from X profile", false, e.to_string(), bundle),
    }
    if n >= 2 {
        let s = check_profile_structure(&lp, n)?;
        r.absorb("", s);
    }
    for p in [2u64, 3, 5, 7] {
        let pb = BigInt::from(p);
        for (label, m, prof) in [("L", &lap, &lp), ("X", &x, &xp)] {
            let count: usize = prof.entries().iter().filter(|(v, _)| v.is_multiple_of(&pb)).map(|e| e.1).sum();
            let corank = p_corank(m, p)?;
            r.record(format!("{label} {p}-corank"), count == corank, format!("{corank}"), bundle);
        }
    }
    Ok(r)
}

/// Prisms have `X` profile `(1^(#V/4), N^(#V/4))` and Laplacian profile
/// `(1^(#V/2), (N(N-1))^(#V/2))`.
pub fn check_prism(base: &Adinkra) -> Result<TheoremReport> {
    let a = prism(base);
    let n = a.n_colors();
    let nv = a.num_vertices();
    let (lp, xp) = profiles(&a)?;
    let x_want = FactorProfile::from_entries(vec![(BigInt::one(), nv / 4), (BigInt::from(n), nv / 4)]);
    let l_want = FactorProfile::from_entries(vec![(BigInt::one(), nv / 2), (BigInt::from(n * (n - 1)), nv / 2)]);
    let mut r = TheoremReport::new("prism");
    let bundle = || Counterexample::default().with_adinkra(&a);
    r.record(format!("N={n} #V={nv}: X profile"), xp == x_want, xp.to_string(), bundle);
    r.record(format!("N={n} #V={nv}: L profile"), lp == l_want, lp.to_string(), bundle);
    Ok(r)
}

/// For each prime `p | N(N-1)`, the lift `M̂` of `L` with `M̂(1) = L` has
/// `(x-1)`-multiplicity of `det M̂ mod p` equal to the `p`-corank of `L`.
pub fn check_corank_lift(a: &Adinkra) -> Result<TheoremReport> {
    let n = a.n_colors();
    let mut r = TheoremReport::new("corank-lift");
    let lap = laplacian_matrix(a);
    for p in prime_factors(n * (n - 1)) {
        let p = p as u64;
        let lift = corank_witness_lift(&lap, p)?;
        let back = lift.map(|f| f.eval(&BigInt::one()));
        let poly = snf_fpx(&reduce_poly_mod_p(&lift, p)?, p)?;
        let mult = x_minus_one_multiplicity(&poly, p)?;
        let corank = p_corank(&lap, p)?;
        r.record(
            format!("p={p}"),
            back == lap && mult == corank,
            format!("multiplicity {mult}, corank {corank}"),
            || Counterexample::default().with_adinkra(a),
        );
    }
    Ok(r)
}

/// Eliminates with constant `±1` pivots only and returns the size of the
/// block left over. Zero means `m` reduces to a diagonal of units over `Z[x]`
/// plus nothing else; this is recorded as data, not as a verdict.
pub fn unit_pivot_residual(m: &ZPolyMatrix) -> usize {
    let mut a: Vec<Vec<ZPoly>> = m.rows_iter().map(<[ZPoly]>::to_vec).collect();
    let is_unit = |f: &ZPoly| f.degree() == Some(0) && f.coeff(0).abs().is_one();
    loop {
        let size = a.len();
        let width = a.first().map_or(0, Vec::len);
        if size == 0 || width == 0 {
            return 0;
        }
        let Some((pi, pj)) = (0..size).flat_map(|i| (0..width).map(move |j| (i, j))).find(|&(i, j)| is_unit(&a[i][j])) else {
            return size.min(width);
        };
        let pivot_row = a.remove(pi);
        let u = pivot_row[pj].coeff(0);
        for row in a.iter_mut() {
            if row[pj].is_zero() {
                continue;
            }
            let q = row[pj].scale(&u);
            for (dst, src) in row.iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst = &*dst - &(&q * src);
                }
            }
        }
        for row in a.iter_mut() {
            row.remove(pj);
        }
    }
}

/// Signature independence, corank lifts of every class and the exploratory
/// unit-pivot reduction of `L̂`.
pub fn conjecture_suite(c: &BinaryCode) -> Result<TheoremReport> {
    let mut r = signature_independence_experiment(c)?;
    r.theorem = "conjecture".into();
    let a = Adinkra::from_code(c)?;
    if a.n_colors() >= 2 && a.num_vertices() <= LIFT_LIMIT {
        for (i, s) in signature_classes(&a)?.iter().enumerate().take(4) {
            r.absorb(&format!("{}: class {i} lift ", c.name()), check_corank_lift(s)?);
        }
    }
    if a.num_vertices() <= LIFT_LIMIT {
        let residual = unit_pivot_residual(&laplacian_hat(&a));
        r.check(format!("{}: L̂ unit-pivot residual (exploratory)", c.name()), true, format!("{residual}"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adinkra::hypercube_adinkra;
    use crate::codes::standard_code;

    fn code(name: &str) -> BinaryCode {
        standard_code(name).unwrap()
    }

    #[test]
    fn switch_sets_are_reproducible() {
        assert_eq!(random_switch_sets(16, 5, 7), random_switch_sets(16, 5, 7));
        assert_ne!(random_switch_sets(16, 5, 7), random_switch_sets(16, 5, 8));
    }

    #[test]
    fn switching_on_d4() {
        let a = Adinkra::from_code(&code("d4")).unwrap();
        let r = check_switching_invariance(&a, 10, 1).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.instances.len(), 12);
    }

    #[test]
    fn classes_of_d4_and_d4t() {
        let r = signature_independence_experiment(&code("d4")).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.instances.iter().any(|i| i.detail == "(1^2,2^2,6^2,12^2)"));
        let r = signature_independence_experiment(&code("d4+t")).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.instances.iter().any(|i| i.detail == "(1^8,20^8)"));
    }

    #[test]
    fn cayley_for_small_codes() {
        for name in ["t", "t3", "d4", "d4+t", "e7"] {
            let r = check_cayley_correspondence(&code(name)).unwrap();
            assert!(r.pass, "{r}");
        }
        let (m, order) = standard_form(&code("d4+t"));
        assert_eq!(m.nrows(), 4);
        assert_eq!(order.len(), 5);
    }

    #[test]
    fn invariant_factors_and_prisms() {
        for name in ["t", "t2", "d4", "e8"] {
            let a = Adinkra::from_code(&code(name)).unwrap();
            let r = check_invariant_factors(&a).unwrap();
            assert!(r.pass, "{name}: {r}");
        }
        let r = check_prism(&Adinkra::from_code(&code("d4")).unwrap()).unwrap();
        assert!(r.pass, "{r}");
        let r = check_prism(&hypercube_adinkra(1).unwrap()).unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn conjecture_on_d4() {
        let r = conjecture_suite(&code("d4")).unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn residual_counts_stuck_block() {
        let m = ZPolyMatrix::from_int(&crate::exactmat::IntMatrix::from_i64(2, 2, &[1, 2, 3, 4]).unwrap());
        // 1 is a unit pivot; what is left is -2, not a unit
        assert_eq!(unit_pivot_residual(&m), 1);
    }
}

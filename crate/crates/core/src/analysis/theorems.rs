//! Checks of the structural statements about Adinkra matrices and their
//! invariant factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::report::{Counterexample, TheoremReport};
use crate::adinkra::Adinkra;
use crate::error::{Error, Result};
use crate::exactmat::{
    adjacency_matrix, block_x, det_int, det_laplacian_hat, laplacian_hat, laplacian_matrix, matrix_identity_check,
    reduce_poly_mod_p, x_hat, Fp, ZPoly,
};
use crate::snf::{p_corank, snf_fpx, snf_int, x_minus_one_multiplicity, FactorProfile};

pub(crate) fn is_power_of_two(v: &BigInt) -> bool {
    v.is_positive() && (v & (v - BigInt::one())).is_zero()
}

/// The Laplacian profile predicted from an `X` profile: keep the first half,
/// multiply the second half by `N - 1`, double every multiplicity. One color
/// is the special case `(1) -> (1, 0)`.
pub fn derive_l_profile_from_x(xp: &FactorProfile<BigInt>, n: usize) -> Result<FactorProfile<BigInt>> {
    let x = xp.diagonal();
    let nb = BigInt::from(n);
    if n == 1 {
        if x.len() == 1 && x[0].is_one() {
            return Ok(FactorProfile::from_i64(&[(1, 1), (0, 1)]));
        }
        return Err(Error::InvalidParameter(format!("{xp} is not the profile of a one-color X")));
    }
    let m = x.len();
    if m == 0 || m % 2 == 1 {
        return Err(Error::InvalidParameter(format!("{xp} has odd length {m}")));
    }
    for i in 0..m / 2 {
        if &x[i] * &x[m - 1 - i] != nb {
            return Err(Error::InvalidParameter(format!(
                "{xp} is not symmetric: x_{} * x_{} = {} != {n}",
                i + 1,
                m - i,
                &x[i] * &x[m - 1 - i]
            )));
        }
    }
    let nm1 = BigInt::from(n - 1);
    let mut out = Vec::with_capacity(2 * m);
    for (i, v) in x.iter().enumerate() {
        let w = if i < m / 2 { v.clone() } else { v * &nm1 };
        out.push(w.clone());
        out.push(w);
    }
    Ok(FactorProfile::from_diagonal(&out))
}

/// Structure of a Laplacian profile of an `N`-color Adinkra, `N >= 2`.
pub fn check_profile_structure(p: &FactorProfile<BigInt>, n: usize) -> Result<TheoremReport> {
    if n < 2 {
        return Err(Error::InvalidParameter("profile structure needs N >= 2".into()));
    }
    let d = p.diagonal();
    let len = d.len();
    if len < 4 || len % 2 == 1 {
        return Err(Error::InvalidParameter(format!("{p} has {len} factors")));
    }
    let h = len / 2;
    let nb = BigInt::from(n);
    let nn1 = BigInt::from(n * (n - 1));
    let mut r = TheoremReport::new("profile-structure");
    let name = format!("{p} N={n}");

    let bad_first = d[..h].iter().find(|v| !is_power_of_two(v) || !nb.is_multiple_of(v));
    r.check(
        format!("{name}: first half powers of 2 dividing N"),
        bad_first.is_none(),
        bad_first.map_or("ok".into(), |v| format!("{v} fails")),
    );
    let bad_second = d[h..].iter().find(|v| v.is_zero() || !nn1.is_multiple_of(v) || !is_power_of_two(&(&nn1 / *v)));
    r.check(
        format!("{name}: second half N(N-1)/2^j"),
        bad_second.is_none(),
        bad_second.map_or("ok".into(), |v| format!("{v} fails")),
    );
    r.check(format!("{name}: first two equal 1"), d[0].is_one() && d[1].is_one(), format!("{}, {}", d[0], d[1]));
    r.check(
        format!("{name}: last two equal N(N-1)"),
        d[len - 1] == nn1 && d[len - 2] == nn1,
        format!("{}, {}", d[len - 2], d[len - 1]),
    );
    let odd_last = d[h..].iter().find(|v| v.is_odd());
    r.check(format!("{name}: last half even"), odd_last.is_none(), odd_last.map_or("ok".into(), |v| format!("{v} is odd")));
    if !n.is_multiple_of(4) {
        let forced = FactorProfile::from_entries(vec![(BigInt::one(), h), (nn1.clone(), h)]);
        r.check(format!("{name}: forced when 4 does not divide N"), *p == forced, format!("expected {forced}"));
    }
    // smallest m with 4^m not dividing N bounds the first half by 2^(m-1)
    let mut m = 1u32;
    while n.is_multiple_of(4usize.pow(m)) {
        m += 1;
    }
    let bound = BigInt::from(1u64 << (m - 1));
    let over = d[..h].iter().find(|v| **v > bound);
    r.check(
        format!("{name}: first half at most 2^{}", m - 1),
        over.is_none(),
        over.map_or("ok".into(), |v| format!("{v} > {bound}")),
    );
    for q in prime_factors(n * (n - 1)) {
        let count = d.iter().filter(|v| v.is_multiple_of(&BigInt::from(q))).count();
        r.check(format!("{name}: at least half divisible by {q}"), count >= h, format!("{count} of {len}"));
    }
    Ok(r)
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Checks that an odd prime `p | N` divides none of the first `#V/4` factors
/// of `X` or the first `#V/2` of `L`, by integer SNF, by `p`-corank and by the
/// `(x - 1)` content of the Smith form of `X̃`, `L̃` over `Fp[x]`.
pub fn check_odd_prime(a: &Adinkra, p: u64) -> Result<TheoremReport> {
    let n = a.n_colors();
    Fp::new(p)?;
    if p == 2 || !(n as u64).is_multiple_of(p) {
        return Err(Error::InvalidParameter(format!("{p} must be an odd prime dividing N = {n}")));
    }
    let nv = a.num_vertices();
    let pb = BigInt::from(p);
    let mut r = TheoremReport::new("odd-prime");
    let bundle = || Counterexample::default().with_adinkra(a);

    for (label, m, mx, expected) in [
        ("X", block_x(a)?, x_hat(a)?, nv / 4),
        ("L", laplacian_matrix(a), laplacian_hat(a), nv / 2),
    ] {
        let diag = snf_int(&m)?.diag;
        let route_snf = diag.iter().filter(|d| d.is_multiple_of(&pb)).count();
        let early = diag[..expected].iter().position(|d| d.is_multiple_of(&pb));
        r.record(
            format!("{label}: first {expected} factors prime to {p}"),
            early.is_none(),
            early.map_or("ok".into(), |i| format!("factor {} = {} is divisible", i + 1, diag[i])),
            bundle,
        );
        let route_corank = p_corank(&m, p)?;
        let poly = snf_fpx(&reduce_poly_mod_p(&mx, p)?, p)?;
        let multiplicity = x_minus_one_multiplicity(&poly, p)?;
        let f = Fp::new(p)?;
        let route_poly = poly.diag.iter().filter(|d| d.root_multiplicity(&f, 1).unwrap_or(usize::MAX) > 0).count();
        r.record(
            format!("{label}: three routes agree"),
            route_snf == route_corank && route_corank == route_poly,
            format!("snf {route_snf}, corank {route_corank}, Fp[x] {route_poly}"),
            bundle,
        );
        r.record(
            format!("{label}: (x-1)-multiplicity over F{p}[x] is {expected}"),
            multiplicity == expected,
            format!("found {multiplicity}"),
            bundle,
        );
    }
    Ok(r)
}

/// Spectral and determinant identities: `A^2 = N I`, the `L` and `X` identities,
/// the colored identities, traces, `det L`, `det A`, `det X^2` and `det L̂`.
pub fn check_eigen_suite(a: &Adinkra) -> Result<TheoremReport> {
    let n = a.n_colors();
    let nv = a.num_vertices();
    let h = (nv / 2) as u32;
    let nb = BigInt::from(n);
    let mut r = TheoremReport::new("eigen");
    let bundle = || Counterexample::default().with_adinkra(a);

    let ids = matrix_identity_check(a)?;
    for c in &ids.checks {
        let detail = c.failure.as_ref().map_or("ok".into(), |(i, j, m)| format!("({i}, {j}): {m}"));
        r.record(c.name.clone(), c.pass, detail, bundle);
    }

    let adj = adjacency_matrix(a);
    let lap = laplacian_matrix(a);
    let trace = |m: &crate::exactmat::IntMatrix| -> BigInt { (0..m.nrows()).map(|i| m[(i, i)].clone()).sum() };
    let ta = trace(&adj);
    r.record("trace A = 0", ta.is_zero(), ta.to_string(), bundle);
    let tl = trace(&lap);
    r.record("trace L = N #V", tl == BigInt::from(n * nv), tl.to_string(), bundle);

    // walks of length 2: positive minus negative walks is the entry of A^2
    if nv <= 256 {
        let a2 = adj.mul(&adj, &crate::exactmat::Integers)?;
        let bad = (0..nv)
            .flat_map(|u| (0..nv).map(move |v| (u, v)))
            .find(|&(u, v)| BigInt::from(a.walk2_balance(u, v)) != a2[(u, v)]);
        r.record(
            "signed 2-walk counts equal A^2",
            bad.is_none(),
            bad.map_or("ok".into(), |(u, v)| format!("({u}, {v})")),
            bundle,
        );
    }

    let det_l = det_int(&lap)?;
    let want_l = BigInt::from(n * (n - 1)).pow(h);
    r.record("det L = (N(N-1))^(#V/2)", det_l == want_l, det_l.to_string(), bundle);

    let det_a = det_int(&adj)?;
    let want_a = (-nb.clone()).pow(h);
    r.record("det A = (-N)^(#V/2)", det_a == want_a, det_a.to_string(), bundle);

    if n >= 2 {
        let det_x = det_int(&block_x(a)?)?;
        let sq = &det_x * &det_x;
        r.record("det X^2 = N^(#V/2)", sq == nb.pow(h), det_x.to_string(), bundle);
    }

    let det_lhat = det_laplacian_hat(a)?;
    let want_lhat = ZPoly::linear(2 * (n as i64 - 1), (n as i64 - 1) * (n as i64 - 2)).pow(h);
    r.record("det L̂ = ((N-1)(2x+N-2))^(#V/2)", det_lhat == want_lhat, det_lhat.to_string(), bundle);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adinkra::hypercube_adinkra;
    use crate::codes::standard_code;

    fn prof(s: &str) -> FactorProfile<BigInt> {
        s.parse().unwrap()
    }

    #[test]
    fn derive_examples() {
        assert_eq!(derive_l_profile_from_x(&prof("(1^4,4^4)"), 4).unwrap(), prof("(1^8,12^8)"));
        assert_eq!(derive_l_profile_from_x(&prof("(1,2^2,4)"), 4).unwrap(), prof("(1^2,2^2,6^2,12^2)"));
        assert_eq!(derive_l_profile_from_x(&prof("(1)"), 1).unwrap(), prof("(1,0)"));
        assert!(derive_l_profile_from_x(&prof("(1,2,2,2)"), 4).is_err());
        assert!(derive_l_profile_from_x(&prof("(1,2,4)"), 4).is_err());
    }

    #[test]
    fn structure_examples() {
        assert!(check_profile_structure(&prof("(1^2,2^6,28^6,56^2)"), 8).unwrap().pass);
        assert!(check_profile_structure(&prof("(1^8,30^8)"), 6).unwrap().pass);
        let bad = check_profile_structure(&prof("(1,3,30^2)"), 6).unwrap();
        assert!(!bad.pass);
        assert!(!bad.instances[0].pass);
        assert!(check_profile_structure(&prof("(1,0)"), 1).is_err());
    }

    #[test]
    fn primes() {
        assert_eq!(prime_factors(56), vec![2, 7]);
        assert_eq!(prime_factors(30), vec![2, 3, 5]);
        assert!(is_power_of_two(&BigInt::from(64)));
        assert!(!is_power_of_two(&BigInt::from(0)));
        assert!(!is_power_of_two(&BigInt::from(12)));
    }

    #[test]
    fn odd_prime_on_d6() {
        let a = Adinkra::from_code(&standard_code("d6").unwrap()).unwrap();
        let r = check_odd_prime(&a, 3).unwrap();
        assert!(r.pass, "{r}");
        assert!(check_odd_prime(&a, 5).is_err());
        assert!(check_odd_prime(&a, 2).is_err());
    }

    #[test]
    fn eigen_suite() {
        let r = check_eigen_suite(&hypercube_adinkra(1).unwrap()).unwrap();
        assert!(r.pass, "{r}");
        let r = check_eigen_suite(&Adinkra::from_code(&standard_code("d4").unwrap()).unwrap()).unwrap();
        assert!(r.pass, "{r}");
    }
}

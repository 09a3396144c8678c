use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::builders::{adjacency_matrix, block_x, colored_adjacency, colored_block_x, laplacian_matrix, specialize};
use super::poly::MultiPoly;
use super::ring::{Integers, MultiZ};
use super::{Assignment, IntMatrix, Specialized};
use crate::adinkra::Adinkra;
use crate::error::Result;

/// Above this many vertices the colored identities are checked at random points.
const SYMBOLIC_LIMIT: usize = 64;
const RANDOM_POINTS: usize = 3;
const POINT_SEED: u64 = 0x0005_eed0_fad1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    /// First offending entry `(row, col)` and a description.
    pub failure: Option<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "  ok   {}", c.name)?,
                Some((i, j, msg)) => writeln!(f, "  FAIL {} at ({i}, {j}): {msg}", c.name)?,
            }
        }
        Ok(())
    }
}

fn scalar_check(name: &str, m: &IntMatrix, c: &BigInt) -> IdentityCheck {
    let failure = m.first_deviation_from_scalar(&Integers, c).map(|(i, j)| {
        let expected = if i == j { c.clone() } else { BigInt::from(0) };
        (i, j, format!("found {}, expected {expected}", m[(i, j)]))
    });
    IdentityCheck { name: name.into(), pass: failure.is_none(), failure }
}

fn multi_scalar_check(name: &str, m: &super::MultiPolyMatrix, nvars: usize, c: &MultiPoly) -> IdentityCheck {
    let failure = m
        .first_deviation_from_scalar(&MultiZ { nvars }, c)
        .map(|(i, j)| (i, j, format!("found {}", m[(i, j)])));
    IdentityCheck { name: name.into(), pass: failure.is_none(), failure }
}

/// Verifies `A^2 = N I`, `L^2 = 2N L - N(N-1) I`, `X X^T = X^T X = N I`,
/// `Â^2 = rho I` and `X̂^T X̂ = rho I` by exact multiplication.
pub fn matrix_identity_check(a: &Adinkra) -> Result<IdentityReport> {
    let z = Integers;
    let n = a.n_colors() as i64;
    let nb = BigInt::from(n);
    let mut checks = Vec::new();

    let adj = adjacency_matrix(a);
    checks.push(scalar_check("A^2 = N I", &adj.mul(&adj, &z)?, &nb));

    let lap = laplacian_matrix(a);
    let lhs = lap.mul(&lap, &z)?.sub(&lap.scale(&z, &BigInt::from(2 * n)), &z)?;
    checks.push(scalar_check("L^2 - 2N L = -N(N-1) I", &lhs, &BigInt::from(-n * (n - 1))));

    let x = block_x(a)?;
    let xt = x.transpose();
    checks.push(scalar_check("X X^T = N I", &x.mul(&xt, &z)?, &nb));
    checks.push(scalar_check("X^T X = N I", &xt.mul(&x, &z)?, &nb));

    let nvars = a.n_colors();
    let ahat = colored_adjacency(a);
    let xhat = colored_block_x(a)?;
    let rho = MultiPoly::rho(nvars);
    if a.num_vertices() <= SYMBOLIC_LIMIT {
        let ring = MultiZ { nvars };
        checks.push(multi_scalar_check("Â^2 = rho I", &ahat.mul(&ahat, &ring)?, nvars, &rho));
        checks.push(multi_scalar_check("X̂^T X̂ = rho I", &xhat.transpose().mul(&xhat, &ring)?, nvars, &rho));
    } else {
        // Both sides have degree 2; agreement at random points from a large
        // range leaves a vanishing chance of a false pass.
        let mut rng = ChaCha8Rng::seed_from_u64(POINT_SEED);
        for round in 0..RANDOM_POINTS {
            let point: Vec<BigInt> = (0..nvars).map(|_| BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000))).collect();
            let assignment: Vec<Assignment> = point.iter().cloned().map(Assignment::Value).collect();
            let r = rho.eval(&point);
            let Specialized::Int(ah) = specialize(&ahat, nvars, &assignment)? else { unreachable!() };
            let Specialized::Int(xh) = specialize(&xhat, nvars, &assignment)? else { unreachable!() };
            checks.push(scalar_check(&format!("Â^2 = rho I at point {round}"), &ah.mul(&ah, &z)?, &r));
            checks.push(scalar_check(&format!("X̂^T X̂ = rho I at point {round}"), &xh.transpose().mul(&xh, &z)?, &r));
        }
    }
    Ok(IdentityReport { checks })
}

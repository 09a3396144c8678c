use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::experiments::{
    check_cayley_correspondence, check_invariant_factors, check_switching_invariance, conjecture_suite, DEFAULT_SEED,
};
use super::report::TheoremReport;
use super::theorems::{check_eigen_suite, check_odd_prime, prime_factors};
use crate::adinkra::Adinkra;
use crate::codes::BinaryCode;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Eigen,
    InvFactors,
    OddPrime,
    Switching,
    Cayley,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Eigen, Suite::InvFactors, Suite::OddPrime, Suite::Switching, Suite::Cayley, Suite::Conjecture];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eigen => "eigen",
            Suite::InvFactors => "invfactors",
            Suite::OddPrime => "oddprime",
            Suite::Switching => "switching",
            Suite::Cayley => "cayley",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { trials: 100, seed: DEFAULT_SEED }
    }
}

fn named(mut r: TheoremReport, suite: Suite, code: &BinaryCode) -> TheoremReport {
    r.theorem = format!("{suite} {}", code.name());
    r
}

/// Runs a suite on each code. Codes run in parallel; reports come back in
/// the order of `codes`.
pub fn run_suite(suite: Suite, codes: &[BinaryCode], opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let per_code: Vec<Vec<TheoremReport>> = codes
        .par_iter()
        .map(|c| -> Result<Vec<TheoremReport>> {
            let reports = match suite {
                Suite::Eigen => vec![check_eigen_suite(&Adinkra::from_code(c)?)?],
                Suite::InvFactors => vec![check_invariant_factors(&Adinkra::from_code(c)?)?],
                Suite::OddPrime => {
                    let a = Adinkra::from_code(c)?;
                    let mut out = Vec::new();
                    for p in prime_factors(c.length()).into_iter().filter(|&p| p != 2) {
                        let mut r = check_odd_prime(&a, p as u64)?;
                        r.theorem = format!("{suite} {} p={p}", c.name());
                        out.push(r);
                    }
                    return Ok(out);
                }
                Suite::Switching => vec![check_switching_invariance(&Adinkra::from_code(c)?, opts.trials, opts.seed)?],
                Suite::Cayley => vec![check_cayley_correspondence(c)?],
                Suite::Conjecture => vec![conjecture_suite(c)?],
            };
            Ok(reports.into_iter().map(|r| named(r, suite, c)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_code.into_iter().flatten().collect())
}

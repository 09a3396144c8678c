//! Resource guards for the exhaustive and dense computations.
//!
//! Setting `ADINKRA_GUARD_OVERRIDE` to anything other than `0` or the empty
//! string lifts every guard.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const MAX_CUBE_DIM: usize = 14;
pub const MAX_QUOTIENT_LOG2: usize = 20;
pub const MAX_ENUMERATION_DIM: usize = 24;
pub const MAX_CLASS_DIM: usize = 8;
pub const MAX_MINOR_COUNT: u128 = 1_000_000;
pub const MAX_TABLE_N: usize = 10;

pub fn guards_lifted() -> bool {
    static LIFTED: OnceLock<bool> = OnceLock::new();
    *LIFTED.get_or_init(|| {
        std::env::var("ADINKRA_GUARD_OVERRIDE")
            .map(|v| !v.is_empty() && v != "0")
            .unwrap_or(false)
    })
}

pub fn check(value: u128, limit: u128, what: &str) -> Result<()> {
    if value > limit && !guards_lifted() {
        return Err(Error::Guard(format!("{what} = {value} exceeds {limit}")));
    }
    Ok(())
}

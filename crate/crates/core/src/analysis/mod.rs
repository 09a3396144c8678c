//! Theorem checks, the invariant-factor table and experiments over the code catalog.

pub mod catalog;
pub mod experiments;
pub mod report;
pub mod suites;
pub mod table;
pub mod theorems;

pub use catalog::{catalog_adinkras, catalog_codes, catalog_rows, CatalogRow, TABLE};
pub use experiments::{
    check_cayley_correspondence, check_corank_lift, check_invariant_factors, check_prism, check_switching_invariance,
    conjecture_suite, random_switch_sets, signature_independence_experiment, standard_form, unit_pivot_residual,
    unsigned_even_factor_count, DEFAULT_SEED,
};
pub use report::{Counterexample, InstanceResult, TheoremReport};
pub use suites::{run_suite, Suite, SuiteOptions};
pub use table::{compute_table, format_table, profiles, reproduce_table, table_diff, TableEntry};
pub use theorems::{check_eigen_suite, check_odd_prime, check_profile_structure, derive_l_profile_from_x};

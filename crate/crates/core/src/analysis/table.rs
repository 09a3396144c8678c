use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::{catalog_rows, CatalogRow};
use crate::adinkra::{signature_classes, Adinkra};
use crate::error::{Error, Result};
use crate::exactmat::{block_x, laplacian_matrix};
use crate::snf::{profile_int, FactorProfile};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub n_colors: usize,
    pub dimension: usize,
    pub code: String,
    /// Index into `signature_classes`; always 0 for codes without the all-ones word.
    pub signature_class: usize,
    pub profile: FactorProfile<BigInt>,
    pub x_profile: FactorProfile<BigInt>,
    pub seconds: f64,
}

/// Laplacian and `X` profiles of one Adinkra.
pub fn profiles(a: &Adinkra) -> Result<(FactorProfile<BigInt>, FactorProfile<BigInt>)> {
    Ok((profile_int(&laplacian_matrix(a))?, profile_int(&block_x(a)?)?))
}

/// The signatures covered for a row: every switching class when the code
/// contains the all-ones word, otherwise the single class.
fn row_jobs(row: CatalogRow) -> Result<Vec<(CatalogRow, usize, Adinkra)>> {
    let code = row.code()?;
    let a = Adinkra::from_code(&code)?;
    let classes = if code.contains_all_ones() { signature_classes(&a)? } else { vec![a] };
    Ok(classes.into_iter().enumerate().map(|(i, a)| (row, i, a)).collect())
}

/// Computes every table row with `N <= max_n`, `k <= max_k`. Rows run in
/// parallel on the current rayon pool; output order is table order.
pub fn compute_table(max_n: usize, max_k: usize) -> Result<Vec<TableEntry>> {
    let jobs: Vec<_> = catalog_rows(max_n, max_k)
        .into_par_iter()
        .map(row_jobs)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    jobs.into_par_iter()
        .map(|(row, class, a)| {
            let start = Instant::now();
            let (profile, x_profile) = profiles(&a)?;
            Ok(TableEntry {
                n_colors: row.n,
                dimension: row.k,
                code: row.code.to_string(),
                signature_class: class,
                profile,
                x_profile,
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

/// One line per disagreement with the published table.
pub fn table_diff(entries: &[TableEntry], max_n: usize, max_k: usize) -> Vec<String> {
    let mut diff = Vec::new();
    for row in catalog_rows(max_n, max_k) {
        let expected = row.expected_profile();
        let found: Vec<&TableEntry> = entries.iter().filter(|e| e.code == row.code).collect();
        if found.is_empty() {
            diff.push(format!("- N={} k={} {}: {} (missing)", row.n, row.k, row.code, row.profile));
        }
        for e in found {
            if e.profile != expected {
                diff.push(format!(
                    "- N={} k={} {} class {}: expected {}\n+ N={} k={} {} class {}: computed {}",
                    row.n, row.k, row.code, e.signature_class, expected, row.n, row.k, row.code, e.signature_class, e.profile
                ));
            }
        }
    }
    diff
}

/// Computes the table and compares it with the published profiles.
pub fn reproduce_table(max_n: usize, max_k: usize) -> Result<Vec<TableEntry>> {
    let entries = compute_table(max_n, max_k)?;
    let diff = table_diff(&entries, max_n, max_k);
    if !diff.is_empty() {
        return Err(Error::Mismatch(diff.join("\n")));
    }
    Ok(entries)
}

/// Aligned text, one line per entry.
pub fn format_table(entries: &[TableEntry]) -> String {
    let code_w = entries.iter().map(|e| e.code.len()).max().unwrap_or(4).max(4);
    let prof_w = entries.iter().map(|e| e.profile.to_string().len()).max().unwrap_or(9).max(9);
    let mut out = String::new();
    let _ = writeln!(out, "{:>2} {:>2}  {:<code_w$}  {:>5}  {:<prof_w$}  X profile", "N", "k", "code", "class", "L profile");
    for e in entries {
        let _ = writeln!(
            out,
            "{:>2} {:>2}  {:<code_w$}  {:>5}  {:<prof_w$}  {}",
            e.n_colors,
            e.dimension,
            e.code,
            e.signature_class,
            e.profile.to_string(),
            e.x_profile
        );
    }
    out
}

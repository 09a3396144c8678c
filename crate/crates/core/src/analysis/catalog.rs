//! The named doubly even codes with `N <= 8`, `k <= 4` and their published
//! Laplacian invariant factors.

use num_bigint::BigInt;

use crate::adinkra::Adinkra;
use crate::codes::{standard_code, BinaryCode};
use crate::error::Result;
use crate::snf::FactorProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogRow {
    pub n: usize,
    pub k: usize,
    pub code: &'static str,
    pub profile: &'static str,
}

pub const TABLE: [CatalogRow; 22] = [
    CatalogRow { n: 1, k: 0, code: "t", profile: "(1,0)" },
    CatalogRow { n: 2, k: 0, code: "t2", profile: "(1^2,2^2)" },
    CatalogRow { n: 3, k: 0, code: "t3", profile: "(1^4,6^4)" },
    CatalogRow { n: 4, k: 0, code: "t4", profile: "(1^8,12^8)" },
    CatalogRow { n: 4, k: 1, code: "d4", profile: "(1^2,2^2,6^2,12^2)" },
    CatalogRow { n: 5, k: 0, code: "t5", profile: "(1^16,20^16)" },
    CatalogRow { n: 5, k: 1, code: "d4+t", profile: "(1^8,20^8)" },
    CatalogRow { n: 6, k: 0, code: "t6", profile: "(1^32,30^32)" },
    CatalogRow { n: 6, k: 1, code: "d4+t2", profile: "(1^16,30^16)" },
    CatalogRow { n: 6, k: 2, code: "d6", profile: "(1^8,30^8)" },
    CatalogRow { n: 7, k: 0, code: "t7", profile: "(1^64,42^64)" },
    CatalogRow { n: 7, k: 1, code: "d4+t3", profile: "(1^32,42^32)" },
    CatalogRow { n: 7, k: 2, code: "d6+t", profile: "(1^16,42^16)" },
    CatalogRow { n: 7, k: 3, code: "e7", profile: "(1^8,42^8)" },
    CatalogRow { n: 8, k: 0, code: "t8", profile: "(1^128,56^128)" },
    CatalogRow { n: 8, k: 1, code: "d4+t4", profile: "(1^64,56^64)" },
    CatalogRow { n: 8, k: 2, code: "d6+t2", profile: "(1^32,56^32)" },
    CatalogRow { n: 8, k: 3, code: "e7+t", profile: "(1^16,56^16)" },
    CatalogRow { n: 8, k: 1, code: "h8", profile: "(1^56,2^8,28^8,56^56)" },
    CatalogRow { n: 8, k: 2, code: "d4+d4", profile: "(1^24,2^8,28^8,56^24)" },
    CatalogRow { n: 8, k: 3, code: "d8", profile: "(1^8,2^8,28^8,56^8)" },
    CatalogRow { n: 8, k: 4, code: "e8", profile: "(1^2,2^6,28^6,56^2)" },
];

impl CatalogRow {
    pub fn code(&self) -> Result<BinaryCode> {
        standard_code(self.code)
    }

    pub fn expected_profile(&self) -> FactorProfile<BigInt> {
        self.profile.parse().expect("table profiles are well formed")
    }
}

/// Table rows with `N <= max_n` and `k <= max_k`, in table order.
pub fn catalog_rows(max_n: usize, max_k: usize) -> Vec<CatalogRow> {
    TABLE.iter().copied().filter(|r| r.n <= max_n && r.k <= max_k).collect()
}

pub fn catalog_codes(max_n: usize) -> Result<Vec<BinaryCode>> {
    catalog_rows(max_n, usize::MAX).iter().map(CatalogRow::code).collect()
}

/// The Adinkra of each catalog code, with its first totally odd signature.
pub fn catalog_adinkras(max_n: usize) -> Result<Vec<(BinaryCode, Adinkra)>> {
    catalog_codes(max_n)?
        .into_iter()
        .map(|c| {
            let a = Adinkra::from_code(&c)?;
            Ok((c, a))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_consistent() {
        for row in TABLE {
            let c = row.code().unwrap();
            assert_eq!(c.length(), row.n, "{}", row.code);
            assert_eq!(c.dimension(), row.k, "{}", row.code);
            assert!(c.is_doubly_even().unwrap());
            assert_eq!(row.expected_profile().len(), 1 << (row.n - row.k), "{}", row.code);
        }
        assert_eq!(catalog_rows(4, 4).len(), 5);
        assert_eq!(catalog_rows(8, 0).len(), 8);
    }
}

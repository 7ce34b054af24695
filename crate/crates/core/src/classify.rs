//! Closed-form answers from divisibility by 7 and 9.
//!
//! Only the primes 7 and 3 restrict which residues are sums of two cubes:
//! modulo 7 the cubes are `{0, 1, 6}`, modulo 9 they are `{0, 1, 8}`, and
//! every other prime power admits every residue. Density and membership
//! therefore depend only on `N mod 7`, `N mod 9` and the residue's class
//! modulo 7, 9 or 63.

use crate::fraction::Fraction;
use crate::modmath::Modulus;
use crate::oracle::Oracle;
use crate::{Error, Result};

/// Residues mod 7 that are sums of two cubes.
pub const TABLE_7: [u64; 5] = [0, 1, 2, 5, 6];
/// Residues mod 9 that are sums of two cubes.
pub const TABLE_9: [u64; 5] = [0, 1, 2, 7, 8];
/// Residues mod 63 that are sums of two cubes.
pub const TABLE_63: [u64; 25] = [
    0, 1, 2, 7, 8, 9, 16, 19, 20, 26, 27, 28, 29, 34, 35, 36, 37, 43, 44, 47, 54, 55, 56, 61, 62,
];

/// Admissible residue classes for one of the bases 7, 9, 63.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceClassTable {
    pub base: u64,
    pub admissible: &'static [u64],
}

impl CongruenceClassTable {
    pub fn contains(&self, r: u64) -> bool {
        self.admissible.binary_search(&(r % self.base)).is_ok()
    }
}

pub fn theorem_tables() -> [CongruenceClassTable; 3] {
    [
        CongruenceClassTable {
            base: 7,
            admissible: &TABLE_7,
        },
        CongruenceClassTable {
            base: 9,
            admissible: &TABLE_9,
        },
        CongruenceClassTable {
            base: 63,
            admissible: &TABLE_63,
        },
    ]
}

/// Table for `base`, if it is one of 7, 9, 63.
pub fn table(base: u64) -> Option<CongruenceClassTable> {
    theorem_tables().into_iter().find(|t| t.base == base)
}

/// The table that governs modulus `n`, or `None` when every residue is
/// admissible.
pub fn governing_table(n: Modulus) -> Option<CongruenceClassTable> {
    match (n.get().is_multiple_of(7), n.get().is_multiple_of(9)) {
        (true, false) => table(7),
        (false, true) => table(9),
        (true, true) => table(63),
        (false, false) => None,
    }
}

/// Density of sums of two cubes modulo `n`: 5/7, 5/9, 25/63 or 1.
pub fn predicted_density(n: Modulus) -> Fraction {
    match (n.get().is_multiple_of(7), n.get().is_multiple_of(9)) {
        (true, false) => Fraction::new(5, 7),
        (false, true) => Fraction::new(5, 9),
        (true, true) => Fraction::new(25, 63),
        (false, false) => Fraction::ONE,
    }
}

/// Whether `residue` is a sum of two cubes modulo `n`, by table lookup.
pub fn admissible(residue: u64, n: Modulus) -> bool {
    debug_assert!(residue < n.get());
    governing_table(n).is_none_or(|t| t.contains(residue))
}

/// Checks the compiled-in tables against the oracle's sets for 7, 9, 63.
pub fn validate_tables(oracle: &Oracle) -> Result<()> {
    for t in theorem_tables() {
        let base = Modulus::new(t.base)?;
        if oracle.representable_set(base)?.members() != t.admissible {
            return Err(Error::TableMismatch { base: t.base });
        }
    }
    Ok(())
}

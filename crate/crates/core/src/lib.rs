//! Sums of two cubes to a fixed modulus.
//!
//! For a modulus `N` this crate decides which residues `n` satisfy
//! `n ≡ u³ + v³ (mod N)`, produces explicit witnesses `(u, v)`, and computes
//! the density of representable residues.
//!
//! * [`modmath`]: overflow-free modular arithmetic, extended Euclid, CRT
//!   pivots and trial-division factorization.
//! * [`oracle`]: exhaustive cube-residue sets, representable sets with minimal
//!   witnesses, and exact densities.
//! * [`classify`]: closed-form density and admissibility from divisibility by
//!   7 and 9, no search involved.
//! * [`lifter`]: witnesses for composite moduli, built by splicing witnesses
//!   for coprime prime-power parts together with a CRT pivot.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod bitset;
pub mod classify;
mod error;
mod fraction;
pub mod lifter;
pub mod modmath;
pub mod oracle;

pub use classify::{admissible, predicted_density, theorem_tables, CongruenceClassTable};
pub use error::Error;
pub use fraction::Fraction;
pub use lifter::{
    base_represent, lift, represent, verify, LiftedRepresentation, RepresentPlan, Representation,
};
pub use modmath::{
    crt_unit, cube_mod, ext_gcd, factorize, mul_mod, CrtUnit, Factorization, Modulus, PrimePower,
};
pub use oracle::{CubeResidueSet, DensityReport, Oracle, RepresentableSet, DEFAULT_ORACLE_BOUND};

pub type Result<T, E = Error> = core::result::Result<T, E>;

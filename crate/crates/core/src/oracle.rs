//! Exhaustive ground truth for small moduli.
//!
//! Everything here is computed by direct enumeration: every `a` in `[0, N)`
//! is cubed, and the representable set is the cyclic sumset of the cube
//! residues. The rest of the crate is checked against these results.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::classify::predicted_density;
use crate::fraction::Fraction;
use crate::modmath::{cube_mod, Modulus};
use crate::{Error, Result};

/// Default largest modulus the oracle will enumerate.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

/// The set `{ a³ mod N : a ∈ [0, N) }` with the smallest preimage of each
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeResidueSet {
    modulus: Modulus,
    residues: Vec<u64>,
    preimages: Vec<u64>,
}

impl CubeResidueSet {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Sorted cube residues.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.residues.binary_search(&r).is_ok()
    }

    /// Smallest `a` with `a³ ≡ r (mod N)`.
    pub fn preimage(&self, r: u64) -> Option<u64> {
        self.residues
            .binary_search(&r)
            .ok()
            .map(|i| self.preimages[i])
    }

    /// `(residue, smallest preimage)` pairs in residue order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.residues
            .iter()
            .copied()
            .zip(self.preimages.iter().copied())
    }
}

/// `A(N)`: residues that are a sum of two cubes modulo `N`, each with its
/// lexicographically smallest witness `(u, v)`, `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentableSet {
    modulus: Modulus,
    members: Vec<u64>,
    witnesses: Vec<(u64, u64)>,
}

impl RepresentableSet {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Sorted members.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    pub fn witness(&self, n: u64) -> Option<(u64, u64)> {
        self.members
            .binary_search(&n)
            .ok()
            .map(|i| self.witnesses[i])
    }

    /// `(member, witness)` pairs in member order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, (u64, u64))> + '_ {
        self.members
            .iter()
            .copied()
            .zip(self.witnesses.iter().copied())
    }

    /// `|A(N)| / N`.
    pub fn density(&self) -> Fraction {
        Fraction::new(self.members.len() as u64, self.modulus.get())
    }
}

/// Exact density next to the closed-form prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub modulus: Modulus,
    pub exact: Fraction,
    pub predicted: Fraction,
    pub matches: bool,
}

/// Enumerating oracle with a configurable modulus bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    bound: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    pub fn new(bound: u64) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn check(&self, n: Modulus) -> Result<()> {
        if n.get() > self.bound {
            return Err(Error::ModulusTooLargeForOracle {
                modulus: n.get(),
                bound: self.bound,
            });
        }
        // dense tables are indexed by residue
        usize::try_from(n.get())
            .map(drop)
            .map_err(|_| Error::ModulusTooLargeForOracle {
                modulus: n.get(),
                bound: usize::MAX as u64,
            })
    }

    pub fn cube_residues(&self, n: Modulus) -> Result<CubeResidueSet> {
        self.check(n)?;
        let len = n.get() as usize;
        let mut first = vec![u64::MAX; len];
        for a in 0..n.get() {
            let slot = &mut first[cube_mod(a, n) as usize];
            if *slot == u64::MAX {
                *slot = a;
            }
        }
        let (residues, preimages) = first
            .into_iter()
            .enumerate()
            .filter(|&(_, a)| a != u64::MAX)
            .map(|(r, a)| (r as u64, a))
            .unzip();
        Ok(CubeResidueSet {
            modulus: n,
            residues,
            preimages,
        })
    }

    /// Builds `A(N)` from the cyclic sumset of the cube residues.
    ///
    /// Membership comes from a word-parallel bitset sumset. Witnesses are
    /// then assigned by walking pairs of cube residues ordered by their
    /// smallest preimages: that walk visits candidate witnesses in
    /// lexicographic order, so the first hit on a member is its minimal
    /// witness, and the walk stops once every member has one.
    pub fn representable_set(&self, n: Modulus) -> Result<RepresentableSet> {
        let cubes = self.cube_residues(n)?;
        let len = n.get() as usize;

        let mut cube_bits = BitSet::new(len);
        for &r in cubes.residues() {
            cube_bits.insert(r as usize);
        }
        let member_bits = cube_bits.cyclic_sumset();
        let target = member_bits.count();

        let mut by_preimage: Vec<(u64, u64)> = cubes.iter().map(|(r, a)| (a, r)).collect();
        by_preimage.sort_unstable();

        let mut found = vec![(u64::MAX, u64::MAX); len];
        let mut filled = 0;
        'outer: for (i, &(u, r)) in by_preimage.iter().enumerate() {
            for &(v, s) in &by_preimage[i..] {
                let sum = r + s;
                let sum = if sum >= n.get() { sum - n.get() } else { sum };
                let slot = &mut found[sum as usize];
                if slot.0 == u64::MAX {
                    *slot = (u, v);
                    filled += 1;
                    if filled == target {
                        break 'outer;
                    }
                }
            }
        }
        debug_assert_eq!(filled, target);

        let members: Vec<u64> = member_bits.iter().map(|m| m as u64).collect();
        let witnesses = members.iter().map(|&m| found[m as usize]).collect();
        Ok(RepresentableSet {
            modulus: n,
            members,
            witnesses,
        })
    }

    pub fn exact_density(&self, n: Modulus) -> Result<DensityReport> {
        let exact = self.representable_set(n)?.density();
        let predicted = predicted_density(n);
        Ok(DensityReport {
            modulus: n,
            exact,
            predicted,
            matches: exact == predicted,
        })
    }
}

//! Witnesses for composite moduli by CRT lifting.
//!
//! Given `m ≡ u³ + v³ (mod M)` and `n ≡ x³ + y³ (mod N)` with `gcd(M, N) = 1`,
//! take a pivot `X` with `X ≡ 0 (mod M)` and `X ≡ 1 (mod N)`. Then
//!
//! ```text
//! X* = X·n − (X−1)·m
//! A  = X·x − (X−1)·u
//! B  = X·y − (X−1)·v
//! ```
//!
//! satisfy `X* ≡ A³ + B³ (mod MN)`, with `X* ≡ m (mod M)` and
//! `X* ≡ n (mod N)`. Folding this over the prime-power parts of a modulus
//! turns witnesses for each part into a witness for the whole modulus. The
//! parts themselves are solved by exhaustive search through the [`Oracle`].

use alloc::vec::Vec;

use crate::modmath::{
    add_mod, crt_unit, cube_mod, factorize, mul_mod, sub_mod, CrtUnit, Modulus, PrimePower,
};
use crate::oracle::{Oracle, RepresentableSet};
use crate::{Error, Result};

/// `n ≡ u³ + v³ (mod modulus)`, all values canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Representation {
    pub modulus: Modulus,
    pub n: u64,
    pub u: u64,
    pub v: u64,
}

impl Representation {
    /// Range-checks the fields; does not check the congruence itself.
    pub fn new(modulus: Modulus, n: u64, u: u64, v: u64) -> Result<Self> {
        modulus.residue(n)?;
        modulus.residue(u)?;
        modulus.residue(v)?;
        Ok(Representation { modulus, n, u, v })
    }

    fn trivial() -> Self {
        Representation {
            modulus: Modulus::new(1).expect("1 is a modulus"),
            n: 0,
            u: 0,
            v: 0,
        }
    }
}

/// Whether `rep.n ≡ rep.u³ + rep.v³ (mod rep.modulus)`.
pub fn verify(rep: &Representation) -> bool {
    let m = rep.modulus;
    if rep.n >= m.get() || rep.u >= m.get() || rep.v >= m.get() {
        return false;
    }
    add_mod(cube_mod(rep.u, m), cube_mod(rep.v, m), m) == rep.n
}

/// One lifting step: the spliced representation and what it was made from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftedRepresentation {
    pub product: Representation,
    pub pivot: CrtUnit,
    pub left: Representation,
    pub right: Representation,
}

/// Minimal witness for `residue` modulo `n` by exhaustive search.
pub fn base_represent(residue: u64, n: Modulus, oracle: &Oracle) -> Result<Representation> {
    n.residue(residue)?;
    let set = oracle.representable_set(n)?;
    from_set(residue, &set)
}

fn from_set(residue: u64, set: &RepresentableSet) -> Result<Representation> {
    let (u, v) = set.witness(residue).ok_or(Error::NotRepresentable {
        residue,
        modulus: set.modulus().get(),
    })?;
    Ok(Representation {
        modulus: set.modulus(),
        n: residue,
        u,
        v,
    })
}

/// Splices a representation mod `M` (`left`) and one mod `N` (`right`) into
/// one mod `M·N`.
pub fn lift(left: &Representation, right: &Representation) -> Result<LiftedRepresentation> {
    let pivot = crt_unit(left.modulus, right.modulus)?;
    Ok(lift_with(pivot, left, right))
}

fn lift_with(
    pivot: CrtUnit,
    left: &Representation,
    right: &Representation,
) -> LiftedRepresentation {
    debug_assert_eq!((pivot.m, pivot.n), (left.modulus, right.modulus));
    let product = if left.modulus.get() == 1 {
        // X = 1 mod N: the formulas collapse to the right operand
        Representation {
            modulus: right.modulus,
            ..*right
        }
    } else {
        let p = pivot.product();
        let x = pivot.x;
        let x1 = sub_mod(x, 1 % p.get(), p);
        let splice = |r: u64, l: u64| sub_mod(mul_mod(x, r, p), mul_mod(x1, l, p), p);
        Representation {
            modulus: p,
            n: splice(right.n, left.n),
            u: splice(right.u, left.u),
            v: splice(right.v, left.v),
        }
    };
    LiftedRepresentation {
        product,
        pivot,
        left: *left,
        right: *right,
    }
}

/// Witness for `residue` modulo `n`, built by lifting over the prime-power
/// parts of `n` in ascending prime order.
pub fn represent(residue: u64, n: Modulus, oracle: &Oracle) -> Result<Representation> {
    RepresentPlan::new(n, oracle)?.represent(residue)
}

/// A representation together with every lifting step that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub result: Representation,
    pub steps: Vec<LiftedRepresentation>,
}

/// Everything [`represent`] needs for one modulus, computed once: the
/// coprime parts in fold order, their representable sets, and the pivot for
/// each lifting step.
#[derive(Clone, Debug)]
pub struct RepresentPlan {
    modulus: Modulus,
    parts: Vec<(PrimePower, RepresentableSet)>,
    pivots: Vec<CrtUnit>,
}

impl RepresentPlan {
    /// Plan for `n`, folding parts smallest prime first.
    pub fn new(n: Modulus, oracle: &Oracle) -> Result<Self> {
        Self::with_parts(n, factorize(n)?.parts, oracle)
    }

    /// Plan that folds `parts` in the given order. The parts must be
    /// pairwise coprime with product `n`.
    pub fn with_parts(n: Modulus, parts: Vec<PrimePower>, oracle: &Oracle) -> Result<Self> {
        let mut acc = Modulus::new(1)?;
        let mut pivots = Vec::with_capacity(parts.len().saturating_sub(1));
        let mut sets = Vec::with_capacity(parts.len());
        for (i, part) in parts.into_iter().enumerate() {
            let pm = Modulus::new(part.power)?;
            if i > 0 {
                pivots.push(crt_unit(acc, pm)?);
            }
            acc = acc.checked_mul(pm)?;
            sets.push((part, oracle.representable_set(pm)?));
        }
        if acc != n {
            return Err(Error::InvalidModulus(n.get()));
        }
        Ok(RepresentPlan {
            modulus: n,
            parts: sets,
            pivots,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn parts(&self) -> impl Iterator<Item = &PrimePower> {
        self.parts.iter().map(|(p, _)| p)
    }

    /// The oracle set for each part, in fold order.
    pub fn part_sets(&self) -> impl Iterator<Item = &RepresentableSet> {
        self.parts.iter().map(|(_, s)| s)
    }

    pub fn represent(&self, residue: u64) -> Result<Representation> {
        self.fold(residue, |_| {})
    }

    pub fn represent_traced(&self, residue: u64) -> Result<Trace> {
        let mut steps = Vec::with_capacity(self.pivots.len());
        let result = self.fold(residue, |step| steps.push(step))?;
        Ok(Trace { result, steps })
    }

    fn fold(
        &self,
        residue: u64,
        mut on_step: impl FnMut(LiftedRepresentation),
    ) -> Result<Representation> {
        self.modulus.residue(residue)?;
        let mut bases = self
            .parts
            .iter()
            .map(|(part, set)| from_set(residue % part.power, set))
            .collect::<Result<Vec<_>>>()?
            .into_iter();
        let Some(mut acc) = bases.next() else {
            return Ok(Representation::trivial());
        };
        for (base, pivot) in bases.zip(&self.pivots) {
            let step = lift_with(*pivot, &acc, &base);
            debug_assert!(verify(&step.product), "{step:?}");
            acc = step.product;
            on_step(step);
        }
        debug_assert_eq!(acc.n, residue);
        Ok(acc)
    }
}

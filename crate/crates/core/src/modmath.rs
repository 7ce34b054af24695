//! Exact arithmetic modulo moduli of at most 2^62.
//!
//! Residues are plain `u64` values in the canonical range `[0, N)`. Products
//! go through a `u128` intermediate, so nothing here overflows as long as
//! the residues are canonical.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A modulus `N` with `1 <= N <= 2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub const MAX: u64 = 1 << 62;

    pub fn new(value: u64) -> Result<Self> {
        if (1..=Self::MAX).contains(&value) {
            Ok(Modulus(value))
        } else {
            Err(Error::InvalidModulus(value))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces an arbitrary `u64` into `[0, N)`.
    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.0
    }

    /// Checks that `a` is a canonical residue for this modulus.
    pub fn residue(self, a: u64) -> Result<u64> {
        if a < self.0 {
            Ok(a)
        } else {
            Err(Error::ResidueOutOfRange {
                value: a,
                modulus: self.0,
            })
        }
    }

    /// The modulus `self · other`, if it stays within the cap.
    pub fn checked_mul(self, other: Modulus) -> Result<Modulus> {
        self.0
            .checked_mul(other.0)
            .ok_or(Error::InvalidModulus(u64::MAX))
            .and_then(Modulus::new)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[inline]
pub fn add_mod(a: u64, b: u64, n: Modulus) -> u64 {
    debug_assert!(a < n.0 && b < n.0);
    // a + b < 2^63, no overflow
    let s = a + b;
    if s >= n.0 {
        s - n.0
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, n: Modulus) -> u64 {
    debug_assert!(a < n.0 && b < n.0);
    if a >= b {
        a - b
    } else {
        a + n.0 - b
    }
}

/// `(a · b) mod N` through a double-width intermediate.
#[inline]
pub fn mul_mod(a: u64, b: u64, n: Modulus) -> u64 {
    debug_assert!(a < n.0 && b < n.0);
    ((a as u128 * b as u128) % n.0 as u128) as u64
}

/// `a³ mod N`.
#[inline]
pub fn cube_mod(a: u64, n: Modulus) -> u64 {
    mul_mod(mul_mod(a, a, n), a, n)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `a·s + b·t = g = gcd(a, b)`.
///
/// The coefficients are the ones produced by the classical iteration, so
/// `|s| <= b/g` and `|t| <= a/g` whenever both inputs are non-zero.
pub fn ext_gcd(a: u64, b: u64) -> Result<(u64, i128, i128)> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    Ok((r0 as u64, s0, t0))
}

/// Solution of `M·q − N·l = 1` together with the pivot `X = M·q`, which
/// satisfies `X ≡ 0 (mod M)` and `X ≡ 1 (mod N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrtUnit {
    pub m: Modulus,
    pub n: Modulus,
    /// `M⁻¹ mod N`, in `[0, N)`.
    pub q: u64,
    pub l: i64,
    /// The pivot, in `[0, M·N)`.
    pub x: u64,
}

impl CrtUnit {
    /// The product modulus `M·N`.
    pub fn product(&self) -> Modulus {
        // checked at construction
        Modulus(self.m.0 * self.n.0)
    }

    /// Re-checks every invariant of the unit from scratch.
    pub fn is_valid(&self) -> bool {
        let (m, n) = (self.m.0 as i128, self.n.0 as i128);
        m * self.q as i128 - n * self.l as i128 == 1
            && self.x < self.m.0 * self.n.0
            && self.x.is_multiple_of(self.m.0)
            && self.x % self.n.0 == 1 % self.n.0
            && gcd(self.m.0, self.n.0) == 1
    }
}

/// Builds the CRT pivot for coprime `m` and `n`.
pub fn crt_unit(m: Modulus, n: Modulus) -> Result<CrtUnit> {
    let product = m.checked_mul(n)?;
    let (g, s, _) = ext_gcd(m.0, n.0)?;
    if g != 1 {
        return Err(Error::NotCoprime {
            m: m.0,
            n: n.0,
            gcd: g,
        });
    }
    let q = s.rem_euclid(n.0 as i128) as u64;
    // m·q < m·n <= 2^62, so the pivot needs no further reduction
    let x = m.0 * q;
    let l = ((x as i128 - 1) / n.0 as i128) as i64;
    let unit = CrtUnit { m, n, q, l, x };
    debug_assert!(unit.is_valid(), "{unit:?}");
    debug_assert_eq!(x % product.0, x);
    Ok(unit)
}

/// Largest trial divisor used by [`factorize`]. Every modulus up to
/// `10^12` is factored completely; above that a prime cofactor is still
/// accepted, a composite one is an error.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// One coprime part `p^e` of a factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
    pub power: u64,
}

impl PrimePower {
    pub fn modulus(&self) -> Modulus {
        Modulus(self.power)
    }
}

/// A modulus split into pairwise coprime prime powers, smallest prime first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub source: Modulus,
    pub parts: Vec<PrimePower>,
}

impl Factorization {
    /// Product of the parts; equals `source` by construction.
    pub fn product(&self) -> u64 {
        self.parts.iter().map(|p| p.power).product()
    }
}

/// Factors `n` into prime powers by trial division up to
/// [`TRIAL_DIVISION_BOUND`].
pub fn factorize(n: Modulus) -> Result<Factorization> {
    let mut rest = n.0;
    let mut parts = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut exponent = 0;
        let mut power = 1;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            exponent += 1;
            power *= p;
        }
        if exponent > 0 {
            parts.push(PrimePower {
                prime: p,
                exponent,
                power,
            });
        }
    };
    push(&mut rest, 2);
    push(&mut rest, 3);
    // 6k ± 1 wheel
    let mut d = 5;
    while d <= TRIAL_DIVISION_BOUND && d * d <= rest {
        push(&mut rest, d);
        push(&mut rest, d + 2);
        d += 6;
    }
    if rest > 1 {
        if !is_prime(rest) {
            return Err(Error::FactorTooLarge {
                value: n.0,
                cofactor: rest,
                bound: TRIAL_DIVISION_BOUND,
            });
        }
        parts.push(PrimePower {
            prime: rest,
            exponent: 1,
            power: rest,
        });
    }
    Ok(Factorization { source: n, parts })
}

fn pow_mod_u64(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

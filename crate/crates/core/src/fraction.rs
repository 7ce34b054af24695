use core::fmt;
use core::ops::Mul;

use crate::modmath::gcd;

/// A non-negative rational number kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    numer: u64,
    denom: u64,
}

impl Fraction {
    pub const ONE: Fraction = Fraction { numer: 1, denom: 1 };

    /// Builds `numer / denom` reduced. Panics if `denom == 0`.
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = gcd(numer, denom);
        Fraction {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }
}

/// Cross-cancels before multiplying, so small-denominator products never
/// overflow.
impl Mul for Fraction {
    type Output = Fraction;

    fn mul(self, other: Fraction) -> Fraction {
        let g1 = gcd(self.numer, other.denom);
        let g2 = gcd(other.numer, self.denom);
        Fraction {
            numer: (self.numer / g1) * (other.numer / g2),
            denom: (self.denom / g2) * (other.denom / g1),
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let f = Fraction::new(10, 14);
        assert_eq!((f.numer(), f.denom()), (5, 7));
        assert_eq!(Fraction::new(0, 9), Fraction::new(0, 1));
        assert_eq!(Fraction::new(12, 12), Fraction::ONE);
    }

    #[test]
    fn product() {
        assert_eq!(
            Fraction::new(5, 7) * Fraction::new(5, 9),
            Fraction::new(25, 63)
        );
        assert_eq!(Fraction::new(7, 9) * Fraction::new(9, 7), Fraction::ONE);
    }

    #[test]
    fn display() {
        assert_eq!(std::format!("{}", Fraction::new(50, 126)), "25/63");
    }
}

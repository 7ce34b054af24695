use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A modulus outside `[1, 2^62]`.
    InvalidModulus(u64),
    /// A residue that is not in `[0, modulus)`.
    ResidueOutOfRange { value: u64, modulus: u64 },
    /// `ext_gcd(0, 0)`.
    GcdOfZeros,
    /// A CRT split was requested for moduli sharing a factor.
    NotCoprime { m: u64, n: u64, gcd: u64 },
    /// Trial division left a composite cofactor whose prime factors all
    /// exceed the trial bound.
    FactorTooLarge {
        value: u64,
        cofactor: u64,
        bound: u64,
    },
    /// The exhaustive oracle refuses moduli above its configured bound.
    ModulusTooLargeForOracle { modulus: u64, bound: u64 },
    /// `residue` is not a sum of two cubes modulo `modulus`. For composite
    /// moduli `modulus` is the first prime-power part that failed and
    /// `residue` is the reduction of the request to that part.
    NotRepresentable { residue: u64, modulus: u64 },
    /// A compiled-in congruence table disagrees with the oracle.
    TableMismatch { base: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::InvalidModulus(v) => write!(f, "modulus {v} outside [1, 2^62]"),
            Error::ResidueOutOfRange { value, modulus } => {
                write!(f, "residue {value} not in [0, {modulus})")
            }
            Error::GcdOfZeros => f.write_str("gcd(0, 0) is undefined"),
            Error::NotCoprime { m, n, gcd } => {
                write!(f, "moduli {m} and {n} are not coprime (gcd {gcd})")
            }
            Error::FactorTooLarge { value, cofactor, bound } => write!(
                f,
                "cannot factor {value}: composite cofactor {cofactor} has no prime factor below {bound}"
            ),
            Error::ModulusTooLargeForOracle { modulus, bound } => {
                write!(f, "modulus {modulus} exceeds the oracle bound {bound}")
            }
            Error::NotRepresentable { residue, modulus } => {
                write!(f, "{residue} is not a sum of two cubes mod {modulus}")
            }
            Error::TableMismatch { base } => {
                write!(f, "congruence table mod {base} disagrees with exhaustive search")
            }
        }
    }
}

impl core::error::Error for Error {}

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseWordError {
    #[error("unknown letter in token `{0}` (expected x, y or z)")]
    BadLetter(String),
    #[error("bad exponent in token `{0}`")]
    BadExponent(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("modulus must be >= 3, got {0}")]
    ModulusTooSmall(u32),
    #[error("triple is not an element of G_n")]
    NotMember,
    #[error("triple is not in the commutator subgroup of G_n")]
    NotCommutator,
    #[error("exponent triple violates the parity constraint for 4 | n")]
    BadParity,
    #[error("gcd(2m+1, n) != 1 for m = {m}, n = {n}")]
    NotAUnit { m: i64, n: u32 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShadowError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("gcd(2m+1, {n}) != 1 for m = {m}")]
    CharmingUnit { m: i64, n: u32 },
    #[error("k = {k} violates k = kappa(m)/2 mod 2 for m = {m}, 4 | {n}")]
    KappaParity { m: i64, k: i64, n: u32 },
    #[error("targets differ: {0} vs {1}")]
    TargetMismatch(u32, u32),
    #[error("modulus {0} exceeds the enumeration bound {1}")]
    BoundExceeded(u32, u32),
    #[error("K^({q}) is not contained in K^({n})")]
    NotComparable { q: u32, n: u32 },
    #[error("n = {0} is not a power of 2 with alpha >= 2")]
    NotTwoPower(u32),
    #[error("3 does not divide n = {0}")]
    NotDivisibleBy3(u32),
    #[error("coordinate (k={k}, u={u}) is not in H_n for n = {n}")]
    NotInHn { k: i64, u: i64, n: u32 },
    #[error("u = {0} is not a unit mod {1}")]
    NotAUnit(i64, i64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfiniteError {
    #[error("level must be >= 2, got {0}")]
    LevelTooSmall(u32),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("u = {0} is even, not a unit mod 2^{1}")]
    EvenUnit(i64, u32),
    #[error("level {0} exceeds the configured bound {1}")]
    BoundExceeded(u32, u32),
    #[error("tower entries at levels {upper} and {lower} are incompatible")]
    Incompatible { upper: u32, lower: u32 },
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("gcd undefined: both arguments are zero")]
    GcdUndefined,
    #[error("domain: {0}")]
    Domain(String),
    #[error("too large: {n} exceeds factoring bound {bound}")]
    TooLarge { n: u64, bound: u64 },
    #[error("parameters not coprime: gcd({m}, {n}) = {gcd}")]
    NotCoprime { m: u64, n: u64, gcd: u64 },
    #[error("family constraint: {0}")]
    FamilyConstraint(String),
    #[error("family arithmetic: {0}")]
    FamilyArithmetic(String),
    #[error("non-positive ratio numerator for {family} with r={r}, t={t}")]
    NonPositiveRatio { family: String, r: u64, t: u64 },
    #[error("not concyclic: point {0} is off the circle")]
    NotConcyclic(usize),
    #[error("order: points are not in convex cyclic order")]
    Order,
    #[error("parse: {0}")]
    Parse(String),
}

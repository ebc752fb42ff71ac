use thiserror::Error;

/// Which side condition of a gluing was violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingViolation {
    /// The two multipliers share a common factor.
    NotCoprime { x: i64, y: i64 },
    /// `y` must lie in the first factor.
    YNotInFirst(i64),
    /// `y` must not be one of the first factor's minimal generators.
    YIsGenerator(i64),
    /// `x` must lie in the second factor.
    XNotInSecond(i64),
    /// `x` must not be one of the second factor's minimal generators.
    XIsGenerator(i64),
    /// Multipliers have to be positive.
    NonPositiveMultiplier,
    /// The combined generating set turned out not to be minimal.
    NotMinimal(Vec<i64>),
}

impl std::fmt::Display for GluingViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GluingViolation::NotCoprime { x, y } => write!(f, "gcd({x}, {y}) != 1"),
            GluingViolation::YNotInFirst(y) => write!(f, "y = {y} is not an element of H1"),
            GluingViolation::YIsGenerator(y) => write!(f, "y = {y} is a minimal generator of H1"),
            GluingViolation::XNotInSecond(x) => write!(f, "x = {x} is not an element of H2"),
            GluingViolation::XIsGenerator(x) => write!(f, "x = {x} is a minimal generator of H2"),
            GluingViolation::NonPositiveMultiplier => write!(f, "x and y must be positive"),
            GluingViolation::NotMinimal(gens) => {
                write!(f, "combined generators {gens:?} are not minimal")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not positive")]
    NonPositive(i64),
    #[error("generators have gcd {0}, so the complement in N is infinite")]
    GcdNotOne(i64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(i64),
    #[error("operation undefined for the whole line N")]
    WholeLine,
    #[error("interval is empty")]
    EmptyInterval,
    #[error("interval semigroup is not numerical (only multiples of {0})")]
    NotNumerical(i64),
    #[error("proportion c = {c} must be smaller than a = {a}")]
    ProportionTooLarge { a: i64, c: i64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no admissible k for delta(a={a}, b={b}, c={c})")]
    NoDelta { a: i64, b: i64, c: i64 },
    #[error("expected embedding dimension 3, got {0}")]
    NotThreeGenerated(usize),
    #[error("semigroup is symmetric; the Herzog matrix does not exist")]
    SymmetricInput,
    #[error("invalid gluing: {0}")]
    InvalidGluing(GluingViolation),
    #[error("genus {requested} exceeds enumeration cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

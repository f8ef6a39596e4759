use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("moduli {first} and {second} (positions {i} and {j}) are not coprime")]
    NonCoprimeModuli {
        i: usize,
        j: usize,
        first: BigInt,
        second: BigInt,
    },
    #[error("modulus {0} is smaller than 2")]
    InvalidModulus(BigInt),
    #[error("valuation of zero is undefined")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("{0} is beyond the deterministic Miller-Rabin range")]
    PrimalityRange(BigInt),
    #[error("factorization of {n} exceeded the work budget of {budget} steps")]
    FactorizationTimeout { n: BigInt, budget: u64 },
    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: isize },
    #[error("no supersingular parameter found for ell = {0}")]
    NoSupersingularParam(u64),
    #[error("the sextic has a multiple root")]
    MultipleRoot,
    #[error("6e = {six_e} is not divisible by 6")]
    NonIntegralExponent { six_e: i64 },
    #[error("the curve has bad reduction at {0}")]
    BadReduction(u64),
    #[error("{0} divides the leading coefficient")]
    DegenerateLeading(u64),
    #[error("the curve is singular over F_{0}")]
    SingularCurve(u64),
    #[error("N2 - q^2 - 1 + a^2 is odd (q = {q}, N1 = {n1}, N2 = {n2})")]
    ParityViolation { q: u64, n1: u64, n2: u64 },
    #[error("auxiliary selection for ell = {ell} exhausted its scan at {reached}: {what}")]
    SelectionExhausted {
        ell: u64,
        reached: u64,
        what: &'static str,
    },
    #[error("search space over F_{0} exhausted without a hit")]
    NotFound(u64),
    #[error("no curve found over F_{q} after {trials} trials")]
    BudgetExceeded { q: u64, trials: u64 },
    #[error("target (N1, N2) = ({n1}, {n2}) over F_{q} violates the Weil bounds")]
    InconsistentTarget { q: u64, n1: u64, n2: u64 },
    #[error("matrix is not symplectic for the fixed form")]
    NotSymplectic,
    #[error("matrix multiplier is {0}, expected 1")]
    MultiplierNotOne(u64),
    #[error("group of order {order} exceeds the closure cap {cap}")]
    CapExceeded { order: BigInt, cap: BigInt },
    #[error("out of contract: {0}")]
    OutOfContract(String),
    #[error("verification failed: {}", failing.join(", "))]
    VerificationFailed { failing: Vec<String> },
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Stage {
            stage,
            source: Box::new(source),
        }
    }
}

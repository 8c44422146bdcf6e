use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Resource errors ([`Error::DegreeCapExceeded`], [`Error::ResourceLimit`])
/// mean the request was well-formed but too big for the configured limits;
/// everything else is a domain error in the inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{0} is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("modulus must have degree at least 1")]
    ConstantModulus,

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("degree {requested} exceeds the configured degree cap {cap}")]
    DegreeCapExceeded { requested: u64, cap: u64 },

    #[error("{what} {value} exceeds the supported limit {limit}")]
    ResourceLimit {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),

    #[error("the polynomial x has no multiplicative order")]
    OrderOfX,

    #[error("order {0} is even; orders of irreducible polynomials over GF(2) are odd")]
    EvenOrder(u64),

    #[error("order {0} is not a multiple of 3")]
    OrderNotMultipleOf3(u64),

    #[error("exponents n={n}, k={k} do not form a trinomial (need n > k > 0)")]
    InvalidTrinomial { n: u64, k: u64 },

    #[error("x^{0}+x^{0}+1 degenerates: the equal terms cancel over GF(2)")]
    DegenerateTrinomial(u128),

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by configured size limits rather than by the
    /// mathematical content of the request.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::DegreeCapExceeded { .. } | Error::ResourceLimit { .. }
        )
    }
}

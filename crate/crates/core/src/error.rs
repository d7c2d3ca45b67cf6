use thiserror::Error;

use crate::polyring::IntPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{dividend} is not divisible by {divisor} over the integers")]
    NotDivisible { dividend: IntPoly, divisor: IntPoly },

    #[error("quotient {quotient} has a negative coefficient at degree {degree}")]
    NegativeMultiplicity { quotient: IntPoly, degree: usize },

    #[error("invalid Dynkin type {series}{rank}")]
    InvalidDynkinType { series: char, rank: usize },

    #[error("simple-root subset {indices:?} is out of range for rank {rank}")]
    InvalidSubset { indices: Vec<usize>, rank: usize },

    #[error("Weyl group of {type_name} has {order} elements, above the cap of {cap}")]
    GroupTooLarge {
        type_name: String,
        order: u128,
        cap: u64,
    },

    #[error("profile document: {0}")]
    Schema(String),

    #[error("profile {type_name} (p={p}): {reason}")]
    Consistency {
        type_name: String,
        p: u32,
        reason: String,
    },

    #[error("tuple length {left} does not match length {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("involution data violates {0:?}")]
    InvalidData(Vec<String>),

    #[error("neither Clifford component is split (i+={iplus}, i-={iminus})")]
    NotHalfSpin { iplus: u32, iminus: u32 },
}

impl Error {
    /// True for errors meaning the inputs describe no consistent mathematical
    /// object, as opposed to malformed input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible { .. }
                | Error::NegativeMultiplicity { .. }
                | Error::InconsistentInput(_)
        )
    }
}

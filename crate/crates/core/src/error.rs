use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} requires a positive argument, got 0")]
    ZeroArgument { what: &'static str },

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("lattice form x^2 + {0}*y^2 is not supported (b must be 1 or 2)")]
    UnsupportedForm(u64),

    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    /// An identity that must hold on mathematical grounds failed.
    #[error("internal inconsistency at n = {n}: {detail}")]
    Inconsistent { n: u64, detail: String },
}

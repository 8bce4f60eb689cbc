use thiserror::Error;

/// Errors raised by the algebraic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series coefficient that should be divisible by `1 - t` was not.
    #[error("z^{z_power} coefficient is not divisible by (1 - t) in {context}")]
    NotDivisible { z_power: usize, context: String },

    /// Enumeration would exceed the configured element budget.
    #[error("enumeration of {requested} elements exceeds the budget of {budget}")]
    Budget { requested: u128, budget: u128 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration, e.g. an absurd partition table size.
    #[error("configuration error: {0}")]
    Config(String),

    /// A computation needs p(n) beyond the supplied table.
    #[error("partition table too small: need p({needed}), table holds p(0..={max_n})")]
    TableTooSmall { needed: i64, max_n: usize },

    /// Exhaustive enumeration was requested beyond its budget.
    #[error("enumeration budget exceeded: n = {0} > 40")]
    EnumBudget(u64),

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested derivative order exceeds the polynomial budget.
    #[error("derivative order {0} exceeds the budget of {1}")]
    DerivBudget(u32, u32),

    /// Working precision cannot certify the requested value.
    #[error("insufficient precision: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;

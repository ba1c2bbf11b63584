use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters outside the domain where a quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("path has {steps} steps, exceeding the enumeration cap of {cap}")]
    CapExceeded { steps: i64, cap: usize },
    #[error("path has no vertex on the line y = x + {0}")]
    NoTouch(i64),
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("series square root needs constant term 1")]
    BadConstantTerm,
    #[error("unsuitable series: {0}")]
    BadSeries(String),
    /// A scaled formula that must be integral evaluated to a fraction.
    #[error("non-integral result in {context}: {value}")]
    NonIntegral { context: String, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

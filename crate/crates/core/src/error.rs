use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the operation.
    #[error("{name} = {value} is out of range: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The covariance matrix violates the uncertainty principle.
    #[error("invalid Gaussian state: det(sigma) = {det} < 1")]
    InvalidState { det: f64 },

    /// Performance figures only exist for engines and refrigerators.
    #[error("cycle is neither an engine nor a refrigerator")]
    NoPerformance,

    #[error("{0}")]
    Grid(&'static str),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain { name, value, reason }
    }
}

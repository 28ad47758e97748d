use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the numerical kernels and physical models.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A finite argument lies outside the documented support range.
    #[error("range error: {what} = {value} outside [{min}, {max}]")]
    Range {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// The requested approximation does not apply to this configuration.
    #[error("regime error: {0}")]
    Regime(String),

    /// Adaptive quadrature hit its recursion cap before meeting tolerance.
    #[error("quadrature did not converge on [{a}, {b}]: estimated error {estimate:e} > {tol:e} after {evaluations} evaluations")]
    Quadrature {
        a: f64,
        b: f64,
        estimate: f64,
        tol: f64,
        evaluations: usize,
    },

    /// A bracketing search was given an interval without a sign change.
    #[error("no sign change on [{a}, {b}] (f(a) = {fa}, f(b) = {fb})")]
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },

    /// A physical or numerical parameter failed validation.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Range { .. } => "range",
            Error::Regime(_) => "regime",
            Error::Quadrature { .. } => "quadrature",
            Error::NoSignChange { .. } => "no_sign_change",
            Error::InvalidParameter { .. } => "invalid_parameter",
        }
    }
}

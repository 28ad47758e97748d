use gravibox_core::Error as CoreError;
use thiserror::Error;

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Compute(#[from] CoreError),
}

impl HarnessError {
    /// Short machine-readable category for the JSON error line.
    pub fn kind(&self) -> &'static str {
        match self {
            HarnessError::Usage(_) => "usage",
            HarnessError::Config(_) => "config",
            HarnessError::Io(_) => "io",
            HarnessError::Compute(e) => match e {
                CoreError::Domain(_) => "domain",
                CoreError::Range { .. } => "range",
                CoreError::Regime(_) => "regime",
                CoreError::Quadrature { .. } => "quadrature",
                CoreError::NoSignChange { .. } => "no_sign_change",
                CoreError::InvalidParameter { .. } => "invalid_parameter",
            },
        }
    }

    /// `{"error": kind, "message": text}` on one line.
    pub fn to_json_line(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported quiver: {0}")]
    Unsupported(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("incomposable product: {0}")]
    Incomposable(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

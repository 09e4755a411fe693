use thiserror::Error;

/// Error type shared across the crate.
///
/// The variants mirror the process exit contract: invalid input and failed
/// validation exit with 2, resource limits with 3, and a falsified property
/// (something the library asserts to be mathematically true) with 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("property violated: {0}")]
    Property(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Property(_) => 1,
            Error::InvalidInput(_) | Error::Validation(_) | Error::Io(_) => 2,
            Error::ResourceLimit(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

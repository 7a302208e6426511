use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("invalid Cartan datum: {0}")]
    Cartan(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap_check(what: &str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded {
            what: what.to_string(),
            size,
            cap,
        });
    }
    Ok(())
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("no check matches selector `{0}`")]
    UnknownSelector(String),
    #[error("invalid suite configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] ellq_core::Error),
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    Parameter(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("structure error: {0}")]
    Structure(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("unknown subgroup label `{0}`")]
    UnknownLabel(String),

    #[error("{0}")]
    Output(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

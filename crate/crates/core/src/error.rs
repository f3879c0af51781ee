use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse Laurent polynomial {input:?}: {reason}")]
    ParsePoly { input: String, reason: String },

    #[error("cannot parse path {input:?}: {reason}")]
    ParsePath { input: String, reason: String },

    #[error("specialization image {0} is not a unit of Z[v, v^-1]")]
    NonUnitImage(String),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("unknown edge {0:?}")]
    UnknownEdge(String),

    #[error("invalid Coxeter matrix: {0}")]
    CoxeterMatrix(String),

    #[error("m({0}, {1}) is infinite")]
    InfiniteOrder(String, String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument identifiers must be non-empty")]
    EmptyArgumentId,
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("operation requires a non-empty framework")]
    EmptyFramework,
    #[error("labelling covers {found} arguments but the framework has {expected}")]
    LabellingSize { expected: usize, found: usize },
    #[error("ground `{0}` is not labelled undec")]
    GroundNotUndec(String),
    #[error("set is not conflict-free: `{0}` attacks `{1}`")]
    NotConflictFree(String, String),
    #[error("LIMIT: {0}")]
    Limit(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::Limit(_))
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

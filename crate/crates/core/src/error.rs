use crate::exactlin::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("unsupported root system: {0}")]
    UnsupportedType(String),
    #[error("malformed root notation '{0}'")]
    MalformedRoot(String),
    #[error("'{text}' is not a root of {system}")]
    NotARoot { text: String, system: String },
    #[error("predicted group order {predicted} exceeds the cap of {cap} elements")]
    CapExceeded { predicted: u128, cap: usize },
    #[error("bad word '{0}'")]
    BadWord(String),
    #[error("invalid simple system: {0}")]
    InvalidSimpleSystem(String),
    #[error("root set is not additively closed: {left} + {right} = {sum} lies outside it")]
    NotAdditivelyClosed {
        left: String,
        right: String,
        sum: String,
    },
    #[error("unrecognized Cartan matrix of rank {0}")]
    UnknownType(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("property violation: {0}")]
    Violation(String),
}

impl Error {
    /// True when the error signals a broken mathematical invariant rather
    /// than bad input.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Violation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised while building values or calling an operation outside its
/// contract. Offending labels are carried in their display form.
///
/// A failed Hall condition is never an error; it is reported as a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {0} appears more than once")]
    DuplicateIndex(String),
    #[error("key {0} appears more than once")]
    DuplicateKey(String),
    #[error("unknown index {0}")]
    UnknownIndex(String),
    #[error("element {0} is not in the declared universe")]
    UnknownElement(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("{what} has size {size}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("the Hall condition fails on index subset {0}")]
    PreconditionViolated(String),
    #[error("operation needs at least {needed} indices, got {got}")]
    TooFewIndices { needed: usize, got: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("{element} lies in level {} but its step is not in level {level}", .level + 1)]
    FpropViolation { level: usize, element: String },
    #[error("step is undefined on {element} in level {level}")]
    StepUndefined { level: usize, element: String },
    #[error("level {level} with lookahead {lookahead} exceeds horizon {horizon}")]
    HorizonExceeded {
        level: usize,
        lookahead: usize,
        horizon: usize,
    },
    #[error("an inverse system needs at least one level")]
    NoLevels,
    #[error("unknown lazy family {0:?}")]
    UnknownGenerator(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

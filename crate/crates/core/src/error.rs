use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },

    #[error("operation needs at least one vertex")]
    EmptyGraph,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("no pairwise-intersecting colour family: {0}")]
    InfeasibleFamily(String),

    #[error("bad part sizes: {0}")]
    BadSizes(String),

    #[error("triangle cycle needs k >= 3 and distinct colours (got k = {0})")]
    BadK(usize),

    #[error("vertex {0} sees every palette colour")]
    NoAbsentColour(usize),

    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("instance has {n} vertices, oracle budget is {max_n}")]
    BudgetExceeded { n: usize, max_n: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("expected at most two colours, found {0}")]
    TooManyColours(usize),

    #[error("colouring is not 2-local")]
    NotTwoLocal,

    #[error("colouring is not {0}-local")]
    NotRLocal(usize),

    #[error("mean locality {0} exceeds 2")]
    MeanTooHigh(String),

    #[error("structure violation: {0}")]
    StructureViolation(String),
}

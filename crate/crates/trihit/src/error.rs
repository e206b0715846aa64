use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("oracle too large: {n} vertices exceeds cap {cap}")]
    OracleTooLarge { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("scene is not perturbed: {0}")]
    Unperturbed(String),
    #[error("scene is not a contact representation: {0}")]
    NotContact(String),
    #[error("maximal clique count {count} exceeds limit {limit}")]
    CliqueOverflow { count: usize, limit: usize },
    #[error("disconnected region set for vertex {0}")]
    DisconnectedRegions(usize),
    #[error("tree decomposition width {width} exceeds budget {budget}")]
    WidthOverflow { width: usize, budget: usize },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no graph-preserving perturbation found after {0} attempts")]
    PerturbationFailed(usize),
    #[error("crenellation placement failed: {0}")]
    Placement(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;

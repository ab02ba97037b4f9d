use thiserror::Error;

/// Errors produced by graph construction, strategy tabulation, verification
/// and the certificate machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size parameter out of range: {0}")]
    SizeOutOfRange(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("configuration space of {configs} exceeds cap {cap}; use sampled verification instead")]
    ConfigSpaceTooLarge { configs: u128, cap: u64 },

    #[error("alphabet size {q} outside the supported range 2..={cap}")]
    AlphabetOutOfRange { q: usize, cap: usize },

    #[error("guess table for vertex {vertex} would need {entries} entries (cap {cap})")]
    TableTooLarge {
        vertex: usize,
        entries: u128,
        cap: u64,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("gadget strategy has an empty losing set")]
    EmptyLosingSet,

    #[error("losing set is not a function of the non-pivot colours: {first:?} and {second:?} differ only at the pivot")]
    NotAFunction { first: Vec<u8>, second: Vec<u8> },

    #[error("declared phi disagrees with the losing set at {config:?}")]
    PhiMismatch { config: Vec<u8> },

    #[error("invalid word set: {0}")]
    InvalidWords(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

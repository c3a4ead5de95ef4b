use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("adjacency matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("adjacency matrix has a nonzero diagonal entry at {0}")]
    NonzeroDiagonal(usize),

    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("graph has no vertex labels")]
    Unlabeled,

    #[error("vertex {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),

    #[error("parameter m = {0} is out of range")]
    ParameterOutOfRange(usize),

    #[error("switching set must be a proper nonempty subset (size {size} of {n})")]
    ImproperSwitchingSet { size: usize, n: usize },

    #[error("Godsil-McKay set must have even size at least 2, got {0}")]
    OddGmSet(usize),

    #[error("not a Godsil-McKay switching set")]
    InvalidGmSet,

    #[error("vertex {0} is isolated or adjacent to every other vertex")]
    CannotIsolate(usize),

    #[error("entries of a sign matrix must be +1 or -1")]
    BadSign,

    #[error("not a Hadamard matrix")]
    NotHadamard,

    #[error("Hadamard matrix is not graphical")]
    NotGraphical,

    #[error("Hadamard matrix is not regular or its order is not a perfect square")]
    NotRegular,

    #[error("graph is not strongly regular")]
    NotStronglyRegular,

    #[error("unknown named graph {0:?}")]
    UnknownGraphName(String),

    #[error("invalid product plan: {0}")]
    InvalidPlan(String),

    #[error("construction check failed: {0}")]
    ConstructionCheck(String),

    #[error("invalid transcript: {0}")]
    InvalidTranscript(String),

    #[error("step {step}: invalid GM set ({reason})")]
    InvalidStep { step: usize, reason: String },

    #[error("step {step}: expected {expected}, observed {observed}")]
    RankMismatch {
        step: usize,
        expected: usize,
        observed: usize,
    },

    #[error("step {step}: unknown vertex label {label:?}")]
    UnknownStepLabel { step: usize, label: String },

    #[error("all-ones vector membership after the last step is {observed}, expected {expected}")]
    FinalOnesMismatch { expected: bool, observed: bool },

    #[error("step {step}: strongly regular parameters changed")]
    ParametersChanged { step: usize },

    #[error("search configuration: {0}")]
    BadConfig(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

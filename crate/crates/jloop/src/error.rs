//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A structure-constant table failed the associativity check.
    #[error("associativity violation: ({i} * {j}) * {k} != {i} * ({j} * {k})")]
    AssociativityViolation { i: String, j: String, k: String },

    /// A graded product left its expected homogeneous component.
    #[error("grading violation: {0}")]
    GradingViolation(String),

    /// A free algebra needs at least one generator.
    #[error("free algebra needs at least one generator")]
    EmptyGenerators,

    /// Malformed construction parameters.
    #[error("bad parameters: {0}")]
    BadParams(String),

    /// Operands belong to different algebras.
    #[error("algebra mismatch: operands belong to different algebras")]
    AlgebraMismatch,

    /// Operands have different truncation orders.
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// Generator support is only defined over free truncated algebras.
    #[error("support requires a free truncated coefficient algebra")]
    SupportNeedsFreeAlgebra,

    /// Requested more deconcatenation blocks than positions.
    #[error("cannot split {m} positions into {k} nonempty blocks")]
    KTooLarge { m: usize, k: usize },

    /// The p-operation needs at least one element across its first two groups.
    #[error("p-operation needs at least one element in its first two argument groups")]
    EmptyArgs,

    /// The closed-form bracket needs a nonempty first group; the empty case is
    /// the binary bracket.
    #[error("closed-form bracket needs a nonempty first group (use the binary bracket)")]
    EmptyI,

    /// An operation received an argument list of unsupported length.
    #[error("bad arity: {0}")]
    BadArity(String),

    /// A deviation index is out of range for its level.
    #[error("deviation index {index} out of range 1..={max} at level {level}")]
    BadIndex { index: usize, level: usize, max: usize },

    /// The series truncation order is too small for the requested computation.
    #[error("truncation too small: need at least {needed}, have {have}")]
    TruncationTooSmall { needed: usize, have: usize },

    /// Text input failed to parse.
    #[error("parse error at line {line}, column {col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },

    /// Text input referenced an unknown generator or basis label.
    #[error("unknown symbol `{name}` at line {line}, column {col}")]
    UnknownSymbol { name: String, line: usize, col: usize },

    /// A rational literal could not be read.
    #[error("bad rational literal `{0}`")]
    BadRational(String),

    /// Two supposedly equivalent computations disagreed; this signals an
    /// implementation bug, not a property of the input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

//! Error types for the toolkit, one enum per subsystem.

use thiserror::Error;

/// Errors from dense matrix construction and validation.
#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("matrix is not unitary: ||U'U - 1|| = {deviation:e}")]
    NotUnitary { deviation: f64 },
    #[error("matrix is not a rank-one projector: {detail}")]
    NotProjector { detail: String },
    #[error("cannot build a projector from the zero vector")]
    ZeroVector,
    #[error("trace of an empty product is undefined")]
    EmptyProduct,
    #[error("diagonal value {value} at index {index} is negative")]
    NegativeDiagonal { index: usize, value: f64 },
    #[error("projectors {i} and {j} are not orthogonal: ||P_i P_j|| = {deviation:e}")]
    FrameNotOrthogonal { i: usize, j: usize, deviation: f64 },
    #[error("projectors do not sum to the identity: deviation {deviation:e}")]
    FrameIncomplete { deviation: f64 },
    #[error("frame has {got} projectors, expected {expected}")]
    FrameSize { expected: usize, got: usize },
}

/// Errors from stochastic-matrix analysis.
#[derive(Debug, Error)]
pub enum StochasticError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("entry ({row},{col}) has imaginary part {imaginary:e}, expected a real matrix")]
    ComplexEntry { row: usize, col: usize, imaginary: f64 },
    #[error("entry ({row},{col}) = {value} is negative")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("entry ({row},{col}) = {value} exceeds 1")]
    EntryAboveOne { row: usize, col: usize, value: f64 },
    #[error("column {col} sums to {sum}, expected 1")]
    ColumnSum { col: usize, sum: f64 },
    #[error("unsupported convention {found:?}, this toolkit stores column-stochastic matrices")]
    WrongConvention { found: String },
    #[error("dimension mismatch between decomposition parts: {detail}")]
    DimensionMismatch { detail: String },
    #[error("decomposition weights violate trace constraints: {detail}")]
    WeightConstraint { detail: String },
    #[error("reconstructed entry ({row},{col}) has imaginary residue {value:e}")]
    ImaginaryResidue { row: usize, col: usize, value: f64 },
    #[error("oracle requires a 3x3 matrix, got {n}x{n}")]
    DimensionNot3 { n: usize },
    #[error("invalid options: {reason}")]
    InvalidOptions { reason: String },
    #[error("precondition Tr(rho P) = 1 fails: measured {measured}")]
    GleasonPrecondition { measured: f64 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Errors from the extravalence registry.
#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("a system needs at least 2 outcomes, got {n}")]
    SystemTooSmall { n: usize },
    #[error("context {id:?} is already registered")]
    DuplicateContext { id: String },
    #[error("context {context:?} has {got} labels, the system requires {expected}")]
    WrongLabelCount { context: String, expected: usize, got: usize },
    #[error("context {context:?} repeats the label {label:?}")]
    DuplicateLabel { context: String, label: String },
    #[error("unknown context {id:?}")]
    UnknownContext { id: String },
    #[error("context {context:?} has no outcome {outcome}")]
    UnknownModality { context: String, outcome: usize },
    #[error("cannot link outcomes {a} and {b} of context {context:?}: same-context modalities are mutually exclusive")]
    SameContextExclusive { context: String, a: usize, b: usize },
    #[error("merging would place two modalities of context {context:?} in one class")]
    ExclusivityViolation { context: String },
    #[error("frame attached to context {context:?} has dimension {got}, expected {expected}")]
    FrameDimension { context: String, expected: usize, got: usize },
    #[error(transparent)]
    Stochastic(#[from] StochasticError),
}

/// Errors from incidence-structure parsing and search.
#[derive(Debug, Error)]
pub enum KsError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("structure has no contexts")]
    EmptyStructure,
    #[error("context {context} has {got} slots, expected {expected}")]
    RaggedContext { context: usize, expected: usize, got: usize },
    #[error("context {context} lists class {class} twice")]
    DuplicateClassInContext { context: usize, class: usize },
    #[error("class {class} appears in no context")]
    UnusedClass { class: usize },
    #[error("{n_classes} classes exceed the supported maximum of {max}")]
    TooManyClasses { n_classes: usize, max: usize },
    #[error("no vector supplied for class {class}")]
    MissingVector { class: usize },
    #[error("vector for class {class} has dimension {got}, expected {expected}")]
    VectorDimension { class: usize, expected: usize, got: usize },
}

/// Errors from interferometer simulation.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("line {line} is out of range for {dim} lines")]
    LineOutOfRange { line: usize, dim: usize },
    #[error("beam splitter needs two distinct lines, got {line} twice")]
    SameLines { line: usize },
    #[error("non-finite parameter in network element")]
    NonFiniteParameter,
    #[error("state norm is {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("outcome {outcome} is out of range for dimension {dim}")]
    OutcomeOutOfRange { outcome: usize, dim: usize },
    #[error("direction has norm {norm}, expected a unit 3-vector")]
    BadDirection { norm: f64 },
    #[error("invalid experiment config: {reason}")]
    BadConfig { reason: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

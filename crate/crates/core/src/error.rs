use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MosaicError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"ROWS COLS\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: unparseable tile code {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: tile code {code} outside 0-10")]
    CodeOutOfRange { line: usize, code: u32 },
    #[error("line {line}: expected {expected} codes, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("line {line}: expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize, line: usize },
    #[error("expected {expected} cells, found {found}")]
    CellCount { expected: usize, found: usize },
    #[error("board dimensions must be positive")]
    EmptyBoard,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum TraceError {
    #[error("mosaic is not suitably connected")]
    NotSuitablyConnected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("expected a knot (one component), found {0} components")]
    NotAKnot(usize),
    #[error("diagram has {found} crossings, state sum supports at most {max}")]
    TooManyCrossings { found: usize, max: usize },
    #[error("malformed planar diagram code: {0}")]
    MalformedCode(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move pattern {0} is not present on the board")]
    PatternAbsent(String),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("all-crossing inner boards need n >= 4, got {0}")]
    BoardTooSmall(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReferenceError {
    #[error("reference data line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("reference knots {0} and {1} share a Jones polynomial")]
    Collision(String, String),
    #[error("reference knot {name}: chirality does not match the amphichiral list")]
    Chirality { name: String },
    #[error("reference table has {0} entries, expected 36")]
    Count(usize),
    #[error("reference knot {name}: {source}")]
    Diagram { name: String, source: DiagramError },
    #[error("unknown knot {0}")]
    UnknownKnot(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("board size {0} outside the supported range 2..=6")]
    SizeOutOfRange(usize),
    #[error("exhaustive enumeration is limited to boards of size <= 5, got {0}")]
    NotExhaustive(usize),
    #[error("knot identification needs single-component enumeration")]
    NeedsKnots,
    #[error(transparent)]
    Reference(#[from] ReferenceError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TabulateError {
    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Reference(#[from] ReferenceError),
}

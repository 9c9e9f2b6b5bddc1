use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different variable contexts.
    VarsMismatch { left: String, right: String },
    /// Matrix shapes are incompatible for the requested operation.
    DimMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    /// An operation that needs a square matrix got a rectangular one.
    NotSquare { rows: usize, cols: usize },
    /// A value that must be a unit (±monomial) is not.
    NotAUnit(String),
    /// Free group ranks differ.
    RankMismatch { left: usize, right: usize },
    /// A generator index lies outside `1..=bound`.
    IndexOutOfRange { index: usize, bound: usize },
    /// Welded braid words over different group indices.
    GroupMismatch { left: usize, right: usize },
    UnknownVariable(String),
    /// Text input could not be parsed.
    Parse(String),
    /// A coordinate subspace is not closed under the action.
    ClosureFailure { generator: String, row: usize, col: usize },
    /// The Long-Moody parameters violate the compatibility condition.
    Cond1Violation { generator: String, letter: usize },
    /// A closed-form inverse image does not invert the forward image.
    BadInverse(String),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VarsMismatch { left, right } => {
                write!(f, "variable context mismatch: [{left}] vs [{right}]")
            }
            Error::DimMismatch { op, left, right } => write!(
                f,
                "dimension mismatch in {op}: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square ({rows}x{cols})"),
            Error::NotAUnit(what) => write!(f, "not a unit: {what}"),
            Error::RankMismatch { left, right } => {
                write!(f, "free group rank mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "generator index {index} outside 1..={bound}")
            }
            Error::GroupMismatch { left, right } => {
                write!(f, "welded braid group mismatch: wB_{left} vs wB_{right}")
            }
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::ClosureFailure { generator, row, col } => write!(
                f,
                "coordinate subspace not closed: image of {generator} has nonzero entry at ({row}, {col})"
            ),
            Error::Cond1Violation { generator, letter } => write!(
                f,
                "compatibility condition fails for ({generator}, x{letter})"
            ),
            Error::BadInverse(msg) => write!(f, "inverse image check failed: {msg}"),
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}

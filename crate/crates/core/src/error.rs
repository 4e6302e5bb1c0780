use thiserror::Error;

/// Errors raised by graph construction, parsing and the analysis routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 format error: {0}")]
    Graph6(String),
    #[error("native multipole format error at line {line}: {msg}")]
    Native { line: usize, msg: String },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NonCubic { vertex: usize, degree: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("operation requires a graph without semiedges")]
    HasSemiedges,
    #[error("graph has {0} edges; bitset routines support at most 128")]
    TooLarge(usize),
    #[error("no cycle-separating edge cut exists")]
    NoCycleSeparatingCut,
    #[error("invalid junction: {0}")]
    InvalidJunction(String),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph has a bridge")]
    Bridged,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is 3-edge-colourable, a snark is required")]
    Colourable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not an induced cycle: {0}")]
    NotInducedCycle(String),
    #[error("colouring count {count} of the smoothed graph is not divisible by 18")]
    KaszonyiNotDivisible { count: u64 },
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("reduction step failed: {msg}\n{trace}")]
    Reduction { msg: String, trace: String },
    #[error("computation budget exhausted")]
    Timeout,
    #[error("fetch error: {0}")]
    Fetch(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

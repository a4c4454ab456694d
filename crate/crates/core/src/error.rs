use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty word has no primitive root")]
    EmptyWord,
    #[error("empty pattern")]
    EmptyPattern,
    #[error("invalid symbol {symbol:?} at position {position}")]
    InvalidSymbol { position: usize, symbol: char },
    #[error("factor [{start}..{end}] out of range for host of length {len}")]
    FactorRange { start: usize, end: usize, len: usize },
    #[error("position {position} out of range 1..={max}")]
    PositionRange { position: usize, max: usize },
    #[error("not a balanced double square")]
    NotBalanced,
    #[error("not factorizable")]
    NotFactorizable,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("double squares belong to different hosts")]
    HostMismatch,
    #[error("double squares out of order: start {first} is not before {second}")]
    Order { first: usize, second: usize },
    #[error("not a gamma-mate")]
    NotGammaMate,
    #[error("gamma-mate at {start} matches none of the type forms")]
    GammaForm { start: usize },
    #[error("no double square")]
    NoDoubleSquare,
    #[error("alphabet size {d} is outside 1..={max}")]
    AlphabetSize { d: usize, max: usize },
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("empty property suite")]
    EmptySuite,
    /// A position holds three or more rightmost squares.
    #[error("falsification: {count} rightmost squares start at position {start}")]
    ThreeRightmost { start: usize, count: usize },
    /// Two rightmost squares share a start but do not form a factorizable pair.
    #[error("falsification: rightmost pair at {start} (|u|={short_len}, |U|={long_len}) is not factorizable")]
    UnfactorizableFs {
        start: usize,
        short_len: usize,
        long_len: usize,
    },
}

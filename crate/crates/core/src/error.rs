use thiserror::Error;

/// Every way an input can be rejected. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("could not parse {token:?} as a nonnegative integer")]
    Parse { token: String },

    #[error("first entry must be 0, found {value}")]
    FirstEntryNonzero { value: u32 },

    #[error("entry {value} at index {index} exceeds ascent bound {bound}")]
    AscentBoundExceeded {
        index: usize,
        value: u32,
        bound: u32,
    },

    #[error("value {value} at index {index} is outside 1..={len}")]
    PermValueOutOfRange {
        index: usize,
        value: u32,
        len: usize,
    },

    #[error("value {value} occurs more than once (again at index {index})")]
    DuplicateValue { index: usize, value: u32 },

    #[error("pattern letter {letter} is missing (largest letter is {max})")]
    PatternLetterMissing { letter: u32, max: u32 },

    #[error("contains {pattern}")]
    ContainsPattern { pattern: String },

    #[error("input must be nonempty")]
    Empty,

    #[error("length {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("catalan({n}) is outside the supported range 0..={max}")]
    CatalanOutOfRange { n: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

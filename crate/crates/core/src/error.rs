use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("melody too short: {len} notes, at least {required} required")]
    MelodyTooShort { len: usize, required: usize },

    #[error("degenerate: vertical fit (all x-coordinates equal)")]
    DegenerateSlope,

    #[error("local slope undefined at position {index}")]
    LocalSlopeUndefined { index: usize },

    #[error("repetition unsupported: pitch {pitch} occurs more than once")]
    RepetitionUnsupported { pitch: i64 },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("empty transposition window {lo}..{hi}")]
    EmptyWindow { lo: i64, hi: i64 },

    #[error("first pitch {0} also appears in the remaining set")]
    FamilyOverlap(i64),

    #[error("rank depth {k} exceeds family size {size}")]
    RankTooDeep { k: usize, size: usize },

    #[error("invalid note {input:?} at position {position}: {reason}")]
    NoteParse {
        input: String,
        position: usize,
        reason: &'static str,
    },

    #[error("line {line}: {message}")]
    Record { line: usize, message: String },

    #[error("pair ({a}, {b}): {source}")]
    Pair {
        a: String,
        b: String,
        #[source]
        source: Box<Error>,
    },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

/// Crate-wide error type. Controller execution wraps block-level errors in
/// [`Error::ProgramFault`] so the failing instruction index survives.
#[derive(Debug, Error)]
pub enum Error {
    #[error("address {addr:#x} out of range (capacity {capacity:#x})")]
    Address { addr: usize, capacity: usize },

    #[error("CAM search for {pattern:#04x} matched no row")]
    NoMatch { pattern: u8 },

    #[error("CAM search for {pattern:#04x} matched {count} rows")]
    MultiMatch { pattern: u8, count: usize },

    #[error("lookup tables not loaded")]
    TablesNotLoaded,

    #[error("table is not a bijection on byte values")]
    TableNotBijective,

    #[error("invalid key: got {got} bytes, variant requires {want}")]
    InvalidKey { got: usize, want: usize },

    #[error("data length {len} is not a multiple of the 16-byte block size")]
    BlockLength { len: usize },

    #[error("encode: {0}")]
    Encode(String),

    #[error("illegal instruction word {word:#010x}")]
    IllegalInstruction { word: u32 },

    #[error("line {line}: {msg}")]
    Asm { line: usize, msg: String },

    #[error("bad program file: {0}")]
    ProgramFormat(String),

    #[error("register group r{reg}..r{} exceeds the register file", reg + 3)]
    RegisterGroup { reg: u8 },

    #[error("no round-key binding for SUBMX decryption")]
    MissingRoundKeyBinding,

    #[error("unknown perf event `{0}`")]
    UnknownEvent(String),

    #[error("perf config: {0}")]
    PerfConfig(String),

    #[error("config: {0}")]
    Config(String),

    #[error("program fault at pc {pc}: {cause}")]
    ProgramFault { pc: usize, cause: Box<Error> },

    #[error("fabric/reference mismatch: {0}")]
    OracleMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

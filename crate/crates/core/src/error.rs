use thiserror::Error;

/// Errors raised while decoding PGM or BMP data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("unrecognized image magic {0:?}")]
    UnknownMagic([u8; 2]),

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("maxval {0} is outside 1..=255")]
    UnsupportedMaxval(u32),

    #[error("sample value {value} exceeds maxval {maxval}")]
    SampleOutOfRange { value: u32, maxval: u32 },

    #[error("image has a zero dimension ({width}x{height})")]
    ZeroDimensions { width: u64, height: u64 },

    #[error("truncated data: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },

    #[error("unsupported BMP: {0}")]
    UnsupportedBmp(String),

    #[error("palette entry {index} is not gray (r={r}, g={g}, b={b})")]
    NonGrayscalePalette { index: usize, r: u8, g: u8, b: u8 },

    #[error("pixel references palette entry {index} but the palette has {len} entries")]
    PaletteIndexOutOfRange { index: u8, len: usize },
}

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Format(#[from] FormatError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("character {code:#04x} at offset {offset} is not in charset {charset}")]
    UnsupportedCharacter {
        code: u8,
        offset: usize,
        charset: &'static str,
    },

    #[error("message needs {needed} windows but the image has only {capacity}")]
    CapacityExceeded { needed: usize, capacity: usize },

    #[error("alphabet index {index} does not fit a {k}x{k} window (max {max})")]
    IndexOutOfRange { index: usize, k: usize, max: usize },

    #[error("invalid window encoding: position {position}, remainder {remainder} for k={k}")]
    InvalidEncoding {
        position: usize,
        remainder: u8,
        k: usize,
    },

    #[error("corrupt window at row {row}, column {col}: {reason}")]
    CorruptWindow {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("window size {k} cannot hold charset {charset} ({size} characters)")]
    InvalidWindow {
        k: usize,
        charset: &'static str,
        size: usize,
    },

    #[error("image dimensions differ: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
}

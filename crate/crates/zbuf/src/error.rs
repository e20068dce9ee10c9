/// Errors raised by object buffer access and conversion.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("no such field `{path}`")]
    NoSuchField { path: String },
    #[error("field `{field}` expects {expected}, got {found}")]
    KindMismatch {
        field: String,
        expected: String,
        found: String,
    },
    #[error("field `{field}` expects {expected} elements, got {found}")]
    LengthMismatch {
        field: String,
        expected: usize,
        found: usize,
    },
    #[error("field `{field}` holds invalid UTF-8")]
    Utf8 { field: String },
    #[error("buffer too short: need at least {expected} bytes, got {actual}")]
    TooShort { expected: usize, actual: usize },
    #[error("slot of field `{field}` points outside the buffer (offset {offset}, length {length}, buffer {buffer_len} bytes)")]
    SlotOutOfBounds {
        field: String,
        offset: u32,
        length: u32,
        buffer_len: usize,
    },
    #[error("field `{field}`: payload of {length} bytes is not a multiple of the {element_size}-byte element size")]
    Misaligned {
        field: String,
        length: u32,
        element_size: usize,
    },
    #[error("field `{field}`: buffer would exceed 4 GiB")]
    TooLarge { field: String },
    #[error("invalid JSON: {0}")]
    JsonSyntax(String),
    #[error("unknown key `{key}`")]
    UnknownKey { key: String },
    #[error("field `{field}`: {value} is out of range")]
    IntegerRange { field: String, value: String },
}

use std::fmt;
use std::str::FromStr;

use md5::{Digest, Md5};

/// 128-bit message type identifier.
///
/// Computed as the MD5 digest of a type's canonical signature, read as a
/// big-endian integer. Rendered as 32 lowercase hex digits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeDigest(u128);

impl TypeDigest {
    pub const fn from_u128(value: u128) -> Self {
        TypeDigest(value)
    }

    pub const fn value(self) -> u128 {
        self.0
    }

    pub fn of_signature(signature: &str) -> Self {
        let hash: [u8; 16] = Md5::digest(signature.as_bytes()).into();
        TypeDigest(u128::from_be_bytes(hash))
    }

    pub fn to_be_bytes(self) -> [u8; 16] {
        self.0.to_be_bytes()
    }

    pub fn from_be_bytes(bytes: [u8; 16]) -> Self {
        TypeDigest(u128::from_be_bytes(bytes))
    }
}

impl fmt::Display for TypeDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:032x}", self.0)
    }
}

impl fmt::Debug for TypeDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeDigest({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid type digest `{0}`: expected 32 hex digits")]
pub struct ParseDigestError(String);

impl FromStr for TypeDigest {
    type Err = ParseDigestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() != 32 || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(ParseDigestError(s.to_string()));
        }
        u128::from_str_radix(s, 16)
            .map(TypeDigest)
            .map_err(|_| ParseDigestError(s.to_string()))
    }
}

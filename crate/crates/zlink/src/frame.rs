//! Message framing: 16-byte big-endian digest, u32 little-endian payload
//! length, payload.

use std::io::{self, Read};

use zbuf::TypeDigest;

pub const HEADER_SIZE: usize = 20;

/// Frames one message. Panics if the payload exceeds `u32::MAX` bytes.
pub fn encode(digest: TypeDigest, payload: &[u8]) -> Vec<u8> {
    let length = u32::try_from(payload.len()).expect("payload fits a u32 length");
    let mut frame = Vec::with_capacity(HEADER_SIZE + payload.len());
    frame.extend_from_slice(&digest.to_be_bytes());
    frame.extend_from_slice(&length.to_le_bytes());
    frame.extend_from_slice(payload);
    frame
}

/// Reads one frame. Returns `Ok(None)` on a clean end of stream between
/// frames; a stream cut inside a frame is an `UnexpectedEof` error.
pub fn read_frame(reader: &mut impl Read) -> io::Result<Option<(TypeDigest, Vec<u8>)>> {
    let mut header = [0u8; HEADER_SIZE];
    let mut filled = 0;
    while filled < HEADER_SIZE {
        match reader.read(&mut header[filled..]) {
            Ok(0) if filled == 0 => return Ok(None),
            Ok(0) => return Err(io::ErrorKind::UnexpectedEof.into()),
            Ok(n) => filled += n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => {}
            Err(e) => return Err(e),
        }
    }
    let digest = TypeDigest::from_be_bytes(header[..16].try_into().unwrap());
    let length = u32::from_le_bytes(header[16..].try_into().unwrap()) as u64;
    // Grow with the data actually received rather than trusting the length.
    let mut payload = Vec::new();
    reader.take(length).read_to_end(&mut payload)?;
    if payload.len() as u64 != length {
        return Err(io::ErrorKind::UnexpectedEof.into());
    }
    Ok(Some((digest, payload)))
}

use std::io;

use zbuf::TypeDigest;

use crate::uri::Uri;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid URI `{0}`")]
    InvalidUri(String),
    #[error("cannot bind {uri}: {source}")]
    BindFailed { uri: Uri, source: io::Error },
    #[error("digest {0} is already subscribed")]
    DuplicateSubscription(TypeDigest),
    #[error("endpoint `{0}` is already registered")]
    DuplicateEndpoint(String),
    #[error("session name is too long for a discovery beacon")]
    SessionTooLong,
    #[error(transparent)]
    Io(#[from] io::Error),
}

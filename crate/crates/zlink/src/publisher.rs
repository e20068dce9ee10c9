use std::io::{self, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::{self, JoinHandle};
use std::time::Duration;

use crossbeam_channel::{bounded, Sender};
use zbuf::{Serializable, TypeDigest};

use crate::beacon::{Beacon, BeaconEmitter};
use crate::error::Error;
use crate::frame;
use crate::session::Session;
use crate::uri::Uri;

/// Messages queued per subscriber connection before it is dropped.
pub const CHANNEL_CAPACITY: usize = 1024;

const ACCEPT_POLL: Duration = Duration::from_millis(10);

/// Sends messages to every connected subscriber.
///
/// Publishing never blocks: each connection has a bounded queue drained by
/// its own writer thread, and a connection whose queue is full is closed.
pub struct Publisher {
    uri: Uri,
    session: Session,
    shared: Arc<Shared>,
    acceptor: Option<JoinHandle<()>>,
    _beacon: Option<BeaconEmitter>,
}

struct Shared {
    alive: AtomicBool,
    channels: Mutex<Vec<Sender<Arc<[u8]>>>>,
}

impl Publisher {
    /// Binds to `uri` (all interfaces on an ephemeral port when `None`) and
    /// announces itself in `session` unless it is [`Session::Null`].
    pub fn new(uri: Option<Uri>, session: Session) -> Result<Publisher, Error> {
        let requested = uri.unwrap_or_else(|| Uri::new("0.0.0.0", 0));
        let listener = bind(&requested)?;
        let uri = requested.with_port(listener.local_addr()?.port());
        listener.set_nonblocking(true)?;

        let beacon = match &session {
            Session::Named(name) => {
                let beacon = Beacon {
                    session: name.clone(),
                    uri: uri.to_string(),
                };
                beacon.encode().ok_or(Error::SessionTooLong)?;
                Some(BeaconEmitter::start(&beacon)?)
            }
            Session::Null => None,
        };

        let shared = Arc::new(Shared {
            alive: AtomicBool::new(true),
            channels: Mutex::new(Vec::new()),
        });
        let acceptor = {
            let shared = shared.clone();
            thread::Builder::new()
                .name("zlink-accept".into())
                .spawn(move || accept_loop(listener, shared))?
        };
        Ok(Publisher {
            uri,
            session,
            shared,
            acceptor: Some(acceptor),
            _beacon: beacon,
        })
    }

    /// The bound address, with the concrete port.
    pub fn uri(&self) -> &Uri {
        &self.uri
    }

    pub fn session(&self) -> &Session {
        &self.session
    }

    /// Connections currently fed by this publisher.
    pub fn connection_count(&self) -> usize {
        self.shared.channels.lock().unwrap().len()
    }

    pub fn publish(&self, object: &impl Serializable) {
        self.publish_raw(object.type_digest(), &object.to_binary());
    }

    pub fn publish_raw(&self, digest: TypeDigest, payload: &[u8]) {
        let frame: Arc<[u8]> = frame::encode(digest, payload).into();
        self.shared
            .channels
            .lock()
            .unwrap()
            .retain(|channel| channel.try_send(frame.clone()).is_ok());
    }
}

impl Drop for Publisher {
    fn drop(&mut self) {
        self.shared.alive.store(false, Ordering::Relaxed);
        if let Some(acceptor) = self.acceptor.take() {
            let _ = acceptor.join();
        }
        self.shared.channels.lock().unwrap().clear();
    }
}

pub(crate) fn bind(uri: &Uri) -> Result<TcpListener, Error> {
    let bind_failed = |source| Error::BindFailed {
        uri: uri.clone(),
        source,
    };
    let addrs = uri.socket_addrs().map_err(bind_failed)?;
    let mut last = io::Error::new(io::ErrorKind::AddrNotAvailable, "host resolves to no address");
    for addr in addrs {
        match TcpListener::bind(addr) {
            Ok(listener) => return Ok(listener),
            Err(e) => last = e,
        }
    }
    Err(bind_failed(last))
}

fn accept_loop(listener: TcpListener, shared: Arc<Shared>) {
    while shared.alive.load(Ordering::Relaxed) {
        match listener.accept() {
            Ok((stream, _)) => {
                if let Ok(channel) = spawn_writer(stream) {
                    shared.channels.lock().unwrap().push(channel);
                }
            }
            Err(_) => thread::sleep(ACCEPT_POLL),
        }
    }
}

fn spawn_writer(mut stream: TcpStream) -> io::Result<Sender<Arc<[u8]>>> {
    stream.set_nonblocking(false)?;
    stream.set_nodelay(true)?;
    let (tx, rx) = bounded::<Arc<[u8]>>(CHANNEL_CAPACITY);
    thread::Builder::new().name("zlink-write".into()).spawn(move || {
        for frame in rx {
            if stream.write_all(&frame).is_err() {
                break;
            }
        }
        let _ = stream.shutdown(std::net::Shutdown::Both);
    })?;
    Ok(tx)
}

use std::collections::HashMap;
use std::io::BufReader;
use std::net::{Shutdown, TcpStream};
use std::sync::{Arc, Mutex};
use std::thread::{self, JoinHandle};
use std::time::Duration;

use crossbeam_channel::{bounded, Receiver as StopSignal, RecvTimeoutError, Sender};
use zbuf::{Serializable, TypeDigest};

use crate::beacon::BeaconListener;
use crate::error::Error;
use crate::frame;
use crate::group::{Event, Member, Payload, ReceiveGroup, Receiver};
use crate::session::Session;
use crate::uri::Uri;

pub const RETRY_INTERVAL: Duration = Duration::from_secs(1);

const CONNECT_TIMEOUT: Duration = Duration::from_secs(1);
const DISCOVERY_POLL: Duration = Duration::from_millis(200);

/// Where a subscriber gets its messages from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Every publisher announcing this session, now and later.
    Session(Session),
    /// Exactly this publisher, retried until it answers.
    Uri(Uri),
}

impl From<Session> for Target {
    fn from(session: Session) -> Target {
        Target::Session(session)
    }
}

impl From<Uri> for Target {
    fn from(uri: Uri) -> Target {
        Target::Uri(uri)
    }
}

type Handler = Arc<Mutex<dyn FnMut(&[u8]) + Send>>;

/// Receives messages for subscribed digests. Handlers run inside
/// `receive()` on the calling thread.
pub struct Subscriber {
    target: Target,
    group: ReceiveGroup,
    id: u64,
    core: Arc<Core>,
    stop: Option<Sender<()>>,
    link: Option<JoinHandle<()>>,
}

struct Core {
    handlers: Mutex<HashMap<TypeDigest, Handler>>,
    links: Mutex<Links>,
}

/// Peer connections; `None` marks a connect in progress.
struct Links {
    open: bool,
    peers: HashMap<Uri, Option<TcpStream>>,
}

impl Member for Core {
    fn dispatch(&self, payload: Payload) -> bool {
        let Payload::Message { digest, payload } = payload else {
            return false;
        };
        let handler = self.handlers.lock().unwrap().get(&digest).cloned();
        match handler {
            Some(handler) => {
                (handler.lock().unwrap())(&payload);
                true
            }
            None => false,
        }
    }
}

impl Subscriber {
    /// A subscriber with its own receive group.
    pub fn new(target: impl Into<Target>) -> Result<Subscriber, Error> {
        Subscriber::in_group(target, &ReceiveGroup::new())
    }

    /// A subscriber that shares `other`'s receive group and target.
    pub fn shared(other: &Subscriber) -> Result<Subscriber, Error> {
        Subscriber::in_group(other.target.clone(), &other.group)
    }

    /// A subscriber serviced by the `receive()` of `group`.
    pub fn in_group(target: impl Into<Target>, group: &ReceiveGroup) -> Result<Subscriber, Error> {
        let target = target.into();
        let core = Arc::new(Core {
            handlers: Mutex::new(HashMap::new()),
            links: Mutex::new(Links {
                open: true,
                peers: HashMap::new(),
            }),
        });
        let member: Arc<dyn Member> = core.clone();
        let id = group.join(Arc::downgrade(&member));
        let (stop, stopped) = bounded::<()>(0);
        let context = LinkContext {
            core: core.clone(),
            events: group.sender(),
            member: id,
        };
        let link = match &target {
            Target::Uri(uri) => {
                let uri = uri.clone();
                Some(spawn("zlink-connect", move || connect_loop(context, uri, stopped))?)
            }
            Target::Session(Session::Named(name)) => {
                let listener = BeaconListener::bind()?;
                let name = name.clone();
                Some(spawn("zlink-discover", move || discovery_loop(context, listener, name, stopped))?)
            }
            Target::Session(Session::Null) => None,
        };
        Ok(Subscriber {
            target,
            group: group.clone(),
            id,
            core,
            stop: Some(stop),
            link,
        })
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    /// Installs `handler` for messages carrying `digest`.
    pub fn subscribe_raw(
        &self,
        digest: TypeDigest,
        handler: impl FnMut(&[u8]) + Send + 'static,
    ) -> Result<(), Error> {
        let mut handlers = self.core.handlers.lock().unwrap();
        if handlers.contains_key(&digest) {
            return Err(Error::DuplicateSubscription(digest));
        }
        handlers.insert(digest, Arc::new(Mutex::new(handler)));
        Ok(())
    }

    /// Decodes matching messages into `object`. Payloads that fail to decode
    /// leave the object unchanged.
    pub fn subscribe<T: Serializable + Send + 'static>(&self, object: &Arc<Mutex<T>>) -> Result<(), Error> {
        self.subscribe_with(object, || {})
    }

    /// Like [`Subscriber::subscribe`], calling `updated` after each
    /// successful decode, with the object unlocked.
    pub fn subscribe_with<T: Serializable + Send + 'static>(
        &self,
        object: &Arc<Mutex<T>>,
        mut updated: impl FnMut() + Send + 'static,
    ) -> Result<(), Error> {
        let digest = object.lock().unwrap().type_digest();
        let object = object.clone();
        self.subscribe_raw(digest, move |payload| {
            let decoded = object.lock().unwrap().from_binary(payload).is_ok();
            if decoded {
                updated();
            }
        })
    }

    /// Removes the handler for `digest`; returns whether one existed.
    pub fn unsubscribe(&self, digest: TypeDigest) -> bool {
        self.core.handlers.lock().unwrap().remove(&digest).is_some()
    }

    /// Publishers this subscriber is currently connected to.
    pub fn connected_peers(&self) -> Vec<Uri> {
        let links = self.core.links.lock().unwrap();
        let mut peers: Vec<Uri> = links
            .peers
            .iter()
            .filter(|(_, stream)| stream.is_some())
            .map(|(uri, _)| uri.clone())
            .collect();
        peers.sort_by_key(|uri| uri.to_string());
        peers
    }
}

impl Receiver for Subscriber {
    fn group(&self) -> &ReceiveGroup {
        &self.group
    }
}

impl Drop for Subscriber {
    fn drop(&mut self) {
        self.group.leave(self.id);
        self.stop.take();
        {
            let mut links = self.core.links.lock().unwrap();
            links.open = false;
            for stream in links.peers.values().flatten() {
                let _ = stream.shutdown(Shutdown::Both);
            }
        }
        if let Some(link) = self.link.take() {
            let _ = link.join();
        }
    }
}

fn spawn(name: &str, f: impl FnOnce() + Send + 'static) -> std::io::Result<JoinHandle<()>> {
    thread::Builder::new().name(name.into()).spawn(f)
}

struct LinkContext {
    core: Arc<Core>,
    events: Sender<Event>,
    member: u64,
}

impl LinkContext {
    fn clone_context(&self) -> LinkContext {
        LinkContext {
            core: self.core.clone(),
            events: self.events.clone(),
            member: self.member,
        }
    }

    /// Claims `uri` for a new connection attempt; false if already linked.
    fn claim(&self, uri: &Uri) -> bool {
        let mut links = self.core.links.lock().unwrap();
        if !links.open || links.peers.contains_key(uri) {
            return false;
        }
        links.peers.insert(uri.clone(), None);
        true
    }

    fn release(&self, uri: &Uri) {
        self.core.links.lock().unwrap().peers.remove(uri);
    }

    /// Connects to a claimed `uri` and forwards frames until the stream
    /// ends, then releases the claim.
    fn run(&self, uri: &Uri) {
        if let Some(stream) = connect(uri) {
            let registered = {
                let mut links = self.core.links.lock().unwrap();
                match stream.try_clone() {
                    Ok(clone) if links.open => {
                        links.peers.insert(uri.clone(), Some(clone));
                        true
                    }
                    _ => false,
                }
            };
            if registered {
                self.forward(stream);
            }
        }
        self.release(uri);
    }

    fn forward(&self, stream: TcpStream) {
        let mut reader = BufReader::new(stream);
        while let Ok(Some((digest, payload))) = frame::read_frame(&mut reader) {
            let event = Event {
                member: self.member,
                payload: Payload::Message { digest, payload },
            };
            if self.events.send(event).is_err() {
                break;
            }
        }
    }
}

fn connect(uri: &Uri) -> Option<TcpStream> {
    let addrs = uri.socket_addrs().ok()?;
    addrs.iter().find_map(|addr| {
        let stream = TcpStream::connect_timeout(addr, CONNECT_TIMEOUT).ok()?;
        stream.set_nodelay(true).ok()?;
        Some(stream)
    })
}

fn connect_loop(context: LinkContext, uri: Uri, stopped: StopSignal<()>) {
    loop {
        if context.claim(&uri) {
            context.run(&uri);
        }
        if stopped.recv_timeout(RETRY_INTERVAL) != Err(RecvTimeoutError::Timeout) {
            return;
        }
    }
}

fn discovery_loop(context: LinkContext, mut listener: BeaconListener, session: String, stopped: StopSignal<()>) {
    let mut readers: Vec<JoinHandle<()>> = Vec::new();
    while stopped.try_recv() == Err(crossbeam_channel::TryRecvError::Empty) {
        let Ok(Some((beacon, uri))) = listener.recv(DISCOVERY_POLL) else {
            continue;
        };
        if beacon.session != session || !context.claim(&uri) {
            continue;
        }
        let reader = context.clone_context();
        let claimed = uri.clone();
        match spawn("zlink-read", move || reader.run(&uri)) {
            Ok(handle) => readers.push(handle),
            Err(_) => context.release(&claimed),
        }
        readers.retain(|handle| !handle.is_finished());
    }
    for reader in readers {
        let _ = reader.join();
    }
}

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, Weak};
use std::time::{Duration, Instant};

use crossbeam_channel::{unbounded, Receiver as Queue, Sender};
use zbuf::TypeDigest;

pub(crate) enum Payload {
    Message { digest: TypeDigest, payload: Vec<u8> },
    Request(tiny_http::Request),
}

pub(crate) struct Event {
    pub member: u64,
    pub payload: Payload,
}

/// Something that handles events on the `receive()` caller's thread.
pub(crate) trait Member: Send + Sync {
    /// Returns whether the event was processed: a handler fired or a
    /// request was answered.
    fn dispatch(&self, payload: Payload) -> bool;
}

/// A set of receivers that share one `receive()` call.
///
/// Network threads only enqueue events; all handlers run inside
/// [`ReceiveGroup::receive`]. Cloning yields another handle to the same group.
#[derive(Clone)]
pub struct ReceiveGroup {
    inner: Arc<Inner>,
}

struct Inner {
    tx: Sender<Event>,
    rx: Queue<Event>,
    members: Mutex<HashMap<u64, Weak<dyn Member>>>,
    next_id: AtomicU64,
}

impl ReceiveGroup {
    pub fn new() -> ReceiveGroup {
        let (tx, rx) = unbounded();
        ReceiveGroup {
            inner: Arc::new(Inner {
                tx,
                rx,
                members: Mutex::new(HashMap::new()),
                next_id: AtomicU64::new(1),
            }),
        }
    }

    pub(crate) fn join(&self, member: Weak<dyn Member>) -> u64 {
        let id = self.inner.next_id.fetch_add(1, Ordering::Relaxed);
        self.inner.members.lock().unwrap().insert(id, member);
        id
    }

    pub(crate) fn leave(&self, id: u64) {
        self.inner.members.lock().unwrap().remove(&id);
    }

    pub(crate) fn sender(&self) -> Sender<Event> {
        self.inner.tx.clone()
    }

    /// Number of events queued and not yet dispatched.
    pub fn pending(&self) -> usize {
        self.inner.rx.len()
    }

    pub fn same_group(&self, other: &ReceiveGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Dispatches queued events, waiting up to `timeout_ms` for the first
    /// one that is processed. Returns true if any handler fired or any HTTP
    /// request was answered. Events without a handler are discarded and do
    /// not end the wait.
    pub fn receive(&self, timeout_ms: u32) -> bool {
        let deadline = Instant::now() + Duration::from_millis(timeout_ms.into());
        loop {
            let Ok(first) = self.inner.rx.recv_deadline(deadline) else {
                return false;
            };
            let mut processed = self.dispatch(first);
            // Only what is queued now; a steady stream must not pin the caller.
            for _ in 0..self.inner.rx.len() {
                match self.inner.rx.try_recv() {
                    Ok(event) => processed |= self.dispatch(event),
                    Err(_) => break,
                }
            }
            if processed {
                return true;
            }
        }
    }

    fn dispatch(&self, event: Event) -> bool {
        let member = self.inner.members.lock().unwrap().get(&event.member).and_then(Weak::upgrade);
        match (member, event.payload) {
            (Some(member), payload) => member.dispatch(payload),
            (None, Payload::Request(request)) => {
                crate::http::respond_unavailable(request);
                true
            }
            (None, Payload::Message { .. }) => false,
        }
    }
}

impl Default for ReceiveGroup {
    fn default() -> ReceiveGroup {
        ReceiveGroup::new()
    }
}

/// Anything that takes part in a [`ReceiveGroup`]: subscribers and HTTP
/// servers.
pub trait Receiver {
    fn group(&self) -> &ReceiveGroup;

    /// Services every member of this receiver's group; see
    /// [`ReceiveGroup::receive`].
    fn receive(&self, timeout_ms: u32) -> bool {
        self.group().receive(timeout_ms)
    }
}

impl Receiver for ReceiveGroup {
    fn group(&self) -> &ReceiveGroup {
        self
    }
}

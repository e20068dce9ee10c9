//! UDP discovery beacons.
//!
//! A publisher in a named session announces itself once per second on a
//! multicast group. Datagram layout: `ZLNK`, version byte 1, then the session
//! and the publisher URI, each as a u16 little-endian length and UTF-8 bytes.

use std::collections::HashMap;
use std::io;
use std::net::{IpAddr, Ipv4Addr, SocketAddr, SocketAddrV4, UdpSocket};
use std::thread::{self, JoinHandle};
use std::time::Duration;

use crossbeam_channel::{bounded, RecvTimeoutError, Sender};
use socket2::{Domain, Protocol, SockAddr, Socket, Type};

use crate::uri::Uri;

pub const MULTICAST_GROUP: Ipv4Addr = Ipv4Addr::new(239, 255, 43, 21);
pub const PORT: u16 = 24117;
pub const INTERVAL: Duration = Duration::from_millis(1000);
pub const MAX_SIZE: usize = 512;

const MAGIC: &[u8; 4] = b"ZLNK";
const VERSION: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Beacon {
    pub session: String,
    pub uri: String,
}

impl Beacon {
    /// `None` if the datagram would exceed [`MAX_SIZE`].
    pub fn encode(&self) -> Option<Vec<u8>> {
        let mut out = Vec::with_capacity(MAX_SIZE);
        out.extend_from_slice(MAGIC);
        out.push(VERSION);
        for text in [&self.session, &self.uri] {
            let len = u16::try_from(text.len()).ok()?;
            out.extend_from_slice(&len.to_le_bytes());
            out.extend_from_slice(text.as_bytes());
        }
        (out.len() <= MAX_SIZE).then_some(out)
    }

    pub fn decode(data: &[u8]) -> Option<Beacon> {
        let rest = data.strip_prefix(MAGIC)?;
        let (&version, mut rest) = rest.split_first()?;
        if version != VERSION {
            return None;
        }
        let mut fields = [String::new(), String::new()];
        for field in &mut fields {
            let len = u16::from_le_bytes(rest.get(..2)?.try_into().ok()?) as usize;
            let bytes = rest.get(2..2 + len)?;
            *field = String::from_utf8(bytes.to_vec()).ok()?;
            rest = &rest[2 + len..];
        }
        if !rest.is_empty() {
            return None;
        }
        let [session, uri] = fields;
        Some(Beacon { session, uri })
    }
}

/// Sends a beacon immediately and then every [`INTERVAL`] until dropped.
pub struct BeaconEmitter {
    stop: Option<Sender<()>>,
    thread: Option<JoinHandle<()>>,
}

impl BeaconEmitter {
    pub fn start(beacon: &Beacon) -> io::Result<BeaconEmitter> {
        let datagram = beacon
            .encode()
            .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "beacon too large"))?;
        let sockets = Senders::open()?;
        let (stop, stopped) = bounded::<()>(0);
        let thread = thread::Builder::new().name("zlink-beacon".into()).spawn(move || loop {
            sockets.send(&datagram);
            if stopped.recv_timeout(INTERVAL) != Err(RecvTimeoutError::Timeout) {
                break;
            }
        })?;
        Ok(BeaconEmitter {
            stop: Some(stop),
            thread: Some(thread),
        })
    }
}

impl Drop for BeaconEmitter {
    fn drop(&mut self) {
        self.stop.take();
        if let Some(thread) = self.thread.take() {
            let _ = thread.join();
        }
    }
}

/// One socket on the default multicast interface and one pinned to loopback,
/// so beacons reach both the LAN and local peers on hosts without a
/// multicast route.
struct Senders {
    default: UdpSocket,
    loopback: UdpSocket,
}

impl Senders {
    fn open() -> io::Result<Senders> {
        let default = multicast_sender(None)?;
        let loopback = multicast_sender(Some(Ipv4Addr::LOCALHOST))?;
        Ok(Senders { default, loopback })
    }

    fn send(&self, datagram: &[u8]) {
        let group = SocketAddrV4::new(MULTICAST_GROUP, PORT);
        let a = self.default.send_to(datagram, group);
        let b = self.loopback.send_to(datagram, group);
        if a.is_err() && b.is_err() {
            let _ = self.default.set_broadcast(true);
            let _ = self.default.send_to(datagram, SocketAddrV4::new(Ipv4Addr::BROADCAST, PORT));
            let _ = self.loopback.send_to(datagram, SocketAddrV4::new(Ipv4Addr::new(127, 255, 255, 255), PORT));
        }
    }
}

fn multicast_sender(interface: Option<Ipv4Addr>) -> io::Result<UdpSocket> {
    let socket = Socket::new(Domain::IPV4, Type::DGRAM, Some(Protocol::UDP))?;
    socket.set_multicast_loop_v4(true)?;
    socket.set_multicast_ttl_v4(1)?;
    if let Some(interface) = interface {
        socket.set_multicast_if_v4(&interface)?;
    }
    socket.bind(&SockAddr::from(SocketAddrV4::new(Ipv4Addr::UNSPECIFIED, 0)))?;
    Ok(socket.into())
}

/// Receives beacons from the discovery group.
pub struct BeaconListener {
    socket: UdpSocket,
    local: HashMap<IpAddr, bool>,
}

impl BeaconListener {
    pub fn bind() -> io::Result<BeaconListener> {
        let socket = Socket::new(Domain::IPV4, Type::DGRAM, Some(Protocol::UDP))?;
        socket.set_reuse_address(true)?;
        #[cfg(all(unix, not(any(target_os = "linux", target_os = "android"))))]
        socket.set_reuse_port(true)?;
        socket.bind(&SockAddr::from(SocketAddrV4::new(Ipv4Addr::UNSPECIFIED, PORT)))?;
        let any = socket.join_multicast_v4(&MULTICAST_GROUP, &Ipv4Addr::UNSPECIFIED);
        let lo = socket.join_multicast_v4(&MULTICAST_GROUP, &Ipv4Addr::LOCALHOST);
        // Joining both fails on hosts where loopback is the default interface.
        if let (Err(e), Err(_)) = (any, lo) {
            return Err(e);
        }
        Ok(BeaconListener {
            socket: socket.into(),
            local: HashMap::new(),
        })
    }

    /// Waits up to `timeout` for the next valid beacon. A publisher bound to
    /// the wildcard address is reported at the datagram's source address,
    /// or at loopback when the source is this host, so that copies arriving
    /// on several interfaces name the same peer.
    pub fn recv(&mut self, timeout: Duration) -> io::Result<Option<(Beacon, Uri)>> {
        self.socket.set_read_timeout(Some(timeout.max(Duration::from_millis(1))))?;
        let mut buf = [0u8; MAX_SIZE + 1];
        let (len, from) = match self.socket.recv_from(&mut buf) {
            Ok(received) => received,
            Err(e) if matches!(e.kind(), io::ErrorKind::WouldBlock | io::ErrorKind::TimedOut) => return Ok(None),
            Err(e) => return Err(e),
        };
        let Some(beacon) = Beacon::decode(&buf[..len]) else {
            return Ok(None);
        };
        let Ok(mut uri) = Uri::parse(&beacon.uri) else {
            return Ok(None);
        };
        if uri.is_unspecified() {
            let source = from.ip();
            let local = *self.local.entry(source).or_insert_with(|| is_local(source));
            let host = if local { IpAddr::V4(Ipv4Addr::LOCALHOST) } else { source };
            uri = Uri::from(SocketAddr::new(host, uri.port()));
        }
        Ok(Some((beacon, uri)))
    }
}

/// Only addresses of this host can be bound.
fn is_local(ip: IpAddr) -> bool {
    ip.is_loopback() || ip.is_unspecified() || UdpSocket::bind(SocketAddr::new(ip, 0)).is_ok()
}

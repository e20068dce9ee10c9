//! Digest-typed publish-subscribe over TCP, session discovery over UDP
//! multicast, and a REST bridge, all serviced by one `receive()` loop.
//!
//! ```no_run
//! use std::sync::{Arc, Mutex};
//! use zlink::{Publisher, Receiver, Session, Subscriber};
//! # fn camera() -> zbuf::ObjectBuffer { unimplemented!() }
//!
//! let publisher = Publisher::new(Some("tcp://localhost".parse()?), Session::Null)?;
//! let subscriber = Subscriber::new(publisher.uri().clone())?;
//! let local = Arc::new(Mutex::new(camera()));
//! subscriber.subscribe(&local)?;
//!
//! publisher.publish(&camera());
//! subscriber.receive(100);
//! # Ok::<(), zlink::Error>(())
//! ```

pub mod beacon;
mod error;
pub mod frame;
mod group;
pub mod http;
mod publisher;
mod session;
mod subscriber;
mod uri;

pub use error::Error;
pub use group::{ReceiveGroup, Receiver};
pub use http::{endpoint_name, Access, HttpServer};
pub use publisher::{Publisher, CHANNEL_CAPACITY};
pub use session::{Session, SESSION_ENV};
pub use subscriber::{Subscriber, Target, RETRY_INTERVAL};
pub use uri::Uri;

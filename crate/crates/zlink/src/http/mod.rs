//! REST bridge: registered objects served over HTTP, with requests handled
//! inside `receive()`.
//!
//! Routes:
//! - `GET /registry`: endpoint name to verb list
//! - `GET /<endpoint>/schema`: the object's JSON Schema
//! - `GET /<endpoint>`: the object as JSON
//! - `PUT /<endpoint>`: partial JSON update, answered with an empty `200`

pub mod client;

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::{self, JoinHandle};
use std::time::Duration;

use tiny_http::{Header, Request, Response};
use zbuf::Serializable;

use crate::error::Error;
use crate::group::{Event, Member, Payload, ReceiveGroup, Receiver};
use crate::uri::Uri;

const FORWARD_POLL: Duration = Duration::from_millis(50);

/// Which verbs an endpoint accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Access {
    /// `GET` only.
    Read,
    /// `PUT` only.
    Write,
    ReadWrite,
}

impl Access {
    fn verbs(self) -> &'static [&'static str] {
        match self {
            Access::Read => &["GET"],
            Access::Write => &["PUT"],
            Access::ReadWrite => &["GET", "PUT"],
        }
    }
}

/// Endpoint path for a `::`-qualified type name: `tide::ResizeWindow`
/// becomes `tide/resize-window`.
pub fn endpoint_name(qualified_name: &str) -> String {
    let slashed = qualified_name.replace("::", "/");
    let mut out = String::with_capacity(slashed.len() + 4);
    let mut prev: Option<char> = None;
    for c in slashed.chars() {
        if c.is_ascii_uppercase() && prev.is_some_and(|p| p.is_ascii_lowercase() || p.is_ascii_digit()) {
            out.push('-');
        }
        out.push(c.to_ascii_lowercase());
        prev = Some(c);
    }
    out
}

type Getter = Box<dyn Fn() -> String + Send + Sync>;
type Putter = Box<dyn Fn(&str) -> Result<(), zbuf::Error> + Send + Sync>;

struct Endpoint {
    verbs: &'static [&'static str],
    schema: String,
    identity: usize,
    get: Getter,
    put: Putter,
}

#[derive(Default)]
struct Registry {
    endpoints: Mutex<BTreeMap<String, Arc<Endpoint>>>,
}

/// HTTP server whose requests are answered by the `receive()` of its group.
pub struct HttpServer {
    uri: Uri,
    group: ReceiveGroup,
    id: u64,
    registry: Arc<Registry>,
    server: Arc<tiny_http::Server>,
    alive: Arc<AtomicBool>,
    forwarder: Option<JoinHandle<()>>,
}

impl HttpServer {
    /// Binds to `uri` (all interfaces on an ephemeral port when `None`) in a
    /// new receive group.
    pub fn new(uri: Option<Uri>) -> Result<HttpServer, Error> {
        HttpServer::in_group(uri, &ReceiveGroup::new())
    }

    pub fn in_group(uri: Option<Uri>, group: &ReceiveGroup) -> Result<HttpServer, Error> {
        let requested = uri.unwrap_or_else(|| Uri::new("0.0.0.0", 0));
        let listener = crate::publisher::bind(&requested)?;
        let uri = requested.with_port(listener.local_addr()?.port());
        let server = tiny_http::Server::from_listener(listener, None).map_err(|e| Error::BindFailed {
            uri: uri.clone(),
            source: std::io::Error::other(e.to_string()),
        })?;
        let server = Arc::new(server);
        let registry = Arc::new(Registry::default());
        let member: Arc<dyn Member> = registry.clone();
        let id = group.join(Arc::downgrade(&member));
        let alive = Arc::new(AtomicBool::new(true));
        let forwarder = {
            let (server, alive, events) = (server.clone(), alive.clone(), group.sender());
            thread::Builder::new().name("zlink-http".into()).spawn(move || {
                while alive.load(Ordering::Relaxed) {
                    match server.recv_timeout(FORWARD_POLL) {
                        Ok(Some(request)) => {
                            let event = Event {
                                member: id,
                                payload: Payload::Request(request),
                            };
                            if events.send(event).is_err() {
                                break;
                            }
                        }
                        Ok(None) => {}
                        Err(_) => break,
                    }
                }
            })?
        };
        Ok(HttpServer {
            uri,
            group: group.clone(),
            id,
            registry,
            server,
            alive,
            forwarder: Some(forwarder),
        })
    }

    /// The bound address, with the concrete port.
    pub fn uri(&self) -> &Uri {
        &self.uri
    }

    pub fn local_addr(&self) -> Option<SocketAddr> {
        self.server.server_addr().to_ip()
    }

    /// Serves `object` under the endpoint derived from its type name.
    pub fn register<T: Serializable + Send + 'static>(
        &self,
        object: &Arc<Mutex<T>>,
        access: Access,
    ) -> Result<String, Error> {
        self.register_with(object, access, || {})
    }

    /// Like [`HttpServer::register`], calling `updated` after every accepted
    /// `PUT`, with the object unlocked.
    pub fn register_with<T: Serializable + Send + 'static>(
        &self,
        object: &Arc<Mutex<T>>,
        access: Access,
        updated: impl FnMut() + Send + 'static,
    ) -> Result<String, Error> {
        let (name, schema) = {
            let guard = object.lock().unwrap();
            (endpoint_name(&guard.qualified_name()), guard.json_schema())
        };
        let mut endpoints = self.registry.endpoints.lock().unwrap();
        if endpoints.contains_key(&name) {
            return Err(Error::DuplicateEndpoint(name));
        }
        let reader = object.clone();
        let writer = object.clone();
        let updated = Mutex::new(updated);
        let endpoint = Endpoint {
            verbs: access.verbs(),
            schema,
            identity: Arc::as_ptr(object) as *const () as usize,
            get: Box::new(move || reader.lock().unwrap().to_json()),
            put: Box::new(move |body| {
                writer.lock().unwrap().from_json(body)?;
                (updated.lock().unwrap())();
                Ok(())
            }),
        };
        endpoints.insert(name.clone(), Arc::new(endpoint));
        Ok(name)
    }

    /// Unregisters `object`; returns whether it was registered.
    pub fn remove<T: Serializable + Send + 'static>(&self, object: &Arc<Mutex<T>>) -> bool {
        let name = endpoint_name(&object.lock().unwrap().qualified_name());
        let identity = Arc::as_ptr(object) as *const () as usize;
        let mut endpoints = self.registry.endpoints.lock().unwrap();
        match endpoints.get(&name) {
            Some(endpoint) if endpoint.identity == identity => endpoints.remove(&name).is_some(),
            _ => false,
        }
    }

    /// Registered endpoint names and their verbs, as served on `/registry`.
    pub fn registry(&self) -> BTreeMap<String, Vec<&'static str>> {
        self.registry.snapshot()
    }
}

impl Receiver for HttpServer {
    fn group(&self) -> &ReceiveGroup {
        &self.group
    }
}

impl Drop for HttpServer {
    fn drop(&mut self) {
        self.group.leave(self.id);
        self.alive.store(false, Ordering::Relaxed);
        self.server.unblock();
        if let Some(forwarder) = self.forwarder.take() {
            let _ = forwarder.join();
        }
    }
}

struct Reply {
    status: u16,
    body: String,
    allow: Option<&'static [&'static str]>,
}

impl Reply {
    fn ok(body: String) -> Reply {
        Reply {
            status: 200,
            body,
            allow: None,
        }
    }

    fn error(status: u16, message: &str) -> Reply {
        Reply {
            status,
            body: format!("{{\"error\": {}}}", serde_json::Value::from(message)),
            allow: None,
        }
    }

    fn not_allowed(verbs: &'static [&'static str]) -> Reply {
        Reply {
            allow: Some(verbs),
            ..Reply::error(405, "method not allowed")
        }
    }
}

impl Registry {
    fn snapshot(&self) -> BTreeMap<String, Vec<&'static str>> {
        self.endpoints
            .lock()
            .unwrap()
            .iter()
            .map(|(name, endpoint)| (name.clone(), endpoint.verbs.to_vec()))
            .collect()
    }

    fn route(&self, request: &mut Request) -> Reply {
        let method = request.method().as_str().to_string();
        let path = request.url().split(['?', '#']).next().unwrap_or_default().to_string();
        if path == "/registry" {
            if method != "GET" {
                return Reply::not_allowed(&["GET"]);
            }
            let registry = serde_json::to_value(self.snapshot()).expect("registry serializes");
            return Reply::ok(zbuf::json_schema::render(&registry));
        }
        let name = path.strip_prefix('/').unwrap_or(&path);
        let lookup = |name: &str| self.endpoints.lock().unwrap().get(name).cloned();
        if let Some(endpoint) = lookup(name) {
            return match method.as_str() {
                "GET" if endpoint.verbs.contains(&"GET") => Reply::ok((endpoint.get)()),
                "PUT" if endpoint.verbs.contains(&"PUT") => put(&endpoint, request),
                _ => Reply::not_allowed(endpoint.verbs),
            };
        }
        if let Some(endpoint) = name.strip_suffix("/schema").and_then(lookup) {
            return match method.as_str() {
                "GET" => Reply::ok(endpoint.schema.clone()),
                _ => Reply::not_allowed(&["GET"]),
            };
        }
        Reply::error(404, &format!("no endpoint at {path}"))
    }
}

fn put(endpoint: &Endpoint, request: &mut Request) -> Reply {
    let has_header = |name: &'static str| request.headers().iter().any(|h| h.field.equiv(name));
    if !has_header("Content-Length") && !has_header("Transfer-Encoding") {
        return Reply::error(411, "PUT requires a Content-Length");
    }
    let mut body = String::new();
    if let Err(e) = request.as_reader().read_to_string(&mut body) {
        return Reply::error(400, &format!("unreadable body: {e}"));
    }
    match (endpoint.put)(&body) {
        Ok(()) => Reply::ok(String::new()),
        Err(e) => Reply::error(400, &e.to_string()),
    }
}

impl Member for Registry {
    fn dispatch(&self, payload: Payload) -> bool {
        let Payload::Request(mut request) = payload else {
            return false;
        };
        let reply = self.route(&mut request);
        respond(request, reply);
        true
    }
}

fn respond(request: Request, reply: Reply) {
    let mut response = Response::from_string(reply.body)
        .with_status_code(reply.status)
        .with_header(header("Content-Type", "application/json"));
    if let Some(verbs) = reply.allow {
        response.add_header(header("Allow", &verbs.join(", ")));
    }
    // A client that hung up gets no reply; nothing else to do.
    let _ = request.respond(response);
}

fn header(name: &str, value: &str) -> Header {
    Header::from_bytes(name.as_bytes(), value.as_bytes()).expect("static header is valid")
}

/// Answers a request whose server has gone away.
pub(crate) fn respond_unavailable(request: Request) {
    respond(request, Reply::error(503, "server is shutting down"));
}

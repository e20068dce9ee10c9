#![allow(dead_code)]

use std::sync::{Arc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use zbuf::{ObjectBuffer, SchemaDocument, Value};
use zlink::http::client::{self, Response};
use zlink::{Receiver, Uri};

pub const DEMO: &str = "
namespace demo;
table Vec3 { x: float; y: float; z: float; }
table Camera { origin: Vec3; lookAt: Vec3; up: Vec3; }
table ColorMap { name: string; points: [float]; }
";

pub const TIDE: &str = "
namespace tide;
table Open { uri: string; }
table Options { alphaBlending: bool; }
table ResizeWindow { width: uint32; height: uint32; }
";

pub fn demo() -> SchemaDocument {
    zbuf::parse_schema(DEMO).unwrap()
}

pub fn tide() -> SchemaDocument {
    zbuf::parse_schema(TIDE).unwrap()
}

pub fn object(doc: &SchemaDocument, name: &str) -> Arc<Mutex<ObjectBuffer>> {
    Arc::new(Mutex::new(ObjectBuffer::allocate(doc.type_def(name).unwrap())))
}

pub fn camera_at(doc: &SchemaDocument, x: f32, y: f32, z: f32) -> ObjectBuffer {
    let mut camera = ObjectBuffer::allocate(doc.type_def("Camera").unwrap());
    camera.set(&["origin", "x"], Value::Float32(x)).unwrap();
    camera.set(&["origin", "y"], Value::Float32(y)).unwrap();
    camera.set(&["origin", "z"], Value::Float32(z)).unwrap();
    camera
}

/// A session name no other test or process uses.
pub fn unique_session(tag: &str) -> zlink::Session {
    zlink::Session::Named(format!("{tag}-{}-{}", std::process::id(), rand::random::<u64>()))
}

pub fn wait_until(timeout: Duration, mut condition: impl FnMut() -> bool) -> bool {
    let deadline = Instant::now() + timeout;
    while Instant::now() < deadline {
        if condition() {
            return true;
        }
        thread::sleep(Duration::from_millis(5));
    }
    condition()
}

/// Issues a request from a helper thread while this thread services
/// `receiver`, as a real application loop would.
pub fn call(receiver: &impl Receiver, uri: &Uri, method: &str, path: &str, body: Option<&str>) -> Response {
    let (uri, method, path, body) = (uri.clone(), method.to_string(), path.to_string(), body.map(String::from));
    serve_until_done(receiver, move || client::request(&uri, &method, &path, body.as_deref()))
}

pub fn call_raw(receiver: &impl Receiver, uri: &Uri, raw: &str) -> Response {
    let (uri, raw) = (uri.clone(), raw.to_string());
    serve_until_done(receiver, move || client::send_raw(&uri, raw.as_bytes()))
}

fn serve_until_done(
    receiver: &impl Receiver,
    request: impl FnOnce() -> std::io::Result<Response> + Send + 'static,
) -> Response {
    let handle = thread::spawn(request);
    let deadline = Instant::now() + Duration::from_secs(5);
    while !handle.is_finished() {
        assert!(Instant::now() < deadline, "request not answered");
        receiver.receive(20);
    }
    handle.join().unwrap().expect("request completes")
}

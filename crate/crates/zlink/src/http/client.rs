//! Minimal blocking HTTP/1.1 client for tools and tests.

use std::io::{self, BufRead, BufReader, Read, Write};
use std::net::TcpStream;
use std::time::Duration;

use crate::uri::Uri;

const TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub status: u16,
    pub headers: Vec<(String, String)>,
    pub body: String,
}

impl Response {
    pub fn header(&self, name: &str) -> Option<&str> {
        self.headers
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, v)| v.as_str())
    }
}

/// Sends one request on a fresh connection. A wildcard host is reached via
/// loopback.
pub fn request(uri: &Uri, method: &str, path: &str, body: Option<&str>) -> io::Result<Response> {
    let host = if uri.is_unspecified() { "127.0.0.1" } else { uri.host() };
    let mut raw = format!("{method} {path} HTTP/1.1\r\nHost: {host}:{}\r\nConnection: close\r\n", uri.port());
    if let Some(body) = body {
        raw.push_str(&format!("Content-Type: application/json\r\nContent-Length: {}\r\n", body.len()));
    }
    raw.push_str("\r\n");
    raw.push_str(body.unwrap_or_default());
    send_raw(uri, raw.as_bytes())
}

pub fn get(uri: &Uri, path: &str) -> io::Result<Response> {
    request(uri, "GET", path, None)
}

pub fn put(uri: &Uri, path: &str, body: &str) -> io::Result<Response> {
    request(uri, "PUT", path, Some(body))
}

/// Writes `raw` verbatim and parses the reply.
pub fn send_raw(uri: &Uri, raw: &[u8]) -> io::Result<Response> {
    let target = if uri.is_unspecified() {
        Uri::new("127.0.0.1", uri.port())
    } else {
        uri.clone()
    };
    let addrs = target.socket_addrs()?;
    let mut stream = addrs
        .iter()
        .find_map(|addr| TcpStream::connect_timeout(addr, TIMEOUT).ok())
        .ok_or_else(|| io::Error::new(io::ErrorKind::ConnectionRefused, format!("cannot connect to {uri}")))?;
    stream.set_read_timeout(Some(TIMEOUT))?;
    stream.write_all(raw)?;
    read_response(BufReader::new(stream))
}

fn read_response(mut reader: impl BufRead) -> io::Result<Response> {
    let invalid = |what: &str| io::Error::new(io::ErrorKind::InvalidData, what.to_string());
    let mut line = String::new();
    reader.read_line(&mut line)?;
    let status = line
        .split_whitespace()
        .nth(1)
        .and_then(|code| code.parse().ok())
        .ok_or_else(|| invalid("malformed status line"))?;
    let mut headers = Vec::new();
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            return Err(invalid("truncated headers"));
        }
        let line = line.trim_end();
        if line.is_empty() {
            break;
        }
        let (name, value) = line.split_once(':').ok_or_else(|| invalid("malformed header"))?;
        headers.push((name.trim().to_string(), value.trim().to_string()));
    }
    let length = headers
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case("Content-Length"))
        .and_then(|(_, v)| v.parse::<u64>().ok());
    let mut body = Vec::new();
    match length {
        Some(length) => {
            reader.take(length).read_to_end(&mut body)?;
        }
        None => {
            reader.read_to_end(&mut body)?;
        }
    }
    let body = String::from_utf8(body).map_err(|_| invalid("body is not UTF-8"))?;
    Ok(Response { status, headers, body })
}

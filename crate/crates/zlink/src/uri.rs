use std::fmt;
use std::io;
use std::net::{SocketAddr, ToSocketAddrs};
use std::str::FromStr;

use crate::error::Error;

/// A TCP endpoint address, rendered as `tcp://host:port`.
///
/// Accepted forms are `tcp://host:port`, `host:port`, `tcp://host` (port 0)
/// and `:port` (all interfaces). Port 0 asks for an ephemeral port at bind
/// time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Uri {
    host: String,
    port: u16,
}

impl Uri {
    pub fn new(host: impl Into<String>, port: u16) -> Uri {
        let host = host.into();
        Uri {
            host: if host.is_empty() { "0.0.0.0".to_string() } else { host },
            port,
        }
    }

    pub fn parse(text: &str) -> Result<Uri, Error> {
        text.parse()
    }

    pub fn host(&self) -> &str {
        &self.host
    }

    pub fn port(&self) -> u16 {
        self.port
    }

    pub fn with_port(&self, port: u16) -> Uri {
        Uri {
            host: self.host.clone(),
            port,
        }
    }

    /// True when the host is the wildcard address.
    pub fn is_unspecified(&self) -> bool {
        matches!(self.host.parse::<std::net::IpAddr>(), Ok(ip) if ip.is_unspecified())
    }

    pub fn socket_addrs(&self) -> io::Result<Vec<SocketAddr>> {
        let host = self.host.trim_start_matches('[').trim_end_matches(']');
        Ok((host, self.port).to_socket_addrs()?.collect())
    }
}

impl FromStr for Uri {
    type Err = Error;

    fn from_str(text: &str) -> Result<Uri, Error> {
        let invalid = || Error::InvalidUri(text.to_string());
        let rest = match text.split_once("://") {
            Some(("tcp", rest)) => rest,
            Some(_) => return Err(invalid()),
            None => text,
        };
        let rest = rest.strip_suffix('/').unwrap_or(rest);
        if rest.contains('/') || rest.chars().any(char::is_whitespace) {
            return Err(invalid());
        }
        // The last colon separates the port unless it sits inside brackets.
        let (host, port) = match rest.rfind(':') {
            Some(i) if !rest[i..].contains(']') => {
                let port = rest[i + 1..].parse::<u16>().map_err(|_| invalid())?;
                (&rest[..i], port)
            }
            _ => (rest, 0),
        };
        if host.is_empty() && !rest.starts_with(':') {
            return Err(invalid());
        }
        Ok(Uri::new(host, port))
    }
}

impl fmt::Display for Uri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tcp://{}:{}", self.host, self.port)
    }
}

impl From<SocketAddr> for Uri {
    fn from(addr: SocketAddr) -> Uri {
        match addr {
            SocketAddr::V4(v4) => Uri::new(v4.ip().to_string(), v4.port()),
            SocketAddr::V6(v6) => Uri::new(format!("[{}]", v6.ip()), v6.port()),
        }
    }
}

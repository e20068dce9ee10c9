use std::env;
use std::fmt;

/// Environment variable that overrides the default session name.
pub const SESSION_ENV: &str = "ZLINK_SESSION";

/// Discovery scope. Publishers and subscribers only find each other within
/// the same named session; [`Session::Null`] disables discovery.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Session {
    Named(String),
    Null,
}

impl Session {
    /// A named session; an empty name yields `None`.
    pub fn named(name: impl Into<String>) -> Option<Session> {
        let name = name.into();
        (!name.is_empty()).then_some(Session::Named(name))
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Session::Named(name) => Some(name),
            Session::Null => None,
        }
    }
}

impl Default for Session {
    /// `$ZLINK_SESSION` if set, else the user name, else `"zlink"`.
    fn default() -> Session {
        [SESSION_ENV, "USER", "LOGNAME", "USERNAME"]
            .iter()
            .filter_map(|var| env::var(var).ok())
            .find_map(Session::named)
            .unwrap_or_else(|| Session::Named("zlink".to_string()))
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Session::Named(name) => f.write_str(name),
            Session::Null => f.write_str("<null>"),
        }
    }
}

//! Schema-defined objects that live in one contiguous byte buffer.
//!
//! A [`SchemaDocument`] is parsed from schema text. Each table in it gets a
//! canonical signature and a 128-bit [`TypeDigest`], and can be instantiated
//! as an [`ObjectBuffer`] with reflective `get`/`set`, binary encoding and
//! JSON conversion.
//!
//! ```
//! use zbuf::{parse_schema, ObjectBuffer, Value};
//!
//! let doc = parse_schema("namespace demo; table Vec3 { x: float; y: float; z: float; }").unwrap();
//! let vec3 = doc.type_def("Vec3").unwrap();
//! let mut v = ObjectBuffer::allocate(vec3);
//! v.set(&["x"], Value::Float32(1.0)).unwrap();
//! assert_eq!(v.to_json(), r#"{"x":1.0,"y":0.0,"z":0.0}"#);
//! assert_eq!(vec3.canonical_signature(), "demo.Vec3{x:float,y:float,z:float}");
//! ```

mod digest;
mod error;
mod json;
pub mod json_schema;
mod layout;
mod nested;
pub mod schema;
mod serializable;
mod value;

pub use digest::{ParseDigestError, TypeDigest};
pub use error::Error;
pub use json_schema::json_schema;
pub use layout::ObjectBuffer;
pub use nested::NestedMut;
pub use schema::{parse_schema, FieldDef, FieldKind, ScalarKind, SchemaDocument, SchemaError, TypeDef};
pub use serializable::Serializable;
pub use value::{FieldType, Value};

/// Canonical signature of `ty`; see [`TypeDef::canonical_signature`].
pub fn canonical_signature(ty: &TypeDef) -> &str {
    ty.canonical_signature()
}

/// Type digest of `ty`: MD5 of its canonical signature.
pub fn type_digest(ty: &TypeDef) -> TypeDigest {
    ty.digest()
}

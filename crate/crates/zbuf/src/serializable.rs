use crate::digest::TypeDigest;
use crate::error::Error;
use crate::json_schema::json_schema;
use crate::layout::ObjectBuffer;

/// An object that can travel over pub-sub and be served over HTTP.
#[allow(clippy::wrong_self_convention)]
pub trait Serializable {
    fn type_digest(&self) -> TypeDigest;

    /// Fully qualified type name, namespace segments joined by `::`.
    fn qualified_name(&self) -> String;

    fn to_binary(&self) -> Vec<u8>;

    /// Replaces the object's state with the decoded `data`.
    fn from_binary(&mut self, data: &[u8]) -> Result<(), Error>;

    fn to_json(&self) -> String;

    /// Partial update from a JSON object.
    fn from_json(&mut self, json: &str) -> Result<(), Error>;

    fn json_schema(&self) -> String;
}

impl Serializable for ObjectBuffer {
    fn type_digest(&self) -> TypeDigest {
        self.digest()
    }

    fn qualified_name(&self) -> String {
        self.type_def().qualified_name()
    }

    fn to_binary(&self) -> Vec<u8> {
        ObjectBuffer::to_binary(self)
    }

    fn from_binary(&mut self, data: &[u8]) -> Result<(), Error> {
        *self = ObjectBuffer::from_binary(self.type_def(), data)?;
        Ok(())
    }

    fn to_json(&self) -> String {
        ObjectBuffer::to_json(self)
    }

    fn from_json(&mut self, json: &str) -> Result<(), Error> {
        ObjectBuffer::from_json(self, json)
    }

    fn json_schema(&self) -> String {
        json_schema(self.type_def())
    }
}

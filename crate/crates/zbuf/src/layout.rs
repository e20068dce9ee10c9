//! Contiguous-buffer object model.
//!
//! An object is one byte buffer: a *static section* of `static_size` bytes
//! followed by a *heap*. Static fields are packed in declaration order,
//! little-endian, without padding. Every dynamic field (string, vector,
//! dynamic nested table) owns an 8-byte slot in the static section holding a
//! `u32` offset from the buffer start and a `u32` byte length; `(0, 0)` is the
//! empty value.
//!
//! Setting a dynamic field appends its payload to the end of the buffer and
//! re-points the slot, leaving the old payload behind as garbage. The
//! canonical form produced by [`ObjectBuffer::to_binary`] and
//! [`ObjectBuffer::compact`] stores nonempty payloads in field declaration
//! order right after the static section. A nested dynamic table is stored as
//! its own canonical buffer, with offsets relative to its own start; a nested
//! table equal to its default value is stored as an empty slot.

use std::fmt;
use std::sync::Arc;

use crate::digest::TypeDigest;
use crate::error::Error;
use crate::schema::{FieldKind, ScalarKind, TypeDef, SLOT_SIZE};
use crate::value::Value;

#[derive(Clone)]
pub struct ObjectBuffer {
    ty: Arc<TypeDef>,
    bytes: Vec<u8>,
}

impl ObjectBuffer {
    /// A zeroed object: all scalars zero, all dynamic fields empty.
    pub fn allocate(ty: &Arc<TypeDef>) -> ObjectBuffer {
        ObjectBuffer {
            ty: ty.clone(),
            bytes: vec![0; ty.static_size()],
        }
    }

    /// Decodes `data`, which may hold payloads in any order (even
    /// overlapping) as long as every slot is in bounds. The result is stored
    /// in canonical form.
    pub fn from_binary(ty: &Arc<TypeDef>, data: &[u8]) -> Result<ObjectBuffer, Error> {
        let bytes = canonicalize(ty, data, true, "")?;
        Ok(ObjectBuffer {
            ty: ty.clone(),
            bytes,
        })
    }

    /// Canonical encoding; a pure function of the field values.
    pub fn to_binary(&self) -> Vec<u8> {
        canonicalize(&self.ty, &self.bytes, false, "").expect("live object buffers are always valid")
    }

    /// Rewrites the buffer in canonical form, dropping stale heap payloads.
    pub fn compact(&mut self) {
        self.bytes = self.to_binary();
    }

    pub fn type_def(&self) -> &Arc<TypeDef> {
        &self.ty
    }

    pub fn digest(&self) -> TypeDigest {
        self.ty.digest()
    }

    /// The live buffer, including any stale heap regions.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Two objects are field-equal when they have the same type and the same
    /// canonical encoding. Floats therefore compare bitwise.
    pub fn field_eq(&self, other: &ObjectBuffer) -> bool {
        self.digest() == other.digest() && self.to_binary() == other.to_binary()
    }

    pub fn get(&self, path: &[&str]) -> Result<Value, Error> {
        let no_such_field = || Error::NoSuchField {
            path: path.join("."),
        };
        let (first, rest) = path.split_first().ok_or_else(no_such_field)?;
        let (index, _) = self.ty.field(first).ok_or_else(no_such_field)?;
        let value = self.field(index);
        if rest.is_empty() {
            return Ok(value);
        }
        match value {
            Value::Object(nested) => nested.get(rest).map_err(|e| match e {
                Error::NoSuchField { .. } => no_such_field(),
                other => other,
            }),
            _ => Err(no_such_field()),
        }
    }

    pub fn set(&mut self, path: &[&str], value: Value) -> Result<(), Error> {
        let no_such_field = || Error::NoSuchField {
            path: path.join("."),
        };
        let (first, rest) = path.split_first().ok_or_else(no_such_field)?;
        let (index, _) = self.ty.field(first).ok_or_else(no_such_field)?;
        if rest.is_empty() {
            return self.set_field(index, value);
        }
        match self.field(index) {
            Value::Object(mut nested) => {
                nested.set(rest, value).map_err(|e| match e {
                    Error::NoSuchField { .. } => no_such_field(),
                    other => other,
                })?;
                self.set_field(index, Value::Object(nested))
            }
            _ => Err(no_such_field()),
        }
    }

    /// Value of the field at `index` in declaration order.
    ///
    /// Panics if `index` is out of range for the type.
    pub fn field(&self, index: usize) -> Value {
        let field = &self.ty.fields()[index];
        let at = field.offset();
        let region = &self.bytes[at..at + field.kind().static_size()];
        if field.is_static() {
            return decode_static(field.kind(), region);
        }
        let (offset, length) = read_slot(region);
        let payload = if length == 0 {
            &[][..]
        } else {
            &self.bytes[offset as usize..offset as usize + length as usize]
        };
        decode_payload(field.kind(), payload)
    }

    /// Stores `value` into the field at `index`.
    ///
    /// Panics if `index` is out of range for the type.
    pub fn set_field(&mut self, index: usize, value: Value) -> Result<(), Error> {
        let ty = self.ty.clone();
        let field = &ty.fields()[index];
        let at = field.offset();
        let size = field.kind().static_size();
        if field.is_static() {
            let mut encoded = vec![0; size];
            encode_static(field.kind(), &value, &mut encoded, field.name())?;
            self.bytes[at..at + size].copy_from_slice(&encoded);
            return Ok(());
        }
        let payload = encode_payload(field.kind(), &value, field.name())?;
        if payload.is_empty() {
            write_slot(&mut self.bytes[at..at + SLOT_SIZE], 0, 0);
            return Ok(());
        }
        let too_large = || Error::TooLarge {
            field: field.name().to_string(),
        };
        let offset = u32::try_from(self.bytes.len()).map_err(|_| too_large())?;
        let length = u32::try_from(payload.len()).map_err(|_| too_large())?;
        offset.checked_add(length).ok_or_else(too_large)?;
        self.bytes.extend_from_slice(&payload);
        write_slot(&mut self.bytes[at..at + SLOT_SIZE], offset, length);
        Ok(())
    }
}

impl PartialEq for ObjectBuffer {
    fn eq(&self, other: &Self) -> bool {
        self.field_eq(other)
    }
}

impl fmt::Debug for ObjectBuffer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjectBuffer")
            .field("type", &self.ty.qualified_name())
            .field("len", &self.bytes.len())
            .field("json", &self.to_json())
            .finish()
    }
}

fn read_slot(slot: &[u8]) -> (u32, u32) {
    let offset = u32::from_le_bytes(slot[0..4].try_into().expect("4-byte offset"));
    let length = u32::from_le_bytes(slot[4..8].try_into().expect("4-byte length"));
    (offset, length)
}

fn write_slot(slot: &mut [u8], offset: u32, length: u32) {
    slot[0..4].copy_from_slice(&offset.to_le_bytes());
    slot[4..8].copy_from_slice(&length.to_le_bytes());
}

fn is_bytes_kind(kind: &FieldKind) -> bool {
    *kind == FieldKind::Scalar(ScalarKind::UInt8)
}

fn element_region(bytes: &[u8], size: usize, i: usize) -> &[u8] {
    &bytes[i * size..(i + 1) * size]
}

fn decode_scalar(kind: ScalarKind, b: &[u8]) -> Value {
    macro_rules! le {
        ($ty:ty) => {
            <$ty>::from_le_bytes(b.try_into().expect("scalar width"))
        };
    }
    match kind {
        ScalarKind::Bool => Value::Bool(b[0] != 0),
        ScalarKind::Int8 => Value::Int8(le!(i8)),
        ScalarKind::Int16 => Value::Int16(le!(i16)),
        ScalarKind::Int32 => Value::Int32(le!(i32)),
        ScalarKind::Int64 => Value::Int64(le!(i64)),
        ScalarKind::Int128 => Value::Int128(le!(i128)),
        ScalarKind::UInt8 => Value::UInt8(b[0]),
        ScalarKind::UInt16 => Value::UInt16(le!(u16)),
        ScalarKind::UInt32 => Value::UInt32(le!(u32)),
        ScalarKind::UInt64 => Value::UInt64(le!(u64)),
        ScalarKind::UInt128 => Value::UInt128(le!(u128)),
        ScalarKind::Float32 => Value::Float32(le!(f32)),
        ScalarKind::Float64 => Value::Float64(le!(f64)),
    }
}

fn decode_elements(element: &FieldKind, bytes: &[u8], count: usize) -> Value {
    if is_bytes_kind(element) {
        return Value::Bytes(bytes.to_vec());
    }
    let size = element.static_size();
    Value::List(
        (0..count)
            .map(|i| decode_static(element, element_region(bytes, size, i)))
            .collect(),
    )
}

fn decode_static(kind: &FieldKind, bytes: &[u8]) -> Value {
    match kind {
        FieldKind::Scalar(s) => decode_scalar(*s, bytes),
        FieldKind::Array { element, len } => decode_elements(element, bytes, *len as usize),
        FieldKind::Nested(ty) => Value::Object(ObjectBuffer {
            ty: ty.clone(),
            bytes: bytes.to_vec(),
        }),
        FieldKind::String | FieldKind::Vector(_) => unreachable!("dynamic kind in static section"),
    }
}

fn decode_payload(kind: &FieldKind, payload: &[u8]) -> Value {
    match kind {
        FieldKind::String => Value::String(
            std::str::from_utf8(payload)
                .expect("string payloads are validated on write")
                .to_string(),
        ),
        FieldKind::Vector(element) => {
            let count = payload.len() / element.static_size();
            decode_elements(element, payload, count)
        }
        FieldKind::Nested(ty) if payload.is_empty() => Value::Object(ObjectBuffer::allocate(ty)),
        FieldKind::Nested(ty) => Value::Object(ObjectBuffer {
            ty: ty.clone(),
            bytes: payload.to_vec(),
        }),
        _ => unreachable!("static kind behind a slot"),
    }
}

fn kind_mismatch(kind: &FieldKind, value: &Value, field: &str) -> Error {
    Error::KindMismatch {
        field: field.to_string(),
        expected: kind.to_text(),
        found: value.tag().to_string(),
    }
}

fn encode_scalar(kind: ScalarKind, value: &Value, out: &mut [u8], field: &str) -> Result<(), Error> {
    match (kind, value) {
        (ScalarKind::Bool, Value::Bool(v)) => out[0] = *v as u8,
        (ScalarKind::Int8, Value::Int8(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::Int16, Value::Int16(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::Int32, Value::Int32(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::Int64, Value::Int64(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::Int128, Value::Int128(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::UInt8, Value::UInt8(v)) => out[0] = *v,
        (ScalarKind::UInt16, Value::UInt16(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::UInt32, Value::UInt32(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::UInt64, Value::UInt64(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::UInt128, Value::UInt128(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::Float32, Value::Float32(v)) => out.copy_from_slice(&v.to_le_bytes()),
        (ScalarKind::Float64, Value::Float64(v)) => out.copy_from_slice(&v.to_le_bytes()),
        _ => return Err(kind_mismatch(&FieldKind::Scalar(kind), value, field)),
    }
    Ok(())
}

/// Encodes a list-like value into consecutive element regions of `out`.
fn encode_elements(
    container: &FieldKind,
    element: &FieldKind,
    value: &Value,
    out: &mut [u8],
    field: &str,
) -> Result<(), Error> {
    let size = element.static_size();
    match value {
        Value::Bytes(bytes) if is_bytes_kind(element) => out.copy_from_slice(bytes),
        Value::List(items) => {
            for (i, item) in items.iter().enumerate() {
                encode_static(element, item, &mut out[i * size..(i + 1) * size], field)?;
            }
        }
        other => return Err(kind_mismatch(container, other, field)),
    }
    Ok(())
}

fn element_count(value: &Value) -> Option<usize> {
    match value {
        Value::Bytes(b) => Some(b.len()),
        Value::List(items) => Some(items.len()),
        _ => None,
    }
}

fn encode_static(kind: &FieldKind, value: &Value, out: &mut [u8], field: &str) -> Result<(), Error> {
    match kind {
        FieldKind::Scalar(s) => encode_scalar(*s, value, out, field),
        FieldKind::Array { element, len } => {
            let count = element_count(value).ok_or_else(|| kind_mismatch(kind, value, field))?;
            if count != *len as usize {
                return Err(Error::LengthMismatch {
                    field: field.to_string(),
                    expected: *len as usize,
                    found: count,
                });
            }
            encode_elements(kind, element, value, out, field)
        }
        FieldKind::Nested(ty) => match value {
            Value::Object(obj) if obj.digest() == ty.digest() => {
                out.copy_from_slice(&obj.bytes[..ty.static_size()]);
                Ok(())
            }
            other => Err(kind_mismatch(kind, other, field)),
        },
        FieldKind::String | FieldKind::Vector(_) => unreachable!("dynamic kind in static section"),
    }
}

fn encode_payload(kind: &FieldKind, value: &Value, field: &str) -> Result<Vec<u8>, Error> {
    match (kind, value) {
        (FieldKind::String, Value::String(s)) => Ok(s.as_bytes().to_vec()),
        (FieldKind::String, Value::Bytes(b)) => match std::str::from_utf8(b) {
            Ok(_) => Ok(b.clone()),
            Err(_) => Err(Error::Utf8 {
                field: field.to_string(),
            }),
        },
        (FieldKind::Vector(element), _) => {
            let count = element_count(value).ok_or_else(|| kind_mismatch(kind, value, field))?;
            let mut out = vec![0; count * element.static_size()];
            encode_elements(kind, element, value, &mut out, field)?;
            Ok(out)
        }
        (FieldKind::Nested(ty), Value::Object(obj)) if obj.digest() == ty.digest() => {
            let bytes = obj.to_binary();
            if bytes.iter().all(|&b| b == 0) {
                Ok(Vec::new())
            } else {
                Ok(bytes)
            }
        }
        _ => Err(kind_mismatch(kind, value, field)),
    }
}

/// Rewrites non-canonical bools (any nonzero byte) to 1.
fn normalize_static(kind: &FieldKind, bytes: &mut [u8]) {
    match kind {
        FieldKind::Scalar(ScalarKind::Bool) => {
            if bytes[0] != 0 {
                bytes[0] = 1;
            }
        }
        FieldKind::Scalar(_) => {}
        FieldKind::Array { element, len } => {
            let size = element.static_size();
            for i in 0..*len as usize {
                normalize_static(element, &mut bytes[i * size..(i + 1) * size]);
            }
        }
        FieldKind::Nested(ty) => {
            for field in ty.fields() {
                let at = field.offset();
                normalize_static(field.kind(), &mut bytes[at..at + field.kind().static_size()]);
            }
        }
        FieldKind::String | FieldKind::Vector(_) => {}
    }
}

/// Validates `src` as an encoding of `ty` and returns its canonical form.
///
/// The static section is copied verbatim (bools are rewritten when
/// `normalize` is set); each nonempty payload is appended in declaration
/// order and its slot rewritten.
fn canonicalize(ty: &TypeDef, src: &[u8], normalize: bool, prefix: &str) -> Result<Vec<u8>, Error> {
    let static_size = ty.static_size();
    if src.len() < static_size {
        return Err(Error::TooShort {
            expected: static_size,
            actual: src.len(),
        });
    }
    let mut out = Vec::with_capacity(src.len());
    out.extend_from_slice(&src[..static_size]);
    for field in ty.fields() {
        let at = field.offset();
        let kind = field.kind();
        if field.is_static() {
            if normalize {
                normalize_static(kind, &mut out[at..at + kind.static_size()]);
            }
            continue;
        }
        let name = format!("{prefix}{}", field.name());
        let (offset, length) = read_slot(&src[at..at + SLOT_SIZE]);
        let payload = if length == 0 {
            Vec::new()
        } else {
            let start = offset as usize;
            let end = start + length as usize;
            if start < static_size || end > src.len() {
                return Err(Error::SlotOutOfBounds {
                    field: name,
                    offset,
                    length,
                    buffer_len: src.len(),
                });
            }
            canonical_payload(kind, &src[start..end], normalize, &name)?
        };
        let slot = &mut out[at..at + SLOT_SIZE];
        if payload.is_empty() {
            write_slot(slot, 0, 0);
            continue;
        }
        let too_large = || Error::TooLarge { field: name.clone() };
        let new_offset = u32::try_from(out.len()).map_err(|_| too_large())?;
        let new_length = u32::try_from(payload.len()).map_err(|_| too_large())?;
        new_offset.checked_add(new_length).ok_or_else(too_large)?;
        write_slot(&mut out[at..at + SLOT_SIZE], new_offset, new_length);
        out.extend_from_slice(&payload);
    }
    Ok(out)
}

fn canonical_payload(kind: &FieldKind, payload: &[u8], normalize: bool, field: &str) -> Result<Vec<u8>, Error> {
    match kind {
        FieldKind::String => match std::str::from_utf8(payload) {
            Ok(_) => Ok(payload.to_vec()),
            Err(_) => Err(Error::Utf8 {
                field: field.to_string(),
            }),
        },
        FieldKind::Vector(element) => {
            let size = element.static_size();
            if !payload.len().is_multiple_of(size) {
                return Err(Error::Misaligned {
                    field: field.to_string(),
                    length: payload.len() as u32,
                    element_size: size,
                });
            }
            let mut out = payload.to_vec();
            if normalize {
                for chunk in out.chunks_mut(size) {
                    normalize_static(element, chunk);
                }
            }
            Ok(out)
        }
        FieldKind::Nested(ty) => {
            let nested = canonicalize(ty, payload, normalize, &format!("{field}."))?;
            if nested.iter().all(|&b| b == 0) {
                Ok(Vec::new())
            } else {
                Ok(nested)
            }
        }
        FieldKind::Scalar(_) | FieldKind::Array { .. } => unreachable!("static kind behind a slot"),
    }
}

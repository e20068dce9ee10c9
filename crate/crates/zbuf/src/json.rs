//! JSON form of object buffers.
//!
//! Keys appear in field declaration order. 64- and 128-bit integers are
//! decimal strings, `[uint8]` vectors are base64 text, and non-finite floats
//! are the strings `"NaN"`, `"Inf"` and `"-Inf"`. Parsing applies a partial
//! update: absent keys (also inside nested tables) keep their value.

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use serde_json::Value as Json;

use crate::error::Error;
use crate::layout::ObjectBuffer;
use crate::schema::{FieldKind, ScalarKind};
use crate::value::Value;

impl ObjectBuffer {
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write_object(self, &mut out);
        out
    }

    /// Applies a JSON object to this buffer. On error the object is left
    /// unchanged.
    pub fn from_json(&mut self, json: &str) -> Result<(), Error> {
        let parsed: Json = serde_json::from_str(json).map_err(|e| Error::JsonSyntax(e.to_string()))?;
        let mut updated = self.clone();
        apply_object(&mut updated, &parsed, "")?;
        *self = updated;
        Ok(())
    }
}

fn write_object(obj: &ObjectBuffer, out: &mut String) {
    out.push('{');
    for (i, field) in obj.type_def().fields().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&Json::String(field.name().to_string()).to_string());
        out.push(':');
        let value = obj.field(i);
        match (field.kind(), &value) {
            (FieldKind::Vector(_), Value::Bytes(bytes)) => {
                out.push('"');
                out.push_str(&BASE64.encode(bytes));
                out.push('"');
            }
            _ => write_value(&value, out),
        }
    }
    out.push('}');
}

fn write_float(is_nan: bool, is_inf: bool, positive: bool, finite: impl FnOnce() -> String, out: &mut String) {
    if is_nan {
        out.push_str("\"NaN\"");
    } else if is_inf {
        out.push_str(if positive { "\"Inf\"" } else { "\"-Inf\"" });
    } else {
        out.push_str(&finite());
    }
}

fn write_value(value: &Value, out: &mut String) {
    match value {
        Value::Bool(v) => out.push_str(if *v { "true" } else { "false" }),
        Value::Int8(v) => out.push_str(&v.to_string()),
        Value::Int16(v) => out.push_str(&v.to_string()),
        Value::Int32(v) => out.push_str(&v.to_string()),
        Value::UInt8(v) => out.push_str(&v.to_string()),
        Value::UInt16(v) => out.push_str(&v.to_string()),
        Value::UInt32(v) => out.push_str(&v.to_string()),
        Value::Int64(v) => out.push_str(&format!("\"{v}\"")),
        Value::Int128(v) => out.push_str(&format!("\"{v}\"")),
        Value::UInt64(v) => out.push_str(&format!("\"{v}\"")),
        Value::UInt128(v) => out.push_str(&format!("\"{v}\"")),
        Value::Float32(v) => write_float(v.is_nan(), v.is_infinite(), *v > 0.0, || serde_json::to_string(v).expect("finite float"), out),
        Value::Float64(v) => write_float(v.is_nan(), v.is_infinite(), *v > 0.0, || serde_json::to_string(v).expect("finite float"), out),
        Value::String(s) => out.push_str(&Json::String(s.clone()).to_string()),
        // Fixed uint8 arrays (vectors are handled by the caller).
        Value::Bytes(bytes) => {
            out.push('[');
            for (i, b) in bytes.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&b.to_string());
            }
            out.push(']');
        }
        Value::List(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out);
            }
            out.push(']');
        }
        Value::Object(obj) => write_object(obj, out),
    }
}

fn mismatch(field: &str, kind: &FieldKind, json: &Json) -> Error {
    let found = match json {
        Json::Null => "null",
        Json::Bool(_) => "boolean",
        Json::Number(_) => "number",
        Json::String(_) => "string",
        Json::Array(_) => "array",
        Json::Object(_) => "object",
    };
    Error::KindMismatch {
        field: field.to_string(),
        expected: kind.to_text(),
        found: found.to_string(),
    }
}

fn apply_object(obj: &mut ObjectBuffer, json: &Json, prefix: &str) -> Result<(), Error> {
    let Json::Object(map) = json else {
        return Err(Error::KindMismatch {
            field: prefix.trim_end_matches('.').to_string(),
            expected: obj.type_def().name().to_string(),
            found: "non-object JSON".to_string(),
        });
    };
    let ty = obj.type_def().clone();
    for (key, item) in map {
        let Some((index, field)) = ty.field(key) else {
            return Err(Error::UnknownKey {
                key: format!("{prefix}{key}"),
            });
        };
        let name = format!("{prefix}{key}");
        let value = match field.kind() {
            FieldKind::Nested(_) => {
                let Value::Object(mut nested) = obj.field(index) else {
                    unreachable!("nested field decodes to an object");
                };
                apply_object(&mut nested, item, &format!("{name}."))?;
                Value::Object(nested)
            }
            kind => json_to_value(kind, item, &name, true)?,
        };
        obj.set_field(index, value)?;
    }
    Ok(())
}

fn json_to_value(kind: &FieldKind, json: &Json, field: &str, top_level: bool) -> Result<Value, Error> {
    match kind {
        FieldKind::Scalar(s) => json_to_scalar(*s, kind, json, field),
        FieldKind::String => match json {
            Json::String(s) => Ok(Value::String(s.clone())),
            other => Err(mismatch(field, kind, other)),
        },
        FieldKind::Vector(element) if top_level && **element == FieldKind::Scalar(ScalarKind::UInt8) => match json {
            Json::String(text) => BASE64.decode(text).map(Value::Bytes).map_err(|_| Error::KindMismatch {
                field: field.to_string(),
                expected: "base64 text".to_string(),
                found: "invalid base64".to_string(),
            }),
            Json::Array(_) => json_to_list(element, json, field),
            other => Err(mismatch(field, kind, other)),
        },
        FieldKind::Vector(element) => match json {
            Json::Array(_) => json_to_list(element, json, field),
            other => Err(mismatch(field, kind, other)),
        },
        FieldKind::Array { element, len } => match json {
            Json::Array(items) if items.len() != *len as usize => Err(Error::LengthMismatch {
                field: field.to_string(),
                expected: *len as usize,
                found: items.len(),
            }),
            Json::Array(_) => json_to_list(element, json, field),
            other => Err(mismatch(field, kind, other)),
        },
        FieldKind::Nested(ty) => {
            let mut nested = ObjectBuffer::allocate(ty);
            apply_object(&mut nested, json, &format!("{field}."))?;
            Ok(Value::Object(nested))
        }
    }
}

fn json_to_list(element: &FieldKind, json: &Json, field: &str) -> Result<Value, Error> {
    let Json::Array(items) = json else {
        unreachable!("caller checked for an array");
    };
    items
        .iter()
        .map(|item| json_to_value(element, item, field, false))
        .collect::<Result<Vec<_>, _>>()
        .map(Value::List)
}

fn json_to_scalar(s: ScalarKind, kind: &FieldKind, json: &Json, field: &str) -> Result<Value, Error> {
    match s {
        ScalarKind::Bool => match json {
            Json::Bool(b) => Ok(Value::Bool(*b)),
            other => Err(mismatch(field, kind, other)),
        },
        ScalarKind::Float32 | ScalarKind::Float64 => {
            let text = match json {
                Json::Number(n) => n.to_string(),
                Json::String(s) if matches!(s.as_str(), "NaN" | "Inf" | "-Inf") => s.replace("Inf", "inf"),
                other => return Err(mismatch(field, kind, other)),
            };
            if s == ScalarKind::Float32 {
                text.parse::<f32>().map(Value::Float32).map_err(|_| mismatch(field, kind, json))
            } else {
                text.parse::<f64>().map(Value::Float64).map_err(|_| mismatch(field, kind, json))
            }
        }
        _ => {
            let wide = s.size() >= 8;
            let text = match json {
                Json::Number(n) => n.to_string(),
                Json::String(text) if wide => text.clone(),
                other => return Err(mismatch(field, kind, other)),
            };
            parse_integer(s, &text).ok_or_else(|| {
                let digits = text.strip_prefix('-').unwrap_or(&text);
                if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                    Error::IntegerRange {
                        field: field.to_string(),
                        value: text.clone(),
                    }
                } else {
                    mismatch(field, kind, json)
                }
            })
        }
    }
}

fn parse_integer(kind: ScalarKind, text: &str) -> Option<Value> {
    if text.starts_with('+') {
        return None;
    }
    Some(match kind {
        ScalarKind::Int8 => Value::Int8(text.parse().ok()?),
        ScalarKind::Int16 => Value::Int16(text.parse().ok()?),
        ScalarKind::Int32 => Value::Int32(text.parse().ok()?),
        ScalarKind::Int64 => Value::Int64(text.parse().ok()?),
        ScalarKind::Int128 => Value::Int128(text.parse().ok()?),
        ScalarKind::UInt8 => Value::UInt8(text.parse().ok()?),
        ScalarKind::UInt16 => Value::UInt16(text.parse().ok()?),
        ScalarKind::UInt32 => Value::UInt32(text.parse().ok()?),
        ScalarKind::UInt64 => Value::UInt64(text.parse().ok()?),
        ScalarKind::UInt128 => Value::UInt128(text.parse().ok()?),
        _ => return None,
    })
}

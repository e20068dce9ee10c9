//! JSON Schema documents describing the JSON form of a table.

use serde_json::{json, Map, Value as Json};

use crate::schema::{FieldKind, ScalarKind, TypeDef};

pub(crate) const SIGNED_PATTERN: &str = "^-?[0-9]+$";
pub(crate) const UNSIGNED_PATTERN: &str = "^[0-9]+$";

/// JSON Schema for `ty`, rendered with `": "` and `", "` separators, e.g.
/// `{"title": "Options", "type": "object", "properties": {"alphaBlending": {"type": "boolean"}}}`.
pub fn json_schema(ty: &TypeDef) -> String {
    render(&schema_value(ty))
}

/// The schema as a JSON value, keys in emission order.
pub fn schema_value(ty: &TypeDef) -> Json {
    let mut properties = Map::new();
    for field in ty.fields() {
        properties.insert(field.name().to_string(), kind_schema(field.kind(), true));
    }
    json!({
        "title": ty.name(),
        "type": "object",
        "properties": Json::Object(properties),
    })
}

fn kind_schema(kind: &FieldKind, in_vector_slot: bool) -> Json {
    match kind {
        FieldKind::Scalar(s) => scalar_schema(*s),
        FieldKind::String => json!({"type": "string"}),
        FieldKind::Array { element, len } => json!({
            "type": "array",
            "items": kind_schema(element, false),
            "minItems": len,
            "maxItems": len,
        }),
        FieldKind::Vector(element) => {
            if in_vector_slot && **element == FieldKind::Scalar(ScalarKind::UInt8) {
                json!({"type": "string", "contentEncoding": "base64"})
            } else {
                json!({"type": "array", "items": kind_schema(element, false)})
            }
        }
        FieldKind::Nested(ty) => schema_value(ty),
    }
}

fn scalar_schema(kind: ScalarKind) -> Json {
    match kind {
        ScalarKind::Bool => json!({"type": "boolean"}),
        ScalarKind::Float32 | ScalarKind::Float64 => json!({"type": "number"}),
        ScalarKind::Int8 => int_range(i8::MIN as i64, i8::MAX as i64),
        ScalarKind::Int16 => int_range(i16::MIN as i64, i16::MAX as i64),
        ScalarKind::Int32 => int_range(i32::MIN as i64, i32::MAX as i64),
        ScalarKind::UInt8 => int_range(0, u8::MAX as i64),
        ScalarKind::UInt16 => int_range(0, u16::MAX as i64),
        ScalarKind::UInt32 => int_range(0, u32::MAX as i64),
        ScalarKind::Int64 | ScalarKind::Int128 => json!({"type": "string", "pattern": SIGNED_PATTERN}),
        ScalarKind::UInt64 | ScalarKind::UInt128 => json!({"type": "string", "pattern": UNSIGNED_PATTERN}),
    }
}

fn int_range(min: i64, max: i64) -> Json {
    json!({"type": "integer", "minimum": min, "maximum": max})
}

/// Renders JSON on one line with a space after every `:` and `,`.
pub fn render(value: &Json) -> String {
    let mut out = String::new();
    write_value(value, &mut out);
    out
}

fn write_value(value: &Json, out: &mut String) {
    match value {
        Json::Object(map) => {
            out.push('{');
            for (i, (key, v)) in map.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&Json::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(v, out);
            }
            out.push('}');
        }
        Json::Array(items) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(v, out);
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

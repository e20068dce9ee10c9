use std::collections::HashSet;
use std::fmt::Write;

use zbuf::{FieldKind, ScalarKind, SchemaDocument, TypeDef};

const KEYWORDS: &[&str] = &[
    "abstract", "as", "async", "await", "become", "box", "break", "const", "continue", "do", "dyn", "else",
    "enum", "extern", "false", "final", "fn", "for", "gen", "if", "impl", "in", "let", "loop", "macro",
    "match", "mod", "move", "mut", "override", "priv", "pub", "ref", "return", "static", "struct", "trait",
    "true", "try", "type", "typeof", "unsafe", "unsized", "use", "virtual", "where", "while", "yield",
];

/// Keywords that cannot be written as raw identifiers.
const UNRAWABLE: &[&str] = &["self", "Self", "super", "crate", "_"];

/// Method names every wrapper defines or inherits through its traits.
const RESERVED_METHODS: &[&str] = &[
    "new",
    "type_def",
    "from_buffer",
    "buffer",
    "into_buffer",
    "to_binary",
    "from_binary",
    "to_json",
    "from_json",
    "json_schema",
    "type_digest",
    "qualified_name",
    "from_value",
    "into_value",
    "default",
    "clone",
    "clone_from",
    "eq",
    "ne",
    "fmt",
];

struct Accessors {
    index: usize,
    schema_name: String,
    getter: String,
    setter: String,
    guard: String,
}

pub fn emit(doc: &SchemaDocument) -> String {
    let mut out = String::new();
    out.push_str("// @generated by zbufc. Do not edit.\n\n");
    let path: Vec<String> = doc.namespace().iter().map(|s| ident(&sanitize(s))).collect();
    for (depth, module) in path.iter().enumerate() {
        let pad = indent(depth);
        if depth == 0 {
            writeln!(out, "#[allow(dead_code, non_camel_case_types, non_snake_case, clippy::all)]").unwrap();
        }
        writeln!(out, "{pad}pub mod {module} {{").unwrap();
    }
    let mut body = String::new();
    emit_body(doc, &mut body);
    let pad = indent(path.len());
    for line in body.lines() {
        if line.is_empty() {
            out.push('\n');
        } else {
            writeln!(out, "{pad}{line}").unwrap();
        }
    }
    for depth in (0..path.len()).rev() {
        writeln!(out, "{}}}", indent(depth)).unwrap();
    }
    out
}

fn emit_body(doc: &SchemaDocument, out: &mut String) {
    writeln!(out, "const __ZBUF_SCHEMA: &str = {:?};", doc.to_text()).unwrap();
    out.push_str(
        r#"
fn __zbuf_type(name: &str) -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
    static DOCUMENT: ::std::sync::OnceLock<::zbuf::SchemaDocument> = ::std::sync::OnceLock::new();
    DOCUMENT
        .get_or_init(|| ::zbuf::parse_schema(__ZBUF_SCHEMA).expect("embedded schema is valid"))
        .type_def(name)
        .expect("embedded schema defines every generated type")
}
"#,
    );
    for ty in doc.types() {
        out.push('\n');
        emit_type(doc, ty, out);
    }
    out.push_str("\n#[cfg(test)]\nmod __zbuf_tests {\n    #[test]\n    fn digests_match_schema() {\n");
    for ty in doc.types() {
        let name = type_ident(ty.name());
        writeln!(out, "        assert_eq!(super::{name}::DIGEST, super::{name}::type_def().digest());").unwrap();
    }
    out.push_str("    }\n}\n");
}

fn emit_type(doc: &SchemaDocument, ty: &TypeDef, out: &mut String) {
    let name = type_ident(ty.name());
    let dotted = format!("{}.{}", doc.namespace().join("."), ty.name());
    let accessors = accessor_names(ty);

    writeln!(out, "/// `{dotted}`").unwrap();
    writeln!(out, "#[derive(Clone, PartialEq)]").unwrap();
    writeln!(out, "pub struct {name} {{\n    buffer: ::zbuf::ObjectBuffer,\n}}\n").unwrap();

    writeln!(out, "impl {name} {{").unwrap();
    writeln!(out, "    pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0x{});", ty.digest()).unwrap();
    writeln!(
        out,
        r#"
    pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {{
        __zbuf_type({:?})
    }}

    pub fn new() -> Self {{
        Self {{
            buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
        }}
    }}

    /// Wraps `buffer` if it holds a `{dotted}`.
    pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {{
        (buffer.digest() == Self::DIGEST).then_some(Self {{ buffer }})
    }}

    pub fn buffer(&self) -> &::zbuf::ObjectBuffer {{
        &self.buffer
    }}

    pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {{
        self.buffer
    }}

    pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {{
        self.buffer.to_binary()
    }}

    pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {{
        self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
        ::core::result::Result::Ok(())
    }}

    pub fn to_json(&self) -> ::std::string::String {{
        self.buffer.to_json()
    }}

    pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {{
        self.buffer.from_json(json)
    }}"#,
        ty.name()
    )
    .unwrap();

    for (field, acc) in ty.fields().iter().zip(&accessors) {
        out.push('\n');
        emit_accessors(field.kind(), acc, out);
    }
    out.push_str("}\n");

    emit_trait_impls(ty, &name, &accessors, out);
}

fn emit_accessors(kind: &FieldKind, acc: &Accessors, out: &mut String) {
    let Accessors {
        index,
        schema_name,
        getter,
        setter,
        guard,
    } = acc;
    let (getter, setter, guard) = (ident(getter), ident(setter), ident(guard));
    let rust = rust_type(kind);
    writeln!(out, "    /// `{schema_name}: {}`", kind.to_text()).unwrap();
    writeln!(
        out,
        "    pub fn {getter}(&self) -> {rust} {{\n        ::zbuf::FieldType::from_value(self.buffer.field({index})).expect(\"field matches its schema kind\")\n    }}\n"
    )
    .unwrap();

    let (param, conversion) = match kind {
        FieldKind::String => (
            "&::core::primitive::str".to_string(),
            "::zbuf::Value::String(value.to_owned())".to_string(),
        ),
        FieldKind::Vector(element) if matches!(**element, FieldKind::Scalar(ScalarKind::UInt8)) => (
            "&[::core::primitive::u8]".to_string(),
            "::zbuf::Value::Bytes(value.to_vec())".to_string(),
        ),
        _ => (rust, "::zbuf::FieldType::into_value(value)".to_string()),
    };
    writeln!(
        out,
        "    pub fn {setter}(&mut self, value: {param}) {{\n        self.buffer.set_field({index}, {conversion}).expect(\"object stays below 4 GiB\");\n    }}"
    )
    .unwrap();

    if let FieldKind::Nested(nested) = kind {
        let nested = type_ident(nested.name());
        writeln!(
            out,
            "\n    /// Edits `{schema_name}` in place; the change is stored when the guard drops.\n    pub fn {guard}(&mut self) -> ::zbuf::NestedMut<'_, {nested}> {{\n        ::zbuf::NestedMut::new(&mut self.buffer, {index})\n    }}"
        )
        .unwrap();
    }
}

fn emit_trait_impls(ty: &TypeDef, name: &str, accessors: &[Accessors], out: &mut String) {
    let mut debug_fields = String::new();
    for acc in accessors {
        write!(debug_fields, "\n            .field({:?}, &self.{}())", acc.schema_name, ident(&acc.getter)).unwrap();
    }
    writeln!(
        out,
        r#"
impl ::core::default::Default for {name} {{
    fn default() -> Self {{
        Self::new()
    }}
}}

impl ::core::fmt::Debug for {name} {{
    fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {{
        f.debug_struct({type_name:?}){debug_fields}
            .finish()
    }}
}}

impl ::zbuf::FieldType for {name} {{
    fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {{
        match value {{
            ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
            _ => ::core::option::Option::None,
        }}
    }}

    fn into_value(self) -> ::zbuf::Value {{
        ::zbuf::Value::Object(self.buffer)
    }}
}}

impl ::zbuf::Serializable for {name} {{
    fn type_digest(&self) -> ::zbuf::TypeDigest {{
        Self::DIGEST
    }}

    fn qualified_name(&self) -> ::std::string::String {{
        Self::type_def().qualified_name()
    }}

    fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {{
        self.buffer.to_binary()
    }}

    fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {{
        {name}::from_binary(self, data)
    }}

    fn to_json(&self) -> ::std::string::String {{
        self.buffer.to_json()
    }}

    fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {{
        self.buffer.from_json(json)
    }}

    fn json_schema(&self) -> ::std::string::String {{
        ::zbuf::json_schema(Self::type_def())
    }}
}}"#,
        type_name = ty.name()
    )
    .unwrap();
}

fn rust_type(kind: &FieldKind) -> String {
    match kind {
        FieldKind::Scalar(s) => format!("::core::primitive::{}", scalar_type(*s)),
        FieldKind::String => "::std::string::String".to_string(),
        FieldKind::Array { element, len } => format!("[{}; {len}]", rust_type(element)),
        FieldKind::Vector(element) => format!("::std::vec::Vec<{}>", rust_type(element)),
        FieldKind::Nested(ty) => type_ident(ty.name()),
    }
}

fn scalar_type(kind: ScalarKind) -> &'static str {
    match kind {
        ScalarKind::Bool => "bool",
        ScalarKind::Int8 => "i8",
        ScalarKind::Int16 => "i16",
        ScalarKind::Int32 => "i32",
        ScalarKind::Int64 => "i64",
        ScalarKind::Int128 => "i128",
        ScalarKind::UInt8 => "u8",
        ScalarKind::UInt16 => "u16",
        ScalarKind::UInt32 => "u32",
        ScalarKind::UInt64 => "u64",
        ScalarKind::UInt128 => "u128",
        ScalarKind::Float32 => "f32",
        ScalarKind::Float64 => "f64",
    }
}

/// Picks getter, setter and guard names for each field. A field whose names
/// collide with a wrapper method or an earlier field gets its index appended.
fn accessor_names(ty: &TypeDef) -> Vec<Accessors> {
    let mut used: HashSet<String> = RESERVED_METHODS.iter().map(|s| s.to_string()).collect();
    let mut result = Vec::new();
    for (index, field) in ty.fields().iter().enumerate() {
        let mut base = sanitize(&snake_case(field.name()));
        loop {
            let names = [base.clone(), format!("set_{base}"), format!("{base}_mut")];
            if names.iter().all(|n| !used.contains(n)) {
                used.extend(names);
                break;
            }
            base = format!("{base}_{index}");
        }
        result.push(Accessors {
            index,
            schema_name: field.name().to_string(),
            setter: format!("set_{base}"),
            guard: format!("{base}_mut"),
            getter: base,
        });
    }
    result
}

pub(crate) fn snake_case(name: &str) -> String {
    let chars: Vec<char> = name.chars().collect();
    let mut out = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_ascii_uppercase() && i > 0 {
            let prev = chars[i - 1];
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_ascii_lowercase());
            if prev.is_ascii_lowercase() || prev.is_ascii_digit() || (prev.is_ascii_uppercase() && next_lower) {
                out.push('_');
            }
        }
        out.push(c.to_ascii_lowercase());
    }
    out
}

fn sanitize(name: &str) -> String {
    if UNRAWABLE.contains(&name) {
        format!("{name}_")
    } else {
        name.to_string()
    }
}

fn ident(name: &str) -> String {
    if KEYWORDS.contains(&name) {
        format!("r#{name}")
    } else {
        name.to_string()
    }
}

fn type_ident(name: &str) -> String {
    ident(&sanitize(name))
}

fn indent(depth: usize) -> String {
    "    ".repeat(depth)
}

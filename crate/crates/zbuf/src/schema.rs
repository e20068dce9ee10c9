//! Schema model and parser.
//!
//! A schema file holds one `namespace` declaration followed by any number of
//! `table` definitions:
//!
//! ```text
//! namespace demo;
//!
//! table Vec3 { x: float; y: float; z: float; }
//! table Camera { origin: Vec3; lookAt: Vec3; up: Vec3; }
//! table Image { format: uint8; data: [uint8]; }
//! ```
//!
//! Field types are scalar names (`bool`, `int8`..`int128`, `uint8`..`uint128`,
//! `float`, `double`), `string`, fixed arrays `[T:N]`, vectors `[T]` and bare
//! type names referring to another table of the same document. A table is
//! *static* when all of its fields have a fixed size; staticness is derived,
//! never declared.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::digest::TypeDigest;

/// Size in bytes of the (offset, length) slot a dynamic field occupies in the
/// static section.
pub const SLOT_SIZE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Bool,
    Int8,
    Int16,
    Int32,
    Int64,
    Int128,
    UInt8,
    UInt16,
    UInt32,
    UInt64,
    UInt128,
    Float32,
    Float64,
}

impl ScalarKind {
    pub const ALL: [ScalarKind; 13] = [
        ScalarKind::Bool,
        ScalarKind::Int8,
        ScalarKind::Int16,
        ScalarKind::Int32,
        ScalarKind::Int64,
        ScalarKind::Int128,
        ScalarKind::UInt8,
        ScalarKind::UInt16,
        ScalarKind::UInt32,
        ScalarKind::UInt64,
        ScalarKind::UInt128,
        ScalarKind::Float32,
        ScalarKind::Float64,
    ];

    /// Encoded width in bytes.
    pub fn size(self) -> usize {
        match self {
            ScalarKind::Bool | ScalarKind::Int8 | ScalarKind::UInt8 => 1,
            ScalarKind::Int16 | ScalarKind::UInt16 => 2,
            ScalarKind::Int32 | ScalarKind::UInt32 | ScalarKind::Float32 => 4,
            ScalarKind::Int64 | ScalarKind::UInt64 | ScalarKind::Float64 => 8,
            ScalarKind::Int128 | ScalarKind::UInt128 => 16,
        }
    }

    /// Name used in schema text and canonical signatures.
    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Bool => "bool",
            ScalarKind::Int8 => "int8",
            ScalarKind::Int16 => "int16",
            ScalarKind::Int32 => "int32",
            ScalarKind::Int64 => "int64",
            ScalarKind::Int128 => "int128",
            ScalarKind::UInt8 => "uint8",
            ScalarKind::UInt16 => "uint16",
            ScalarKind::UInt32 => "uint32",
            ScalarKind::UInt64 => "uint64",
            ScalarKind::UInt128 => "uint128",
            ScalarKind::Float32 => "float",
            ScalarKind::Float64 => "double",
        }
    }

    pub fn from_name(name: &str) -> Option<ScalarKind> {
        ScalarKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    pub fn is_signed_integer(self) -> bool {
        matches!(
            self,
            ScalarKind::Int8
                | ScalarKind::Int16
                | ScalarKind::Int32
                | ScalarKind::Int64
                | ScalarKind::Int128
        )
    }

    pub fn is_unsigned_integer(self) -> bool {
        matches!(
            self,
            ScalarKind::UInt8
                | ScalarKind::UInt16
                | ScalarKind::UInt32
                | ScalarKind::UInt64
                | ScalarKind::UInt128
        )
    }

    pub fn is_float(self) -> bool {
        matches!(self, ScalarKind::Float32 | ScalarKind::Float64)
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FieldKind {
    Scalar(ScalarKind),
    String,
    Array { element: Box<FieldKind>, len: u32 },
    Vector(Box<FieldKind>),
    Nested(Arc<TypeDef>),
}

impl FieldKind {
    pub fn is_static(&self) -> bool {
        match self {
            FieldKind::Scalar(_) => true,
            FieldKind::String | FieldKind::Vector(_) => false,
            FieldKind::Array { element, .. } => element.is_static(),
            FieldKind::Nested(ty) => ty.is_static(),
        }
    }

    /// Bytes this kind occupies in a static section. Dynamic kinds occupy a slot.
    pub fn static_size(&self) -> usize {
        match self {
            FieldKind::Scalar(s) => s.size(),
            FieldKind::String | FieldKind::Vector(_) => SLOT_SIZE,
            FieldKind::Array { element, len } => element.static_size() * *len as usize,
            FieldKind::Nested(ty) if ty.is_static() => ty.static_size(),
            FieldKind::Nested(_) => SLOT_SIZE,
        }
    }

    /// Canonical signature fragment; nested tables expand in full.
    pub fn signature(&self) -> String {
        let mut out = String::new();
        self.write_signature(&mut out);
        out
    }

    fn write_signature(&self, out: &mut String) {
        match self {
            FieldKind::Scalar(s) => out.push_str(s.name()),
            FieldKind::String => out.push_str("string"),
            FieldKind::Array { element, len } => {
                out.push('[');
                element.write_signature(out);
                out.push(':');
                out.push_str(&len.to_string());
                out.push(']');
            }
            FieldKind::Vector(element) => {
                out.push('[');
                element.write_signature(out);
                out.push(']');
            }
            FieldKind::Nested(ty) => out.push_str(ty.canonical_signature()),
        }
    }

    /// Rendering as schema source text (nested tables by name).
    pub fn to_text(&self) -> String {
        match self {
            FieldKind::Scalar(s) => s.name().to_string(),
            FieldKind::String => "string".to_string(),
            FieldKind::Array { element, len } => format!("[{}:{}]", element.to_text(), len),
            FieldKind::Vector(element) => format!("[{}]", element.to_text()),
            FieldKind::Nested(ty) => ty.name().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldDef {
    name: String,
    kind: FieldKind,
    offset: usize,
}

impl FieldDef {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// Byte offset of the field (or of its slot) within the static section.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn is_static(&self) -> bool {
        self.kind.is_static()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeDef {
    namespace: Vec<String>,
    name: String,
    fields: Vec<FieldDef>,
    is_static: bool,
    static_size: usize,
    signature: String,
    digest: TypeDigest,
}

impl TypeDef {
    fn build(namespace: Vec<String>, name: String, fields: Vec<(String, FieldKind)>) -> TypeDef {
        let mut offset = 0;
        let fields: Vec<FieldDef> = fields
            .into_iter()
            .map(|(name, kind)| {
                let field = FieldDef { name, offset, kind };
                offset += field.kind.static_size();
                field
            })
            .collect();
        let is_static = fields.iter().all(FieldDef::is_static);
        let mut signature = String::new();
        for segment in &namespace {
            signature.push_str(segment);
            signature.push('.');
        }
        signature.push_str(&name);
        signature.push('{');
        for (i, field) in fields.iter().enumerate() {
            if i > 0 {
                signature.push(',');
            }
            signature.push_str(&field.name);
            signature.push(':');
            field.kind.write_signature(&mut signature);
        }
        signature.push('}');
        let digest = TypeDigest::of_signature(&signature);
        TypeDef {
            namespace,
            name,
            fields,
            is_static,
            static_size: offset,
            signature,
            digest,
        }
    }

    pub fn namespace(&self) -> &[String] {
        &self.namespace
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Namespace and name joined with `::`, e.g. `tide::ResizeWindow`.
    pub fn qualified_name(&self) -> String {
        let mut parts: Vec<&str> = self.namespace.iter().map(String::as_str).collect();
        parts.push(&self.name);
        parts.join("::")
    }

    pub fn fields(&self) -> &[FieldDef] {
        &self.fields
    }

    pub fn field(&self, name: &str) -> Option<(usize, &FieldDef)> {
        self.fields.iter().enumerate().find(|(_, f)| f.name == name)
    }

    pub fn is_static(&self) -> bool {
        self.is_static
    }

    pub fn static_size(&self) -> usize {
        self.static_size
    }

    /// `<ns>.<Name>{field:sig,...}` with nested tables expanded recursively.
    pub fn canonical_signature(&self) -> &str {
        &self.signature
    }

    pub fn digest(&self) -> TypeDigest {
        self.digest
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemaDocument {
    namespace: Vec<String>,
    types: Vec<Arc<TypeDef>>,
}

impl SchemaDocument {
    pub fn parse(text: &str) -> Result<SchemaDocument, SchemaError> {
        let raw = Parser::new(text).document()?;
        resolve(raw)
    }

    pub fn namespace(&self) -> &[String] {
        &self.namespace
    }

    pub fn types(&self) -> &[Arc<TypeDef>] {
        &self.types
    }

    pub fn type_def(&self, name: &str) -> Option<&Arc<TypeDef>> {
        self.types.iter().find(|t| t.name == name)
    }

    /// Renders the document back to schema source. Parsing the result yields
    /// an equal document.
    pub fn to_text(&self) -> String {
        let mut out = format!("namespace {};\n", self.namespace.join("."));
        for ty in &self.types {
            out.push_str(&format!("\ntable {} {{\n", ty.name));
            for field in &ty.fields {
                out.push_str(&format!("    {}: {};\n", field.name, field.kind.to_text()));
            }
            out.push_str("}\n");
        }
        out
    }
}

/// Parses schema text into a validated document.
pub fn parse_schema(text: &str) -> Result<SchemaDocument, SchemaError> {
    SchemaDocument::parse(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Position {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SchemaError {
    #[error("{position}: syntax error: expected {expected}, found {found}")]
    Syntax {
        position: Position,
        expected: String,
        found: String,
    },
    #[error("{position}: unknown type `{name}`")]
    UnknownType { position: Position, name: String },
    #[error("{position}: duplicate name `{name}`")]
    DuplicateName { position: Position, name: String },
    #[error("{position}: field `{field}` has a dynamic-sized element type; vectors and arrays need static-sized elements")]
    VectorOfDynamic { position: Position, field: String },
    #[error("{position}: field `{field}` is a vector of zero-sized elements")]
    ZeroSizedElement { position: Position, field: String },
    #[error("{position}: type `{name}` nests itself ({cycle})")]
    CyclicNesting {
        position: Position,
        name: String,
        cycle: String,
    },
}

impl SchemaError {
    pub fn position(&self) -> Position {
        match self {
            SchemaError::Syntax { position, .. }
            | SchemaError::UnknownType { position, .. }
            | SchemaError::DuplicateName { position, .. }
            | SchemaError::VectorOfDynamic { position, .. }
            | SchemaError::ZeroSizedElement { position, .. }
            | SchemaError::CyclicNesting { position, .. } => *position,
        }
    }
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(String),
    Punct(char),
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Number(s) => write!(f, "`{s}`"),
            Token::Punct(c) => write!(f, "`{c}`"),
            Token::Eof => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn next_token(&mut self) -> Result<(Token, Position), SchemaError> {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        let position = Position {
            line: self.line,
            col: self.col,
        };
        let Some(&c) = self.chars.peek() else {
            return Ok((Token::Eof, position));
        };
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = self.chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok((Token::Ident(ident), position));
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = self.chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok((Token::Number(digits), position));
        }
        if ";{}:[].".contains(c) {
            self.bump();
            return Ok((Token::Punct(c), position));
        }
        Err(SchemaError::Syntax {
            position,
            expected: "a token".into(),
            found: format!("`{c}`"),
        })
    }
}

// ---------------------------------------------------------------------------
// Parser (produces unresolved types)

#[derive(Debug, Clone)]
enum RawKind {
    Named(String, Position),
    Array(Box<RawKind>, u32),
    Vector(Box<RawKind>),
}

#[derive(Debug)]
struct RawField {
    name: String,
    position: Position,
    kind: RawKind,
}

#[derive(Debug)]
struct RawType {
    name: String,
    position: Position,
    fields: Vec<RawField>,
}

#[derive(Debug)]
struct RawDocument {
    namespace: Vec<String>,
    types: Vec<RawType>,
}

struct Parser<'a> {
    lexer: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(text),
        }
    }

    fn next(&mut self) -> Result<(Token, Position), SchemaError> {
        self.lexer.next_token()
    }

    fn unexpected<T>(expected: &str, token: Token, position: Position) -> Result<T, SchemaError> {
        Err(SchemaError::Syntax {
            position,
            expected: expected.to_string(),
            found: token.to_string(),
        })
    }

    fn expect_punct(&mut self, c: char) -> Result<Position, SchemaError> {
        match self.next()? {
            (Token::Punct(p), pos) if p == c => Ok(pos),
            (tok, pos) => Self::unexpected(&format!("`{c}`"), tok, pos),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Position), SchemaError> {
        match self.next()? {
            (Token::Ident(s), pos) => Ok((s, pos)),
            (tok, pos) => Self::unexpected(what, tok, pos),
        }
    }

    fn expect_keyword(&mut self, keyword: &str) -> Result<(), SchemaError> {
        match self.next()? {
            (Token::Ident(s), _) if s == keyword => Ok(()),
            (tok, pos) => Self::unexpected(&format!("`{keyword}`"), tok, pos),
        }
    }

    fn document(&mut self) -> Result<RawDocument, SchemaError> {
        self.expect_keyword("namespace")?;
        let mut namespace = vec![self.expect_ident("namespace identifier")?.0];
        loop {
            match self.next()? {
                (Token::Punct('.'), _) => namespace.push(self.expect_ident("namespace identifier")?.0),
                (Token::Punct(';'), _) => break,
                (tok, pos) => return Self::unexpected("`.` or `;`", tok, pos),
            }
        }
        let mut types = Vec::new();
        loop {
            match self.next()? {
                (Token::Eof, _) => break,
                (Token::Ident(kw), _) if kw == "table" => types.push(self.table()?),
                (tok, pos) => return Self::unexpected("`table` or end of input", tok, pos),
            }
        }
        Ok(RawDocument { namespace, types })
    }

    fn table(&mut self) -> Result<RawType, SchemaError> {
        let (name, position) = self.expect_ident("table name")?;
        self.expect_punct('{')?;
        let mut fields = Vec::new();
        loop {
            match self.next()? {
                (Token::Punct('}'), _) => break,
                (Token::Ident(field), pos) => {
                    self.expect_punct(':')?;
                    let kind = self.kind()?;
                    self.expect_punct(';')?;
                    fields.push(RawField {
                        name: field,
                        position: pos,
                        kind,
                    });
                }
                (tok, pos) => return Self::unexpected("field name or `}`", tok, pos),
            }
        }
        Ok(RawType {
            name,
            position,
            fields,
        })
    }

    fn kind(&mut self) -> Result<RawKind, SchemaError> {
        match self.next()? {
            (Token::Ident(name), pos) => Ok(RawKind::Named(name, pos)),
            (Token::Punct('['), _) => {
                let element = self.kind()?;
                match self.next()? {
                    (Token::Punct(']'), _) => Ok(RawKind::Vector(Box::new(element))),
                    (Token::Punct(':'), _) => {
                        let (len, len_pos) = match self.next()? {
                            (Token::Number(digits), pos) => (digits, pos),
                            (tok, pos) => return Self::unexpected("array length", tok, pos),
                        };
                        let len = match len.parse::<u32>() {
                            Ok(n) if n >= 1 => n,
                            _ => {
                                return Err(SchemaError::Syntax {
                                    position: len_pos,
                                    expected: "array length between 1 and 4294967295".into(),
                                    found: format!("`{len}`"),
                                })
                            }
                        };
                        self.expect_punct(']')?;
                        Ok(RawKind::Array(Box::new(element), len))
                    }
                    (tok, pos) => Self::unexpected("`]` or `:`", tok, pos),
                }
            }
            (tok, pos) => Self::unexpected("type", tok, pos),
        }
    }
}

// ---------------------------------------------------------------------------
// Resolution and validation

fn resolve(raw: RawDocument) -> Result<SchemaDocument, SchemaError> {
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, ty) in raw.types.iter().enumerate() {
        if ScalarKind::from_name(&ty.name).is_some()
            || ty.name == "string"
            || index.insert(&ty.name, i).is_some()
        {
            return Err(SchemaError::DuplicateName {
                position: ty.position,
                name: ty.name.clone(),
            });
        }
        let mut seen = HashSet::new();
        for field in &ty.fields {
            if !seen.insert(field.name.as_str()) {
                return Err(SchemaError::DuplicateName {
                    position: field.position,
                    name: field.name.clone(),
                });
            }
        }
    }

    let mut resolver = Resolver {
        raw: &raw,
        index,
        resolved: vec![None; raw.types.len()],
        in_progress: Vec::new(),
    };
    for i in 0..raw.types.len() {
        resolver.resolve_type(i)?;
    }
    let types = resolver
        .resolved
        .into_iter()
        .map(|t| t.expect("every type resolved"))
        .collect();
    Ok(SchemaDocument {
        namespace: raw.namespace,
        types,
    })
}

struct Resolver<'a> {
    raw: &'a RawDocument,
    index: HashMap<&'a str, usize>,
    resolved: Vec<Option<Arc<TypeDef>>>,
    in_progress: Vec<usize>,
}

impl<'a> Resolver<'a> {
    fn resolve_type(&mut self, i: usize) -> Result<Arc<TypeDef>, SchemaError> {
        if let Some(done) = &self.resolved[i] {
            return Ok(done.clone());
        }
        let raw = &self.raw.types[i];
        if let Some(start) = self.in_progress.iter().position(|&j| j == i) {
            let mut cycle: Vec<&str> = self.in_progress[start..]
                .iter()
                .map(|&j| self.raw.types[j].name.as_str())
                .collect();
            cycle.push(&raw.name);
            return Err(SchemaError::CyclicNesting {
                position: raw.position,
                name: raw.name.clone(),
                cycle: cycle.join(" -> "),
            });
        }
        self.in_progress.push(i);
        let mut fields = Vec::with_capacity(raw.fields.len());
        for field in &raw.fields {
            let kind = self.resolve_kind(&field.kind, field)?;
            fields.push((field.name.clone(), kind));
        }
        self.in_progress.pop();
        let ty = Arc::new(TypeDef::build(
            self.raw.namespace.clone(),
            raw.name.clone(),
            fields,
        ));
        self.resolved[i] = Some(ty.clone());
        Ok(ty)
    }

    fn resolve_kind(&mut self, kind: &RawKind, field: &RawField) -> Result<FieldKind, SchemaError> {
        match kind {
            RawKind::Named(name, pos) => {
                if let Some(scalar) = ScalarKind::from_name(name) {
                    return Ok(FieldKind::Scalar(scalar));
                }
                if name == "string" {
                    return Ok(FieldKind::String);
                }
                match self.index.get(name.as_str()) {
                    Some(&j) => Ok(FieldKind::Nested(self.resolve_type(j)?)),
                    None => Err(SchemaError::UnknownType {
                        position: *pos,
                        name: name.clone(),
                    }),
                }
            }
            RawKind::Array(element, len) => {
                let element = self.resolve_element(element, field)?;
                Ok(FieldKind::Array {
                    element: Box::new(element),
                    len: *len,
                })
            }
            RawKind::Vector(element) => {
                let element = self.resolve_element(element, field)?;
                if element.static_size() == 0 {
                    return Err(SchemaError::ZeroSizedElement {
                        position: field.position,
                        field: field.name.clone(),
                    });
                }
                Ok(FieldKind::Vector(Box::new(element)))
            }
        }
    }

    fn resolve_element(&mut self, element: &RawKind, field: &RawField) -> Result<FieldKind, SchemaError> {
        let element = self.resolve_kind(element, field)?;
        if !element.is_static() {
            return Err(SchemaError::VectorOfDynamic {
                position: field.position,
                field: field.name.clone(),
            });
        }
        Ok(element)
    }
}

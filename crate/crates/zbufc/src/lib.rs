//! Schema compiler: typed Rust wrappers and JSON Schema files from a
//! [`SchemaDocument`].
//!
//! Generated code depends on the `zbuf` crate at runtime. Each wrapper owns an
//! [`zbuf::ObjectBuffer`] and every accessor goes through its reflective
//! field operations, so wrapper and reflective writes produce the same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use zbuf::{SchemaDocument, TypeDigest};

mod rust;

/// Output of [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedModule {
    pub source_text: String,
    pub language_tag: &'static str,
    /// Keyed by dotted qualified name, e.g. `demo.Vec3`.
    pub schema_digests: BTreeMap<String, TypeDigest>,
}

/// Generates Rust source for every table in `doc`.
pub fn generate(doc: &SchemaDocument) -> GeneratedModule {
    let schema_digests = doc
        .types()
        .iter()
        .map(|ty| (dotted_name(doc, ty.name()), ty.digest()))
        .collect();
    GeneratedModule {
        source_text: rust::emit(doc),
        language_tag: "rust",
        schema_digests,
    }
}

/// Writes `<Type>.schema.json` for each table into `out_dir`, creating the
/// directory if needed. Returns the written paths in declaration order.
pub fn emit_json_schemas(doc: &SchemaDocument, out_dir: &Path) -> io::Result<Vec<PathBuf>> {
    if doc.types().is_empty() {
        return Ok(Vec::new());
    }
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for ty in doc.types() {
        let path = out_dir.join(format!("{}.schema.json", ty.name()));
        fs::write(&path, zbuf::json_schema(ty))?;
        written.push(path);
    }
    Ok(written)
}

/// Parses the schema at `schema` and writes the generated module to `out`.
/// Intended for build scripts.
pub fn compile_to_file(schema: &Path, out: &Path) -> Result<GeneratedModule, CompileError> {
    let text = fs::read_to_string(schema).map_err(|source| CompileError::Io {
        path: schema.to_path_buf(),
        source,
    })?;
    let doc = zbuf::parse_schema(&text).map_err(|error| CompileError::Schema {
        path: schema.to_path_buf(),
        error,
    })?;
    let module = generate(&doc);
    fs::write(out, &module.source_text).map_err(|source| CompileError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    Ok(module)
}

#[derive(Debug, thiserror::Error)]
pub enum CompileError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}:{error}", path.display())]
    Schema {
        path: PathBuf,
        error: zbuf::SchemaError,
    },
}

fn dotted_name(doc: &SchemaDocument, name: &str) -> String {
    format!("{}.{}", doc.namespace().join("."), name)
}

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "zbufc", about = "Compile zbuf schemas into Rust code and JSON Schema files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a schema and emit the requested artifacts.
    Compile {
        schema: PathBuf,
        /// Write `<stem>.rs` with typed wrappers into this directory.
        #[arg(long, value_name = "DIR")]
        gen_code: Option<PathBuf>,
        /// Write one `<Type>.schema.json` per table into this directory.
        #[arg(long, value_name = "DIR")]
        json_schema: Option<PathBuf>,
        /// Print `name<TAB>digest` for every table.
        #[arg(long)]
        digests: bool,
    },
}

fn main() -> ExitCode {
    let Command::Compile {
        schema,
        gen_code,
        json_schema,
        digests,
    } = Cli::parse().command;
    match compile(&schema, gen_code, json_schema, digests) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("{message}");
            ExitCode::FAILURE
        }
    }
}

fn compile(
    schema: &PathBuf,
    gen_code: Option<PathBuf>,
    json_schema: Option<PathBuf>,
    digests: bool,
) -> Result<(), String> {
    let text = fs::read_to_string(schema).map_err(|e| format!("{}: {e}", schema.display()))?;
    let doc = zbuf::parse_schema(&text).map_err(|e| format!("{}:{e}", schema.display()))?;
    let module = zbufc::generate(&doc);
    if let Some(dir) = gen_code {
        fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        let stem = schema.file_stem().unwrap_or_default().to_string_lossy();
        let out = dir.join(format!("{stem}.rs"));
        fs::write(&out, &module.source_text).map_err(|e| format!("{}: {e}", out.display()))?;
    }
    if let Some(dir) = json_schema {
        zbufc::emit_json_schemas(&doc, &dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    if digests {
        for (name, digest) in &module.schema_digests {
            println!("{name}\t{digest}");
        }
    }
    Ok(())
}

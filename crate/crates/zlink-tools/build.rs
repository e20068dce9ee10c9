use std::env;
use std::path::PathBuf;

fn main() {
    let out = PathBuf::from(env::var_os("OUT_DIR").unwrap());
    for name in ["demo", "tide"] {
        let schema = PathBuf::from(format!("schemas/{name}.zs"));
        println!("cargo:rerun-if-changed={}", schema.display());
        if let Err(e) = zbufc::compile_to_file(&schema, &out.join(format!("{name}.rs"))) {
            panic!("{e}");
        }
    }
}

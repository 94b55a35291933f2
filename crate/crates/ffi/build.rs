use std::env;
use std::path::PathBuf;

fn main() {
    let dir = env::var("CARGO_MANIFEST_DIR").expect("cargo sets the manifest dir");
    let out = PathBuf::from(&dir).join("include").join("fusion_obstruct.h");
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let config = cbindgen::Config::from_file(PathBuf::from(&dir).join("cbindgen.toml")).unwrap_or_default();
    match cbindgen::Builder::new().with_crate(&dir).with_config(config).generate() {
        Ok(b) => {
            b.write_to_file(out);
        }
        // a stale header is better than a failed build
        Err(e) => println!("cargo:warning=cbindgen: {e}"),
    }
}

//! Run manifests appended to `runs.log`.
//!
//! One block per run:
//!
//! ```text
//! {
//!   subcommand = verify ramsey
//!   argv = verify ramsey --pattern path:3 --r 2 graphs/p3witness.el
//!   version = 0.1.0
//!   threads = 8
//!   deterministic = false
//!   input.0.path = graphs/p3witness.el
//!   input.0.sha256 = 5f1c...
//!   wall_ms = 3
//!   exit_code = 0
//!   summary = is_ramsey = true
//!   stdout_sha256 = 9a0e...
//! }
//! ```
//!
//! Keys are flat; values run to the end of the line. `wall_ms` is omitted
//! in deterministic mode.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Default)]
pub struct RunManifest {
    pub subcommand: String,
    pub argv: Vec<String>,
    pub threads: usize,
    pub deterministic: bool,
    pub inputs: Vec<(PathBuf, String)>,
    pub wall_ms: u128,
    pub exit_code: u8,
    pub stdout: String,
}

impl RunManifest {
    pub fn record_input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push((path.to_path_buf(), sha256_hex(bytes)));
    }

    pub fn render(&self) -> String {
        let mut lines = vec![
            format!("subcommand = {}", self.subcommand),
            format!("argv = {}", self.argv.join(" ")),
            format!("version = {}", env!("CARGO_PKG_VERSION")),
            format!("threads = {}", self.threads),
            format!("deterministic = {}", self.deterministic),
        ];
        for (i, (path, digest)) in self.inputs.iter().enumerate() {
            lines.push(format!("input.{i}.path = {}", path.display()));
            lines.push(format!("input.{i}.sha256 = {digest}"));
        }
        if !self.deterministic {
            lines.push(format!("wall_ms = {}", self.wall_ms));
        }
        lines.push(format!("exit_code = {}", self.exit_code));
        lines.push(format!("summary = {}", self.stdout.lines().next().unwrap_or("")));
        lines.push(format!("stdout_sha256 = {}", sha256_hex(self.stdout.as_bytes())));
        let mut out = String::from("{\n");
        for l in lines {
            out.push_str("  ");
            out.push_str(&l);
            out.push('\n');
        }
        out.push_str("}\n");
        out
    }

    pub fn append(&self, path: &Path) -> std::io::Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        f.write_all(self.render().as_bytes())
    }
}

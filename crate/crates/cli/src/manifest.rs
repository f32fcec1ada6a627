//! Reproducibility manifest: every run appends one JSON line describing the
//! subcommand, its parameters, the seed and a hash of the output.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const DEFAULT_RUN_LOG: &str = "fewcol_runs.jsonl";

#[derive(Debug, Serialize)]
pub struct ManifestLine {
    pub subcommand: String,
    pub args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_sha256: Option<String>,
}

pub fn sha256_hex(data: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data.as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

pub fn run_log_path() -> PathBuf {
    std::env::var_os("RUN_LOG").map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_RUN_LOG))
}

/// Appends the line; manifest write failures are reported but never change
/// the exit code of the run itself.
pub fn append(line: &ManifestLine) {
    let path = run_log_path();
    let serialized = serde_json::to_string(line).expect("manifest serializes");
    let result = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&path)
        .and_then(|mut f| writeln!(f, "{serialized}"));
    if let Err(e) = result {
        eprintln!("warning: could not append run manifest to {}: {e}", path.display());
    }
}

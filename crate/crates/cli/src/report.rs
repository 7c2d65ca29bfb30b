//! Report plumbing shared by the subcommands: the run stamp every report
//! carries, plus JSON and CSV writers.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use cognet_core::rng::fnv1a64;

/// Identifies the run that produced a report. The config hash covers every
/// flag that influences report content; `--out` and `--workers` are left
/// out so the same analysis lands byte-identical wherever and however
/// parallel it runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunStamp {
    pub schema: String,
    pub tool_version: String,
    pub seed: u64,
    pub config_hash: String,
}

impl RunStamp {
    pub fn new(schema: &str, seed: u64, config: &BTreeMap<String, String>) -> RunStamp {
        let canonical = serde_json::to_string(config).expect("string map serializes");
        RunStamp {
            schema: schema.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            config_hash: format!("{:016x}", fnv1a64(canonical.as_bytes())),
        }
    }
}

/// Collect flag values into the map the config hash is computed over.
/// Values go in as display strings; order is irrelevant because the map
/// sorts its keys.
pub fn config_map<const N: usize>(entries: [(&str, String); N]) -> BTreeMap<String, String> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

pub fn path_list(paths: &[PathBuf]) -> String {
    let strs: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
    strs.join(",")
}

pub fn write_json<T: Serialize>(path: &Path, report: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

/// A CSV writer for plot data next to the JSON reports.
pub fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    let file =
        fs::File::create(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(csv::Writer::from_writer(file))
}

/// Format a float so CSV output is stable and round-trips exactly.
pub fn num(x: f64) -> String {
    format!("{x}")
}

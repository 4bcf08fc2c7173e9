//! Artifact writing. Every JSON artifact carries a `meta` block and every
//! run leaves a `manifest.json` listing what it wrote.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Hash of the canonical (key-sorted, compact) JSON of a run configuration.
pub fn config_hash(config: &Value) -> String {
    sha256_hex(config.to_string().as_bytes())
}

pub struct Output {
    dir: PathBuf,
    meta: Value,
    config: Value,
    artifacts: Vec<String>,
    quiet: bool,
}

impl Output {
    pub fn create(
        dir: &Path,
        command: &str,
        seed: u64,
        config: Value,
        quiet: bool,
    ) -> CliResult<Self> {
        fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.to_path_buf(),
            source,
        })?;
        let meta = json!({
            "tool": "gridqubo",
            "tool_version": TOOL_VERSION,
            "command": command,
            "seed": seed,
            "config_hash": config_hash(&config),
        });
        Ok(Self {
            dir: dir.to_path_buf(),
            meta,
            config,
            artifacts: Vec::new(),
            quiet,
        })
    }

    /// Writes `value` as pretty JSON, adding `meta` to top-level objects.
    pub fn json(&mut self, name: &str, value: &impl Serialize) -> CliResult<()> {
        let mut v = serde_json::to_value(value).map_err(gridqubo::Error::from)?;
        if let Value::Object(map) = &mut v {
            map.insert("meta".into(), self.meta.clone());
        }
        let mut text = serde_json::to_string_pretty(&v).map_err(gridqubo::Error::from)?;
        text.push('\n');
        self.text(name, &text)
    }

    pub fn text(&mut self, name: &str, content: &str) -> CliResult<()> {
        let path = self.dir.join(name);
        fs::write(&path, content).map_err(|source| CliError::Write { path, source })?;
        self.artifacts.push(name.to_string());
        Ok(())
    }

    pub fn say(&self, line: impl AsRef<str>) {
        if !self.quiet {
            println!("{}", line.as_ref());
        }
    }

    pub fn finish(mut self) -> CliResult<()> {
        let manifest = json!({
            "config": self.config,
            "artifacts": self.artifacts,
        });
        self.json("manifest.json", &manifest)?;
        self.say(format!(
            "wrote {} artifacts to {}",
            self.artifacts.len() - 1,
            self.dir.display()
        ));
        Ok(())
    }
}

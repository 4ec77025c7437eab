//! On-disk result cache. Entries are keyed by a SHA-256 digest of the
//! canonical JSON of (spec, kind, operation, parameters, format version).

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::run::{CliError, RunResult};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SOLGRAPH_CACHE_DIR";

/// `$SOLGRAPH_CACHE_DIR`, else `$XDG_CACHE_HOME/solgraph`, else
/// `$HOME/.cache/solgraph`, else `.solgraph-cache` in the working directory.
pub fn default_dir() -> PathBuf {
    let var = |name: &str| std::env::var_os(name).filter(|v| !v.is_empty()).map(PathBuf::from);
    if let Some(dir) = var(CACHE_ENV) {
        return dir;
    }
    if let Some(xdg) = var("XDG_CACHE_HOME") {
        return xdg.join("solgraph");
    }
    if let Some(home) = var("HOME") {
        return home.join(".cache").join("solgraph");
    }
    PathBuf::from(".solgraph-cache")
}

#[derive(Serialize)]
pub struct Key<'a> {
    pub spec: &'a str,
    pub kind: &'a str,
    pub operation: &'a str,
    pub parameters: Value,
    pub format_version: u32,
}

impl Key<'_> {
    pub fn digest(&self) -> String {
        let text = serde_json::to_value(self).expect("serializable").to_string();
        let hash = Sha256::digest(text.as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn file_name(&self) -> String {
        format!("{}-{}.json", self.operation, &self.digest()[..32])
    }
}

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(enabled: bool) -> Cache {
        Cache {
            dir: enabled.then(default_dir),
        }
    }

    pub fn load(&self, key: &Key) -> Option<RunResult> {
        let path = self.dir.as_ref()?.join("results").join(key.file_name());
        let text = fs::read_to_string(path).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, key: &Key, result: &RunResult) -> Result<(), CliError> {
        if let Some(dir) = &self.dir {
            write(&dir.join("results").join(key.file_name()), &result.to_json())?;
        }
        Ok(())
    }

    /// Where a certificate for `key` is kept. Certificates are written even
    /// with the cache disabled, under the default directory.
    pub fn certificate_path(&self, key: &Key) -> PathBuf {
        self.dir
            .clone()
            .unwrap_or_else(default_dir)
            .join("certificates")
            .join(key.file_name())
    }
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io)?;
    }
    fs::write(path, format!("{text}\n")).map_err(io)
}

//! Run manifest emitted next to figure datasets.

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Provenance record for one run: which configuration produced which files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    /// SHA-256 hex digest of the resolved configuration.
    pub config_hash: String,
    /// Crate version that produced the outputs.
    pub tool_version: String,
    /// Files emitted by the run; all exist and are non-empty on success.
    pub outputs: Vec<String>,
    /// Wall-clock duration of the run, seconds.
    pub wall_time: f64,
}

impl RunManifest {
    pub fn write(&self, path: &std::path::Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)
            .expect("manifest always serializes");
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

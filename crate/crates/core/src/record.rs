//! Append-only run log, one JSON object per line.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub schema: u32,
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub wall_time_ms: u64,
    pub version: String,
}

impl RunRecord {
    pub fn new(command: &str, parameters: Value, result: Value, wall_time_ms: u64) -> Self {
        RunRecord {
            schema: SCHEMA,
            command: command.to_string(),
            parameters,
            result,
            wall_time_ms,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn append_to(&self, path: &Path) -> Result<()> {
        let mut line = serde_json::to_string(self).expect("record serializes");
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        f.write_all(line.as_bytes())?;
        Ok(())
    }
}

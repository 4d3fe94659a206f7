//! Append-only JSON-lines result cache for Hilbert reports.
//!
//! One record per line, UTF-8, LF terminators; records are never mutated.
//! Lookups match on canonical key equality and return the first hit, so
//! duplicate appends are harmless. Corrupt lines are skipped with a warning,
//! never fatal.

use crate::formats::SpecJson;
use crate::SCHEMA_VERSION;
use serde::{Deserialize, Serialize};
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "IDEALPOWER_CACHE";

const CACHE_FILE: &str = "cache.jsonl";

/// Canonical cache key: the spec plus everything that changes the values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheKey {
    pub spec: SpecJson,
    pub method: String,
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheRecord {
    pub schema: u32,
    pub key: CacheKey,
    pub report: serde_json::Value,
}

/// File-backed cache in one directory.
#[derive(Debug, Clone)]
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Cache {
        Cache {
            path: dir.join(CACHE_FILE),
        }
    }

    /// Resolve the cache directory: explicit flag, then the environment
    /// override; `None` disables caching.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        if let Some(dir) = flag {
            return Some(Cache::new(dir));
        }
        std::env::var_os(CACHE_ENV)
            .map(|dir| Cache::new(Path::new(&dir)))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// First record whose key matches, by canonical JSON equality.
    pub fn lookup(&self, key: &CacheKey) -> Option<serde_json::Value> {
        let Ok(content) = fs::read_to_string(&self.path) else {
            return None;
        };
        let wanted = serde_json::to_string(key).ok()?;
        for (lineno, line) in content.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record: CacheRecord = match serde_json::from_str(line) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!(
                        "warning: skipping corrupt cache line {} in {}: {e}",
                        lineno + 1,
                        self.path.display()
                    );
                    continue;
                }
            };
            if serde_json::to_string(&record.key).ok().as_deref() == Some(wanted.as_str()) {
                return Some(record.report);
            }
        }
        None
    }

    /// Append one record; errors are reported but never fatal to the run.
    pub fn append(&self, key: &CacheKey, report: &serde_json::Value) {
        let record = CacheRecord {
            schema: SCHEMA_VERSION,
            key: key.clone(),
            report: report.clone(),
        };
        let result = (|| -> std::io::Result<()> {
            if let Some(parent) = self.path.parent() {
                fs::create_dir_all(parent)?;
            }
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)?;
            let line = serde_json::to_string(&record).expect("serializable record");
            file.write_all(line.as_bytes())?;
            file.write_all(b"\n")?;
            Ok(())
        })();
        if let Err(e) = result {
            eprintln!(
                "warning: could not append to cache {}: {e}",
                self.path.display()
            );
        }
    }
}

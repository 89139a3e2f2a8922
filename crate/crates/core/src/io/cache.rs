//! A directory of per-graph result files keyed by canonical form, field
//! characteristic and engine version.
//!
//! Each entry is its own JSON file, written through a temporary file and a
//! rename, so concurrent census workers never see a half-written entry.

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resolution::BettiTable;

/// Bumped whenever a change could alter cached numbers.
pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+frame.1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub characteristic: u32,
    /// `None` for edgeless graphs.
    pub betti: Option<BettiTable>,
    pub engine_version: String,
    /// Seconds since the Unix epoch.
    pub created: u64,
    pub updated: u64,
}

impl CacheEntry {
    pub fn new(key: impl Into<String>, characteristic: u32, betti: Option<BettiTable>) -> Self {
        let now = now_secs();
        CacheEntry {
            key: key.into(),
            characteristic,
            betti,
            engine_version: ENGINE_VERSION.to_string(),
            created: now,
            updated: now,
        }
    }
}

fn now_secs() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[derive(Clone, Debug)]
pub struct ResultCache {
    dir: PathBuf,
}

impl ResultCache {
    /// Creates the directory if needed.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        Ok(ResultCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str, characteristic: u32) -> PathBuf {
        let hex: String = key.bytes().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}-p{characteristic}.json"))
    }

    /// A hit requires matching key, characteristic and engine version.
    /// Unreadable JSON is logged and treated as a miss; other I/O errors are returned.
    pub fn get(&self, key: &str, characteristic: u32) -> Result<Option<CacheEntry>> {
        let path = self.path_for(key, characteristic);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(&path, e)),
        };
        let entry: CacheEntry = match serde_json::from_str(&text) {
            Ok(entry) => entry,
            Err(e) => {
                warn!("ignoring corrupt cache entry {}: {e}", path.display());
                return Ok(None);
            }
        };
        let valid = entry.key == key && entry.characteristic == characteristic && entry.engine_version == ENGINE_VERSION;
        Ok(valid.then_some(entry))
    }

    /// Writes `entry`, keeping the creation time of an existing valid entry.
    pub fn put(&self, entry: &CacheEntry) -> Result<()> {
        let mut entry = entry.clone();
        if let Some(old) = self.get(&entry.key, entry.characteristic)? {
            entry.created = old.created.min(entry.created);
        }
        entry.updated = now_secs().max(entry.created);
        let path = self.path_for(&entry.key, entry.characteristic);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let text = serde_json::to_string_pretty(&entry)?;
        fs::write(&tmp, text).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
        Ok(())
    }
}

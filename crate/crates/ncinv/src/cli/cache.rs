//! On-disk result cache: one JSON file per `(operation, parameters,
//! schema_version)` key, written atomically via rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "NCINV_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub operation: String,
    pub params: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub schema_version: u32,
    pub value: String,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
        }
    }

    /// Explicit directory, else `$NCINV_CACHE_DIR`, else a directory under
    /// the system temp dir.
    pub fn resolve(explicit: Option<&Path>) -> Self {
        let dir = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("ncinv-cache"));
        Self::at(dir)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, key: &CacheKey) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let material = serde_json::to_string(&(key, SCHEMA_VERSION)).expect("serialisable");
        let digest = hex::encode(Sha256::digest(material.as_bytes()));
        Some(dir.join(format!("{}-{}.json", key.operation, &digest[..16])))
    }

    pub fn lookup(&self, key: &CacheKey) -> Option<String> {
        let path = self.path_for(key)?;
        let text = fs::read_to_string(path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.schema_version == SCHEMA_VERSION && entry.key == *key).then_some(entry.value)
    }

    pub fn store(&self, key: &CacheKey, value: &str) -> Result<()> {
        let Some(path) = self.path_for(key) else {
            return Ok(());
        };
        let dir = path.parent().expect("cache files live in a directory");
        fs::create_dir_all(dir)?;
        let entry = CacheEntry {
            key: key.clone(),
            schema_version: SCHEMA_VERSION,
            value: value.to_string(),
        };
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().unwrap().to_string_lossy(),
            std::process::id()
        ));
        {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(serde_json::to_string(&entry)?.as_bytes())?;
            file.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Returns the cached value for `key`, computing and storing it on a miss.
    pub fn get_or_compute<F>(&self, key: CacheKey, compute: F) -> Result<String>
    where
        F: FnOnce() -> Result<String>,
    {
        if let Some(hit) = self.lookup(&key) {
            return Ok(hit);
        }
        let value = compute()?;
        self.store(&key, &value)?;
        Ok(value)
    }
}

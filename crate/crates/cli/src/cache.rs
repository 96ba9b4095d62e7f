//! Persistent on-disk cache of compute results.
//!
//! Each entry is a JSON file named by the SHA-256 of the request key. The
//! entry repeats the full key and the digit count, and a lookup only hits
//! when both match exactly, so a value computed at lower precision is never
//! served for a higher-precision request. Writes go through a temporary
//! file in the same directory followed by a rename, so readers never see a
//! partial entry; concurrent writers of the same key store identical
//! content and the last rename wins.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "STIELTJES_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    digits: u32,
    result: Value,
}

/// Result of a cache lookup.
#[derive(Debug)]
pub enum Lookup {
    Hit(Value),
    Miss,
    /// The entry exists but cannot be used; the reason is reported as a
    /// warning and the caller recomputes.
    Unusable(String),
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", hex::encode(Sha256::digest(key.as_bytes()))))
    }

    pub fn get(&self, key: &str, digits: u32) -> Lookup {
        let path = self.path(key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Unusable(format!("cannot read {}: {e}", path.display())),
        };
        match serde_json::from_slice::<Entry>(&bytes) {
            Ok(entry) if entry.key == key && entry.digits == digits => Lookup::Hit(entry.result),
            Ok(entry) if entry.key == key => Lookup::Unusable(format!(
                "{} holds a {}-digit value for a {digits}-digit request",
                path.display(),
                entry.digits
            )),
            Ok(_) => Lookup::Unusable(format!("{} belongs to a different key", path.display())),
            Err(e) => Lookup::Unusable(format!("{} is corrupt: {e}", path.display())),
        }
    }

    pub fn put(&self, key: &str, digits: u32, result: &Value) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry { key: key.to_string(), digits, result: result.clone() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer_pretty(&mut tmp, &entry)?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

//! A local result cache keyed by content hash of the request descriptor.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub fn default_dir() -> PathBuf {
    PathBuf::from(".boolfun-cache")
}

/// Hex digest of the request descriptor parts.
pub fn key(parts: &[&str]) -> String {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update(part.as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn lookup(dir: &Path, key: &str) -> Option<String> {
    fs::read_to_string(dir.join(key)).ok()
}

pub fn store(dir: &Path, key: &str, content: &str) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let path = dir.join(key);
    let tmp = dir.join(format!("{key}.tmp"));
    fs::write(&tmp, content)?;
    fs::rename(&tmp, &path)
}

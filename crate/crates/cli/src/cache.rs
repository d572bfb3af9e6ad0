//! On-disk result records keyed by item id and input hash.
//!
//! Records are never overwritten: each one lives in `<id>-<hash>.json`, is
//! written to a temporary file first and then renamed into place.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub id: String,
    pub verdict: Verdict,
    pub detail: String,
    pub certificate: serde_json::Value,
    pub runtime_ms: u128,
    pub input_hash: String,
    #[serde(default)]
    pub cached: bool,
}

pub fn input_hash(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Cache> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, id: &str, hash: &str) -> PathBuf {
        self.dir.join(format!("{id}-{hash}.json"))
    }

    /// A stored record, only when its recorded hash matches too. Timeouts
    /// are not reused.
    pub fn load(&self, id: &str, hash: &str) -> Option<ResultRecord> {
        let text = std::fs::read_to_string(self.path(id, hash)).ok()?;
        let r: ResultRecord = serde_json::from_str(&text).ok()?;
        (r.id == id && r.input_hash == hash && r.verdict != Verdict::Timeout).then_some(r)
    }

    pub fn store(&self, r: &ResultRecord) -> std::io::Result<()> {
        let target = self.path(&r.id, &r.input_hash);
        if target.exists() {
            return Ok(());
        }
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string_pretty(r)?.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&target).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(hash: &str, verdict: Verdict) -> ResultRecord {
        ResultRecord {
            id: "item".into(),
            verdict,
            detail: String::new(),
            certificate: serde_json::json!({"nodes": 3}),
            runtime_ms: 5,
            input_hash: hash.into(),
            cached: false,
        }
    }

    #[test]
    fn hash_separates_parts() {
        assert_ne!(input_hash(&["ab", "c"]), input_hash(&["a", "bc"]));
        assert_eq!(input_hash(&["x"]).len(), 64);
    }

    #[test]
    fn store_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        cache.store(&record("h1", Verdict::Pass)).unwrap();
        assert_eq!(cache.load("item", "h1").unwrap().verdict, Verdict::Pass);
        assert!(cache.load("item", "h2").is_none());
        cache.store(&record("h3", Verdict::Timeout)).unwrap();
        assert!(cache.load("item", "h3").is_none());
    }
}

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::homology::Field;

use super::certificate::{Certificate, Value};
use super::report::{Invariant, VERSION};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "CODIS_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub hash: String,
    pub invariant: Invariant,
    pub field: Option<Field>,
}

impl CacheKey {
    pub fn new(hash: &str, invariant: Invariant, field: Option<Field>) -> Self {
        CacheKey { hash: hash.to_string(), invariant, field }
    }

    fn file_name(&self) -> String {
        match self.field {
            Some(f) => format!("{}.{}.json", self.invariant, f.tag()),
            None => format!("{}.json", self.invariant),
        }
    }
}

/// A cached value. Certificates are stored in canonical labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// Content-addressed store of invariant values, one JSON file per key
/// under `root/<version>/<hash>/`. Entries written by other versions are
/// never read.
pub struct ResultCache {
    root: PathBuf,
    write: Mutex<()>,
}

impl ResultCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        ResultCache { root: root.into(), write: Mutex::new(()) }
    }

    /// The cache named by `CODIS_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(ResultCache::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn path(&self, key: &CacheKey) -> PathBuf {
        self.root.join(VERSION).join(&key.hash).join(key.file_name())
    }

    pub fn get(&self, key: &CacheKey) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.version == VERSION).then_some(entry)
    }

    /// Writes through a temporary file and a rename, so readers never see
    /// a partial entry.
    pub fn put(&self, key: &CacheKey, value: Value, certificate: Option<Certificate>) -> std::io::Result<()> {
        let path = self.path(key);
        let dir = path.parent().expect("entries live in a directory");
        let entry = CacheEntry { version: VERSION.to_string(), value, certificate };
        let _guard = self.write.lock().unwrap_or_else(|e| e.into_inner());
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{}.{}.tmp", key.file_name(), std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(serde_json::to_string(&entry).expect("entries serialize").as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, &path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, gn_family, path};
    use crate::graph::Graph;
    use crate::io::report::{canonical_id, invariant_report, ReportOptions};

    #[test]
    fn warm_equals_cold() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path());
        let opts = ReportOptions::default();
        for g in [cycle(6).unwrap(), path(5).unwrap(), gn_family(1).unwrap()] {
            let plain = invariant_report(&g, &opts, None);
            let cold = invariant_report(&g, &opts, Some(&cache));
            let warm = invariant_report(&g, &opts, Some(&cache));
            assert_eq!(plain.canonical_json(), cold.canonical_json());
            assert_eq!(cold.canonical_json(), warm.canonical_json());
        }
    }

    #[test]
    fn certificates_follow_relabeling() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path());
        let opts = ReportOptions { paranoid: true, ..Default::default() };
        // Same path, two labelings: the second run reads the first's entries.
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = Graph::from_edges(5, &[(3, 0), (0, 4), (4, 1), (1, 2)]).unwrap();
        assert_eq!(canonical_id(&a).0, canonical_id(&b).0);
        invariant_report(&a, &opts, Some(&cache));
        let rb = invariant_report(&b, &opts, Some(&cache));
        assert!(rb.skipped.is_empty());
        assert!(crate::io::verify_report(&rb).is_ok());
        assert_eq!(rb.canonical_json(), invariant_report(&b, &opts, None).canonical_json());
    }

    #[test]
    fn paranoid_rejects_corrupt_entries() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path());
        let g = path(4).unwrap();
        let (hash, _) = canonical_id(&g);
        let key = CacheKey::new(&hash, Invariant::InducedMatching, None);
        let lie = Certificate::InducedMatching { edges: vec![(0, 1), (2, 3)] };
        cache.put(&key, Value::Count(2), Some(lie)).unwrap();
        let only = Some(vec![Invariant::InducedMatching]);
        let trusting = invariant_report(&g, &ReportOptions { only: only.clone(), ..Default::default() }, Some(&cache));
        assert_eq!(trusting.induced_matching, Some(2));
        let paranoid =
            invariant_report(&g, &ReportOptions { only, paranoid: true, ..Default::default() }, Some(&cache));
        assert_eq!(paranoid.induced_matching, Some(1));
    }

    #[test]
    fn other_versions_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path());
        let key = CacheKey::new("abc", Invariant::Alpha, None);
        cache.put(&key, Value::Count(3), None).unwrap();
        assert_eq!(cache.get(&key).map(|e| e.value), Some(Value::Count(3)));
        let path = cache.path(&key);
        let text = fs::read_to_string(&path).unwrap().replace(VERSION, "0.0.0-old");
        fs::write(&path, text).unwrap();
        assert!(cache.get(&key).is_none());
    }
}

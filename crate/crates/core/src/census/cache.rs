use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{CensusReport, ARTIFACT_VERSION};
use crate::error::{Error, Result};

/// Directory of census reports keyed by `(n, version)`.
#[derive(Clone, Debug)]
pub struct CensusCache {
    dir: PathBuf,
    version: String,
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    version: String,
    n: usize,
    report: CensusReport,
    checksum: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheComparison {
    Miss,
    Match,
    /// The cached counts differ from a fresh run.
    Diverged { cached: CensusReport },
}

fn counts_digest(r: &CensusReport) -> String {
    let canonical = format!(
        "n={};total={};i={};s={};t5free={};extra={};maxe={};version={}",
        r.n, r.total, r.i_n, r.s_n, r.t5_free, r.extra, r.max_t5_free_edges, r.version
    );
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

impl CensusCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, ARTIFACT_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        CensusCache { dir: dir.into(), version: version.to_string() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("census-n{n}-v{}.json", self.version))
    }

    pub fn store(&self, report: &CensusReport) -> Result<PathBuf> {
        let mut report = report.clone();
        report.version = self.version.clone();
        let record = CacheRecord {
            version: self.version.clone(),
            n: report.n,
            checksum: counts_digest(&report),
            report,
        };
        fs::create_dir_all(&self.dir)?;
        let path = self.path(record.n);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(&record)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// `Ok(None)` on a miss, including a record written by another version.
    pub fn load(&self, n: usize) -> Result<Option<CensusReport>> {
        let path = self.path(n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let record: CacheRecord = serde_json::from_str(&text)?;
        if record.version != self.version || record.report.version != self.version {
            return Ok(None);
        }
        if record.n != n || record.report.n != n || counts_digest(&record.report) != record.checksum {
            return Err(Error::Checksum(path.display().to_string()));
        }
        Ok(Some(record.report))
    }

    pub fn compare(&self, fresh: &CensusReport) -> Result<CacheComparison> {
        Ok(match self.load(fresh.n)? {
            None => CacheComparison::Miss,
            Some(cached) if cached.counts() == fresh.counts() => CacheComparison::Match,
            Some(cached) => CacheComparison::Diverged { cached },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{full_census, CensusOptions};
    use super::*;

    #[test]
    fn roundtrip_miss_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CensusCache::new(dir.path());
        let r = full_census(4, &CensusOptions::with_workers(1)).unwrap();
        assert_eq!(cache.load(4).unwrap(), None);
        assert_eq!(cache.compare(&r).unwrap(), CacheComparison::Miss);
        let path = cache.store(&r).unwrap();
        assert_eq!(cache.load(4).unwrap(), Some(r.clone()));
        assert_eq!(cache.compare(&r).unwrap(), CacheComparison::Match);

        let bumped = CensusCache::with_version(dir.path(), "999.0.0");
        assert_eq!(bumped.load(4).unwrap(), None);

        let mut other = r.clone();
        other.s_n -= 1;
        assert!(matches!(cache.compare(&other).unwrap(), CacheComparison::Diverged { .. }));

        let text = fs::read_to_string(&path).unwrap().replace("\"s_n\": 15", "\"s_n\": 14");
        fs::write(&path, text).unwrap();
        assert!(matches!(cache.load(4), Err(Error::Checksum(_))));
    }
}

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::detection::{contains_t5, has_independent_neighborhoods, is_semibipartite};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{binom3, TripleSystem};

const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounts {
    pub total: u128,
    pub i_n: u128,
    pub s_n: u128,
    pub t5_free: u128,
    pub max_t5_free_edges: usize,
}

impl SweepCounts {
    fn merge(self, o: SweepCounts) -> SweepCounts {
        SweepCounts {
            total: self.total + o.total,
            i_n: self.i_n + o.i_n,
            s_n: self.s_n + o.s_n,
            t5_free: self.t5_free + o.t5_free,
            max_t5_free_edges: self.max_t5_free_edges.max(o.max_t5_free_edges),
        }
    }

    fn record(&mut self, c: &MaskClass) {
        self.total += 1;
        self.i_n += u128::from(c.independent);
        self.t5_free += u128::from(!c.contains_t5);
        self.s_n += u128::from(c.semibipartite);
        if !c.contains_t5 {
            self.max_t5_free_edges = self.max_t5_free_edges.max(c.edges);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaskClass {
    pub edges: usize,
    pub independent: bool,
    pub contains_t5: bool,
    pub semibipartite: bool,
}

/// Evaluates all three predicates on one mask and enforces
/// `independent == !contains_t5` and `semibipartite ⇒ independent`.
pub fn classify_mask(n: usize, mask: u64) -> Result<MaskClass> {
    let h = TripleSystem::from_mask(n, mask)?;
    let c = MaskClass {
        edges: h.edge_count(),
        independent: has_independent_neighborhoods(&h),
        contains_t5: contains_t5(&h),
        semibipartite: is_semibipartite(&h)?.is_some(),
    };
    if c.independent == c.contains_t5 {
        return Err(Error::Invariant(format!(
            "n={n} mask {mask:#x}: independent neighborhoods = {} but contains T5 = {}",
            c.independent, c.contains_t5
        )));
    }
    if c.semibipartite && !c.independent {
        return Err(Error::Invariant(format!("n={n} mask {mask:#x}: semi-bipartite without independent neighborhoods")));
    }
    Ok(c)
}

/// Counts over masks in `start..end`, split across `workers` threads. The
/// reduction is a sum, so the result does not depend on `workers`.
pub fn sweep_range(n: usize, start: u64, end: u64, workers: usize) -> Result<SweepCounts> {
    if binom3(n) > 63 {
        return invalid(format!("mask sweep needs C(n,3) <= 63, n={n}"));
    }
    if start > end || end > 1u64 << binom3(n) {
        return invalid(format!("mask range {start}..{end} out of bounds for n={n}"));
    }
    let chunk = |lo: u64| -> Result<SweepCounts> {
        let mut acc = SweepCounts::default();
        for mask in lo..end.min(lo + CHUNK) {
            acc.record(&classify_mask(n, mask)?);
        }
        Ok(acc)
    };
    let chunks = (start..end).step_by(CHUNK as usize);
    if workers <= 1 {
        return chunks.map(chunk).try_fold(SweepCounts::default(), |a, c| Ok(a.merge(c?)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let starts: Vec<u64> = chunks.collect();
    pool.install(|| {
        starts
            .into_par_iter()
            .map(chunk)
            .try_reduce(SweepCounts::default, |a, b| Ok(a.merge(b)))
    })
}

/// Resumable position of a sweep over `0..end`, with the counts of every
/// mask below `next_mask`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCursor {
    pub n: usize,
    pub next_mask: u64,
    pub end: u64,
    pub counts: SweepCounts,
    pub checksum: String,
}

impl SweepCursor {
    pub fn new(n: usize, end: u64) -> Self {
        let mut c = SweepCursor { n, next_mask: 0, end, counts: SweepCounts::default(), checksum: String::new() };
        c.checksum = c.digest();
        c
    }

    fn digest(&self) -> String {
        let c = &self.counts;
        let canonical = format!(
            "n={};next={};end={};total={};i={};s={};t5free={};maxe={}",
            self.n, self.next_mask, self.end, c.total, c.i_n, c.s_n, c.t5_free, c.max_t5_free_edges
        );
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub fn advance(&mut self, next_mask: u64, block: &SweepCounts) {
        self.counts = self.counts.merge(*block);
        self.next_mask = next_mask;
        self.checksum = self.digest();
    }

    /// Reads a cursor; `Ok(None)` if the file does not exist.
    pub fn load(path: &Path) -> Result<Option<SweepCursor>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let cursor: SweepCursor = serde_json::from_str(&text)?;
        if cursor.checksum != cursor.digest() {
            return Err(Error::Checksum(path.display().to_string()));
        }
        Ok(Some(cursor))
    }

    /// Writes to a sibling temp file and renames over `path`.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worker_count_does_not_change_counts() {
        let one = sweep_range(5, 0, 1 << 10, 1).unwrap();
        for w in [2, 4, 8] {
            assert_eq!(sweep_range(5, 0, 1 << 10, w).unwrap(), one);
        }
        assert_eq!(one.total, 1024);
    }

    #[test]
    fn split_ranges_add_up() {
        let whole = sweep_range(5, 0, 1024, 1).unwrap();
        let a = sweep_range(5, 0, 333, 1).unwrap();
        let b = sweep_range(5, 333, 1024, 3).unwrap();
        assert_eq!(a.merge(b), whole);
    }

    #[test]
    fn bad_ranges() {
        assert!(sweep_range(5, 10, 5, 1).is_err());
        assert!(sweep_range(5, 0, 1025, 1).is_err());
        assert!(sweep_range(9, 0, 1, 1).is_err());
    }

    #[test]
    fn tampered_cursor_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let mut c = SweepCursor::new(5, 1024);
        c.advance(512, &sweep_range(5, 0, 512, 1).unwrap());
        c.store(&path).unwrap();
        assert_eq!(SweepCursor::load(&path).unwrap(), Some(c.clone()));
        let text = std::fs::read_to_string(&path).unwrap().replace("\"next_mask\": 512", "\"next_mask\": 600");
        std::fs::write(&path, text).unwrap();
        assert!(matches!(SweepCursor::load(&path), Err(Error::Checksum(_))));
    }
}

//! Exact preimage sets `s(k) = {n : φ̃(n) = k}`.
//!
//! A single pass over `[1, N(K)]`, where `N(K)` is the certified threshold
//! for the largest requested value, buckets every `n` by `φ̃(n)`. Because
//! thresholds never decrease in `k`, that one pass is complete for every
//! `k ≤ K` at once.

use serde::Serialize;

use crate::bounds::{global_threshold, ThresholdCertificate};
use crate::error::{Error, Result};
use crate::phitilde::phi_tilde_value;
use crate::sieve::{SegmentedSieve, SieveTables};

/// Largest range the preimage scan will stream through.
pub const SCAN_CAP: u64 = 10_000_000_000;

/// Largest `K` accepted by the scans.
pub const MAX_TARGET: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Empty,
    Singleton,
    Multiple,
}

impl Classification {
    pub fn of(count: usize) -> Classification {
        match count {
            0 => Classification::Empty,
            1 => Classification::Singleton,
            _ => Classification::Multiple,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Empty => "empty",
            Classification::Singleton => "singleton",
            Classification::Multiple => "multiple",
        }
    }
}

/// The complete preimage of `k` together with the certificate that no
/// solution exceeds `certificate.global_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreimageReport {
    pub k: u64,
    pub certificate: ThresholdCertificate,
    pub elements: Vec<u64>,
    pub classification: Classification,
}

/// Preimages of every `k ≤ max_k`, from one certified scan.
#[derive(Debug, Clone)]
pub struct ValueIndex {
    max_k: u64,
    scanned_bound: u64,
    certificates: Vec<ThresholdCertificate>,
    buckets: Vec<Vec<u64>>,
}

impl ValueIndex {
    /// Scans `[1, N(max_k)]`, reading the tables when they reach far enough
    /// and streaming segmented windows otherwise.
    pub fn build(max_k: u64, tables: &SieveTables) -> Result<ValueIndex> {
        if max_k == 0 {
            return Err(Error::InvalidArgument(
                "target value must be at least 1".into(),
            ));
        }
        if max_k > MAX_TARGET {
            return Err(Error::Resource {
                what: "target value",
                value: max_k,
                cap: MAX_TARGET,
            });
        }
        let certificates = (1..=max_k)
            .map(global_threshold)
            .collect::<Result<Vec<_>>>()?;
        let scanned_bound = certificates
            .iter()
            .map(|c| c.global_bound)
            .max()
            .unwrap_or(1);
        if scanned_bound > SCAN_CAP {
            return Err(Error::Resource {
                what: "preimage scan bound",
                value: scanned_bound,
                cap: SCAN_CAP,
            });
        }

        let mut buckets = vec![Vec::new(); max_k as usize + 1];
        let mut visit = |n: u64, v: u64| {
            if v <= max_k {
                buckets[v as usize].push(n);
            }
        };
        if scanned_bound <= tables.limit() {
            for n in 1..=scanned_bound {
                visit(n, phi_tilde_value(n, tables));
            }
        } else {
            SegmentedSieve::new(scanned_bound).for_each_phi_tilde(visit);
        }

        Ok(ValueIndex {
            max_k,
            scanned_bound,
            certificates,
            buckets,
        })
    }

    pub fn max_k(&self) -> u64 {
        self.max_k
    }

    /// Upper end of the scanned range.
    pub fn scanned_bound(&self) -> u64 {
        self.scanned_bound
    }

    fn bucket(&self, k: u64) -> Result<&[u64]> {
        if k == 0 || k > self.max_k {
            return Err(Error::InvalidArgument(format!(
                "value {k} is outside the indexed range [1, {}]",
                self.max_k
            )));
        }
        Ok(&self.buckets[k as usize])
    }

    pub fn certificate(&self, k: u64) -> Result<&ThresholdCertificate> {
        self.bucket(k)?;
        Ok(&self.certificates[(k - 1) as usize])
    }

    pub fn preimage(&self, k: u64) -> Result<PreimageReport> {
        let elements = self.bucket(k)?.to_vec();
        Ok(PreimageReport {
            k,
            certificate: self.certificate(k)?.clone(),
            classification: Classification::of(elements.len()),
            elements,
        })
    }

    pub fn smallest(&self, k: u64) -> Result<Option<u64>> {
        Ok(self.bucket(k)?.first().copied())
    }

    pub fn count(&self, k: u64) -> Result<usize> {
        Ok(self.bucket(k)?.len())
    }

    /// `k ≤ max_k` with no preimage.
    pub fn missing(&self) -> Vec<u64> {
        self.values_with_count(|c| c == 0)
    }

    /// `k ≤ max_k` with exactly one preimage.
    pub fn singletons(&self) -> Vec<u64> {
        self.values_with_count(|c| c == 1)
    }

    fn values_with_count(&self, pred: impl Fn(usize) -> bool) -> Vec<u64> {
        (1..=self.max_k)
            .filter(|&k| pred(self.buckets[k as usize].len()))
            .collect()
    }

    /// Solutions found above their own value's certified bound. Always
    /// empty unless a bound is unsound.
    pub fn certificate_violations(&self) -> Vec<(u64, u64)> {
        (1..=self.max_k)
            .flat_map(|k| {
                let bound = self.certificates[(k - 1) as usize].global_bound;
                self.buckets[k as usize]
                    .iter()
                    .filter(move |&&n| n > bound)
                    .map(move |&n| (k, n))
            })
            .collect()
    }
}

pub fn preimage(k: u64, tables: &SieveTables) -> Result<PreimageReport> {
    ValueIndex::build(k, tables)?.preimage(k)
}

pub fn smallest_preimage(k: u64, tables: &SieveTables) -> Result<Option<u64>> {
    ValueIndex::build(k, tables)?.smallest(k)
}

pub fn missing_values(max_k: u64, tables: &SieveTables) -> Result<Vec<u64>> {
    Ok(ValueIndex::build(max_k, tables)?.missing())
}

pub fn singleton_values(max_k: u64, tables: &SieveTables) -> Result<Vec<u64>> {
    Ok(ValueIndex::build(max_k, tables)?.singletons())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityPoint {
    pub k: u64,
    pub missing_so_far: u64,
    pub density: f64,
}

/// Empirical count of values never taken. Evidence only; proves nothing
/// about infinitely many missing values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub max_k: u64,
    pub scanned_bound: u64,
    pub missing: Vec<u64>,
    pub count: u64,
    pub density: f64,
    /// Running density, one point per missing value.
    pub running: Vec<DensityPoint>,
}

impl ConjectureReport {
    pub fn from_index(index: &ValueIndex) -> ConjectureReport {
        let missing = index.missing();
        let running = missing
            .iter()
            .enumerate()
            .map(|(i, &k)| DensityPoint {
                k,
                missing_so_far: i as u64 + 1,
                density: (i + 1) as f64 / k as f64,
            })
            .collect();
        ConjectureReport {
            max_k: index.max_k(),
            scanned_bound: index.scanned_bound(),
            count: missing.len() as u64,
            density: missing.len() as f64 / index.max_k() as f64,
            missing,
            running,
        }
    }
}

pub fn conjecture_scan(max_k: u64, tables: &SieveTables) -> Result<ConjectureReport> {
    Ok(ConjectureReport::from_index(&ValueIndex::build(
        max_k, tables,
    )?))
}

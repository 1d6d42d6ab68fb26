//! Command payloads and their CSV projections.
//!
//! Lists inside a CSV cell are joined with `;`. Nested pairs use `:`.

use serde::Serialize;

use phitilde::analysis::{Classification, ConjectureReport, PreimageReport};
use phitilde::bounds::ClassBound;
use phitilde::phitilde::PhiTildeRecord;
use phitilde::VerificationOutcome;

/// A payload that can also be written as a fixed-header CSV table.
pub trait Tabular {
    fn header(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

fn record_row(r: &PhiTildeRecord) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.phi.to_string(),
        r.pi.to_string(),
        r.omega.to_string(),
        r.phi_tilde.to_string(),
    ]
}

const RECORD_HEADER: [&str; 5] = ["n", "phi", "pi", "omega", "phi_tilde"];

impl Tabular for PhiTildeRecord {
    fn header(&self) -> Vec<&'static str> {
        RECORD_HEADER.to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![record_row(self)]
    }
}

impl Tabular for Vec<PhiTildeRecord> {
    fn header(&self) -> Vec<&'static str> {
        RECORD_HEADER.to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.iter().map(record_row).collect()
    }
}

#[derive(Debug, Serialize)]
pub struct EnumeratePayload {
    pub n: u64,
    pub phi_tilde: u64,
    pub elements: Vec<u64>,
}

impl Tabular for EnumeratePayload {
    fn header(&self) -> Vec<&'static str> {
        vec!["n", "phi_tilde", "elements"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.n.to_string(),
            self.phi_tilde.to_string(),
            join(&self.elements),
        ]]
    }
}

#[derive(Debug, Serialize)]
pub struct PreimagePayload {
    pub k: u64,
    pub elements: Vec<u64>,
    pub classification: Classification,
    pub bound: u64,
    pub primorial_cutoff: u64,
    pub per_class_bounds: Vec<ClassBound>,
}

impl From<PreimageReport> for PreimagePayload {
    fn from(r: PreimageReport) -> Self {
        PreimagePayload {
            k: r.k,
            elements: r.elements,
            classification: r.classification,
            bound: r.certificate.global_bound,
            primorial_cutoff: r.certificate.primorial_cutoff,
            per_class_bounds: r.certificate.per_class_bounds,
        }
    }
}

impl Tabular for PreimagePayload {
    fn header(&self) -> Vec<&'static str> {
        vec![
            "k",
            "classification",
            "bound",
            "primorial_cutoff",
            "elements",
            "per_class_bounds",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let classes: Vec<String> = self
            .per_class_bounds
            .iter()
            .map(|c| format!("{}:{}", c.omega, c.bound))
            .collect();
        vec![vec![
            self.k.to_string(),
            self.classification.as_str().to_string(),
            self.bound.to_string(),
            self.primorial_cutoff.to_string(),
            join(&self.elements),
            join(&classes),
        ]]
    }
}

#[derive(Debug, Serialize)]
pub struct SmallestRow {
    pub k: u64,
    pub smallest: Option<u64>,
    pub bound: u64,
}

impl Tabular for Vec<SmallestRow> {
    fn header(&self) -> Vec<&'static str> {
        vec!["k", "smallest", "bound"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    r.smallest.map(|n| n.to_string()).unwrap_or_default(),
                    r.bound.to_string(),
                ]
            })
            .collect()
    }
}

#[derive(Debug, Serialize)]
pub struct ValueListPayload {
    pub max_k: u64,
    pub scanned_bound: u64,
    pub values: Vec<u64>,
}

impl Tabular for ValueListPayload {
    fn header(&self) -> Vec<&'static str> {
        vec!["max_k", "scanned_bound", "values"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.max_k.to_string(),
            self.scanned_bound.to_string(),
            join(&self.values),
        ]]
    }
}

const OUTCOME_HEADER: [&str; 7] = [
    "claim_id", "range", "passed", "input", "expected", "actual", "note",
];

fn outcome_row(o: &VerificationOutcome) -> Vec<String> {
    let cx = o.counterexample.as_ref();
    vec![
        o.claim_id.clone(),
        o.range.clone(),
        o.passed.to_string(),
        cx.map(|c| c.input.clone()).unwrap_or_default(),
        cx.map(|c| c.expected.clone()).unwrap_or_default(),
        cx.map(|c| c.actual.clone()).unwrap_or_default(),
        o.note.clone().unwrap_or_default(),
    ]
}

impl Tabular for Vec<VerificationOutcome> {
    fn header(&self) -> Vec<&'static str> {
        OUTCOME_HEADER.to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.iter().map(outcome_row).collect()
    }
}

#[derive(Debug, Serialize)]
pub struct PrimorialRow {
    pub i: u64,
    pub primorial: u64,
    pub phi: u64,
    pub pi: u64,
    pub phi_tilde: u64,
    /// `|Q_i|`, defined from `i = 4`.
    pub q_cardinality: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct PrimorialGrowthPayload {
    pub max_i: u64,
    pub rows: Vec<PrimorialRow>,
    pub outcome: VerificationOutcome,
}

impl Tabular for PrimorialGrowthPayload {
    fn header(&self) -> Vec<&'static str> {
        let mut h = vec!["i", "primorial", "phi", "pi", "phi_tilde", "q_cardinality"];
        h.extend(OUTCOME_HEADER);
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let tail = outcome_row(&self.outcome);
        self.rows
            .iter()
            .map(|r| {
                let mut row = vec![
                    r.i.to_string(),
                    r.primorial.to_string(),
                    r.phi.to_string(),
                    r.pi.to_string(),
                    r.phi_tilde.to_string(),
                    r.q_cardinality.map(|q| q.to_string()).unwrap_or_default(),
                ];
                row.extend(tail.iter().cloned());
                row
            })
            .collect()
    }
}

impl Tabular for ConjectureReport {
    fn header(&self) -> Vec<&'static str> {
        vec![
            "max_k",
            "scanned_bound",
            "count",
            "density",
            "missing",
            "running",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let running: Vec<String> = self
            .running
            .iter()
            .map(|p| format!("{}:{}:{}", p.k, p.missing_so_far, p.density))
            .collect();
        vec![vec![
            self.max_k.to_string(),
            self.scanned_bound.to_string(),
            self.count.to_string(),
            self.density.to_string(),
            join(&self.missing),
            join(&running),
        ]]
    }
}

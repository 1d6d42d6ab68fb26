//! Line-oriented golden data: `key|v1,v2,...`, `#` starts a comment line,
//! and an empty right-hand side means the empty list.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenEntry {
    pub key: u64,
    pub values: Vec<u64>,
}

/// A named golden data file and its parsed entries, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub name: &'static str,
    pub entries: Vec<GoldenEntry>,
}

pub const FIRST_TWENTY: (&str, &str) = (
    "first_twenty.txt",
    include_str!("../../data/first_twenty.txt"),
);
pub const SMALLEST_PREIMAGE: (&str, &str) = (
    "smallest_preimage.txt",
    include_str!("../../data/smallest_preimage.txt"),
);
pub const OBSERVATIONS: (&str, &str) = (
    "observations.txt",
    include_str!("../../data/observations.txt"),
);
pub const VALUE_ONE: (&str, &str) = ("value_one.txt", include_str!("../../data/value_one.txt"));
pub const MISSING_VALUES: (&str, &str) = (
    "missing_values.txt",
    include_str!("../../data/missing_values.txt"),
);
pub const SINGLETON_VALUES: (&str, &str) = (
    "singleton_values.txt",
    include_str!("../../data/singleton_values.txt"),
);

/// Every shipped data file as `(name, contents)`.
pub const ALL_FILES: [(&str, &str); 6] = [
    FIRST_TWENTY,
    SMALLEST_PREIMAGE,
    OBSERVATIONS,
    VALUE_ONE,
    MISSING_VALUES,
    SINGLETON_VALUES,
];

impl GoldenTable {
    pub fn parse(name: &'static str, text: &str) -> Result<GoldenTable> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::GoldenData {
                source_name: name,
                line: idx + 1,
                message,
            };
            let (key, rest) = line
                .split_once('|')
                .ok_or_else(|| err("missing `|` separator".into()))?;
            let key = key
                .trim()
                .parse::<u64>()
                .map_err(|e| err(format!("bad key `{key}`: {e}")))?;
            let rest = rest.trim();
            let values = if rest.is_empty() {
                Vec::new()
            } else {
                rest.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<u64>()
                            .map_err(|e| err(format!("bad value `{v}`: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            entries.push(GoldenEntry { key, values });
        }
        Ok(GoldenTable { name, entries })
    }

    pub fn load((name, text): (&'static str, &str)) -> Result<GoldenTable> {
        Self::parse(name, text)
    }

    pub fn get(&self, key: u64) -> Option<&[u64]> {
        self.entries
            .iter()
            .find(|e| e.key == key)
            .map(|e| e.values.as_slice())
    }
}

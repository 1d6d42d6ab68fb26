//! Exact prime counting for arguments beyond the sieve limit.
//!
//! Uses the Legendre-style recurrence over the `O(√x)` distinct values of
//! `⌊x/d⌋`: start from `S(v) = v − 1` for every such `v`, then for each prime
//! `p ≤ √x` remove the composites whose smallest prime factor is `p`:
//!
//! ```text
//! S(v) -= S(⌊v/p⌋) − S(p − 1)      for all v ≥ p²
//! ```
//!
//! After the last prime, `S(x) = π(x)`. Runs in `O(x^{3/4})` time and
//! `O(√x)` memory.

use super::SieveTables;
use crate::error::{Error, Result};

/// Largest argument accepted by the sublinear counter.
pub const PRIME_COUNT_CAP: u64 = 100_000_000_000;

/// `π(x)`: read from the tables when `x ≤ limit`, counted sublinearly
/// otherwise.
pub fn prime_count(x: u64, tables: &SieveTables) -> Result<u64> {
    if x == 0 {
        return Ok(0);
    }
    if x <= tables.limit() {
        return Ok(tables.pi(x));
    }
    count_primes_sublinear(x)
}

/// `π(x)` without reference to any table.
pub fn count_primes_sublinear(x: u64) -> Result<u64> {
    if x > PRIME_COUNT_CAP {
        return Err(Error::Resource {
            what: "prime count argument",
            value: x,
            cap: PRIME_COUNT_CAP,
        });
    }
    if x < 2 {
        return Ok(0);
    }
    let root = x.isqrt() as usize;
    // small[v] = S(v) for v ≤ root; large[i] = S(x / i) for i ≤ root.
    let mut small: Vec<u64> = (0..=root as u64).map(|v| v.saturating_sub(1)).collect();
    let mut large: Vec<u64> = (0..=root as u64)
        .map(|i| x.checked_div(i).map_or(0, |q| q - 1))
        .collect();

    for p in 2..=root {
        if small[p] == small[p - 1] {
            continue;
        }
        let below = small[p - 1];
        let square = (p * p) as u64;

        let upto = root.min((x / square) as usize);
        for i in 1..=upto {
            let d = i * p;
            let removed = if d <= root {
                large[d]
            } else {
                small[(x / d as u64) as usize]
            };
            large[i] -= removed - below;
        }
        for v in (square as usize..=root).rev() {
            small[v] -= small[v / p] - below;
        }
    }
    Ok(large[1])
}

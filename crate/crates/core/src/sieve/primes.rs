use std::sync::Mutex;

use crate::error::{Error, Result};

/// Largest prime index `nth_prime` serves (`p_{2·10^6}` = 32,452,843).
pub const NTH_PRIME_CAP: u64 = 2_000_000;

/// `N_15` is the last primorial below `2^64`.
pub const PRIMORIAL_MAX_INDEX: u64 = 15;

static PRIME_CACHE: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// Primes `≤ n` by a plain sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for m in (i * i..=n).step_by(i) {
                composite[m] = true;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&m| !composite[m])
        .map(|m| m as u64)
        .collect()
}

/// Upper bound on `p_i` (Rosser's bound for `i ≥ 6`).
fn nth_prime_upper_bound(i: u64) -> u64 {
    if i < 6 {
        return 13;
    }
    let x = i as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64 + 1
}

/// The `i`-th prime, 1-based (`nth_prime(1) == 2`).
///
/// Primes are sieved into a process-wide cache that grows on demand.
pub fn nth_prime(i: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::InvalidArgument(
            "prime index must be at least 1".into(),
        ));
    }
    if i > NTH_PRIME_CAP {
        return Err(Error::Resource {
            what: "prime index",
            value: i,
            cap: NTH_PRIME_CAP,
        });
    }
    let mut cache = PRIME_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if (cache.len() as u64) < i {
        // Grow geometrically so repeated small extensions stay cheap.
        let target = i.max(2 * cache.len() as u64).min(NTH_PRIME_CAP);
        *cache = primes_up_to(nth_prime_upper_bound(target));
    }
    Ok(cache[(i - 1) as usize])
}

/// `N_i = p_1 p_2 ⋯ p_i`, with `N_0 = 1`.
pub fn primorial(i: u64) -> Result<u64> {
    let mut acc: u64 = 1;
    for j in 1..=i {
        acc = acc
            .checked_mul(nth_prime(j)?)
            .ok_or(Error::Overflow { index: i })?;
    }
    Ok(acc)
}

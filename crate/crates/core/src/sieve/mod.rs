//! Per-integer arithmetic data up to a fixed limit, plus the prime
//! machinery (nth prime, primorials, prime counting) the rest of the crate
//! builds on.
//!
//! [`SieveTables`] is produced by a single linear sieve pass that records the
//! smallest prime factor of every `n` and derives `φ(n)` and `ω(n)` from it
//! as it goes. Arguments beyond the table limit are handled by
//! [`segmented`] windows and the sublinear counter in [`counting`].

pub mod counting;
mod primes;
pub mod segmented;

pub use counting::{count_primes_sublinear, prime_count, PRIME_COUNT_CAP};
pub use primes::{nth_prime, primes_up_to, primorial, NTH_PRIME_CAP, PRIMORIAL_MAX_INDEX};
pub use segmented::{segmented_prime_count, ArithmeticWindow, SegmentedSieve, WINDOW_SIZE};

use crate::error::{Error, Result};

/// Default in-memory sieve limit.
pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// Largest limit `build_sieve` accepts; streaming scans go through
/// [`SegmentedSieve`] instead.
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// Smallest prime factor, `φ`, `ω`, primality and prefix prime counts for
/// every `1 ≤ n ≤ limit`.
///
/// `spf(1)` is the sentinel `1`. Tables are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveTables {
    limit: u64,
    spf: Vec<u32>,
    phi: Vec<u32>,
    omega: Vec<u8>,
    is_prime: Vec<bool>,
    pi_prefix: Vec<u32>,
    primes: Vec<u32>,
}

/// Builds tables for `1..=limit` with a linear sieve.
pub fn build_sieve(limit: u64) -> Result<SieveTables> {
    if limit == 0 {
        return Err(Error::InvalidArgument(
            "sieve limit must be at least 1".into(),
        ));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::Capacity {
            requested: limit,
            budget: MAX_SIEVE_LIMIT,
        });
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut phi = vec![0u32; n + 1];
    let mut omega = vec![0u8; n + 1];
    let mut primes: Vec<u32> = Vec::new();

    spf[1] = 1;
    phi[1] = 1;
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            phi[i] = i as u32 - 1;
            omega[i] = 1;
            primes.push(i as u32);
        }
        let least = spf[i];
        for &p in &primes {
            let m = i * p as usize;
            if p > least || m > n {
                break;
            }
            spf[m] = p;
            if p == least {
                phi[m] = phi[i] * p;
                omega[m] = omega[i];
            } else {
                phi[m] = phi[i] * (p - 1);
                omega[m] = omega[i] + 1;
            }
        }
    }

    let mut is_prime = vec![false; n + 1];
    for &p in &primes {
        is_prime[p as usize] = true;
    }
    let mut pi_prefix = vec![0u32; n + 1];
    let mut running = 0u32;
    for m in 1..=n {
        if is_prime[m] {
            running += 1;
        }
        pi_prefix[m] = running;
    }

    Ok(SieveTables {
        limit,
        spf,
        phi,
        omega,
        is_prime,
        pi_prefix,
        primes,
    })
}

impl SieveTables {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn contains(&self, n: u64) -> bool {
        (1..=self.limit).contains(&n)
    }

    /// Returns `Ok(())` when `n` is inside `[1, limit]`.
    pub fn check(&self, n: u64) -> Result<()> {
        if self.contains(n) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                n,
                limit: self.limit,
            })
        }
    }

    // The scalar accessors below index straight into the tables and panic
    // outside `[1, limit]`, like slice indexing.

    pub fn spf(&self, n: u64) -> u64 {
        self.assert_in_range(n);
        u64::from(self.spf[n as usize])
    }

    pub fn phi(&self, n: u64) -> u64 {
        self.assert_in_range(n);
        u64::from(self.phi[n as usize])
    }

    pub fn omega(&self, n: u64) -> u32 {
        self.assert_in_range(n);
        u32::from(self.omega[n as usize])
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.assert_in_range(n);
        self.is_prime[n as usize]
    }

    /// Number of primes `≤ n`.
    pub fn pi(&self, n: u64) -> u64 {
        self.assert_in_range(n);
        u64::from(self.pi_prefix[n as usize])
    }

    /// Primality of `0..=limit` as a slice (`[0]` and `[1]` are false).
    pub fn prime_flags(&self) -> &[bool] {
        &self.is_prime
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> impl DoubleEndedIterator<Item = u64> + ExactSizeIterator + '_ {
        self.primes.iter().map(|&p| u64::from(p))
    }

    /// Prime factorization of `n` as ascending `(prime, exponent)` pairs.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        self.check(n)?;
        let mut factors: Vec<(u64, u32)> = Vec::with_capacity(self.omega(n) as usize);
        let mut rest = n;
        while rest > 1 {
            let p = self.spf(rest);
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        Ok(factors)
    }

    /// Product of the distinct primes dividing `n`.
    pub fn squarefree_kernel(&self, n: u64) -> Result<u64> {
        Ok(self.factorize(n)?.iter().map(|&(p, _)| p).product())
    }

    fn assert_in_range(&self, n: u64) {
        assert!(
            self.contains(n),
            "{n} is outside the sieve range [1, {}]",
            self.limit
        );
    }
}

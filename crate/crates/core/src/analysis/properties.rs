//! Exhaustive checks of the structural inequalities satisfied by `φ̃`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::outcome::{Counterexample, VerificationOutcome};
use crate::phitilde::phi_tilde_value;
use crate::sieve::{primorial, SieveTables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyId {
    /// `φ̃(n) ≥ φ̃(n₀)` for the squarefree kernel `n₀` of `n`.
    SquarefreePart,
    /// `φ̃(n^k) < φ̃(n^{k+1})` for `n ≥ 3`.
    PrimePowerGrowth,
    /// `φ̃(np) ≤ φ̃(nq)` for primes `p < q` coprime to `n`.
    PrimeSwap,
    /// `φ̃(N_{ω(a)}) ≤ φ̃(a)`.
    PrimorialMin,
}

impl PropertyId {
    pub const ALL: [PropertyId; 4] = [
        PropertyId::SquarefreePart,
        PropertyId::PrimePowerGrowth,
        PropertyId::PrimeSwap,
        PropertyId::PrimorialMin,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::SquarefreePart => "squarefree_part",
            PropertyId::PrimePowerGrowth => "prime_power_growth",
            PropertyId::PrimeSwap => "prime_swap",
            PropertyId::PrimorialMin => "primorial_min",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

pub fn check_property(
    id: PropertyId,
    limit: u64,
    tables: &SieveTables,
) -> Result<VerificationOutcome> {
    tables.check(limit)?;
    let f = |n: u64| phi_tilde_value(n, tables);
    let (range, cx) = match id {
        PropertyId::SquarefreePart => (
            format!("1 <= n <= {limit}"),
            squarefree_part(limit, tables, f)?,
        ),
        PropertyId::PrimePowerGrowth => (
            format!("n >= 3, k >= 1, n^(k+1) <= {limit}"),
            prime_power_growth(limit, f),
        ),
        PropertyId::PrimeSwap => (
            format!("primes p < q, gcd(pq, n) = 1, nq <= {limit}"),
            prime_swap(limit, tables, f),
        ),
        PropertyId::PrimorialMin => (
            format!("1 <= a <= {limit}, omega(a) >= 1"),
            primorial_min(limit, tables, f)?,
        ),
    };
    Ok(VerificationOutcome::from_check(id.as_str(), range, cx))
}

fn squarefree_part(
    limit: u64,
    tables: &SieveTables,
    f: impl Fn(u64) -> u64,
) -> Result<Option<Counterexample>> {
    for n in 1..=limit {
        let kernel = tables.squarefree_kernel(n)?;
        if f(n) < f(kernel) {
            return Ok(Some(Counterexample::new(
                format!("n = {n}, n0 = {kernel}"),
                format!(">= {}", f(kernel)),
                f(n).to_string(),
            )));
        }
    }
    Ok(None)
}

fn prime_power_growth(limit: u64, f: impl Fn(u64) -> u64) -> Option<Counterexample> {
    let mut n = 3u64;
    while n.saturating_mul(n) <= limit {
        let mut power = n;
        let mut k = 1;
        while let Some(next) = power.checked_mul(n).filter(|&x| x <= limit) {
            if f(power) >= f(next) {
                return Some(Counterexample::new(
                    format!("n = {n}, k = {k}"),
                    format!("phi_tilde({power}) < phi_tilde({next})"),
                    format!("{} >= {}", f(power), f(next)),
                ));
            }
            power = next;
            k += 1;
        }
        n += 1;
    }
    None
}

fn prime_swap(limit: u64, tables: &SieveTables, f: impl Fn(u64) -> u64) -> Option<Counterexample> {
    let primes: Vec<u64> = tables.primes().take_while(|&p| p <= limit).collect();
    for (qi, &q) in primes.iter().enumerate() {
        for &p in &primes[..qi] {
            for n in (1..=limit / q).filter(|n| n % p != 0 && n % q != 0) {
                let (lo, hi) = (f(n * p), f(n * q));
                if lo > hi {
                    return Some(Counterexample::new(
                        format!("n = {n}, p = {p}, q = {q}"),
                        format!("phi_tilde({}) <= phi_tilde({})", n * p, n * q),
                        format!("{lo} > {hi}"),
                    ));
                }
            }
        }
    }
    None
}

fn primorial_min(
    limit: u64,
    tables: &SieveTables,
    f: impl Fn(u64) -> u64,
) -> Result<Option<Counterexample>> {
    // φ̃(N_i) for every N_i ≤ limit; ω(a) = i forces N_i ≤ a.
    let mut at_primorial = vec![0u64];
    for i in 1.. {
        let n = primorial(i)?;
        if n > limit {
            break;
        }
        at_primorial.push(f(n));
    }
    for a in 2..=limit {
        let i = tables.omega(a) as usize;
        if f(a) < at_primorial[i] {
            return Ok(Some(Counterexample::new(
                format!("a = {a}, omega = {i}"),
                format!(">= {}", at_primorial[i]),
                f(a).to_string(),
            )));
        }
    }
    Ok(None)
}

//! Effective thresholds beyond which `φ̃` exceeds a given value.
//!
//! Two facts are combined into a [`ThresholdCertificate`]:
//!
//! * **Primorial growth.** For `i ≥ 4` let `Q_i` be the primes `r > p_i` with
//!   `r · p_{i+1} < N_i`. The products `r · p_{i+1}` all lie in `E_{N_i}`, so
//!   `φ̃(N_i) > |Q_i|`, and `|Q_i|` grows strictly from `|Q_4| = 4`, giving
//!   `|Q_i| ≥ i`. Since `φ̃(a) ≥ φ̃(N_{ω(a)})` for every `a`, any `m` with
//!   `ω(m) ≥ max(4, k + 1)` has `φ̃(m) > k`.
//! * **ω-class bounds.** Fix `ω(n) = b` and let `ℓ` be minimal with
//!   `ℓ(ℓ+1)/2 > k`. Below `p = p_{b+ℓ+1}` there are `b + ℓ` primes, at most
//!   `b` of which divide `n`, so at least `ℓ` are coprime to `n`. Their
//!   pairwise products (squares included) are `ℓ(ℓ+1)/2` distinct composites
//!   below `p² < n`, which together with `1` give `φ̃(n) > k` whenever
//!   `n > p²`.
//!
//! The global bound is the largest ω-class bound below the primorial cutoff.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::outcome::{Counterexample, VerificationOutcome};
use crate::phitilde::phi_tilde_primorial;
use crate::sieve::{nth_prime, prime_count, primorial, SieveTables};

/// The set `Q_i` and its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QiReport {
    pub index: u64,
    pub elements: Vec<u64>,
    pub cardinality: u64,
}

/// Largest `r` with `r · p_{i+1} < N_i`.
fn q_upper(i: u64) -> Result<u64> {
    if i < 4 {
        return Err(Error::InvalidArgument(format!(
            "Q_i is defined for i >= 4, got {i}"
        )));
    }
    Ok((primorial(i)? - 1) / nth_prime(i + 1)?)
}

/// Lists `Q_i`. Every prime in `(p_i, N_i / p_{i+1})` is coprime to `N_i`,
/// so this is a contiguous run of primes read off the tables.
pub fn compute_q(i: u64, tables: &SieveTables) -> Result<QiReport> {
    let upper = q_upper(i)?;
    tables.check(upper)?;
    let p_i = nth_prime(i)?;
    let elements: Vec<u64> = tables
        .primes()
        .skip_while(|&p| p <= p_i)
        .take_while(|&p| p <= upper)
        .collect();
    Ok(QiReport {
        index: i,
        cardinality: elements.len() as u64,
        elements,
    })
}

/// `|Q_i| = π(⌊(N_i − 1) / p_{i+1}⌋) − i`, without listing the set.
pub fn q_cardinality(i: u64, tables: &SieveTables) -> Result<u64> {
    let upper = q_upper(i)?;
    Ok(prime_count(upper, tables)? - i)
}

/// Smallest `ℓ` with `ℓ(ℓ+1)/2 > k`.
pub fn pair_count_index(k: u64) -> u64 {
    let mut l = k.isqrt();
    while l > 0 && l * (l + 1) / 2 > k {
        l -= 1;
    }
    while l * (l + 1) / 2 <= k {
        l += 1;
    }
    l
}

/// `B(k, b) = p_{b+ℓ+1}²`: every `n > B(k, b)` with `ω(n) = b` has
/// `φ̃(n) > k`.
pub fn omega_class_bound(k: u64, b: u64) -> Result<u64> {
    let p = nth_prime(b + pair_count_index(k) + 1)?;
    Ok(p * p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassBound {
    pub omega: u64,
    pub bound: u64,
}

/// Proof that `φ̃(m) > k` for every `m > global_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdCertificate {
    pub k: u64,
    /// One entry for each `ω` in `1..primorial_cutoff`.
    pub per_class_bounds: Vec<ClassBound>,
    /// From this `ω` upward the primorial argument applies.
    pub primorial_cutoff: u64,
    pub global_bound: u64,
}

impl ThresholdCertificate {
    /// The bound that applies to integers with the given number of distinct
    /// prime factors, `None` once the primorial argument covers them.
    pub fn bound_for_omega(&self, omega: u64) -> Option<u64> {
        match omega {
            0 => Some(1),
            w if w < self.primorial_cutoff => Some(self.per_class_bounds[(w - 1) as usize].bound),
            _ => None,
        }
    }
}

pub fn global_threshold(k: u64) -> Result<ThresholdCertificate> {
    let primorial_cutoff = (k + 1).max(4);
    let per_class_bounds = (1..primorial_cutoff)
        .map(|b| {
            Ok(ClassBound {
                omega: b,
                bound: omega_class_bound(k, b)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let global_bound = per_class_bounds.iter().map(|c| c.bound).max().unwrap_or(1);
    Ok(ThresholdCertificate {
        k,
        per_class_bounds,
        primorial_cutoff,
        global_bound,
    })
}

/// Checks, for the primorials up to `N_{i_max}`:
/// (a) `|Q_i| < |Q_{i+1}|`, (b) `|Q_i| ≥ i`, (c) `φ̃(N_i) < φ̃(N_{i+1})` from
/// `i = 3`, and (d) `φ̃(N_i) > |Q_i|`.
pub fn verify_primorial_growth(i_max: u64, tables: &SieveTables) -> Result<VerificationOutcome> {
    if i_max < 3 {
        return Err(Error::InvalidArgument(format!(
            "primorial growth starts at N_3, got i_max = {i_max}"
        )));
    }
    let claim = "primorial_growth";
    let range = format!("3 <= i <= {i_max}");

    let values = (3..=i_max)
        .map(|i| Ok(phi_tilde_primorial(i, tables)?.phi_tilde))
        .collect::<Result<Vec<u64>>>()?;
    let q_sizes = (4..=i_max)
        .map(|i| q_cardinality(i, tables))
        .collect::<Result<Vec<u64>>>()?;
    let value_at = |i: u64| values[(i - 3) as usize];
    let q_at = |i: u64| q_sizes[(i - 4) as usize];

    for i in 4..i_max {
        if q_at(i) >= q_at(i + 1) {
            return Ok(VerificationOutcome::fail(
                claim,
                range,
                Counterexample::new(
                    format!("|Q_{i}| < |Q_{}|", i + 1),
                    format!("{} < {}", q_at(i), q_at(i + 1)),
                    "not increasing",
                ),
            ));
        }
    }
    for i in 4..=i_max {
        if q_at(i) < i {
            return Ok(VerificationOutcome::fail(
                claim,
                range,
                Counterexample::new(
                    format!("|Q_{i}| >= {i}"),
                    format!(">= {i}"),
                    q_at(i).to_string(),
                ),
            ));
        }
    }
    for i in 3..i_max {
        if value_at(i) >= value_at(i + 1) {
            return Ok(VerificationOutcome::fail(
                claim,
                range,
                Counterexample::new(
                    format!("phi_tilde(N_{i}) < phi_tilde(N_{})", i + 1),
                    format!("{} < {}", value_at(i), value_at(i + 1)),
                    "not increasing",
                ),
            ));
        }
    }
    for i in 4..=i_max {
        if value_at(i) <= q_at(i) {
            return Ok(VerificationOutcome::fail(
                claim,
                range,
                Counterexample::new(
                    format!("phi_tilde(N_{i}) > |Q_{i}|"),
                    format!("> {}", q_at(i)),
                    value_at(i).to_string(),
                ),
            ));
        }
    }
    Ok(VerificationOutcome::pass(claim, range))
}

/// Smallest `M ≥ 1` with `φ̃(N_j) > n` for all `M ≤ j ≤ i_max`; beyond
/// `i_max` growth is taken from [`verify_primorial_growth`].
///
/// Fails if `φ̃(N_{i_max}) ≤ n`, since no such `M ≤ i_max` exists then.
pub fn primorial_index_threshold(n: u64, i_max: u64, tables: &SieveTables) -> Result<u64> {
    let mut m = None;
    for j in (1..=i_max).rev() {
        if phi_tilde_primorial(j, tables)?.phi_tilde > n {
            m = Some(j);
        } else {
            break;
        }
    }
    m.ok_or_else(|| Error::InvalidArgument(format!("phi_tilde(N_{i_max}) does not exceed {n}")))
}

//! `φ̃(n)`, the number of `m ≤ n` coprime to `n` that are not prime.
//!
//! Three routes are provided and are expected to agree:
//!
//! * [`phi_tilde`] evaluates `φ(n) − π(n) + ω(n)` from the sieve tables;
//! * [`phi_tilde_by_enumeration`] counts the members of
//!   `E_n = {m ≤ n : gcd(m, n) = 1, m not prime}` directly and serves as the
//!   ground truth;
//! * [`phi_tilde_primorial`] handles `n = N_i` far beyond the tables, using
//!   `φ(N_i) = ∏ (p_j − 1)` and the sublinear prime counter.
//!
//! `1` counts as a member of every `E_n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sieve::{nth_prime, prime_count, primorial, SieveTables};

/// `φ`, `π`, `ω` and `φ̃` of a single `n`, satisfying
/// `phi_tilde = phi − pi + omega`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PhiTildeRecord {
    pub n: u64,
    pub phi: u64,
    pub pi: u64,
    pub omega: u32,
    pub phi_tilde: u64,
}

/// The set `E_n`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoprimeCompositeSet {
    pub n: u64,
    pub elements: Vec<u64>,
}

impl CoprimeCompositeSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Flags for `0..=n`, `false` exactly at the members of `E_n`: primes and
/// multiples of a prime factor of `n` are struck out.
fn struck_out(n: u64, tables: &SieveTables) -> Result<Vec<bool>> {
    let factors = tables.factorize(n)?;
    let mut struck = tables.prime_flags()[..=n as usize].to_vec();
    struck[0] = true;
    for (p, _) in factors {
        for m in (p as usize..=n as usize).step_by(p as usize) {
            struck[m] = true;
        }
    }
    Ok(struck)
}

/// Enumerates `E_n` by striking out multiples of each prime factor of `n`
/// and then dropping the primes.
pub fn enumerate_coprime_nonprimes(n: u64, tables: &SieveTables) -> Result<CoprimeCompositeSet> {
    let struck = struck_out(n, tables)?;
    let elements = (1..=n).filter(|&m| !struck[m as usize]).collect();
    Ok(CoprimeCompositeSet { n, elements })
}

/// `|E_n|` by enumeration.
pub fn phi_tilde_by_enumeration(n: u64, tables: &SieveTables) -> Result<u64> {
    Ok(struck_out(n, tables)?.iter().filter(|&&s| !s).count() as u64)
}

pub fn phi_tilde(n: u64, tables: &SieveTables) -> Result<PhiTildeRecord> {
    tables.check(n)?;
    let phi = tables.phi(n);
    let pi = tables.pi(n);
    let omega = tables.omega(n);
    Ok(PhiTildeRecord {
        n,
        phi,
        pi,
        omega,
        phi_tilde: phi + u64::from(omega) - pi,
    })
}

/// `φ̃(n)` as a bare value, for hot loops over the tables.
#[inline]
pub fn phi_tilde_value(n: u64, tables: &SieveTables) -> u64 {
    tables.phi(n) + u64::from(tables.omega(n)) - tables.pi(n)
}

/// `φ̃(p_k) = p_k − k`.
pub fn phi_tilde_at_prime_index(k: u64) -> Result<u64> {
    Ok(nth_prime(k)? - k)
}

/// `φ(N_i) = ∏_{j ≤ i} (p_j − 1)`.
pub fn primorial_totient(i: u64) -> Result<u64> {
    let mut acc: u64 = 1;
    for j in 1..=i {
        acc = acc
            .checked_mul(nth_prime(j)? - 1)
            .ok_or(Error::Overflow { index: i })?;
    }
    Ok(acc)
}

/// `φ̃(N_i) = φ(N_i) − π(N_i) + i`, valid beyond the sieve limit as long as
/// `N_i` is within the prime counter's cap.
pub fn phi_tilde_primorial(i: u64, tables: &SieveTables) -> Result<PhiTildeRecord> {
    if i == 0 {
        return Err(Error::InvalidArgument(
            "primorial index must be at least 1".into(),
        ));
    }
    let n = primorial(i)?;
    let phi = primorial_totient(i)?;
    let pi = prime_count(n, tables)?;
    let omega = i as u32;
    Ok(PhiTildeRecord {
        n,
        phi,
        pi,
        omega,
        phi_tilde: phi + i - pi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::build_sieve;

    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }

    fn is_prime_naive(m: u64) -> bool {
        m >= 2
            && (2..m)
                .take_while(|d| d * d <= m)
                .all(|d| !m.is_multiple_of(d))
    }

    #[test]
    fn enumeration_examples() {
        let t = build_sieve(100).unwrap();
        assert_eq!(
            enumerate_coprime_nonprimes(11, &t).unwrap().elements,
            vec![1, 4, 6, 8, 9, 10]
        );
        assert_eq!(
            enumerate_coprime_nonprimes(1, &t).unwrap().elements,
            vec![1]
        );
        assert_eq!(
            enumerate_coprime_nonprimes(17, &t).unwrap().elements,
            vec![1, 4, 6, 8, 9, 10, 12, 14, 15, 16]
        );
        assert_eq!(
            enumerate_coprime_nonprimes(101, &t),
            Err(Error::OutOfRange { n: 101, limit: 100 })
        );
    }

    #[test]
    fn enumeration_matches_gcd_definition() {
        let t = build_sieve(600).unwrap();
        for n in 1..=600u64 {
            let direct: Vec<u64> = (1..=n)
                .filter(|&m| gcd(m, n) == 1 && !is_prime_naive(m))
                .collect();
            assert_eq!(enumerate_coprime_nonprimes(n, &t).unwrap().elements, direct);
        }
    }

    #[test]
    fn oracle_examples() {
        let t = build_sieve(100).unwrap();
        assert_eq!(phi_tilde_by_enumeration(20, &t).unwrap(), 2);
        assert_eq!(phi_tilde_by_enumeration(2, &t).unwrap(), 1);
        assert_eq!(phi_tilde_by_enumeration(19, &t).unwrap(), 11);
    }

    #[test]
    fn formula_examples() {
        let t = build_sieve(100).unwrap();
        assert_eq!(
            phi_tilde(10, &t).unwrap(),
            PhiTildeRecord {
                n: 10,
                phi: 4,
                pi: 4,
                omega: 2,
                phi_tilde: 2
            }
        );
        assert_eq!(
            phi_tilde(1, &t).unwrap(),
            PhiTildeRecord {
                n: 1,
                phi: 1,
                pi: 0,
                omega: 0,
                phi_tilde: 1
            }
        );
        assert_eq!(phi_tilde(13, &t).unwrap().phi_tilde, 7);
        assert!(phi_tilde(0, &t).is_err());
    }

    #[test]
    fn prime_index_examples() {
        assert_eq!(phi_tilde_at_prime_index(6).unwrap(), 7);
        assert_eq!(phi_tilde_at_prime_index(1).unwrap(), 1);
        assert_eq!(phi_tilde_at_prime_index(8).unwrap(), 11);
    }

    #[test]
    fn primorial_examples() {
        let t = build_sieve(1_000).unwrap();
        let n3 = phi_tilde_primorial(3, &t).unwrap();
        assert_eq!((n3.phi, n3.pi, n3.phi_tilde), (8, 10, 1));
        assert_eq!(phi_tilde_primorial(1, &t).unwrap().phi_tilde, 1);
        let n4 = phi_tilde_primorial(4, &t).unwrap();
        assert_eq!((n4.phi, n4.pi, n4.phi_tilde), (48, 46, 6));
        assert!(phi_tilde_primorial(0, &t).is_err());
    }

    #[test]
    fn primorial_values_beyond_tables() {
        // φ(N_i), π(N_i) frozen from an independent computer-algebra run
        let t = build_sieve(1_000).unwrap();
        let expected = [
            (5, 480, 343, 142),
            (6, 5_760, 3_248, 2_518),
            (7, 92_160, 42_331, 49_836),
            (8, 1_658_880, 646_029, 1_012_859),
            (9, 36_495_360, 12_283_531, 24_211_838),
            (10, 1_021_870_080, 300_369_796, 721_500_294),
        ];
        for (i, phi, pi, value) in expected {
            let r = phi_tilde_primorial(i, &t).unwrap();
            assert_eq!((r.phi, r.pi, r.phi_tilde), (phi, pi, value), "N_{i}");
        }
        assert!(matches!(
            phi_tilde_primorial(11, &t),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn primorial_route_matches_tables() {
        let t = build_sieve(1_000_000).unwrap();
        for i in 1..=7 {
            let r = phi_tilde_primorial(i, &t).unwrap();
            assert_eq!(r, phi_tilde(r.n, &t).unwrap());
        }
    }
}

//! Windowed sieving for ranges too large to hold in memory at once.
//!
//! Each window of [`WINDOW_SIZE`] integers is sieved independently against
//! the primes up to `√bound`, so windows can be computed on any number of
//! threads. Anything that depends on earlier windows (the running prime
//! count) is applied afterwards, strictly in window order.

use rayon::prelude::*;

use super::primes::primes_up_to;

pub const WINDOW_SIZE: u64 = 1 << 20;

/// `φ`, `ω` and primality for the integers `[lo, lo + len)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticWindow {
    lo: u64,
    phi: Vec<u64>,
    omega: Vec<u8>,
    is_prime: Vec<bool>,
}

impl ArithmeticWindow {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    pub fn phi(&self, n: u64) -> u64 {
        self.phi[(n - self.lo) as usize]
    }

    pub fn omega(&self, n: u64) -> u32 {
        u32::from(self.omega[(n - self.lo) as usize])
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.is_prime[(n - self.lo) as usize]
    }

    pub fn prime_count(&self) -> u64 {
        self.is_prime.iter().filter(|&&b| b).count() as u64
    }
}

/// Sieve over `[1, bound]` in fixed-size windows.
#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    bound: u64,
    window: u64,
    base_primes: Vec<u64>,
}

impl SegmentedSieve {
    pub fn new(bound: u64) -> Self {
        Self::with_window(bound, WINDOW_SIZE)
    }

    pub fn with_window(bound: u64, window: u64) -> Self {
        assert!(window > 0, "window size must be positive");
        SegmentedSieve {
            bound,
            window,
            base_primes: primes_up_to(bound.isqrt()),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn window_starts(&self) -> impl Iterator<Item = u64> + '_ {
        (1..=self.bound).step_by(self.window as usize)
    }

    fn window_end(&self, lo: u64) -> u64 {
        (lo + self.window).min(self.bound + 1)
    }

    /// Full arithmetic data for the window starting at `lo`.
    pub fn arithmetic_window(&self, lo: u64) -> ArithmeticWindow {
        let hi = self.window_end(lo);
        let len = (hi - lo) as usize;
        let mut rest: Vec<u64> = (lo..hi).collect();
        let mut phi = rest.clone();
        let mut omega = vec![0u8; len];
        let mut is_prime: Vec<bool> = (lo..hi).map(|n| n >= 2).collect();

        for &p in &self.base_primes {
            if p * p >= hi {
                break;
            }
            let first = lo.div_ceil(p) * p;
            for m in (first..hi).step_by(p as usize) {
                let idx = (m - lo) as usize;
                if m != p {
                    is_prime[idx] = false;
                }
                omega[idx] += 1;
                phi[idx] -= phi[idx] / p;
                while rest[idx].is_multiple_of(p) {
                    rest[idx] /= p;
                }
            }
        }
        // At most one prime factor above √hi survives the loop.
        for idx in 0..len {
            let r = rest[idx];
            if r > 1 {
                omega[idx] += 1;
                phi[idx] -= phi[idx] / r;
            }
        }
        ArithmeticWindow {
            lo,
            phi,
            omega,
            is_prime,
        }
    }

    /// Primality flags only, for `[lo, window end)`.
    pub fn prime_flags(&self, lo: u64) -> Vec<bool> {
        let hi = self.window_end(lo);
        let mut flags: Vec<bool> = (lo..hi).map(|n| n >= 2).collect();
        for &p in &self.base_primes {
            if p * p >= hi {
                break;
            }
            let first = (lo.div_ceil(p) * p).max(p * p);
            for m in (first..hi).step_by(p as usize) {
                flags[(m - lo) as usize] = false;
            }
        }
        flags
    }

    /// `π(bound)` by counting every window, windows in parallel.
    pub fn prime_count(&self) -> u64 {
        let starts: Vec<u64> = self.window_starts().collect();
        starts
            .par_iter()
            .map(|&lo| self.prime_flags(lo).iter().filter(|&&b| b).count() as u64)
            .sum()
    }

    /// Computes windows in parallel batches and hands them to `consume`
    /// in ascending order.
    pub fn scan_ordered<T, C, F>(&self, compute: C, mut consume: F)
    where
        T: Send,
        C: Fn(ArithmeticWindow) -> T + Sync,
        F: FnMut(T),
    {
        let starts: Vec<u64> = self.window_starts().collect();
        let batch = 2 * rayon::current_num_threads().max(1);
        for chunk in starts.chunks(batch) {
            let computed: Vec<T> = chunk
                .par_iter()
                .map(|&lo| compute(self.arithmetic_window(lo)))
                .collect();
            for item in computed {
                consume(item);
            }
        }
    }

    /// Calls `visit(n, φ̃(n))` for every `n` in `[1, bound]`, ascending.
    pub fn for_each_phi_tilde<F: FnMut(u64, u64)>(&self, mut visit: F) {
        let mut pi = 0u64;
        self.scan_ordered(
            |w| w,
            |w| {
                for n in w.lo()..w.lo() + w.len() as u64 {
                    if w.is_prime(n) {
                        pi += 1;
                    }
                    visit(n, w.phi(n) + u64::from(w.omega(n)) - pi);
                }
            },
        );
    }
}

/// `π(x)` by direct segmented sieving.
pub fn segmented_prime_count(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    SegmentedSieve::new(x).prime_count()
}

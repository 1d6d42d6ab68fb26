//! The coprime non-prime counting function `φ̃(n) = φ(n) − π(n) + ω(n)`:
//! sieve tables, three evaluation routes, certified thresholds and exact
//! preimage sets.

pub mod analysis;
pub mod bounds;
pub mod error;
pub mod outcome;
pub mod phitilde;
pub mod sieve;

pub use error::{Error, Result};
pub use outcome::{Counterexample, VerificationOutcome};

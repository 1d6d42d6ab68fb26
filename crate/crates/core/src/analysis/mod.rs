//! Preimages, structural properties and the published-table regression.

mod claims;
pub mod golden;
mod preimage;
mod properties;

pub use claims::{verify_paper_tables, verify_paper_tables_with};
pub use preimage::{
    conjecture_scan, missing_values, preimage, singleton_values, smallest_preimage, Classification,
    ConjectureReport, DensityPoint, PreimageReport, ValueIndex, MAX_TARGET, SCAN_CAP,
};
pub use properties::{check_property, PropertyId};

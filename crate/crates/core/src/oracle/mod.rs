//! Brute-force ground truth.
//!
//! Everything here works from a boolean membership table and the literal
//! definitions: gaps are read off the table, pseudo-Frobenius numbers are
//! found by testing `f + h` against every nonzero element, minimal
//! generators by testing every split `x = y + (x - y)`. None of it calls into
//! the Apéry-based code in [`crate::semigroup`], so agreement between the two
//! is evidence rather than tautology.
//!
//! The genus-tree enumeration lives in [`enumerate`] and the side-by-side
//! comparison in [`verify`].

mod brute;
pub mod enumerate;
pub mod verify;

pub use brute::{oracle_inequality, oracle_interval, oracle_semigroup, OracleSemigroup, MAX_TABLE};
pub use enumerate::{enumerate_by_genus, enumerate_with_cap, GenusTree, DEFAULT_GENUS_CAP};
pub use verify::{verify, verify_opened_modular, Check, OracleReport};

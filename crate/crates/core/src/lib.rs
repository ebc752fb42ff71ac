//! Exact computations with numerical semigroups.
//!
//! The crate covers the basic invariants (Apéry sets, Frobenius number,
//! genus, pseudo-Frobenius numbers, type), symmetry classification, relative
//! ideals and the dual of the maximal ideal, proportionally modular and
//! opened modular semigroups, the exponent matrix of non-symmetric
//! 3-generated semigroups, and gluings. The [`oracle`] module is a
//! brute-force reimplementation of every invariant used to cross-check the
//! fast paths.
//!
//! Conventions for the whole line `N`: `F(N) = -1`, `PF(N) = {-1}`,
//! `t(N) = 1`.

pub mod classify;
pub mod error;
pub mod gluing;
pub mod ideal;
pub mod modular;
pub mod oracle;
pub mod semigroup;
pub mod threegen;
mod util;

pub use classify::{ClassKind, PfViolation, SymmetryClass};
pub use error::{Error, GluingViolation, Result};
pub use gluing::GluingSpec;
pub use ideal::RelativeIdeal;
pub use modular::{ProportionalInequality, RationalInterval};
pub use semigroup::{parse_generators, AperySet, Invariants, NumericalSemigroup};
pub use threegen::{HerzogMatrix, PmThreeGenArrangement};
pub use util::{gcd, gcd_all};

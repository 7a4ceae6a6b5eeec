//! Exact computational Lie theory for torus invariants of flag varieties.
//!
//! Everything is integer or exact-rational arithmetic: root data and Weyl
//! matrices over `i64`, basis changes and the invariant form over
//! `Ratio<i64>`, dimension products over big rationals. The crate decides,
//! for a dominant character of the adjoint torus admitting a
//! Coxeter-semistable Schubert variety, whether the associated graded ring
//! of torus invariants is a polynomial ring, and cross-checks every number
//! it reports (Freudenthal vs. Kostant, Hilbert data vs. Krull dimension).

pub mod characters;
pub mod error;
pub mod multiplicity;
pub mod parallel;
pub mod report;
pub mod ringanalysis;
pub mod rootsystem;
pub mod verify;
pub mod weyl;

pub use error::Error;
pub use rootsystem::{Family, Rational, RootCoords, RootSystem, RootSystemSpec, Weight};
pub use weyl::{CoxeterElement, WeylElement, DEFAULT_RANK_CAP};

pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on |W| for operations that enumerate the full Weyl group.
pub const DEFAULT_WEYL_CAP: usize = 2000;

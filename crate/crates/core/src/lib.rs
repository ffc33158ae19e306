//! Finite computational algebra for Rota–Baxter operators on Clifford
//! semigroups.
//!
//! Everything here works on dense element indices `0..order` and Cayley
//! tables stored as flat row-major arrays. The crate is `no_std` and only
//! needs `alloc`; file formats, the catalog and the command-line driver live
//! in the `rotabrace` crate.
//!
//! Module map:
//!
//! * [`clifford`]: verified Clifford semigroups, strong semilattices of
//!   groups, homomorphism search and normal subsets.
//! * [`rota_baxter`]: verification, enumeration and the standard
//!   constructions of Rota–Baxter operators.
//! * [`weak_brace`]: dual weak braces, ideals, socle and quotients.
//! * [`ybe`]: set-theoretic Yang–Baxter solutions derived from braces.
//! * [`carriers`]: the small named carriers used throughout the tests.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod carriers;
pub mod clifford;
pub mod rota_baxter;
mod subset;
mod verdict;
pub mod weak_brace;
pub mod ybe;

pub use clifford::{
    build_strong_semilattice, decompose_to_strong_semilattice, enumerate_homomorphisms,
    CliffordError, CliffordSemigroup, Decomposition, HomKind, Link, NormalViolation, SemigroupMap,
    SemilatticeError, StrongSemilatticeSpec,
};
pub use rota_baxter::{RbError, RbViolation, RotaBaxterOperator};
pub use subset::SubsetError;
pub use verdict::Verdict;
pub use weak_brace::{BraceError, DualWeakBrace, Ideal};
pub use ybe::{RegularityReport, SolutionMap};

/// An element of a finite carrier, as a dense index.
pub type Elem = usize;

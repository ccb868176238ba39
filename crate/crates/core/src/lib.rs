//! Graded ideals with Gorenstein quotient in numerical semigroup rings.
//!
//! For a symmetric numerical semigroup `H`, the ring `R = k[H]` is
//! Gorenstein, and the graded ideals `I` with `R/I` Gorenstein and
//! `μ_R(I) >= 2` form a finite list of exactly `c(H)` members. This crate
//! builds that list from colon ideals ([`catalog`]), checks it against a
//! brute-force enumeration ([`oracle`]), and carries the semigroup and ideal
//! calculus both of them need.
//!
//! ```
//! use sgr_core::{build_catalog, NumericalSemigroup};
//!
//! let h = NumericalSemigroup::new(&[3, 4]).unwrap();
//! let catalog = build_catalog(&h).unwrap();
//! assert_eq!(catalog.len() as i64, h.conductor());
//! ```
//!
//! The guide in `book/` walks through the concepts; its code blocks are
//! compiled as doc-tests of this crate.

pub mod catalog;
pub mod gluing;
pub mod ideal;
pub mod oracle;
pub mod semigroup;

pub use catalog::{build_catalog, recover_gap, Catalog, CatalogEntry, CatalogError, IsoClass, Side};
pub use gluing::{glue, three_gen_symmetric, CountComparison, GluingError, GluingSpec, ThreeGenSymmetric};
pub use ideal::{FractionalIdeal, IdealError, QuotientProfile};
pub use oracle::{enumerate_gorenstein_ideals, verify_theorem, OracleError, VerificationReport, Verdict};
pub use semigroup::{NumericalSemigroup, SemigroupError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    mod gluing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

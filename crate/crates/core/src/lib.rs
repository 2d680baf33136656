//! Exact computational homological algebra over finitely presented
//! commutative rings.
//!
//! The crate builds everything on three layers:
//!
//! 1. multivariate polynomial arithmetic over exact fields together with a
//!    Buchberger engine ([`poly`], [`groebner`], [`modgb`]),
//! 2. finitely presented rings, modules and the homological toolbox
//!    (syzygies, free resolutions, Hom/tensor, Ext/Tor, Matlis duality)
//!    ([`ring`], [`module`], [`resolution`], [`maps`]),
//! 3. ring constructions of the form `R (+) C` (trivial extension,
//!    amalgamated duplication, pseudocanonical cover) and the theorem-level
//!    verifiers for semidualizing modules, retract properties and
//!    G_C-dimensions ([`construction`], [`check`]).
//!
//! Every verdict is exact: coefficients are rationals or prime-field
//! residues, never floats. Checks of statements quantified over all
//! homological degrees are reported as `VERIFIED_TO_BOUND(n)`.
//!
//! The crate is `no_std` (with `alloc`); session parsing, file formats and
//! the CLI live in the companion crate `fphom-cli`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod check;
pub mod construction;
pub mod error;
pub mod field;
pub mod groebner;
pub mod maps;
pub mod matrix;
pub mod modgb;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod ring;
pub mod text;

pub use error::AlgError;
pub use field::{Field, FieldElem};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
pub use report::{CheckReport, SubReport, Verdict, Witness};
pub use ring::{PresentedRing, RetractPair, RingMap};

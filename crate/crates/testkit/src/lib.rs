//! Test support: shared fixtures and a brute-force homological oracle.
//!
//! The oracle works on finite-dimensional algebras through multiplication
//! tables and dense exact linear algebra only — no Groebner machinery — so
//! it is an independent cross-check of the resolution engine.

pub mod dense;
pub mod fixtures;
pub mod oracle;

//! Finite semirings as pairs of Cayley tables.
//!
//! The crate checks semiring axioms, computes congruences, ideals and
//! canonical forms, enumerates semirings of small order up to isomorphism and
//! evaluates structural claims about multiplicatively idempotent semirings
//! against catalog entries and enumerated corpora.

pub mod congruences;
pub mod constructions;
pub mod divisibility;
pub mod enumeration;
pub mod error;
pub mod ideals;
pub mod morphisms;
pub mod tables;
pub mod verifier;

pub use error::{Error, Result};
pub use tables::{FiniteSemiring, OpTable};

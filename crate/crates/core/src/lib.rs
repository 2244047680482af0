//! Exact computation of cores, minimal reductions and analytic spreads of polynomial ideals.
//!
//! The core of an ideal `I` is the intersection of all its (minimal) reductions. This crate
//! computes it by several independent routes that can be checked against each other:
//! colon formulas `(J : I) I`, Monte-Carlo intersection of sampled minimal reductions, the
//! `(J^r : I^r) I` family, and closed forms for powers of complete intersections.

pub mod cli;
pub mod cores;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod reductions;
pub mod ring;
mod span;

pub use error::{Error, Result};
pub use groebner::{divide, eliminate, groebner_basis, normal_form, GroebnerBasis};
pub use ideal::Ideal;
pub use ring::{parse_poly, FieldSpec, PolyRing, Polynomial, Scalar, TermOrder};

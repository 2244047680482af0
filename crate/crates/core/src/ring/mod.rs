//! Coefficient fields, monomials, term orders and polynomials.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{FieldSpec, Scalar, DEFAULT_PRIME};
pub use monomial::{term_compare, Exponents, Monomial, TermOrder};
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{poly_arith, ArithOp, PolyRing, Polynomial, Term};

pub(crate) use poly::sub_mul_terms;


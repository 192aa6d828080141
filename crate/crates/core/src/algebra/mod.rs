//! Exact scalar arithmetic and dense linear algebra.
//!
//! Two field backends are provided: [`RationalField`] (exact rationals) and
//! [`PrimeField`] (a prime field with a runtime modulus). Everything above
//! this module is generic over [`Field`], so a computation is always bound to
//! exactly one backend.

mod field;
mod matrix;

pub use field::{is_prime_u64, parse_rational, Field, FieldSpec, PrimeField, RationalField, DEFAULT_PRIME};
pub use matrix::{Matrix, RowSpace, Rref};

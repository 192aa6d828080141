//! Polynomials in `x, y, z` (plus up to two auxiliary variables used for
//! elimination), monomial orders, parsing and printing.

mod monomial;
mod order;
mod parse;
#[allow(clippy::module_inception)]
mod poly;

pub use monomial::{forms_dim, monomials_xyz, xyz_index, Monomial, SLOTS, SLOT_NAMES, X, Y, Z};
pub use order::{MonomialOrder, OrderKey};
pub use poly::{ring_slots, Poly, Ring};

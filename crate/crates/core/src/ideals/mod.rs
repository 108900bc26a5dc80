//! Monomials and monomial ideals: minimal generators, sums, products,
//! powers, intersections, polarization and restriction.
//!
//! Nothing here knows about a coefficient field. The minimal generators of a
//! monomial ideal are the same over every field, which is what lets the rest
//! of the crate compare Betti numbers across characteristics.

mod ideal;
mod monomial;
pub mod text;
pub(crate) mod trie;

pub use ideal::{power, power_guarded, restricted_power, MonomialIdeal, DEFAULT_MAX_GENERATORS};
pub use monomial::{Monomial, VariableContext};
pub(crate) use monomial::{canonical_cmp, divides as exps_divide, lcm as exps_lcm, same_context};

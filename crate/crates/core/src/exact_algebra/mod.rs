//! Exact multivariate Laurent polynomials over `ℤ`, rational substitution and
//! tropicalization.

mod laurent;
mod rational;
mod text;
mod tropical;

pub use laurent::{Exponent, LaurentPolynomial};
pub use rational::RationalFunction;
pub use tropical::{tropicalize, TropicalFunction};

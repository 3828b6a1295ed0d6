//! Exact computation with row-symmetric ideals and semi-algebraic sets.
//!
//! The ambient ring is `Q[x[i][j]]` with infinitely many rows `i` and a fixed
//! number of columns `j`, plus an auxiliary parameter block `s[k]`. Finitely
//! supported row permutations act by renaming rows. Everything is exact: all
//! coefficients are arbitrary-precision rationals and every answer is either
//! a polynomial identity or a decision backed by a verifiable witness.
//!
//! Module map:
//! - [`var`], [`monomial`], [`poly`], [`parse`], [`perm`]: the polynomial core.
//! - [`groebner`]: Buchberger with a degree cap, normal forms, elimination,
//!   radical membership.
//! - [`equivariant`]: truncations of symmetric ideals, orbit-closure ideals,
//!   fixed-point ideals, and sequence-family ideals (Vandermonde and
//!   Grassmannian builders included).
//! - [`realalg`]: Sturm sequences, real root isolation, real algebraic
//!   numbers, univariate sign-system satisfiability.
//! - [`semialg`]: the decision procedure for row-symmetric sign systems in a
//!   single column (constant / increasing / decreasing trichotomy).
//! - [`geometry`]: exact half-plane arrangements and the inscribed-polygon
//!   disk-escape test.

pub mod var;
pub mod monomial;
pub mod perm;
pub mod poly;
pub mod parse;
pub mod resultant;
pub mod groebner;
pub mod equivariant;
pub mod realalg;
pub mod cad;
pub mod semialg;
pub mod geometry;
pub mod par;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use groebner::{GroebnerError, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use perm::FinitePermutation;
pub use poly::Poly;
pub use var::VarIndex;

/// Shorthand for an exact rational from an integer pair, mostly for tests.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an exact integer rational.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

//! Exact two-sided vector space algebra over K = Q(t).
//!
//! A two-sided vector space is a K-vector space with a second,
//! commuting right K-action given by an algebra map K -> M_n(K); this
//! crate constructs such modules from field embeddings presented by
//! bivariate relations, computes their dimensions, duals and
//! adjunction data in exact arithmetic, and builds truncations of the
//! associated non-commutative symmetric algebra.

pub mod error;
pub mod field;
pub mod rat;
pub mod poly;
pub mod ratfunc;
pub mod matrix;
pub mod smith;
pub mod bipoly;
pub mod parse;

pub use bipoly::{discriminant_y, resultant, BiPoly, Var};
pub use error::{Error, Result};
pub use field::Field;
pub use matrix::{hom_eval, Matrix};
pub use poly::{yun_squarefree, Poly, UniPoly};
pub use rat::{rat, rat_int, BigInt, BigRat};
pub use ratfunc::{is_square_in_k, Frac, KPoly, RatFunc};
pub use smith::smith_invariant_factors;

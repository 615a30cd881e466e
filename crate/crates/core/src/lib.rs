//! Exact computations with braided Hopf algebras over cyclotomic fields.
//!
//! The crate builds finite (or degree-truncated) algebras from presentations,
//! equips them with braided Hopf, module-algebra and Yetter-Drinfeld
//! structures over a quasi-triangular Hopf algebra, and solves for braided
//! centers by exact linear algebra. Every structure map is a sparse matrix
//! over `Q(ζ_m)`; nothing is floating point.

pub mod error;
pub mod par;
pub mod scalars;

pub use error::{Error, Result};
pub mod linspace;
pub mod algebra;
pub mod braid;
pub mod braided_hopf;
pub mod yd;
pub mod constructions;
pub mod custom;
pub mod centers;
pub mod scenarios;
pub mod suites;

//! Constrained expressions over generic vector spaces.
//!
//! A constrained expression `u(x, g)` satisfies a set of linear constraints
//! for *every* free function `g`. Nothing here assumes real numbers: the
//! outputs live in any [`VectorSpace`](algebra::VectorSpace) over any
//! [`Field`](algebra::Field), and the inputs can be any type at all
//! (matrices, strings, finite-field elements, ...). The only place a
//! multiplicative inverse is needed is the support matrix.
//!
//! Modules:
//!
//! - [`algebra`]: field and vector-space traits, with `f64`, [`Complex`](algebra::Complex),
//!   [`Gf4`](algebra::Gf4) and several vector spaces.
//! - [`linalg`]: dense matrices and Gauss–Jordan inversion over any field.
//! - [`constraints`]: point-evaluation constraint functionals.
//! - [`expression`]: univariate and multivariate constrained expressions.
//! - [`worked`]: four worked problems with seeded random free functions.
//! - [`report`]: verification reports, as printed by the `tfc` binary.

pub mod algebra;
pub mod constraints;
pub mod error;
pub mod expression;
pub mod linalg;
pub mod report;
pub mod suites;
pub mod verify;
pub mod worked;

pub use error::{Result, TfcError};

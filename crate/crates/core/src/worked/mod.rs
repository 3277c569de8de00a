//! Four worked problems, each with its constraint set, support functions,
//! expected support/α matrices and a seeded random free-function family.
//!
//! | id             | input            | output                 |
//! |----------------|------------------|------------------------|
//! | `matrix_r2x3`  | 2×3 real matrix  | ℝ²                     |
//! | `string_c2`    | lowercase string | ℂ²                     |
//! | `gf4`          | GF(4)            | functions GF(4) → GF(4) |
//! | `multivariate` | (ℝ, ℝ)           | functions ℝ → ℝ        |

pub mod gf4;
pub mod matrix_r2x3;
pub mod multivariate;
pub mod string_c2;

pub use multivariate::expand_multivariate_reference;

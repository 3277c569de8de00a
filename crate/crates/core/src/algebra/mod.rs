//! Field and vector-space abstractions plus the concrete instances used by
//! the worked examples.

mod complex;
mod field;
mod gf4;
mod space;

pub use complex::{complex_invert, Complex};
pub use field::{Field, FiniteField};
pub use gf4::{gf4_add, gf4_invert, gf4_multiply, Gf4};
pub(crate) use space::worse;
pub use space::{
    FiniteFunctionSpace, FunctionTable, MatrixSpace, SampledFunction, SampledFunctionSpace, ScalarSpace, TupleSpace,
    VectorSpace, DEFAULT_TOLERANCE,
};

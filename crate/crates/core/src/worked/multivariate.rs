//! Two real inputs `(x, y)`, outputs are real functions of `t`.
//!
//! Constraints on `x`: `u(0, y) = sin(t)` and
//! `u(1, y) + u(2, y) = u(5, y) + u(4, y)` (supports `1`, `x`).
//! Constraint on `y`: `u(x, 1) = sin(t)` (support `1`).

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{SampledFunction, SampledFunctionSpace, VectorSpace};
use crate::constraints::{PartialConstraint, Term};
use crate::expression::{DimensionSpec, MultivariateExpression, SupportFunction};
use crate::linalg::FieldMatrix;
use crate::Result;

pub type Space = SampledFunctionSpace;
pub type Expression = MultivariateExpression<f64, Space>;

pub fn sine() -> SampledFunction {
    SampledFunction::new(f64::sin)
}

pub fn space() -> Space {
    SampledFunctionSpace::new()
}

pub fn x_constraints() -> Result<Vec<PartialConstraint<f64, f64, SampledFunction>>> {
    let zero = space().zero();
    Ok(vec![
        PartialConstraint::with_constant_target(0, vec![Term::new(1.0, 0.0)], sine())?.with_label("u(0, y) = sin(t)"),
        PartialConstraint::with_constant_target(
            0,
            vec![Term::new(1.0, 1.0), Term::new(1.0, 2.0), Term::new(-1.0, 5.0), Term::new(-1.0, 4.0)],
            zero,
        )?
        .with_label("u(1, y) + u(2, y) - u(5, y) - u(4, y) = 0"),
    ])
}

pub fn y_constraints() -> Result<Vec<PartialConstraint<f64, f64, SampledFunction>>> {
    Ok(vec![
        PartialConstraint::with_constant_target(1, vec![Term::new(1.0, 1.0)], sine())?.with_label("u(x, 1) = sin(t)")
    ])
}

pub fn dimensions() -> Result<Vec<DimensionSpec<f64, Space>>> {
    Ok(vec![
        DimensionSpec::new(
            x_constraints()?,
            vec![SupportFunction::constant("1", 1.0), SupportFunction::from_fn("x", |x: &f64| *x)],
        ),
        DimensionSpec::new(y_constraints()?, vec![SupportFunction::constant("1", 1.0)]),
    ])
}

/// Ascending order: the `x` embedding is applied first, `y` wraps it.
pub fn expression() -> Result<Expression> {
    MultivariateExpression::build(space(), dimensions()?, None)
}

pub fn expected_x_support_matrix() -> FieldMatrix<f64> {
    FieldMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, -6.0]]).expect("2x2")
}

pub fn expected_x_alpha() -> FieldMatrix<f64> {
    FieldMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, -1.0 / 6.0]]).expect("2x2")
}

pub fn expected_y_alpha() -> FieldMatrix<f64> {
    FieldMatrix::from_rows(vec![vec![1.0]]).expect("1x1")
}

/// The fully expanded closed form of the composed expression:
///
/// ```text
/// u = g(x,y) + sin(t) − g(x,1) − g(0,y) + g(0,1)
///     + (x/6)·[(g(4,1) + g(5,1) − g(1,1) − g(2,1)) − (g(4,y) + g(5,y) − g(1,y) − g(2,y))]
/// ```
///
/// Written out directly, independent of the recursive builder.
pub fn expand_multivariate_reference<G>(x: f64, y: f64, g: &G) -> Result<SampledFunction>
where
    G: Fn(&[f64]) -> Result<SampledFunction>,
{
    let at = |a: f64, b: f64| g(&[a, b]);
    let (gxy, gx1, g0y, g01) = (at(x, y)?, at(x, 1.0)?, at(0.0, y)?, at(0.0, 1.0)?);
    let d1 = [at(4.0, 1.0)?, at(5.0, 1.0)?, at(1.0, 1.0)?, at(2.0, 1.0)?];
    let dy = [at(4.0, y)?, at(5.0, y)?, at(1.0, y)?, at(2.0, y)?];
    Ok(SampledFunction::new(move |t| {
        let bracket = |d: &[SampledFunction; 4]| d[0].eval(t) + d[1].eval(t) - d[2].eval(t) - d[3].eval(t);
        gxy.eval(t) + t.sin() - gx1.eval(t) - g0y.eval(t) + g01.eval(t) + x / 6.0 * (bracket(&d1) - bracket(&dy))
    }))
}

/// `g(x, y)(t) = p₀₀(t) + x·p₁₀(t) + y·p₀₁(t) + xy·p₁₁(t)` with each `p` a
/// random polynomial of degree ≤ 3 and coefficients in `[-5, 5]`.
#[derive(Debug, Clone)]
pub struct BivariatePolynomial {
    coeffs: Arc<[[f64; 4]; 4]>,
}

impl BivariatePolynomial {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut coeffs = [[0.0; 4]; 4];
        for row in coeffs.iter_mut() {
            for c in row.iter_mut() {
                *c = rng.gen_range(-5.0..=5.0);
            }
        }
        BivariatePolynomial { coeffs: Arc::new(coeffs) }
    }

    pub fn zero() -> Self {
        BivariatePolynomial { coeffs: Arc::new([[0.0; 4]; 4]) }
    }

    pub fn eval(&self, coords: &[f64]) -> Result<SampledFunction> {
        let &[x, y] = coords else {
            return Err(crate::TfcError::DimensionMismatch { context: "coordinates", left: coords.len(), right: 2 });
        };
        let weights = [1.0, x, y, x * y];
        let coeffs = Arc::clone(&self.coeffs);
        Ok(SampledFunction::new(move |t| {
            weights.iter().zip(coeffs.iter()).map(|(w, p)| w * p.iter().rev().fold(0.0, |acc, c| acc * t + c)).sum()
        }))
    }
}

pub fn random_coords<R: Rng + ?Sized>(rng: &mut R) -> Vec<f64> {
    vec![rng.gen_range(-1.0..=6.0), rng.gen_range(-2.0..=2.0)]
}

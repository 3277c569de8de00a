//! Inputs are real 2×3 matrices, outputs live in ℝ².
//!
//! Constraints: `u([[1,3,5],[2,4,7]]) = {3, 4}` and
//! `u([[1,0,1],[0,1,0]]) = u([[0,0,1],[1,0,0]])`.
//! Support functions read single entries through the bilinear form
//! `rowᵀ x col`: `s₁(x) = x₁₁`, `s₂(x) = x₁₂`.

use rand::Rng;

use crate::algebra::{Field, TupleSpace, VectorSpace};
use crate::constraints::LinearConstraint;
use crate::expression::{ConstrainedExpression, SupportFunction};
use crate::linalg::FieldMatrix;
use crate::Result;

pub type Input = FieldMatrix<f64>;
pub type Space = TupleSpace<f64>;
pub type Expression = ConstrainedExpression<Input, Space>;

pub const TARGET: [f64; 2] = [3.0, 4.0];

fn m(rows: [[f64; 3]; 2]) -> Input {
    FieldMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("2x3")
}

/// The three matrices the constraints evaluate `u` at.
pub fn constraint_points() -> [Input; 3] {
    [
        m([[1.0, 3.0, 5.0], [2.0, 4.0, 7.0]]),
        m([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]),
        m([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]),
    ]
}

pub fn space() -> Space {
    TupleSpace::new(2)
}

pub fn constraints() -> Vec<LinearConstraint<f64, Input, Vec<f64>>> {
    let [p1, p2, p3] = constraint_points();
    vec![
        LinearConstraint::equals(p1, TARGET.to_vec()).with_label("u([[1,3,5],[2,4,7]]) = {3, 4}"),
        LinearConstraint::relative(p2, p3, space().zero()).with_label("u([[1,0,1],[0,1,0]]) = u([[0,0,1],[1,0,0]])"),
    ]
}

pub fn supports() -> Vec<SupportFunction<Input, f64>> {
    vec![
        SupportFunction::new("[1 0] x [1 0 0]ᵀ", |x: &Input| x.bilinear_form(&[1.0, 0.0], &[1.0, 0.0, 0.0])),
        SupportFunction::new("[1 0] x [0 1 0]ᵀ", |x: &Input| x.bilinear_form(&[1.0, 0.0], &[0.0, 1.0, 0.0])),
    ]
}

pub fn expression() -> Result<Expression> {
    ConstrainedExpression::build(space(), constraints(), supports())
}

pub fn expected_support_matrix() -> FieldMatrix<f64> {
    FieldMatrix::from_rows(vec![vec![1.0, 3.0], vec![1.0, 0.0]]).expect("2x2")
}

pub fn expected_alpha() -> FieldMatrix<f64> {
    FieldMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0 / 3.0, -1.0 / 3.0]]).expect("2x2")
}

/// Free function `g(x) = W · vec(x) + b` with `W ∈ ℝ^{2×6}`.
#[derive(Debug, Clone)]
pub struct AffineMap {
    weights: FieldMatrix<f64>,
    bias: Vec<f64>,
}

impl AffineMap {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let weights = (0..12).map(|_| f64::sample(rng)).collect();
        AffineMap {
            weights: FieldMatrix::new(2, 6, weights).expect("2x6"),
            bias: vec![f64::sample(rng), f64::sample(rng)],
        }
    }

    pub fn zero() -> Self {
        AffineMap { weights: FieldMatrix::zeros(2, 6), bias: vec![0.0, 0.0] }
    }

    pub fn eval(&self, x: &Input) -> Result<Vec<f64>> {
        let flat = FieldMatrix::new(6, 1, x.entries().to_vec())?;
        let wx = self.weights.multiply(&flat)?;
        space().add(&wx.entries().to_vec(), &self.bias)
    }
}

pub fn random_input<R: Rng + ?Sized>(rng: &mut R) -> Input {
    let entries = (0..6).map(|_| f64::sample(rng)).collect();
    FieldMatrix::new(2, 3, entries).expect("2x3")
}

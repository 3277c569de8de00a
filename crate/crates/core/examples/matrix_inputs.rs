//! Functions from 2×3 real matrices to ℝ², pinned at one point and forced to
//! agree at two others.
//!
//! Run with `cargo run -p tfc --example matrix_inputs`.

use tfc::algebra::{TupleSpace, VectorSpace};
use tfc::constraints::LinearConstraint;
use tfc::expression::{ConstrainedExpression, SupportFunction};
use tfc::linalg::FieldMatrix;

type Input = FieldMatrix<f64>;

fn matrix(rows: [[f64; 3]; 2]) -> Input {
    FieldMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn main() -> tfc::Result<()> {
    let space = TupleSpace::<f64>::new(2);
    let pinned = matrix([[1.0, 3.0, 5.0], [2.0, 4.0, 7.0]]);
    let left = matrix([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]);
    let right = matrix([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]);

    let constraints = vec![
        LinearConstraint::equals(pinned.clone(), vec![3.0, 4.0]),
        LinearConstraint::relative(left.clone(), right.clone(), space.zero()),
    ];
    // Entries (0,0) and (0,1) of the input.
    let supports = vec![
        SupportFunction::from_fn("x[0][0]", |x: &Input| x[(0, 0)]),
        SupportFunction::from_fn("x[0][1]", |x: &Input| x[(0, 1)]),
    ];
    let expr = ConstrainedExpression::build(space, constraints, supports)?;
    println!("support matrix:\n{}", expr.switching().support_matrix());
    println!("alpha:\n{}", expr.switching().alpha());

    // Any free function works; this one ignores most of its input.
    let g = |x: &Input| Ok(vec![x[(1, 2)].powi(2), x[(0, 0)] - x[(1, 1)]]);
    let u = expr.bind(g)?;
    println!("u(pinned) = {:?}", u.eval(&pinned)?);
    println!("u(left)   = {:?}", u.eval(&left)?);
    println!("u(right)  = {:?}", u.eval(&right)?);
    let elsewhere = matrix([[0.5, -2.0, 3.0], [1.0, 1.0, 1.0]]);
    println!("u(other)  = {:?} (g gives {:?})", u.eval(&elsewhere)?, g(&elsewhere)?);
    Ok(())
}

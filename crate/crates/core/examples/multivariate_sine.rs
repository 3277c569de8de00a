//! Function-valued functions of (x, y) with constraints along each axis,
//! composed one dimension at a time.
//!
//! Run with `cargo run -p tfc --example multivariate_sine`.

use tfc::algebra::{SampledFunction, SampledFunctionSpace, VectorSpace};
use tfc::constraints::{PartialConstraint, Term};
use tfc::expression::{DimensionSpec, MultivariateExpression, SupportFunction};

fn main() -> tfc::Result<()> {
    let space = SampledFunctionSpace::new();
    let sine = SampledFunction::new(f64::sin);

    let along_x = vec![
        // u(0, y) = sin
        PartialConstraint::with_constant_target(0, vec![Term::new(1.0, 0.0)], sine.clone())?,
        // u(1, y) + u(2, y) - u(5, y) - u(4, y) = 0
        PartialConstraint::with_constant_target(
            0,
            vec![Term::new(1.0, 1.0), Term::new(1.0, 2.0), Term::new(-1.0, 5.0), Term::new(-1.0, 4.0)],
            space.zero(),
        )?,
    ];
    // u(x, 1) = sin
    let along_y = vec![PartialConstraint::with_constant_target(1, vec![Term::new(1.0, 1.0)], sine.clone())?];

    let dims = vec![
        DimensionSpec::new(
            along_x,
            vec![SupportFunction::constant("1", 1.0), SupportFunction::from_fn("x", |x: &f64| *x)],
        ),
        DimensionSpec::new(along_y, vec![SupportFunction::constant("1", 1.0)]),
    ];
    let expr = MultivariateExpression::build(space.clone(), dims, None)?;
    println!("x alpha:\n{}", expr.switching(0).unwrap().alpha());
    println!("y alpha:\n{}", expr.switching(1).unwrap().alpha());

    let g = |c: &[f64]| {
        let (x, y) = (c[0], c[1]);
        Ok(SampledFunction::new(move |t| x * t.cos() - y * y + t))
    };
    let u = expr.embed(&g);
    for (x, y) in [(0.0, -1.5), (3.0, 1.0), (2.5, 0.7)] {
        let v = u(&[x, y])?;
        println!("u({x}, {y}) at t = 0.5: {:.6}   matches sin: {}", v.eval(0.5), space.equals_within(&v, &sine, 1e-9));
    }
    let y = 0.3;
    let total = [(1.0, 1.0), (2.0, 1.0), (5.0, -1.0), (4.0, -1.0)]
        .iter()
        .map(|&(x, w)| Ok(space.scale(&w, &u(&[x, y])?)))
        .try_fold(space.zero(), |acc, v: tfc::Result<_>| space.add(&acc, &v?))?;
    println!("u(1,y) + u(2,y) - u(5,y) - u(4,y) is zero: {}", space.equals_within(&total, &space.zero(), 1e-9));

    // The y-first composition gives the same function for these constraints.
    let flipped = expr.reordered(vec![1, 0])?;
    let same = space.equals_within(&flipped.evaluate(&[2.5, 0.7], &g)?, &u(&[2.5, 0.7])?, 1e-9);
    println!("order [1, 0] agrees with [0, 1]: {same}");
    Ok(())
}

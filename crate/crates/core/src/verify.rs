//! Randomized and exhaustive checks of constrained expressions.
//!
//! Every check reduces to a maximum deviation over a set of samples, which
//! passes when it is at most the check's tolerance (zero for exact fields).

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{worse, Field, ScalarSpace, VectorSpace};
use crate::constraints::{combine, remove_coordinate, Term};
use crate::expression::{ConstrainedExpression, MultivariateExpression, SwitchingSet};
use crate::Result;

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub description: String,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(description: impl Into<String>, samples: usize, max_deviation: f64, tolerance: f64) -> Self {
        Check { description: description.into(), samples, max_deviation, tolerance, pass: max_deviation <= tolerance }
    }
}

/// Accumulates the worst deviation seen so far.
#[derive(Debug, Clone)]
pub struct Tally {
    description: String,
    samples: usize,
    max: f64,
}

impl Tally {
    pub fn new(description: impl Into<String>) -> Self {
        Tally { description: description.into(), samples: 0, max: 0.0 }
    }

    pub fn record(&mut self, deviation: f64) {
        self.samples += 1;
        self.max = worse(self.max, deviation);
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn finish(self, tolerance: f64) -> Check {
        Check::new(self.description, self.samples, self.max, tolerance)
    }
}

/// Tolerance actually applied in `space`: exact fields demand zero deviation.
pub fn effective_tolerance<S: VectorSpace + ?Sized>(space: &S, tolerance: f64) -> f64 {
    if space.is_exact() {
        0.0
    } else {
        tolerance
    }
}

/// Largest `|C_j[φ_i] − δ_ji|` over all pairs.
pub fn switching_duality_deviation<A, F: Field>(sw: &SwitchingSet<A, F>, term_lists: &[&[Term<F, A>]]) -> Result<f64> {
    let scalars = ScalarSpace::<F>::new();
    let mut max = 0.0;
    for (j, terms) in term_lists.iter().enumerate() {
        for i in 0..sw.len() {
            let value = combine(&scalars, terms, |p| sw.switching_value(i, p))?;
            let delta = if i == j { F::one() } else { F::zero() };
            max = worse(max, value.distance(&delta));
        }
    }
    Ok(max)
}

/// Sample counts for the randomized univariate checks.
#[derive(Debug, Clone, Copy)]
pub struct SampleCounts {
    /// Random free functions per constraint-satisfaction check.
    pub satisfaction: usize,
    /// Random (g, x) pairs for the idempotency and irrelevance checks.
    pub secondary: usize,
}

impl SampleCounts {
    pub fn new(samples: usize) -> Self {
        SampleCounts { satisfaction: samples, secondary: samples.min(50) }
    }
}

/// Duality, constraint satisfaction, projection idempotency and free-function
/// irrelevance for a univariate expression.
pub fn univariate_checks<A, S, R, G>(
    expr: &ConstrainedExpression<A, S>,
    rng: &mut R,
    counts: SampleCounts,
    tolerance: f64,
    mut gen_g: impl FnMut(&mut R) -> G,
    mut gen_x: impl FnMut(&mut R) -> A,
) -> Result<Vec<Check>>
where
    A: fmt::Debug,
    S: VectorSpace,
    R: Rng,
    G: Fn(&A) -> Result<S::Vector>,
{
    let space = expr.space();
    let tol = effective_tolerance(space, tolerance);
    let terms: Vec<_> = expr.constraints().iter().map(|c| c.terms()).collect();
    let mut checks = vec![Check::new(
        "switching duality C_j[φ_i] = δ_ji",
        terms.len() * terms.len(),
        switching_duality_deviation(expr.switching(), &terms)?,
        tol,
    )];

    if counts.satisfaction > 0 {
        let mut tallies: Vec<Tally> = expr.constraints().iter().map(|c| Tally::new(c.to_string())).collect();
        for _ in 0..counts.satisfaction {
            let g = gen_g(rng);
            let u = expr.bind(&g)?;
            for (c, tally) in expr.constraints().iter().zip(&mut tallies) {
                let applied = c.apply(space, u.as_fn())?;
                tally.record(space.deviation(&applied, c.target())?);
            }
        }
        checks.extend(tallies.into_iter().map(|t| t.finish(tol)));
    }

    if counts.secondary > 0 {
        let mut idem = Tally::new("projection idempotency u(·, u(·, g)) = u(·, g)");
        let mut irrelevance = Tally::new("free-function irrelevance C_j[u(·, g1)] = C_j[u(·, g2)]");
        for _ in 0..counts.secondary {
            let g = gen_g(rng);
            let x = gen_x(rng);
            let u = expr.bind(&g)?;
            let uu = expr.bind(u.as_fn())?;
            idem.record(space.deviation(&uu.eval(&x)?, &u.eval(&x)?)?);

            let g2 = gen_g(rng);
            let u2 = expr.bind(&g2)?;
            let mut worst = 0.0;
            for c in expr.constraints() {
                let a = c.apply(space, u.as_fn())?;
                let b = c.apply(space, u2.as_fn())?;
                worst = worse(worst, space.deviation(&a, &b)?);
            }
            irrelevance.record(worst);
        }
        checks.push(idem.finish(tol));
        checks.push(irrelevance.finish(tol));
    }
    Ok(checks)
}

/// Multivariate analogue of [`univariate_checks`], plus agreement between two
/// composition orders (ascending vs. reversed).
///
/// Each partial constraint is checked at `points_per_sample` random settings
/// of the remaining coordinates for every sampled free function.
#[allow(clippy::too_many_arguments)]
pub fn multivariate_checks<A, S, R, G>(
    expr: &MultivariateExpression<A, S>,
    rng: &mut R,
    counts: SampleCounts,
    points_per_sample: usize,
    tolerance: f64,
    mut gen_g: impl FnMut(&mut R) -> G,
    mut gen_coords: impl FnMut(&mut R) -> Vec<A>,
) -> Result<Vec<Check>>
where
    A: Clone + fmt::Debug,
    S: VectorSpace + Clone,
    R: Rng,
    G: Fn(&[A]) -> Result<S::Vector>,
{
    let space = expr.space();
    let tol = effective_tolerance(space, tolerance);
    let mut checks = Vec::new();

    for dim in 0..expr.arity() {
        if let Some(sw) = expr.switching(dim) {
            let terms: Vec<_> = expr.constraints(dim).iter().map(|c| c.terms()).collect();
            checks.push(Check::new(
                format!("switching duality C_j[φ_i] = δ_ji (dimension {dim})"),
                terms.len() * terms.len(),
                switching_duality_deviation(sw, &terms)?,
                tol,
            ));
        }
    }

    let all_constraints: Vec<_> = (0..expr.arity()).flat_map(|d| expr.constraints(d)).collect();

    if counts.satisfaction > 0 {
        let mut reversed_order = expr.order().to_vec();
        reversed_order.reverse();
        let reversed = expr.reordered(reversed_order.clone())?;

        let mut tallies: Vec<Tally> = all_constraints.iter().map(|c| Tally::new(c.to_string())).collect();
        let mut order = Tally::new(format!("composition order {:?} = {:?}", expr.order(), reversed_order));
        for _ in 0..counts.satisfaction {
            let g = gen_g(rng);
            let u = expr.embed(&g);
            for (c, tally) in all_constraints.iter().zip(&mut tallies) {
                for _ in 0..points_per_sample {
                    let rest = remove_coordinate(&gen_coords(rng), c.dimension())?;
                    let applied = c.apply_at(space, &u, &rest)?;
                    tally.record(space.deviation(&applied, &c.target_at(&rest)?)?);
                }
            }
            let coords = gen_coords(rng);
            order.record(space.deviation(&u(&coords)?, &reversed.evaluate(&coords, &g)?)?);
        }
        checks.extend(tallies.into_iter().map(|t| t.finish(tol)));
        checks.push(order.finish(tol));
    }

    if counts.secondary > 0 {
        let mut idem = Tally::new("projection idempotency u(·, u(·, g)) = u(·, g)");
        let mut irrelevance = Tally::new("free-function irrelevance C_j[u(·, g1)] = C_j[u(·, g2)]");
        for _ in 0..counts.secondary {
            let g = gen_g(rng);
            let coords = gen_coords(rng);
            let u = expr.embed(&g);
            let uu = expr.embed(&u);
            idem.record(space.deviation(&uu(&coords)?, &u(&coords)?)?);

            let g2 = gen_g(rng);
            let u2 = expr.embed(&g2);
            let mut worst = 0.0;
            for c in &all_constraints {
                let rest = remove_coordinate(&gen_coords(rng), c.dimension())?;
                worst = worse(worst, space.deviation(&c.apply_at(space, &u, &rest)?, &c.apply_at(space, &u2, &rest)?)?);
            }
            irrelevance.record(worst);
        }
        checks.push(idem.finish(tol));
        checks.push(irrelevance.finish(tol));
    }
    Ok(checks)
}

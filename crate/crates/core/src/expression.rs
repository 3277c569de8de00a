//! Constrained expressions.
//!
//! Given constraints `C_i[u] = κ_i` and support functions `s_j`, the support
//! matrix is `M[j][i] = C_j[s_i]` (constraint index = row), `α = M⁻¹`, the
//! switching functions are `φ_i(x) = Σ_j s_j(x) α[j][i]`, and
//!
//! ```text
//! u(x, g) = g(x) + Σ_i φ_i(x) · (κ_i − C_i[g])
//! ```
//!
//! satisfies every constraint for every free function `g`. With this
//! orientation `C_j[φ_i] = δ_ji`.
//!
//! Multivariate expressions apply one univariate embedding per input slot and
//! compose them recursively; the free function of each layer is the
//! expression built by the layers beneath it.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Field, ScalarSpace, VectorSpace};
use crate::constraints::{combine, remove_coordinate, LinearConstraint, PartialConstraint, Term};
use crate::error::{Result, TfcError};
use crate::linalg::{matrix_inverse_with, FieldMatrix, InverseOptions};

type SupportFn<A, F> = Arc<dyn Fn(&A) -> Result<F> + Send + Sync>;

/// A scalar-valued support function `s: A → F`.
#[derive(Clone)]
pub struct SupportFunction<A, F> {
    label: String,
    eval: SupportFn<A, F>,
}

impl<A, F: Field> SupportFunction<A, F> {
    pub fn new(label: impl Into<String>, f: impl Fn(&A) -> Result<F> + Send + Sync + 'static) -> Self {
        SupportFunction { label: label.into(), eval: Arc::new(f) }
    }

    /// Support function that cannot fail.
    pub fn from_fn(label: impl Into<String>, f: impl Fn(&A) -> F + Send + Sync + 'static) -> Self {
        Self::new(label, move |x| Ok(f(x)))
    }

    pub fn constant(label: impl Into<String>, c: F) -> Self {
        Self::from_fn(label, move |_| c.clone())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, x: &A) -> Result<F> {
        (self.eval)(x)
    }
}

impl<A, F> fmt::Debug for SupportFunction<A, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupportFunction").field("label", &self.label).finish_non_exhaustive()
    }
}

/// Support functions together with the inverted support matrix.
#[derive(Debug, Clone)]
pub struct SwitchingSet<A, F> {
    supports: Vec<SupportFunction<A, F>>,
    support_matrix: FieldMatrix<F>,
    alpha: FieldMatrix<F>,
}

impl<A, F: Field> SwitchingSet<A, F> {
    /// Builds `M[j][i] = C_j[s_i]` from each constraint's terms and inverts it.
    pub fn from_terms(
        term_lists: &[&[Term<F, A>]],
        supports: Vec<SupportFunction<A, F>>,
        opts: InverseOptions,
    ) -> Result<Self> {
        let k = term_lists.len();
        if supports.len() != k {
            return Err(TfcError::CountMismatch { constraints: k, supports: supports.len() });
        }
        let scalars = ScalarSpace::<F>::new();
        let mut entries = Vec::with_capacity(k * k);
        for terms in term_lists {
            for s in &supports {
                entries.push(combine(&scalars, terms, |p| s.eval(p))?);
            }
        }
        let support_matrix = FieldMatrix::new(k, k, entries)?;
        let alpha = matrix_inverse_with(&support_matrix, opts)?;
        Ok(SwitchingSet { supports, support_matrix, alpha })
    }

    pub fn derive<V>(constraints: &[LinearConstraint<F, A, V>], supports: Vec<SupportFunction<A, F>>) -> Result<Self> {
        let terms: Vec<_> = constraints.iter().map(LinearConstraint::terms).collect();
        Self::from_terms(&terms, supports, InverseOptions::default())
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    pub fn supports(&self) -> &[SupportFunction<A, F>] {
        &self.supports
    }

    pub fn support_matrix(&self) -> &FieldMatrix<F> {
        &self.support_matrix
    }

    pub fn alpha(&self) -> &FieldMatrix<F> {
        &self.alpha
    }

    /// `φ_i(x) = Σ_j s_j(x) α[j][i]` (0-based `i`).
    pub fn switching_value(&self, i: usize, x: &A) -> Result<F> {
        if i >= self.len() {
            return Err(TfcError::IndexOutOfRange { index: i, len: self.len() });
        }
        let mut acc = F::zero();
        for (j, s) in self.supports.iter().enumerate() {
            acc = acc.add(&s.eval(x)?.mul(&self.alpha[(j, i)]));
        }
        Ok(acc)
    }

    /// All `φ_i(x)` at once, evaluating each support function a single time.
    pub fn switching_values(&self, x: &A) -> Result<Vec<F>> {
        let s = self.supports.iter().map(|s| s.eval(x)).collect::<Result<Vec<_>>>()?;
        Ok((0..self.len())
            .map(|i| s.iter().enumerate().fold(F::zero(), |acc, (j, sj)| acc.add(&sj.mul(&self.alpha[(j, i)]))))
            .collect())
    }
}

pub fn derive_switching_set<A, F: Field, V>(
    constraints: &[LinearConstraint<F, A, V>],
    supports: Vec<SupportFunction<A, F>>,
) -> Result<SwitchingSet<A, F>> {
    SwitchingSet::derive(constraints, supports)
}

pub fn switching_value<A, F: Field>(sw: &SwitchingSet<A, F>, i: usize, x: &A) -> Result<F> {
    sw.switching_value(i, x)
}

/// A univariate constrained expression `u(x, g)`.
#[derive(Debug, Clone)]
pub struct ConstrainedExpression<A, S: VectorSpace> {
    space: S,
    constraints: Vec<LinearConstraint<S::Scalar, A, S::Vector>>,
    switching: SwitchingSet<A, S::Scalar>,
}

impl<A, S: VectorSpace> ConstrainedExpression<A, S> {
    pub fn build(
        space: S,
        constraints: Vec<LinearConstraint<S::Scalar, A, S::Vector>>,
        supports: Vec<SupportFunction<A, S::Scalar>>,
    ) -> Result<Self> {
        Self::build_with(space, constraints, supports, InverseOptions::default())
    }

    pub fn build_with(
        space: S,
        constraints: Vec<LinearConstraint<S::Scalar, A, S::Vector>>,
        supports: Vec<SupportFunction<A, S::Scalar>>,
        opts: InverseOptions,
    ) -> Result<Self> {
        let terms: Vec<_> = constraints.iter().map(LinearConstraint::terms).collect();
        let switching = SwitchingSet::from_terms(&terms, supports, opts)?;
        Ok(ConstrainedExpression { space, constraints, switching })
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn constraints(&self) -> &[LinearConstraint<S::Scalar, A, S::Vector>] {
        &self.constraints
    }

    pub fn switching(&self) -> &SwitchingSet<A, S::Scalar> {
        &self.switching
    }

    /// Fixes the free function and computes every `ρ_i` once.
    pub fn bind<G>(&self, g: G) -> Result<Embedded<'_, A, S, G>>
    where
        G: Fn(&A) -> Result<S::Vector>,
    {
        let projections = self.constraints.iter().map(|c| c.projection(&self.space, &g)).collect::<Result<Vec<_>>>()?;
        Ok(Embedded { expr: self, g, projections })
    }

    /// `u(x, g)`. Prefer [`ConstrainedExpression::bind`] when evaluating many points.
    pub fn evaluate<G>(&self, x: &A, g: G) -> Result<S::Vector>
    where
        G: Fn(&A) -> Result<S::Vector>,
    {
        self.bind(g)?.eval(x)
    }

    /// `ρ_i(x, g) = κ_i − C_i[g]`. The `x` slot is accepted for signature
    /// fidelity; point-evaluation constraints never read it.
    pub fn projection<G>(&self, i: usize, _x: &A, g: G) -> Result<S::Vector>
    where
        G: Fn(&A) -> Result<S::Vector>,
    {
        let c = self.constraints.get(i).ok_or(TfcError::IndexOutOfRange { index: i, len: self.constraints.len() })?;
        c.projection(&self.space, g)
    }
}

pub fn build_expression<A, S: VectorSpace>(
    space: S,
    constraints: Vec<LinearConstraint<S::Scalar, A, S::Vector>>,
    supports: Vec<SupportFunction<A, S::Scalar>>,
) -> Result<ConstrainedExpression<A, S>> {
    ConstrainedExpression::build(space, constraints, supports)
}

/// A constrained expression with its free function bound.
pub struct Embedded<'e, A, S: VectorSpace, G> {
    expr: &'e ConstrainedExpression<A, S>,
    g: G,
    projections: Vec<S::Vector>,
}

impl<'e, A, S, G> Embedded<'e, A, S, G>
where
    S: VectorSpace,
    G: Fn(&A) -> Result<S::Vector>,
{
    pub fn eval(&self, x: &A) -> Result<S::Vector> {
        let space = &self.expr.space;
        let phis = self.expr.switching.switching_values(x)?;
        let mut acc = (self.g)(x)?;
        for (phi, rho) in phis.iter().zip(&self.projections) {
            acc = space.axpy(phi, rho, &acc)?;
        }
        Ok(acc)
    }

    pub fn projections(&self) -> &[S::Vector] {
        &self.projections
    }

    pub fn as_fn(&self) -> impl Fn(&A) -> Result<S::Vector> + '_ {
        move |x| self.eval(x)
    }
}

/// Constraints and support functions for one input slot of a multivariate
/// expression. Support functions read only that slot's coordinate.
pub struct DimensionSpec<A, S: VectorSpace> {
    pub constraints: Vec<PartialConstraint<S::Scalar, A, S::Vector>>,
    pub supports: Vec<SupportFunction<A, S::Scalar>>,
}

impl<A, S: VectorSpace> DimensionSpec<A, S> {
    pub fn new(
        constraints: Vec<PartialConstraint<S::Scalar, A, S::Vector>>,
        supports: Vec<SupportFunction<A, S::Scalar>>,
    ) -> Self {
        DimensionSpec { constraints, supports }
    }

    pub fn unconstrained() -> Self {
        DimensionSpec { constraints: Vec::new(), supports: Vec::new() }
    }
}

struct Layer<A, S: VectorSpace> {
    dimension: usize,
    constraints: Vec<PartialConstraint<S::Scalar, A, S::Vector>>,
    switching: SwitchingSet<A, S::Scalar>,
}

impl<A: Clone, S: VectorSpace> Clone for Layer<A, S> {
    fn clone(&self) -> Self {
        Layer { dimension: self.dimension, constraints: self.constraints.clone(), switching: self.switching.clone() }
    }
}

/// A multivariate constrained expression built by recursive composition.
///
/// The input slots must be orthogonal: embedding one slot's constraints must
/// not disturb another's. This is not verified; comparing two composition
/// orders is a useful heuristic check.
pub struct MultivariateExpression<A, S: VectorSpace> {
    space: S,
    arity: usize,
    order: Vec<usize>,
    layers: Vec<Layer<A, S>>,
}

impl<A: Clone, S: VectorSpace + Clone> Clone for MultivariateExpression<A, S> {
    fn clone(&self) -> Self {
        MultivariateExpression {
            space: self.space.clone(),
            arity: self.arity,
            order: self.order.clone(),
            layers: self.layers.clone(),
        }
    }
}

impl<A: Clone, S: VectorSpace> MultivariateExpression<A, S> {
    /// `dims[k]` describes slot `k`. `order` lists slots innermost first and
    /// defaults to ascending; slots without constraints are the identity.
    pub fn build(space: S, dims: Vec<DimensionSpec<A, S>>, order: Option<Vec<usize>>) -> Result<Self> {
        let arity = dims.len();
        let order = order.unwrap_or_else(|| (0..arity).collect());
        validate_order(&order, arity)?;

        let mut slots: Vec<Option<Layer<A, S>>> = Vec::with_capacity(arity);
        for (dimension, spec) in dims.into_iter().enumerate() {
            slots.push(build_layer(dimension, spec).map_err(|e| in_dimension(dimension, e))?);
        }
        let layers = order.iter().filter_map(|&k| slots[k].take()).collect();
        Ok(MultivariateExpression { space, arity, order, layers })
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Same expression composed in a different order.
    pub fn reordered(&self, order: Vec<usize>) -> Result<Self>
    where
        S: Clone,
    {
        validate_order(&order, self.arity)?;
        let layers = order.iter().filter_map(|&k| self.layers.iter().find(|l| l.dimension == k).cloned()).collect();
        Ok(MultivariateExpression { space: self.space.clone(), arity: self.arity, order, layers })
    }

    /// Switching set of slot `dimension`, if it carries constraints.
    pub fn switching(&self, dimension: usize) -> Option<&SwitchingSet<A, S::Scalar>> {
        self.layers.iter().find(|l| l.dimension == dimension).map(|l| &l.switching)
    }

    pub fn constraints(&self, dimension: usize) -> &[PartialConstraint<S::Scalar, A, S::Vector>] {
        self.layers.iter().find(|l| l.dimension == dimension).map_or(&[], |l| l.constraints.as_slice())
    }

    pub fn evaluate<G>(&self, coords: &[A], g: &G) -> Result<S::Vector>
    where
        G: Fn(&[A]) -> Result<S::Vector>,
    {
        if coords.len() != self.arity {
            return Err(TfcError::DimensionMismatch { context: "coordinates", left: coords.len(), right: self.arity });
        }
        self.eval_layers(self.layers.len(), coords, g)
    }

    pub fn embed<'a, G>(&'a self, g: &'a G) -> impl Fn(&[A]) -> Result<S::Vector> + 'a
    where
        G: Fn(&[A]) -> Result<S::Vector>,
    {
        move |coords| self.evaluate(coords, g)
    }

    fn eval_layers(&self, depth: usize, coords: &[A], g: &dyn Fn(&[A]) -> Result<S::Vector>) -> Result<S::Vector> {
        if depth == 0 {
            return g(coords);
        }
        let layer = &self.layers[depth - 1];
        let inner = |c: &[A]| self.eval_layers(depth - 1, c, g);
        let rest = remove_coordinate(coords, layer.dimension)?;
        let phis = layer.switching.switching_values(&coords[layer.dimension])?;
        let mut acc = inner(coords)?;
        for (c, phi) in layer.constraints.iter().zip(&phis) {
            let rho = c.projection_at(&self.space, &inner, &rest)?;
            acc = self.space.axpy(phi, &rho, &acc)?;
        }
        Ok(acc)
    }
}

pub fn build_multivariate<A: Clone, S: VectorSpace>(
    space: S,
    dims: Vec<DimensionSpec<A, S>>,
    order: Option<Vec<usize>>,
) -> Result<MultivariateExpression<A, S>> {
    MultivariateExpression::build(space, dims, order)
}

fn build_layer<A: Clone, S: VectorSpace>(dimension: usize, spec: DimensionSpec<A, S>) -> Result<Option<Layer<A, S>>> {
    if spec.constraints.is_empty() && spec.supports.is_empty() {
        return Ok(None);
    }
    if let Some(c) = spec.constraints.iter().find(|c| c.dimension() != dimension) {
        return Err(TfcError::InvalidInput(format!(
            "constraint for slot {} listed under slot {dimension}",
            c.dimension()
        )));
    }
    let terms: Vec<_> = spec.constraints.iter().map(PartialConstraint::terms).collect();
    let switching = SwitchingSet::from_terms(&terms, spec.supports, InverseOptions::default())?;
    Ok(Some(Layer { dimension, constraints: spec.constraints, switching }))
}

fn validate_order(order: &[usize], arity: usize) -> Result<()> {
    let mut seen = vec![false; arity];
    for &k in order {
        match seen.get_mut(k) {
            Some(s) if !*s => *s = true,
            _ => return Err(TfcError::InvalidInput(format!("{order:?} is not a permutation of 0..{arity}"))),
        }
    }
    if order.len() != arity {
        return Err(TfcError::InvalidInput(format!("{order:?} is not a permutation of 0..{arity}")));
    }
    Ok(())
}

fn in_dimension(dimension: usize, e: TfcError) -> TfcError {
    TfcError::InDimension { dimension, source: Box::new(e) }
}

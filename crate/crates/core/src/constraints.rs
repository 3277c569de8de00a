//! Constraint functionals: finite linear combinations of point evaluations.
//!
//! A [`LinearConstraint`] reads `Σ_m c_m · u(p_m) = κ`. Input points are
//! opaque; nothing is required of them beyond being accepted by the
//! functions the constraint is applied to.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Field, VectorSpace};
use crate::error::{Result, TfcError};

#[derive(Debug, Clone, PartialEq)]
pub struct Term<F, A> {
    pub coefficient: F,
    pub point: A,
}

impl<F, A> Term<F, A> {
    pub fn new(coefficient: F, point: A) -> Self {
        Term { coefficient, point }
    }
}

/// `Σ_m c_m · f(p_m)` evaluated in `space`.
pub(crate) fn combine<S, P>(
    space: &S,
    terms: &[Term<S::Scalar, P>],
    mut f: impl FnMut(&P) -> Result<S::Vector>,
) -> Result<S::Vector>
where
    S: VectorSpace + ?Sized,
{
    let mut acc = space.zero();
    for term in terms {
        let value = f(&term.point)?;
        acc = space.axpy(&term.coefficient, &value, &acc)?;
    }
    Ok(acc)
}

/// `C[u] = κ` with `C[u] = Σ_m c_m · u(p_m)`.
#[derive(Debug, Clone)]
pub struct LinearConstraint<F, A, V> {
    terms: Vec<Term<F, A>>,
    target: V,
    label: Option<String>,
}

impl<F: Field, A, V> LinearConstraint<F, A, V> {
    pub fn new(terms: Vec<Term<F, A>>, target: V) -> Result<Self> {
        if terms.is_empty() {
            return Err(TfcError::EmptyConstraint);
        }
        Ok(LinearConstraint { terms, target, label: None })
    }

    /// `u(point) = target`.
    pub fn equals(point: A, target: V) -> Self {
        LinearConstraint { terms: vec![Term::new(F::one(), point)], target, label: None }
    }

    /// `u(a) = u(b)`, stored as `u(a) - u(b) = 0`.
    pub fn relative(a: A, b: A, zero: V) -> Self {
        Self::difference(a, b, zero)
    }

    /// `u(a) - u(b) = target`.
    pub fn difference(a: A, b: A, target: V) -> Self {
        LinearConstraint { terms: vec![Term::new(F::one(), a), Term::new(F::one().neg(), b)], target, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn terms(&self) -> &[Term<F, A>] {
        &self.terms
    }

    pub fn target(&self) -> &V {
        &self.target
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `C[f]`.
    pub fn apply<S, G>(&self, space: &S, f: G) -> Result<S::Vector>
    where
        S: VectorSpace<Scalar = F> + ?Sized,
        G: Fn(&A) -> Result<S::Vector>,
    {
        combine(space, &self.terms, f)
    }

    /// `ρ = κ − C[g]`.
    pub fn projection<S, G>(&self, space: &S, g: G) -> Result<V>
    where
        S: VectorSpace<Scalar = F, Vector = V> + ?Sized,
        G: Fn(&A) -> Result<V>,
    {
        let applied = self.apply(space, g)?;
        space.sub(&self.target, &applied)
    }
}

impl<F: Field, A: fmt::Debug, V> fmt::Display for LinearConstraint<F, A, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => f.write_str(l),
            None => write_terms(f, &self.terms, None),
        }
    }
}

fn write_terms<F: Field, A: fmt::Debug>(
    f: &mut fmt::Formatter<'_>,
    terms: &[Term<F, A>],
    slot: Option<usize>,
) -> fmt::Result {
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        if t.coefficient != F::one() {
            write!(f, "({})·", t.coefficient)?;
        }
        match slot {
            Some(k) => write!(f, "u(x{k}={:?})", t.point)?,
            None => write!(f, "u({:?})", t.point)?,
        }
    }
    f.write_str(" = κ")
}

pub fn apply_constraint<S, A, G>(c: &LinearConstraint<S::Scalar, A, S::Vector>, space: &S, f: G) -> Result<S::Vector>
where
    S: VectorSpace,
    G: Fn(&A) -> Result<S::Vector>,
{
    c.apply(space, f)
}

pub fn projection_value<S, A, G>(c: &LinearConstraint<S::Scalar, A, S::Vector>, space: &S, g: G) -> Result<S::Vector>
where
    S: VectorSpace,
    G: Fn(&A) -> Result<S::Vector>,
{
    c.projection(space, g)
}

type TargetFn<A, V> = Arc<dyn Fn(&[A]) -> Result<V> + Send + Sync>;

/// A constraint acting on one coordinate slot of a multivariate function.
///
/// Applied to `f(a_1, …, a_n)` it yields a function of the remaining `n − 1`
/// coordinates; `target` is likewise a function of those coordinates.
/// Dimensions are 0-based.
#[derive(Clone)]
pub struct PartialConstraint<F, A, V> {
    dimension: usize,
    terms: Vec<Term<F, A>>,
    target: TargetFn<A, V>,
    label: Option<String>,
}

impl<F: Field, A: Clone, V> PartialConstraint<F, A, V> {
    pub fn new(
        dimension: usize,
        terms: Vec<Term<F, A>>,
        target: impl Fn(&[A]) -> Result<V> + Send + Sync + 'static,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(TfcError::EmptyConstraint);
        }
        Ok(PartialConstraint { dimension, terms, target: Arc::new(target), label: None })
    }

    /// Target that does not depend on the remaining coordinates.
    pub fn with_constant_target(dimension: usize, terms: Vec<Term<F, A>>, target: V) -> Result<Self>
    where
        V: Clone + Send + Sync + 'static,
    {
        Self::new(dimension, terms, move |_| Ok(target.clone()))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> &[Term<F, A>] {
        &self.terms
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `κ(rest)`.
    pub fn target_at(&self, rest: &[A]) -> Result<V> {
        (self.target)(rest)
    }

    /// `⁽ᵏ⁾C[f]` evaluated at the remaining coordinates `rest`.
    pub fn apply_at<S, G>(&self, space: &S, f: &G, rest: &[A]) -> Result<V>
    where
        S: VectorSpace<Scalar = F, Vector = V> + ?Sized,
        G: Fn(&[A]) -> Result<V> + ?Sized,
    {
        combine(space, &self.terms, |p| f(&insert_coordinate(rest, self.dimension, p)?))
    }

    /// `⁽ᵏ⁾C[f]` as a function of the remaining coordinates.
    pub fn apply<'a, S, G>(&'a self, space: &'a S, f: &'a G) -> impl Fn(&[A]) -> Result<V> + 'a
    where
        S: VectorSpace<Scalar = F, Vector = V> + ?Sized,
        G: Fn(&[A]) -> Result<V> + ?Sized,
    {
        move |rest| self.apply_at(space, f, rest)
    }

    /// `κ(rest) − ⁽ᵏ⁾C[g](rest)`.
    pub fn projection_at<S, G>(&self, space: &S, g: &G, rest: &[A]) -> Result<V>
    where
        S: VectorSpace<Scalar = F, Vector = V> + ?Sized,
        G: Fn(&[A]) -> Result<V> + ?Sized,
    {
        let applied = self.apply_at(space, g, rest)?;
        space.sub(&self.target_at(rest)?, &applied)
    }
}

impl<F: Field, A: fmt::Debug, V> fmt::Debug for PartialConstraint<F, A, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialConstraint")
            .field("dimension", &self.dimension)
            .field("terms", &self.terms)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl<F: Field, A: fmt::Debug, V> fmt::Display for PartialConstraint<F, A, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => f.write_str(l),
            None => write_terms(f, &self.terms, Some(self.dimension)),
        }
    }
}

pub fn apply_partial_constraint<'a, S, A, G>(
    c: &'a PartialConstraint<S::Scalar, A, S::Vector>,
    space: &'a S,
    f: &'a G,
) -> impl Fn(&[A]) -> Result<S::Vector> + 'a
where
    S: VectorSpace,
    A: Clone,
    G: Fn(&[A]) -> Result<S::Vector>,
{
    c.apply(space, f)
}

/// `(rest[..k], point, rest[k..])`.
pub fn insert_coordinate<A: Clone>(rest: &[A], k: usize, point: &A) -> Result<Vec<A>> {
    if k > rest.len() {
        return Err(TfcError::IndexOutOfRange { index: k, len: rest.len() + 1 });
    }
    let mut full = Vec::with_capacity(rest.len() + 1);
    full.extend_from_slice(&rest[..k]);
    full.push(point.clone());
    full.extend_from_slice(&rest[k..]);
    Ok(full)
}

/// `coords` with slot `k` removed.
pub fn remove_coordinate<A: Clone>(coords: &[A], k: usize) -> Result<Vec<A>> {
    if k >= coords.len() {
        return Err(TfcError::IndexOutOfRange { index: k, len: coords.len() });
    }
    let mut rest = coords.to_vec();
    rest.remove(k);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Complex, FunctionTable, Gf4, ScalarSpace, TupleSpace};
    use crate::linalg::FieldMatrix;

    #[test]
    fn empty_constraint_rejected() {
        let r = LinearConstraint::<f64, f64, f64>::new(vec![], 0.0);
        assert_eq!(r.unwrap_err(), TfcError::EmptyConstraint);
    }

    #[test]
    fn relative_form() {
        let c = LinearConstraint::<f64, &str, Vec<f64>>::relative("a", "b", vec![0.0, 0.0]);
        assert_eq!(c.terms(), &[Term::new(1.0, "a"), Term::new(-1.0, "b")]);
        assert_eq!(c.target(), &vec![0.0, 0.0]);
    }

    #[test]
    fn matrix_point_entry() {
        let p1 = FieldMatrix::from_rows(vec![vec![1.0, 3.0, 5.0], vec![2.0, 4.0, 7.0]]).unwrap();
        let c = LinearConstraint::equals(p1, vec![3.0, 4.0]);
        let s2 = |x: &FieldMatrix<f64>| x.bilinear_form(&[1.0, 0.0], &[0.0, 1.0, 0.0]);
        assert_eq!(c.apply(&ScalarSpace::<f64>::new(), s2).unwrap(), 3.0);
    }

    #[test]
    fn zero_function_gives_zero() {
        let space = TupleSpace::<Complex>::new(2);
        let c = LinearConstraint::relative("dont", "panic", space.zero());
        let zero = |_: &&str| Ok(space.zero());
        assert_eq!(c.apply(&space, zero).unwrap(), space.zero());
    }

    #[test]
    fn projection_of_zero_is_target() {
        let space = TupleSpace::<f64>::new(2);
        let c = LinearConstraint::equals(0u8, vec![3.0, 4.0]);
        assert_eq!(c.projection(&space, |_| Ok(space.zero())).unwrap(), vec![3.0, 4.0]);
        // a satisfying g has zero defect
        assert_eq!(c.projection(&space, |_| Ok(vec![3.0, 4.0])).unwrap(), space.zero());
    }

    #[test]
    fn gf4_projection_shifts_identity() {
        use crate::algebra::FiniteFunctionSpace;
        let space = FiniteFunctionSpace::<Gf4>::new();
        let target = FunctionTable::from_fn(|t| t + Gf4::A);
        let c = LinearConstraint::equals(Gf4::One, target);
        let rho = c.projection(&space, |_| Ok(space.zero())).unwrap();
        assert_eq!(rho.values(), &[Gf4::A, Gf4::B, Gf4::Zero, Gf4::One]);
    }

    #[test]
    fn partial_constraint_on_x() {
        let scalars = ScalarSpace::<f64>::new();
        let terms = vec![Term::new(1.0, 1.0), Term::new(1.0, 2.0), Term::new(-1.0, 5.0), Term::new(-1.0, 4.0)];
        let c = PartialConstraint::with_constant_target(0, terms, 0.0).unwrap();
        let s2 = |xy: &[f64]| Ok(xy[0]);
        let applied = c.apply(&scalars, &s2);
        assert_eq!(applied(&[0.3]).unwrap(), -6.0);
        assert_eq!(applied(&[-7.0]).unwrap(), -6.0);

        let first = PartialConstraint::with_constant_target(0, vec![Term::new(1.0, 0.0)], 0.0).unwrap();
        let one = |_: &[f64]| Ok(1.0);
        assert_eq!(apply_partial_constraint(&first, &scalars, &one)(&[2.5]).unwrap(), 1.0);
        let zero = |_: &[f64]| Ok(0.0);
        assert_eq!(c.apply(&scalars, &zero)(&[9.0]).unwrap(), 0.0);
    }

    #[test]
    fn partial_constraint_slot_order() {
        let scalars = ScalarSpace::<f64>::new();
        let c = PartialConstraint::with_constant_target(1, vec![Term::new(1.0, 10.0)], 0.0).unwrap();
        // f(x, y, z) = 100x + 10y + z, with y pinned to 10
        let f = |v: &[f64]| Ok(100.0 * v[0] + 10.0 * v[1] + v[2]);
        assert_eq!(c.apply_at(&scalars, &f, &[1.0, 2.0]).unwrap(), 100.0 + 100.0 + 2.0);
        assert!(c.apply_at(&scalars, &f, &[]).is_err());
    }

    #[test]
    fn coordinate_helpers() {
        assert_eq!(insert_coordinate(&[1, 3], 1, &2).unwrap(), vec![1, 2, 3]);
        assert_eq!(insert_coordinate(&[1, 3], 2, &4).unwrap(), vec![1, 3, 4]);
        assert_eq!(remove_coordinate(&[1, 2, 3], 0).unwrap(), vec![2, 3]);
        assert!(remove_coordinate::<i32>(&[], 0).is_err());
    }

    #[test]
    fn display_uses_label_or_terms() {
        let c = LinearConstraint::<f64, i32, f64>::relative(1, 2, 0.0);
        assert_eq!(c.to_string(), "u(1) + (-1)·u(2) = κ");
        assert_eq!(c.with_label("u(1) = u(2)").to_string(), "u(1) = u(2)");
    }
}

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use rand::Rng;

use super::field::{Field, FiniteField};
use crate::error::{Result, TfcError};
use crate::linalg::FieldMatrix;

/// Default equality tolerance for spaces over approximate fields.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A vector space over [`VectorSpace::Scalar`].
///
/// The space value is a descriptor (dimension, probe grid, tolerance); the
/// vectors themselves are plain data of type [`VectorSpace::Vector`].
pub trait VectorSpace: Send + Sync {
    type Scalar: Field;
    type Vector: Clone + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Vector;
    fn add(&self, a: &Self::Vector, b: &Self::Vector) -> Result<Self::Vector>;
    fn neg(&self, a: &Self::Vector) -> Self::Vector;
    fn scale(&self, c: &Self::Scalar, v: &Self::Vector) -> Self::Vector;

    /// Largest entrywise distance between `a` and `b` (`0`/`1` per entry for exact fields).
    fn deviation(&self, a: &Self::Vector, b: &Self::Vector) -> Result<f64>;

    /// Equality tolerance used when the caller does not supply one; `0` for exact fields.
    fn tolerance(&self) -> f64;

    fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Vector;

    fn is_exact(&self) -> bool {
        Self::Scalar::is_exact()
    }

    fn sub(&self, a: &Self::Vector, b: &Self::Vector) -> Result<Self::Vector> {
        self.add(a, &self.neg(b))
    }

    /// `c·v + w`.
    fn axpy(&self, c: &Self::Scalar, v: &Self::Vector, w: &Self::Vector) -> Result<Self::Vector> {
        self.add(&self.scale(c, v), w)
    }

    fn equals_within(&self, a: &Self::Vector, b: &Self::Vector, tol: f64) -> bool {
        matches!(self.deviation(a, b), Ok(d) if d <= tol)
    }

    fn approx_eq(&self, a: &Self::Vector, b: &Self::Vector) -> bool {
        self.equals_within(a, b, self.tolerance())
    }
}

/// Running maximum that lets a NaN win, so broken values never look like a pass.
pub(crate) fn worse(acc: f64, d: f64) -> f64 {
    if d.is_nan() || d > acc {
        d
    } else {
        acc
    }
}

fn default_tolerance<F: Field>() -> f64 {
    if F::is_exact() {
        0.0
    } else {
        DEFAULT_TOLERANCE
    }
}

fn check_len(context: &'static str, left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(TfcError::DimensionMismatch { context, left, right })
    }
}

/// A field as a one-dimensional vector space over itself.
#[derive(Debug, Clone, Copy)]
pub struct ScalarSpace<F> {
    pub tolerance: f64,
    _field: PhantomData<fn() -> F>,
}

impl<F: Field> ScalarSpace<F> {
    pub fn new() -> Self {
        Self::with_tolerance(default_tolerance::<F>())
    }

    pub fn with_tolerance(tolerance: f64) -> Self {
        ScalarSpace { tolerance, _field: PhantomData }
    }
}

impl<F: Field> Default for ScalarSpace<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> VectorSpace for ScalarSpace<F> {
    type Scalar = F;
    type Vector = F;

    fn zero(&self) -> F {
        F::zero()
    }

    fn add(&self, a: &F, b: &F) -> Result<F> {
        Ok(a.add(b))
    }

    fn neg(&self, a: &F) -> F {
        a.neg()
    }

    fn scale(&self, c: &F, v: &F) -> F {
        c.mul(v)
    }

    fn deviation(&self, a: &F, b: &F) -> Result<f64> {
        Ok(a.distance(b))
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> F {
        F::sample(rng)
    }
}

/// Coordinate tuples `F^n`.
#[derive(Debug, Clone, Copy)]
pub struct TupleSpace<F> {
    pub dim: usize,
    pub tolerance: f64,
    _field: PhantomData<fn() -> F>,
}

impl<F: Field> TupleSpace<F> {
    pub fn new(dim: usize) -> Self {
        TupleSpace { dim, tolerance: default_tolerance::<F>(), _field: PhantomData }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }
}

impl<F: Field> VectorSpace for TupleSpace<F> {
    type Scalar = F;
    type Vector = Vec<F>;

    fn zero(&self) -> Vec<F> {
        vec![F::zero(); self.dim]
    }

    fn add(&self, a: &Vec<F>, b: &Vec<F>) -> Result<Vec<F>> {
        check_len("tuple add", a.len(), b.len())?;
        Ok(a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
    }

    fn neg(&self, a: &Vec<F>) -> Vec<F> {
        a.iter().map(Field::neg).collect()
    }

    fn scale(&self, c: &F, v: &Vec<F>) -> Vec<F> {
        v.iter().map(|x| c.mul(x)).collect()
    }

    fn deviation(&self, a: &Vec<F>, b: &Vec<F>) -> Result<f64> {
        check_len("tuple comparison", a.len(), b.len())?;
        Ok(a.iter().zip(b).map(|(x, y)| x.distance(y)).fold(0.0, worse))
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<F> {
        (0..self.dim).map(|_| F::sample(rng)).collect()
    }
}

/// `rows × cols` matrices over `F`, added entrywise.
#[derive(Debug, Clone, Copy)]
pub struct MatrixSpace<F> {
    pub rows: usize,
    pub cols: usize,
    pub tolerance: f64,
    _field: PhantomData<fn() -> F>,
}

impl<F: Field> MatrixSpace<F> {
    pub fn new(rows: usize, cols: usize) -> Self {
        MatrixSpace { rows, cols, tolerance: default_tolerance::<F>(), _field: PhantomData }
    }
}

impl<F: Field> VectorSpace for MatrixSpace<F> {
    type Scalar = F;
    type Vector = FieldMatrix<F>;

    fn zero(&self) -> FieldMatrix<F> {
        FieldMatrix::zeros(self.rows, self.cols)
    }

    fn add(&self, a: &FieldMatrix<F>, b: &FieldMatrix<F>) -> Result<FieldMatrix<F>> {
        a.zip_with(b, |x, y| x.add(y))
    }

    fn neg(&self, a: &FieldMatrix<F>) -> FieldMatrix<F> {
        a.map(Field::neg)
    }

    fn scale(&self, c: &F, v: &FieldMatrix<F>) -> FieldMatrix<F> {
        v.map(|x| c.mul(x))
    }

    fn deviation(&self, a: &FieldMatrix<F>, b: &FieldMatrix<F>) -> Result<f64> {
        a.max_deviation(b)
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldMatrix<F> {
        let entries = (0..self.rows * self.cols).map(|_| F::sample(rng)).collect();
        FieldMatrix::new(self.rows, self.cols, entries).expect("shape matches entry count")
    }
}

/// A total function `F → F` on a finite field, stored as a table indexed by
/// [`FiniteField::index`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable<F> {
    values: Vec<F>,
}

impl<F: FiniteField> FunctionTable<F> {
    pub fn new(values: Vec<F>) -> Result<Self> {
        check_len("function table", values.len(), F::elements().len())?;
        Ok(FunctionTable { values })
    }

    pub fn from_fn(f: impl Fn(F) -> F) -> Self {
        FunctionTable { values: F::elements().iter().map(|&t| f(t)).collect() }
    }

    /// The table of `t ↦ t`.
    pub fn identity() -> Self {
        Self::from_fn(|t| t)
    }

    pub fn constant(c: F) -> Self {
        Self::from_fn(|_| c)
    }

    pub fn get(&self, t: F) -> F {
        self.values[t.index()]
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }
}

impl<F: FiniteField> fmt::Display for FunctionTable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The space of all functions `F → F` for a finite field `F`.
#[derive(Debug, Clone, Copy, Default)]
pub struct FiniteFunctionSpace<F> {
    _field: PhantomData<fn() -> F>,
}

impl<F: FiniteField> FiniteFunctionSpace<F> {
    pub fn new() -> Self {
        FiniteFunctionSpace { _field: PhantomData }
    }
}

impl<F: FiniteField> VectorSpace for FiniteFunctionSpace<F> {
    type Scalar = F;
    type Vector = FunctionTable<F>;

    fn zero(&self) -> FunctionTable<F> {
        FunctionTable::constant(F::zero())
    }

    fn add(&self, a: &FunctionTable<F>, b: &FunctionTable<F>) -> Result<FunctionTable<F>> {
        Ok(FunctionTable { values: a.values.iter().zip(&b.values).map(|(x, y)| x.add(y)).collect() })
    }

    fn neg(&self, a: &FunctionTable<F>) -> FunctionTable<F> {
        FunctionTable { values: a.values.iter().map(Field::neg).collect() }
    }

    fn scale(&self, c: &F, v: &FunctionTable<F>) -> FunctionTable<F> {
        FunctionTable { values: v.values.iter().map(|x| c.mul(x)).collect() }
    }

    fn deviation(&self, a: &FunctionTable<F>, b: &FunctionTable<F>) -> Result<f64> {
        Ok(a.values.iter().zip(&b.values).map(|(x, y)| x.distance(y)).fold(0.0, worse))
    }

    fn tolerance(&self) -> f64 {
        0.0
    }

    fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FunctionTable<F> {
        FunctionTable { values: F::elements().iter().map(|_| F::sample(rng)).collect() }
    }
}

type RealFn = dyn Fn(f64) -> f64 + Send + Sync;

/// An opaque real function `ℝ → ℝ`, compared on a probe grid.
#[derive(Clone)]
pub struct SampledFunction(Arc<RealFn>);

impl SampledFunction {
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        SampledFunction(Arc::new(f))
    }

    pub fn constant(c: f64) -> Self {
        Self::new(move |_| c)
    }

    /// `Σ coeffs[k] t^k`, evaluated by Horner's rule.
    pub fn polynomial(coeffs: Vec<f64>) -> Self {
        Self::new(move |t| coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c))
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.0)(t)
    }
}

impl fmt::Debug for SampledFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SampledFunction(<fn>)")
    }
}

/// Real functions of one variable, with equality tested on a probe grid.
#[derive(Debug, Clone)]
pub struct SampledFunctionSpace {
    pub probe_grid: Vec<f64>,
    pub tolerance: f64,
}

impl SampledFunctionSpace {
    pub const DEFAULT_PROBES: usize = 17;

    /// `DEFAULT_PROBES` evenly spaced points on `[-2π, 2π]`.
    pub fn new() -> Self {
        let two_pi = 2.0 * std::f64::consts::PI;
        Self::with_grid(Self::even_grid(-two_pi, two_pi, Self::DEFAULT_PROBES))
    }

    pub fn with_grid(probe_grid: Vec<f64>) -> Self {
        SampledFunctionSpace { probe_grid, tolerance: DEFAULT_TOLERANCE }
    }

    pub fn even_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        match n {
            0 => Vec::new(),
            1 => vec![lo],
            _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
        }
    }

    pub fn probe_grid(&self) -> &[f64] {
        &self.probe_grid
    }

    pub fn sample_values(&self, f: &SampledFunction) -> Vec<f64> {
        self.probe_grid.iter().map(|&t| f.eval(t)).collect()
    }
}

impl Default for SampledFunctionSpace {
    fn default() -> Self {
        Self::new()
    }
}

impl VectorSpace for SampledFunctionSpace {
    type Scalar = f64;
    type Vector = SampledFunction;

    fn zero(&self) -> SampledFunction {
        SampledFunction::constant(0.0)
    }

    fn add(&self, a: &SampledFunction, b: &SampledFunction) -> Result<SampledFunction> {
        let (a, b) = (a.clone(), b.clone());
        Ok(SampledFunction::new(move |t| a.eval(t) + b.eval(t)))
    }

    fn neg(&self, a: &SampledFunction) -> SampledFunction {
        let a = a.clone();
        SampledFunction::new(move |t| -a.eval(t))
    }

    fn scale(&self, c: &f64, v: &SampledFunction) -> SampledFunction {
        let (c, v) = (*c, v.clone());
        SampledFunction::new(move |t| c * v.eval(t))
    }

    fn deviation(&self, a: &SampledFunction, b: &SampledFunction) -> Result<f64> {
        Ok(self.probe_grid.iter().map(|&t| (a.eval(t) - b.eval(t)).abs()).fold(0.0, worse))
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Random polynomial of degree ≤ 4 with coefficients in `[-5, 5]`.
    fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SampledFunction {
        let degree = rng.gen_range(0..=4);
        SampledFunction::polynomial((0..=degree).map(|_| rng.gen_range(-5.0..=5.0)).collect())
    }
}

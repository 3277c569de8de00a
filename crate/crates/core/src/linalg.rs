//! Dense matrices over a generic [`Field`] and Gauss–Jordan inversion.

use std::fmt;
use std::ops::Index;

use crate::algebra::{worse, Field};
use crate::error::{Result, TfcError};

/// Pivot magnitude at or below which an approximate pivot counts as zero.
pub const DEFAULT_SINGULAR_TOLERANCE: f64 = 1e-12;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> FieldMatrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(TfcError::DimensionMismatch {
                context: "matrix entries",
                left: entries.len(),
                right: rows * cols,
            });
        }
        Ok(FieldMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(TfcError::DimensionMismatch { context: "matrix row", left: row.len(), right: m });
            }
            entries.extend(row);
        }
        Ok(FieldMatrix { rows: n, cols: m, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix { rows, cols, entries: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = F::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        (i < self.rows && j < self.cols).then(|| &self.entries[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        FieldMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(FieldMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// Largest entrywise [`Field::distance`].
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self.entries.iter().zip(&other.entries).map(|(a, b)| a.distance(b)).fold(0.0, worse))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        matrix_multiply(self, other)
    }

    pub fn inverse(&self) -> Result<Self> {
        matrix_inverse(self)
    }

    /// `rowᵀ · self · col`, e.g. picking out a single entry with unit vectors.
    pub fn bilinear_form(&self, row: &[F], col: &[F]) -> Result<F> {
        if row.len() != self.rows {
            return Err(TfcError::DimensionMismatch {
                context: "bilinear form row",
                left: row.len(),
                right: self.rows,
            });
        }
        if col.len() != self.cols {
            return Err(TfcError::DimensionMismatch {
                context: "bilinear form column",
                left: col.len(),
                right: self.cols,
            });
        }
        let mut acc = F::zero();
        for (i, r) in row.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let inner = self.row(i).iter().zip(col).fold(F::zero(), |s, (m, c)| s.add(&m.mul(c)));
            acc = acc.add(&r.mul(&inner));
        }
        Ok(acc)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(TfcError::DimensionMismatch {
                context: "matrix shape",
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            })
        }
    }
}

impl<F> Index<(usize, usize)> for FieldMatrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for FieldMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                if *v == F::zero() {
                    write!(f, "{}", F::zero())?;
                } else {
                    write!(f, "{v}")?;
                }
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn matrix_multiply<F: Field>(a: &FieldMatrix<F>, b: &FieldMatrix<F>) -> Result<FieldMatrix<F>> {
    if a.cols != b.rows {
        return Err(TfcError::DimensionMismatch { context: "matrix product", left: a.cols, right: b.rows });
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let s = (0..a.cols).fold(F::zero(), |s, k| s.add(&a[(i, k)].mul(&b[(k, j)])));
            entries.push(s);
        }
    }
    Ok(FieldMatrix { rows: a.rows, cols: b.cols, entries })
}

#[derive(Debug, Clone, Copy)]
pub struct InverseOptions {
    /// Only consulted for approximate fields.
    pub singular_tolerance: f64,
}

impl Default for InverseOptions {
    fn default() -> Self {
        InverseOptions { singular_tolerance: DEFAULT_SINGULAR_TOLERANCE }
    }
}

pub fn matrix_inverse<F: Field>(m: &FieldMatrix<F>) -> Result<FieldMatrix<F>> {
    matrix_inverse_with(m, InverseOptions::default())
}

/// Gauss–Jordan elimination on `[m | I]` using only field operations.
///
/// Exact fields pivot on the first nonzero entry of the column; approximate
/// fields use partial pivoting on [`Field::pivot_magnitude`] and reject pivots
/// whose magnitude is `<= singular_tolerance`.
pub fn matrix_inverse_with<F: Field>(m: &FieldMatrix<F>, opts: InverseOptions) -> Result<FieldMatrix<F>> {
    if m.rows != m.cols {
        return Err(TfcError::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut work = m.to_rows();
    let mut inv = FieldMatrix::<F>::identity(n).to_rows();

    for col in 0..n {
        let pivot = select_pivot(&work, col, opts).ok_or(TfcError::SingularSupport { column: col })?;
        work.swap(col, pivot);
        inv.swap(col, pivot);

        let scale = work[col][col].invert()?;
        for v in work[col].iter_mut().chain(inv[col].iter_mut()) {
            *v = v.mul(&scale);
        }

        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in 0..n {
                let w = work[col][c].mul(&factor);
                work[r][c] = work[r][c].sub(&w);
                let v = inv[col][c].mul(&factor);
                inv[r][c] = inv[r][c].sub(&v);
            }
        }
    }

    FieldMatrix::from_rows(inv)
}

fn select_pivot<F: Field>(work: &[Vec<F>], col: usize, opts: InverseOptions) -> Option<usize> {
    let candidates = col..work.len();
    if F::is_exact() {
        return candidates.into_iter().find(|&r| !work[r][col].is_zero());
    }
    let (best, mag) = candidates
        .map(|r| (r, work[r][col].pivot_magnitude().unwrap_or(0.0)))
        .fold((col, f64::NEG_INFINITY), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
    (mag > opts.singular_tolerance).then_some(best)
}

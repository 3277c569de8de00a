use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Result, TfcError};

/// A field: the scalars of a vector space.
///
/// Exact fields (finite fields) return `None` from [`Field::pivot_magnitude`]
/// and compare with `==`. Approximate fields (`f64`, [`Complex`](super::Complex))
/// expose a magnitude used for pivot selection and tolerance checks.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Serialize + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse. `invert(zero)` is always [`TfcError::ZeroInverse`].
    fn invert(&self) -> Result<Self>;

    /// Nonnegative magnitude for approximate fields, `None` for exact ones.
    fn pivot_magnitude(&self) -> Option<f64> {
        None
    }

    /// Distance used for deviation reports: `|a - b|` for approximate fields,
    /// `0` or `1` for exact ones.
    fn distance(&self, other: &Self) -> f64;

    /// Uniform-ish sample used by the randomized verification suites.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_exact() -> bool {
        Self::one().pivot_magnitude().is_none()
    }

    /// Human-readable rendering rounded to `decimals` places (ignored by exact fields).
    fn render(&self, decimals: usize) -> String {
        let _ = decimals;
        self.to_string()
    }
}

/// A field with finitely many elements, enumerable in a fixed order.
pub trait FiniteField: Field + Copy {
    fn elements() -> &'static [Self];

    /// Position of `self` in [`FiniteField::elements`].
    fn index(&self) -> usize;
}

impl Field for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn invert(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(TfcError::ZeroInverse)
        } else {
            Ok(1.0 / self)
        }
    }

    fn pivot_magnitude(&self) -> Option<f64> {
        Some(self.abs())
    }

    fn distance(&self, other: &Self) -> f64 {
        (self - other).abs()
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen_range(-10.0..=10.0)
    }

    fn render(&self, decimals: usize) -> String {
        let s = format!("{:.*}", decimals, self);
        normalize_negative_zero(s)
    }
}

/// `format!("{:.4}", -0.00001)` prints `-0.0000`; reports want `0.0000`.
pub(crate) fn normalize_negative_zero(s: String) -> String {
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_invert_zero_is_error() {
        assert_eq!(0.0f64.invert(), Err(TfcError::ZeroInverse));
        assert_eq!(4.0f64.invert().unwrap(), 0.25);
    }

    #[test]
    fn real_render_drops_negative_zero() {
        assert_eq!((-1e-7f64).render(4), "0.0000");
        assert_eq!((-1.0f64 / 3.0).render(4), "-0.3333");
    }

    #[test]
    fn exactness_flag() {
        assert!(!f64::is_exact());
    }
}

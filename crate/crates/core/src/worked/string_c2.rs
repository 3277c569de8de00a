//! Inputs are lowercase strings, outputs live in ℂ².
//!
//! Constraints: `u("tfc") = {42i, 19+79i}` and `u("dont") = u("panic")`.
//! Supports: `s₁ = 4+2i` and `s₂(x) = Σ k + Σ i^k` where `k` is each
//! letter's alphabet position (a = 1, …, z = 26).
//!
//! Note that `s₂` *adds* both cipher sums into one complex number. Reading the
//! ciphers as separate real and imaginary parts would give
//! `s₂("dont") = 53 − i`, not the `54 − i` the worked numbers require.

use rand::Rng;

use crate::algebra::{Complex, Field, TupleSpace, VectorSpace};
use crate::constraints::LinearConstraint;
use crate::expression::{ConstrainedExpression, SupportFunction};
use crate::linalg::FieldMatrix;
use crate::{Result, TfcError};

pub type Input = String;
pub type Space = TupleSpace<Complex>;
pub type Expression = ConstrainedExpression<Input, Space>;

pub fn target() -> Vec<Complex> {
    vec![Complex::new(0.0, 42.0), Complex::new(19.0, 79.0)]
}

fn positions(x: &str) -> Result<Vec<i64>> {
    x.chars()
        .map(|c| {
            if c.is_ascii_lowercase() {
                Ok(i64::from(c as u8 - b'a') + 1)
            } else {
                Err(TfcError::InvalidInput(format!("{c:?} in {x:?} is not a lowercase letter a-z")))
            }
        })
        .collect()
}

/// a → 1, b → 2, …, summed over the string.
pub fn alphabet_cipher(x: &str) -> Result<i64> {
    Ok(positions(x)?.into_iter().sum())
}

/// Sum of `i^k` over the letters' alphabet positions `k`.
pub fn power_cipher(x: &str) -> Result<Complex> {
    Ok(positions(x)?.into_iter().map(Complex::i_pow).fold(Complex::zero(), |a, b| a + b))
}

pub fn second_support(x: &str) -> Result<Complex> {
    Ok(Complex::real(alphabet_cipher(x)? as f64) + power_cipher(x)?)
}

pub fn space() -> Space {
    TupleSpace::new(2)
}

pub fn constraints() -> Vec<LinearConstraint<Complex, Input, Vec<Complex>>> {
    vec![
        LinearConstraint::equals("tfc".to_string(), target()).with_label("u(\"tfc\") = {42i, 19+79i}"),
        LinearConstraint::relative("dont".to_string(), "panic".to_string(), space().zero())
            .with_label("u(\"dont\") = u(\"panic\")"),
    ]
}

pub fn supports() -> Vec<SupportFunction<Input, Complex>> {
    vec![
        SupportFunction::constant("4+2i", Complex::new(4.0, 2.0)),
        SupportFunction::new("Σk + Σi^k", |x: &String| second_support(x)),
    ]
}

pub fn expression() -> Result<Expression> {
    ConstrainedExpression::build(space(), constraints(), supports())
}

pub fn expected_support_matrix() -> FieldMatrix<Complex> {
    let c = Complex::new;
    FieldMatrix::from_rows(vec![vec![c(4.0, 2.0), c(29.0, -1.0)], vec![c(0.0, 0.0), c(11.0, -2.0)]]).expect("2x2")
}

/// α as printed, rounded to four decimals.
pub fn printed_alpha() -> FieldMatrix<Complex> {
    let c = Complex::new;
    FieldMatrix::from_rows(vec![vec![c(0.2, -0.1), c(-0.5512, 0.1816)], vec![c(0.0, 0.0), c(0.088, 0.016)]])
        .expect("2x2")
}

/// Free function mixing both ciphers and the string length with random
/// complex weights, one row per output coordinate.
#[derive(Debug, Clone)]
pub struct CipherMap {
    weights: [[Complex; 3]; 2],
    bias: [Complex; 2],
}

impl CipherMap {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut row = || [Complex::sample(rng), Complex::sample(rng), Complex::sample(rng)];
        let weights = [row(), row()];
        CipherMap { weights, bias: [Complex::sample(rng), Complex::sample(rng)] }
    }

    pub fn zero() -> Self {
        CipherMap { weights: [[Complex::zero(); 3]; 2], bias: [Complex::zero(); 2] }
    }

    pub fn eval(&self, x: &str) -> Result<Vec<Complex>> {
        let features =
            [Complex::real(alphabet_cipher(x)? as f64), power_cipher(x)?, Complex::real(x.chars().count() as f64)];
        Ok((0..2)
            .map(|m| features.iter().zip(&self.weights[m]).fold(self.bias[m], |acc, (f, w)| acc + *f * *w))
            .collect())
    }
}

/// Random lowercase string of length 1–8.
pub fn random_input<R: Rng + ?Sized>(rng: &mut R) -> Input {
    let len = rng.gen_range(1..=8);
    (0..len).map(|_| char::from(b'a' + rng.gen_range(0..26u8))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cipher_values() {
        assert_eq!(alphabet_cipher("tfc").unwrap(), 29);
        assert_eq!(power_cipher("tfc").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(second_support("tfc").unwrap(), Complex::new(29.0, -1.0));
        assert_eq!(second_support("dont").unwrap(), Complex::new(54.0, -1.0));
        assert_eq!(second_support("panic").unwrap(), Complex::new(43.0, 1.0));
    }

    #[test]
    fn rejects_non_letters() {
        assert!(matches!(second_support("Tfc"), Err(TfcError::InvalidInput(_))));
        assert!(matches!(second_support("t c"), Err(TfcError::InvalidInput(_))));
        assert!(matches!(CipherMap::zero().eval("x1"), Err(TfcError::InvalidInput(_))));
        assert_eq!(second_support("").unwrap(), Complex::zero());
    }

    #[test]
    fn support_matrix_matches() {
        let e = expression().unwrap();
        assert_eq!(e.switching().support_matrix(), &expected_support_matrix());
        assert!(e.switching().alpha().max_deviation(&printed_alpha()).unwrap() <= 1e-4);
    }

    #[test]
    fn tfc_constraint_point() {
        let e = expression().unwrap();
        let g = CipherMap::zero();
        let u = e.evaluate(&"tfc".to_string(), |x: &String| g.eval(x)).unwrap();
        assert!(space().equals_within(&u, &target(), 1e-12));
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::Serialize;

use super::field::{normalize_negative_zero, Field};
use crate::error::{Result, TfcError};

/// A complex number `re + im·i` over `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// `i^k`, exact for every integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Complex::real(1.0),
            1 => Complex::new(0.0, 1.0),
            2 => Complex::real(-1.0),
            _ => Complex::new(0.0, -1.0),
        }
    }
}

/// `1 / (a + bi) = (a - bi) / (a² + b²)`.
pub fn complex_invert(z: Complex) -> Result<Complex> {
    let d = z.norm_sqr();
    if d == 0.0 {
        return Err(TfcError::ZeroInverse);
    }
    Ok(Complex::new(z.re / d, -z.im / d))
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(self.re * rhs.re - self.im * rhs.im, self.re * rhs.im + self.im * rhs.re)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Field for Complex {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex::real(1.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }

    fn neg(&self) -> Self {
        -*self
    }

    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }

    fn invert(&self) -> Result<Self> {
        complex_invert(*self)
    }

    fn pivot_magnitude(&self) -> Option<f64> {
        Some(self.modulus())
    }

    fn distance(&self, other: &Self) -> f64 {
        (*self - *other).modulus()
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex::new(rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0))
    }

    fn render(&self, decimals: usize) -> String {
        let re = normalize_negative_zero(format!("{:.*}", decimals, self.re));
        let im = normalize_negative_zero(format!("{:.*}", decimals, self.im));
        match im.strip_prefix('-') {
            Some(mag) => format!("{re}-{mag}i"),
            None => format!("{re}+{im}i"),
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

//! The four-element field `{0, 1, A, B}`, defined directly by its addition
//! and multiplication tables.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rand::Rng;
use serde::{Serialize, Serializer};

use super::field::{Field, FiniteField};
use crate::error::{Result, TfcError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gf4 {
    Zero,
    One,
    A,
    B,
}

const ELEMENTS: [Gf4; 4] = [Gf4::Zero, Gf4::One, Gf4::A, Gf4::B];

use Gf4::{One as I, Zero as O, A, B};

// Rows and columns in the order 0, 1, A, B.
const ADD: [[Gf4; 4]; 4] = [[O, I, A, B], [I, O, B, A], [A, B, O, I], [B, A, I, O]];

const MUL: [[Gf4; 4]; 4] = [[O, O, O, O], [O, I, A, B], [O, A, B, I], [O, B, I, A]];

impl Gf4 {
    pub const ALL: [Gf4; 4] = ELEMENTS;

    pub fn symbol(self) -> &'static str {
        match self {
            Gf4::Zero => "0",
            Gf4::One => "1",
            Gf4::A => "A",
            Gf4::B => "B",
        }
    }
}

pub fn gf4_add(a: Gf4, b: Gf4) -> Gf4 {
    ADD[a as usize][b as usize]
}

pub fn gf4_multiply(a: Gf4, b: Gf4) -> Gf4 {
    MUL[a as usize][b as usize]
}

/// Inverse read off the multiplication table: the unique `b` with `a * b = 1`.
pub fn gf4_invert(a: Gf4) -> Result<Gf4> {
    MUL[a as usize].iter().position(|&p| p == Gf4::One).map(|i| ELEMENTS[i]).ok_or(TfcError::ZeroInverse)
}

impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        gf4_add(self, rhs)
    }
}

impl Sub for Gf4 {
    type Output = Gf4;
    // characteristic 2
    fn sub(self, rhs: Gf4) -> Gf4 {
        gf4_add(self, rhs)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        gf4_multiply(self, rhs)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    fn neg(self) -> Gf4 {
        self
    }
}

impl Field for Gf4 {
    fn zero() -> Self {
        Gf4::Zero
    }

    fn one() -> Self {
        Gf4::One
    }

    fn add(&self, rhs: &Self) -> Self {
        gf4_add(*self, *rhs)
    }

    fn neg(&self) -> Self {
        *self
    }

    fn mul(&self, rhs: &Self) -> Self {
        gf4_multiply(*self, *rhs)
    }

    fn invert(&self) -> Result<Self> {
        gf4_invert(*self)
    }

    fn distance(&self, other: &Self) -> f64 {
        if self == other {
            0.0
        } else {
            1.0
        }
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        ELEMENTS[rng.gen_range(0..4)]
    }
}

impl FiniteField for Gf4 {
    fn elements() -> &'static [Self] {
        &ELEMENTS
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for Gf4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

impl FromStr for Gf4 {
    type Err = TfcError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Gf4::Zero),
            "1" => Ok(Gf4::One),
            "A" => Ok(Gf4::A),
            "B" => Ok(Gf4::B),
            other => Err(TfcError::InvalidInput(format!("not a GF(4) element: {other:?}"))),
        }
    }
}

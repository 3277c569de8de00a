//! Inputs are GF(4) elements, outputs are functions `t ↦ GF(4)`.
//!
//! Constraints: `u(1) = t + A` and `u(A) − u(B) = t`. Supports `1` and `x`.
//! Output functions are stored as tables over `t = 0, 1, A, B`.

use rand::Rng;

use crate::algebra::{FiniteFunctionSpace, FunctionTable, Gf4, VectorSpace};
use crate::constraints::LinearConstraint;
use crate::expression::{ConstrainedExpression, SupportFunction};
use crate::linalg::FieldMatrix;
use crate::Result;

pub type Input = Gf4;
pub type Space = FiniteFunctionSpace<Gf4>;
pub type Expression = ConstrainedExpression<Input, Space>;

/// `t ↦ t + A`.
pub fn shifted_identity() -> FunctionTable<Gf4> {
    FunctionTable::from_fn(|t| t + Gf4::A)
}

pub fn space() -> Space {
    FiniteFunctionSpace::new()
}

pub fn constraints() -> Vec<LinearConstraint<Gf4, Input, FunctionTable<Gf4>>> {
    vec![
        LinearConstraint::equals(Gf4::One, shifted_identity()).with_label("u(1) = t + A"),
        LinearConstraint::difference(Gf4::A, Gf4::B, FunctionTable::identity()).with_label("u(A) - u(B) = t"),
    ]
}

pub fn supports() -> Vec<SupportFunction<Input, Gf4>> {
    vec![SupportFunction::constant("1", Gf4::One), SupportFunction::from_fn("x", |x: &Gf4| *x)]
}

pub fn expression() -> Result<Expression> {
    ConstrainedExpression::build(space(), constraints(), supports())
}

/// The support matrix, which is also its own inverse.
pub fn expected_alpha() -> FieldMatrix<Gf4> {
    FieldMatrix::from_rows(vec![vec![Gf4::One, Gf4::One], vec![Gf4::Zero, Gf4::One]]).expect("2x2")
}

/// Free function given by one output table per input element.
#[derive(Debug, Clone, PartialEq)]
pub struct TableMap {
    tables: Vec<FunctionTable<Gf4>>,
}

impl TableMap {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let s = space();
        TableMap { tables: Gf4::ALL.iter().map(|_| s.random_sample(rng)).collect() }
    }

    /// `g(x) = table` for every `x`.
    pub fn constant(table: FunctionTable<Gf4>) -> Self {
        TableMap { tables: vec![table; 4] }
    }

    pub fn eval(&self, x: &Gf4) -> Result<FunctionTable<Gf4>> {
        Ok(self.tables[*x as usize].clone())
    }
}

/// All 256 constant tables `t ↦ c(t)`.
pub fn all_tables() -> Vec<FunctionTable<Gf4>> {
    (0..256usize)
        .map(|code| {
            let values = (0..4).map(|pos| Gf4::ALL[(code >> (2 * pos)) & 3]).collect();
            FunctionTable::new(values).expect("4 entries")
        })
        .collect()
}

pub fn random_input<R: Rng + ?Sized>(rng: &mut R) -> Input {
    Gf4::ALL[rng.gen_range(0..4)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gf4::{One as I, Zero as O, A, B};

    #[test]
    fn alpha_is_support_matrix() {
        let e = expression().unwrap();
        assert_eq!(e.switching().support_matrix(), &expected_alpha());
        assert_eq!(e.switching().alpha(), &expected_alpha());
    }

    #[test]
    fn phi_two_vanishes_at_one() {
        let e = expression().unwrap();
        assert_eq!(e.switching().switching_value(1, &I).unwrap(), O);
        // φ₂(x) = 1 + x
        for x in Gf4::ALL {
            assert_eq!(e.switching().switching_value(1, &x).unwrap(), I + x);
        }
    }

    #[test]
    fn target_tables() {
        assert_eq!(shifted_identity().values(), &[A, B, O, I]);
        assert_eq!(FunctionTable::<Gf4>::identity().values(), &[O, I, A, B]);
    }

    #[test]
    fn all_tables_distinct() {
        let mut t = all_tables();
        t.sort_by_key(|x| x.values().to_vec());
        t.dedup();
        assert_eq!(t.len(), 256);
    }
}

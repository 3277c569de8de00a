//! Inputs need no structure at all. Here they are traffic light states, and
//! outputs are 2-vectors over GF(4).
//!
//! Run with `cargo run -p tfc --example custom_inputs`.

use tfc::algebra::{Gf4, TupleSpace};
use tfc::constraints::LinearConstraint;
use tfc::expression::{ConstrainedExpression, SupportFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Light {
    Red,
    Amber,
    Green,
}

fn main() -> tfc::Result<()> {
    let space = TupleSpace::<Gf4>::new(2);
    let constraints = vec![
        LinearConstraint::equals(Light::Red, vec![Gf4::One, Gf4::Zero]).with_label("u(red) = (1, 0)"),
        LinearConstraint::difference(Light::Amber, Light::Green, vec![Gf4::A, Gf4::B])
            .with_label("u(amber) - u(green) = (A, B)"),
    ];
    let supports = vec![
        SupportFunction::constant("1", Gf4::One),
        SupportFunction::from_fn("is amber", |l: &Light| if *l == Light::Amber { Gf4::One } else { Gf4::Zero }),
    ];
    let expr = ConstrainedExpression::build(space, constraints, supports)?;
    for c in expr.constraints() {
        println!("constraint: {c}");
    }

    let g = |l: &Light| {
        Ok(match l {
            Light::Red => vec![Gf4::B, Gf4::B],
            Light::Amber => vec![Gf4::Zero, Gf4::A],
            Light::Green => vec![Gf4::One, Gf4::One],
        })
    };
    let show = |v: Vec<Gf4>| format!("({}, {})", v[0], v[1]);
    let u = expr.bind(g)?;
    for l in [Light::Red, Light::Amber, Light::Green] {
        println!("{l:?}: g = {}, u = {}", show(g(&l)?), show(u.eval(&l)?));
    }
    Ok(())
}

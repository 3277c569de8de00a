//! Maps from GF(4) to tables GF(4) → GF(4): every arithmetic step is exact.
//!
//! Run with `cargo run -p tfc --example gf4_function_outputs`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tfc::algebra::{FunctionTable, Gf4, VectorSpace};
use tfc::worked::gf4;

fn table(t: &FunctionTable<Gf4>) -> String {
    let cells: Vec<String> = Gf4::ALL.iter().zip(t.values()).map(|(x, y)| format!("{x}->{y}")).collect();
    cells.join(" ")
}

fn main() -> tfc::Result<()> {
    println!("multiplication table:");
    for a in Gf4::ALL {
        let row: Vec<String> = Gf4::ALL.iter().map(|b| (a * *b).to_string()).collect();
        println!("  {a}: {}", row.join(" "));
    }

    let expr = gf4::expression()?;
    println!("alpha:\n{}", expr.switching().alpha());

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let g = gf4::TableMap::random(&mut rng);
    let u = expr.bind(|x: &Gf4| g.eval(x))?;
    for x in Gf4::ALL {
        println!("g({x}) = [{}]   u({x}) = [{}]", table(&g.eval(&x)?), table(&u.eval(&x)?));
    }
    let diff = expr.space().sub(&u.eval(&Gf4::A)?, &u.eval(&Gf4::B)?)?;
    println!("u(A) - u(B) = [{}]", table(&diff));
    Ok(())
}

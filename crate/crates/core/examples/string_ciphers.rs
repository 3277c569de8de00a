//! Complex-valued functions of lowercase words.
//!
//! Run with `cargo run -p tfc --example string_ciphers -- some words`.

use tfc::algebra::{Complex, Field, VectorSpace};
use tfc::worked::string_c2;

fn show(v: &[Complex]) -> String {
    let parts: Vec<String> = v.iter().map(|z| z.render(4)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn main() -> tfc::Result<()> {
    for word in ["tfc", "dont", "panic"] {
        println!("s2({word:?}) = {}", string_c2::second_support(word)?.render(0));
    }

    let expr = string_c2::expression()?;
    println!("alpha:\n{}", expr.switching().alpha());

    // Free function: letter count in the real part, first letter in the imaginary part.
    let g = |x: &String| {
        let n = x.len() as f64;
        let first = x.bytes().next().map_or(0.0, |b| f64::from(b - b'a'));
        Ok(vec![Complex::new(n, first), Complex::new(-first, n)])
    };
    let u = expr.bind(g)?;
    println!("u(\"tfc\")   = {}", show(&u.eval(&"tfc".into())?));
    let (d, p) = (u.eval(&"dont".into())?, u.eval(&"panic".into())?);
    println!("u(\"dont\")  = {}", show(&d));
    println!("u(\"panic\") = {}", show(&p));
    println!("difference within 1e-9: {}", expr.space().equals_within(&d, &p, 1e-9));

    for word in std::env::args().skip(1) {
        match u.eval(&word) {
            Ok(v) => println!("u({word:?}) = {}", show(&v)),
            Err(e) => println!("u({word:?}) failed: {e}"),
        }
    }
    Ok(())
}

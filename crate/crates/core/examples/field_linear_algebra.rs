//! One Gauss-Jordan routine, three fields.
//!
//! Run with `cargo run -p tfc --example field_linear_algebra`.

use tfc::algebra::{Complex, Gf4};
use tfc::linalg::{matrix_inverse, matrix_inverse_with, FieldMatrix, InverseOptions};

fn main() -> tfc::Result<()> {
    let real = FieldMatrix::from_rows(vec![vec![2.0, 1.0, 0.0], vec![1.0, 3.0, 1.0], vec![0.0, 1.0, 4.0]])?;
    let inv = matrix_inverse(&real)?;
    println!("real inverse:\n{inv}");
    println!("round trip error: {:.2e}", real.multiply(&inv)?.max_deviation(&FieldMatrix::identity(3))?);

    let c = |re, im| Complex::new(re, im);
    let complex = FieldMatrix::from_rows(vec![vec![c(4.0, 2.0), c(29.0, -1.0)], vec![c(0.0, 0.0), c(11.0, -2.0)]])?;
    println!("complex inverse:\n{}", matrix_inverse(&complex)?);

    // Over GF(4) the first nonzero pivot is taken and results are exact.
    let gf4 = FieldMatrix::from_rows(vec![vec![Gf4::A, Gf4::One], vec![Gf4::One, Gf4::A]])?;
    let inv = matrix_inverse(&gf4)?;
    println!("GF(4) inverse:\n{inv}");
    println!("product is identity: {}", gf4.multiply(&inv)? == FieldMatrix::identity(2));

    let singular = FieldMatrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0 + 1e-14]])?;
    println!("nearly singular, default threshold: {:?}", matrix_inverse(&singular).err());
    let loose = InverseOptions { singular_tolerance: 1e-16 };
    println!("nearly singular, threshold 1e-16: {}", matrix_inverse_with(&singular, loose).is_ok());
    Ok(())
}

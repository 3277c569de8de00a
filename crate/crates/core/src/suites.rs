//! Algebraic invariant suites: field axioms, vector-space axioms and matrix
//! inversion, exhaustively where the structure is finite.

use rand::Rng;

use crate::algebra::{worse, Field, Gf4, VectorSpace};
use crate::linalg::{matrix_inverse, matrix_multiply, FieldMatrix};
use crate::verify::{Check, Tally};
use crate::TfcError;

fn field_identities<F: Field>(a: &F, b: &F, c: &F) -> f64 {
    let checks = [
        a.add(b).add(c).distance(&a.add(&b.add(c))),
        a.add(b).distance(&b.add(a)),
        a.add(&F::zero()).distance(a),
        a.add(&a.neg()).distance(&F::zero()),
        a.mul(b).mul(c).distance(&a.mul(&b.mul(c))),
        a.mul(b).distance(&b.mul(a)),
        a.mul(&F::one()).distance(a),
        a.mul(&b.add(c)).distance(&a.mul(b).add(&a.mul(c))),
    ];
    let mut max = checks.into_iter().fold(0.0, worse);
    match a.invert() {
        Ok(inv) => max = worse(max, a.mul(&inv).distance(&F::one())),
        Err(_) if a.is_zero() => {}
        Err(_) => max = f64::INFINITY,
    }
    if F::zero().invert().is_ok() {
        max = f64::INFINITY;
    }
    max
}

/// Every identity over all 4³ triples.
pub fn gf4_field_axioms() -> Check {
    let mut t = Tally::new("GF(4) field axioms (all 64 triples)");
    for a in Gf4::ALL {
        for b in Gf4::ALL {
            for c in Gf4::ALL {
                t.record(field_identities(&a, &b, &c));
            }
        }
    }
    t.finish(0.0)
}

pub fn field_axioms<F: Field, R: Rng + ?Sized>(name: &str, rng: &mut R, samples: usize, tolerance: f64) -> Check {
    let mut t = Tally::new(format!("{name} field axioms (random triples)"));
    for _ in 0..samples {
        let (a, b, c) = (F::sample(rng), F::sample(rng), F::sample(rng));
        t.record(field_identities(&a, &b, &c));
    }
    t.finish(tolerance)
}

/// Vector-space laws on random `u, v, w` and scalars `c, d`.
pub fn vector_space_axioms<S: VectorSpace, R: Rng + ?Sized>(
    name: &str,
    space: &S,
    rng: &mut R,
    samples: usize,
    tolerance: f64,
) -> Check {
    let mut t = Tally::new(format!("{name} vector-space axioms"));
    for _ in 0..samples {
        let (u, v, w) = (space.random_sample(rng), space.random_sample(rng), space.random_sample(rng));
        let (c, d) = (S::Scalar::sample(rng), S::Scalar::sample(rng));
        let laws = || -> crate::Result<f64> {
            let s = space;
            let dev = [
                s.deviation(&s.add(&s.add(&u, &v)?, &w)?, &s.add(&u, &s.add(&v, &w)?)?)?,
                s.deviation(&s.add(&u, &v)?, &s.add(&v, &u)?)?,
                s.deviation(&s.add(&u, &s.zero())?, &u)?,
                s.deviation(&s.add(&u, &s.neg(&u))?, &s.zero())?,
                s.deviation(&s.scale(&c, &s.add(&u, &v)?), &s.add(&s.scale(&c, &u), &s.scale(&c, &v))?)?,
                s.deviation(&s.scale(&c.add(&d), &u), &s.add(&s.scale(&c, &u), &s.scale(&d, &u))?)?,
                s.deviation(&s.scale(&S::Scalar::one(), &u), &u)?,
                s.deviation(&s.scale(&c.mul(&d), &u), &s.scale(&c, &s.scale(&d, &u)))?,
            ];
            Ok(dev.into_iter().fold(0.0, worse))
        };
        t.record(laws().unwrap_or(f64::INFINITY));
    }
    t.finish(tolerance)
}

/// All 256 2×2 matrices over GF(4).
pub fn gf4_matrices_2x2() -> Vec<FieldMatrix<Gf4>> {
    (0..256usize)
        .map(|code| {
            let e = (0..4).map(|k| Gf4::ALL[(code >> (2 * k)) & 3]).collect();
            FieldMatrix::new(2, 2, e).expect("2x2")
        })
        .collect()
}

/// Gauss–Jordan inverse against a brute-force search over all 256 matrices.
/// Singular matrices must be rejected.
pub fn gf4_inverse_exhaustive() -> Check {
    let all = gf4_matrices_2x2();
    let id = FieldMatrix::identity(2);
    let mut t = Tally::new("GF(4) 2x2 inverses vs brute-force search (256 matrices)");
    for m in &all {
        let brute = all.iter().find(|c| matrix_multiply(m, c).as_ref() == Ok(&id));
        let ok = match (brute, matrix_inverse(m)) {
            (Some(b), Ok(inv)) => *b == inv,
            (None, Err(TfcError::SingularSupport { .. })) => true,
            _ => false,
        };
        t.record(if ok { 0.0 } else { 1.0 });
    }
    t.finish(0.0)
}

/// Random square matrices of size 1–5. Returns the `M·M⁻¹ = I` check and
/// the `(M⁻¹)⁻¹ = M` check.
pub fn inverse_round_trips<F: Field, R: Rng + ?Sized>(
    name: &str,
    rng: &mut R,
    count: usize,
    product_tolerance: f64,
    double_inverse_tolerance: f64,
) -> (Check, Check) {
    let mut product = Tally::new(format!("{name} M·M⁻¹ = I (random sizes 1-5)"));
    let mut double = Tally::new(format!("{name} (M⁻¹)⁻¹ = M (random sizes 1-5)"));
    while product.samples() < count {
        let n = rng.gen_range(1..=5);
        let m = FieldMatrix::new(n, n, (0..n * n).map(|_| F::sample(rng)).collect()).expect("square");
        let Ok(inv) = matrix_inverse(&m) else { continue };
        let p = matrix_multiply(&m, &inv).and_then(|p| p.max_deviation(&FieldMatrix::identity(n)));
        product.record(p.unwrap_or(f64::INFINITY));
        let back = matrix_inverse(&inv).and_then(|b| b.max_deviation(&m));
        double.record(back.unwrap_or(f64::INFINITY));
    }
    (product.finish(product_tolerance), double.finish(double_inverse_tolerance))
}

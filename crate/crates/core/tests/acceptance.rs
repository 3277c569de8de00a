//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Reference values are written out literally here or recomputed by
//! independent closed forms, never read back from the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tfc::algebra::{gf4_add, Complex, Field, FunctionTable, Gf4, SampledFunction, VectorSpace};
use tfc::constraints::Term;
use tfc::expression::{derive_switching_set, SwitchingSet};
use tfc::linalg::{matrix_inverse, FieldMatrix};
use tfc::suites;
use tfc::verify::{multivariate_checks, univariate_checks, Check, SampleCounts};
use tfc::worked::{expand_multivariate_reference, gf4, matrix_r2x3, multivariate, string_c2};

const SEED: u64 = 0;
const SAMPLES: usize = 100;
const TOL: f64 = 1e-9;
const EXACT_ALPHA_TOL: f64 = 1e-12;
const PRINTED_TOL: f64 = 1e-4;

/// Worst deviation seen, with NaN treated as a failure.
#[derive(Default)]
struct Worst(f64);

impl Worst {
    fn see(&mut self, d: f64) {
        if d.is_nan() || d > self.0 {
            self.0 = if d.is_nan() { f64::NAN } else { d };
        }
    }
    fn within(&self, tol: f64) -> bool {
        self.0 <= tol
    }
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn real(rows: &[&[f64]]) -> FieldMatrix<f64> {
    FieldMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// `Σ coefficient · φ_i(point)` for one constraint.
fn apply_terms<A, F: Field>(sw: &SwitchingSet<A, F>, terms: &[Term<F, A>], i: usize) -> F {
    terms.iter().map(|t| t.coefficient.mul(&sw.switching_value(i, &t.point).unwrap())).fold(F::zero(), |a, b| a.add(&b))
}

fn duality<A, F: Field>(sw: &SwitchingSet<A, F>, lists: &[&[Term<F, A>]], worst: &mut Worst) {
    for (j, terms) in lists.iter().enumerate() {
        for i in 0..sw.len() {
            let delta = if i == j { F::one() } else { F::zero() };
            worst.see(apply_terms(sw, terms, i).distance(&delta));
        }
    }
}

fn criterion_alpha() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;

    let sw = derive_switching_set(&matrix_r2x3::constraints(), matrix_r2x3::supports()).unwrap();
    let d = sw.alpha().max_deviation(&real(&[&[0.0, 1.0], &[1.0 / 3.0, -1.0 / 3.0]])).unwrap();
    pass &= d <= EXACT_ALPHA_TOL;
    notes.push(format!("matrix_r2x3 {d:.1e}"));

    // Support matrix [[4+2i, 29−i], [0, 11−2i]] is upper triangular, so its
    // inverse is [[1/a, −b/(ad)], [0, 1/d]].
    let (a, b, dd) = (c(4.0, 2.0), c(29.0, -1.0), c(11.0, -2.0));
    let recip = |z: Complex| {
        let n = z.re * z.re + z.im * z.im;
        c(z.re / n, -z.im / n)
    };
    let exact =
        FieldMatrix::from_rows(vec![vec![recip(a), -(b * recip(a) * recip(dd))], vec![Complex::zero(), recip(dd)]])
            .unwrap();
    let printed =
        FieldMatrix::from_rows(vec![vec![c(0.2, -0.1), c(-0.5512, 0.1816)], vec![Complex::zero(), c(0.088, 0.016)]])
            .unwrap();
    let sw = derive_switching_set(&string_c2::constraints(), string_c2::supports()).unwrap();
    let d_exact = sw.alpha().max_deviation(&exact).unwrap();
    let d_printed = sw.alpha().max_deviation(&printed).unwrap();
    pass &= d_exact <= EXACT_ALPHA_TOL && d_printed <= PRINTED_TOL;
    notes.push(format!("string_c2 {d_exact:.1e} exact, {d_printed:.1e} printed"));

    use Gf4::{One, Zero};
    let sw = derive_switching_set(&gf4::constraints(), gf4::supports()).unwrap();
    let expected = FieldMatrix::from_rows(vec![vec![One, One], vec![Zero, One]]).unwrap();
    let ok = sw.alpha() == &expected;
    pass &= ok;
    notes.push(format!("gf4 {}", if ok { "exact" } else { "MISMATCH" }));

    let e = multivariate::expression().unwrap();
    let dx = e.switching(0).unwrap().alpha().max_deviation(&real(&[&[1.0, 0.0], &[0.0, -1.0 / 6.0]])).unwrap();
    let dy = e.switching(1).unwrap().alpha().max_deviation(&real(&[&[1.0]])).unwrap();
    pass &= dx <= EXACT_ALPHA_TOL && dy <= EXACT_ALPHA_TOL;
    notes.push(format!("multivariate {dx:.1e}/{dy:.1e}"));

    outcome(pass, notes.join("; "))
}

fn criterion_matrix_r2x3() -> Outcome {
    let e = matrix_r2x3::expression().unwrap();
    let s = e.space();
    let p1 = real(&[&[1.0, 3.0, 5.0], &[2.0, 4.0, 7.0]]);
    let p2 = real(&[&[1.0, 0.0, 1.0], &[0.0, 1.0, 0.0]]);
    let p3 = real(&[&[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]]);
    let mut rng = rng();
    let mut worst = Worst::default();
    for _ in 0..SAMPLES {
        let g = matrix_r2x3::AffineMap::random(&mut rng);
        let u = e.bind(|x: &matrix_r2x3::Input| g.eval(x)).unwrap();
        worst.see(s.deviation(&u.eval(&p1).unwrap(), &vec![3.0, 4.0]).unwrap());
        worst.see(s.deviation(&u.eval(&p2).unwrap(), &u.eval(&p3).unwrap()).unwrap());
    }
    outcome(worst.within(TOL), format!("{SAMPLES} g, max deviation {:.2e}", worst.0))
}

fn criterion_string_c2() -> Outcome {
    let e = string_c2::expression().unwrap();
    let s = e.space();
    let target = vec![c(0.0, 42.0), c(19.0, 79.0)];
    let mut rng = rng();
    let mut worst = Worst::default();
    for _ in 0..SAMPLES {
        let g = string_c2::CipherMap::random(&mut rng);
        let u = e.bind(|x: &String| g.eval(x)).unwrap();
        worst.see(s.deviation(&u.eval(&"tfc".into()).unwrap(), &target).unwrap());
        worst.see(s.deviation(&u.eval(&"dont".into()).unwrap(), &u.eval(&"panic".into()).unwrap()).unwrap());
    }
    let intermediates = [("tfc", c(29.0, -1.0)), ("dont", c(54.0, -1.0)), ("panic", c(43.0, 1.0))]
        .iter()
        .all(|(w, v)| string_c2::second_support(w).unwrap() == *v);
    outcome(
        worst.within(TOL) && intermediates,
        format!(
            "{SAMPLES} g, max deviation {:.2e}; s2 intermediates {}",
            worst.0,
            if intermediates { "exact" } else { "MISMATCH" }
        ),
    )
}

fn criterion_gf4() -> Outcome {
    let e = gf4::expression().unwrap();
    let s = e.space();
    let shifted: Vec<Gf4> = Gf4::ALL.iter().map(|&t| gf4_add(t, Gf4::A)).collect();
    let identity: Vec<Gf4> = Gf4::ALL.to_vec();
    let mut failures = 0usize;
    let mut check = |g: &gf4::TableMap| {
        let u = e.bind(|x: &Gf4| g.eval(x)).unwrap();
        let at_one = u.eval(&Gf4::One).unwrap();
        let diff = s.sub(&u.eval(&Gf4::A).unwrap(), &u.eval(&Gf4::B).unwrap()).unwrap();
        if at_one.values() != shifted.as_slice() || diff.values() != identity.as_slice() {
            failures += 1;
        }
    };
    let mut rng = rng();
    for _ in 0..SAMPLES {
        check(&gf4::TableMap::random(&mut rng));
    }
    let tables: Vec<FunctionTable<Gf4>> = (0..256usize)
        .map(|code| FunctionTable::new((0..4).map(|k| Gf4::ALL[(code >> (2 * k)) & 3]).collect()).unwrap())
        .collect();
    for t in &tables {
        check(&gf4::TableMap::constant(t.clone()));
    }
    outcome(failures == 0, format!("{SAMPLES} random g + {} constant g, {failures} mismatches", tables.len()))
}

/// Composition written out by hand: the x layer with φ = {1, −x/6}, then the
/// y layer with φ = {1}.
fn by_hand(x: f64, y: f64, g: &multivariate::BivariatePolynomial, grid: &[f64]) -> Vec<f64> {
    let at = |x: f64, y: f64| g.eval(&[x, y]).unwrap();
    let inner = |x: f64, y: f64| -> Vec<f64> {
        let (g0, g1, g2, g5, g4, gx) = (at(0.0, y), at(1.0, y), at(2.0, y), at(5.0, y), at(4.0, y), at(x, y));
        grid.iter()
            .map(|&t| {
                let defect = -(g1.eval(t) + g2.eval(t) - g5.eval(t) - g4.eval(t));
                gx.eval(t) + (t.sin() - g0.eval(t)) - x / 6.0 * defect
            })
            .collect()
    };
    let here = inner(x, y);
    let edge = inner(x, 1.0);
    grid.iter().zip(here.iter().zip(&edge)).map(|(t, (h, e))| h + (t.sin() - e)).collect()
}

fn criterion_multivariate() -> Outcome {
    let e = multivariate::expression().unwrap();
    let s = e.space();
    let grid = s.probe_grid().to_vec();
    let sine = SampledFunction::new(f64::sin);
    let mut rng = rng();
    let mut constraints = Worst::default();
    let mut closed = Worst::default();
    let mut hand = Worst::default();
    let draw = |rng: &mut ChaCha8Rng| multivariate::random_coords(rng);
    for _ in 0..SAMPLES {
        let g = multivariate::BivariatePolynomial::random(&mut rng);
        let gf = |c: &[f64]| g.eval(c);
        let u = |x: f64, y: f64| e.evaluate(&[x, y], &gf).unwrap();
        for _ in 0..20 {
            let p = draw(&mut rng);
            let (x, y) = (p[0], p[1]);
            constraints.see(s.deviation(&u(0.0, y), &sine).unwrap());
            constraints.see(s.deviation(&u(x, 1.0), &sine).unwrap());
            let combo = [(1.0, 1.0), (2.0, 1.0), (5.0, -1.0), (4.0, -1.0)]
                .iter()
                .map(|&(xi, w)| s.scale(&w, &u(xi, y)))
                .try_fold(s.zero(), |acc, v| s.add(&acc, &v))
                .unwrap();
            constraints.see(s.deviation(&combo, &s.zero()).unwrap());

            let value = u(x, y);
            closed.see(s.deviation(&value, &expand_multivariate_reference(x, y, &gf).unwrap()).unwrap());
            let manual = by_hand(x, y, &g, &grid);
            for (t, m) in grid.iter().zip(&manual) {
                hand.see((value.eval(*t) - m).abs());
            }
        }
    }
    let pass = constraints.within(TOL) && closed.within(TOL) && hand.within(TOL);
    outcome(
        pass,
        format!(
            "{SAMPLES} g x 20 points, constraints {:.2e}, closed form {:.2e}, by hand {:.2e}",
            constraints.0, closed.0, hand.0
        ),
    )
}

fn criterion_duality() -> Outcome {
    let mut approx = Worst::default();
    let e = matrix_r2x3::expression().unwrap();
    let lists: Vec<_> = e.constraints().iter().map(|c| c.terms()).collect();
    duality(e.switching(), &lists, &mut approx);

    let e = string_c2::expression().unwrap();
    let lists: Vec<_> = e.constraints().iter().map(|c| c.terms()).collect();
    duality(e.switching(), &lists, &mut approx);

    let e = multivariate::expression().unwrap();
    for dim in 0..2 {
        let lists: Vec<_> = e.constraints(dim).iter().map(|c| c.terms()).collect();
        duality(e.switching(dim).unwrap(), &lists, &mut approx);
    }

    let mut exact = Worst::default();
    let e = gf4::expression().unwrap();
    let lists: Vec<_> = e.constraints().iter().map(|c| c.terms()).collect();
    duality(e.switching(), &lists, &mut exact);

    outcome(approx.within(TOL) && exact.within(0.0), format!("real/complex {:.2e}, gf4 {:.0}", approx.0, exact.0))
}

fn criterion_suites() -> Outcome {
    let axioms = suites::gf4_field_axioms();

    use Gf4::{One, Zero};
    let all: Vec<FieldMatrix<Gf4>> = (0..256usize)
        .map(|code| FieldMatrix::new(2, 2, (0..4).map(|k| Gf4::ALL[(code >> (2 * k)) & 3]).collect()).unwrap())
        .collect();
    let product = |a: &FieldMatrix<Gf4>, b: &FieldMatrix<Gf4>| {
        let e = |i: usize, j: usize| a[(i, 0)] * b[(0, j)] + a[(i, 1)] * b[(1, j)];
        [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
    };
    let mut invertible = 0;
    let mut agree = true;
    for m in &all {
        let brute = all.iter().find(|b| product(m, b) == [One, Zero, Zero, One]);
        match (brute, matrix_inverse(m)) {
            (Some(b), Ok(inv)) => {
                invertible += 1;
                agree &= &inv == b;
            }
            (None, Err(_)) => {}
            _ => agree = false,
        }
    }

    let mut rng = rng();
    let (rp, rd) = suites::inverse_round_trips::<f64, _>("real", &mut rng, 1000, 1e-8, 1e-6);
    let (cp, cd) = suites::inverse_round_trips::<Complex, _>("complex", &mut rng, 1000, 1e-8, 1e-6);
    let rounds = [&rp, &rd, &cp, &cd].iter().all(|c| c.pass);

    outcome(
        axioms.pass && agree && invertible == 180 && rounds,
        format!(
            "gf4 axioms {} ({} cases); {invertible} invertible 2x2 inverses {}; round trips real {:.1e}, complex {:.1e}",
            if axioms.pass { "hold" } else { "FAIL" },
            axioms.samples,
            if agree { "match" } else { "MISMATCH" },
            rp.max_deviation,
            cp.max_deviation
        ),
    )
}

fn criterion_idempotency() -> Outcome {
    let counts = SampleCounts { satisfaction: 0, secondary: 50 };
    let mut checks: Vec<Check> = Vec::new();
    let mut rng = rng();

    let e = matrix_r2x3::expression().unwrap();
    checks.extend(
        univariate_checks(
            &e,
            &mut rng,
            counts,
            TOL,
            |r| {
                let g = matrix_r2x3::AffineMap::random(r);
                move |x: &matrix_r2x3::Input| g.eval(x)
            },
            matrix_r2x3::random_input,
        )
        .unwrap(),
    );
    let e = string_c2::expression().unwrap();
    checks.extend(
        univariate_checks(
            &e,
            &mut rng,
            counts,
            TOL,
            |r| {
                let g = string_c2::CipherMap::random(r);
                move |x: &String| g.eval(x)
            },
            string_c2::random_input,
        )
        .unwrap(),
    );
    let e = gf4::expression().unwrap();
    checks.extend(
        univariate_checks(
            &e,
            &mut rng,
            counts,
            TOL,
            |r| {
                let g = gf4::TableMap::random(r);
                move |x: &Gf4| g.eval(x)
            },
            gf4::random_input,
        )
        .unwrap(),
    );
    let e = multivariate::expression().unwrap();
    checks.extend(
        multivariate_checks(
            &e,
            &mut rng,
            counts,
            20,
            TOL,
            |r| {
                let g = multivariate::BivariatePolynomial::random(r);
                move |c: &[f64]| g.eval(c)
            },
            multivariate::random_coords,
        )
        .unwrap(),
    );

    let relevant: Vec<&Check> = checks
        .iter()
        .filter(|c| c.description.starts_with("projection idempotency") || c.description.starts_with("free-function"))
        .collect();
    let worst = relevant.iter().map(|c| c.max_deviation).fold(0.0, f64::max);
    let pass = relevant.len() == 8 && relevant.iter().all(|c| c.pass && c.samples == 50);
    outcome(pass, format!("{} checks x 50 samples, max deviation {worst:.2e}", relevant.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("alpha-matrix reproduction", Duration::from_secs(1), criterion_alpha),
        ("constraint satisfaction, R^2x3 -> R^2", Duration::from_secs(1), criterion_matrix_r2x3),
        ("constraint satisfaction, strings -> C^2", Duration::from_secs(1), criterion_string_c2),
        ("constraint satisfaction, GF(4) -> (GF(4) -> GF(4))", Duration::from_secs(1), criterion_gf4),
        ("constraint satisfaction, multivariate sine", Duration::from_secs(5), criterion_multivariate),
        ("switching duality", Duration::from_secs(1), criterion_duality),
        ("algebraic suites", Duration::from_secs(10), criterion_suites),
        ("projection idempotency and free-function irrelevance", Duration::from_secs(10), criterion_idempotency),
    ];

    let mut failed = 0;
    for (n, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let pass = result.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "{} [{}] {name}: {} ({:.0} ms{})",
            if pass { "PASS" } else { "FAIL" },
            n + 1,
            result.detail,
            elapsed.as_secs_f64() * 1e3,
            if in_time { String::new() } else { format!(", over {budget:?} budget") }
        );
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

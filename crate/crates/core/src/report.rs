//! Verification reports for the worked problems.
//!
//! Reports are deterministic for a given `(example, seed, samples,
//! tolerance)`: every random draw comes from a `ChaCha8Rng` seeded with
//! `seed_from_u64(seed)` and checks run in a fixed order.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::algebra::{Complex, Field, FunctionTable, Gf4, ScalarSpace, TupleSpace, VectorSpace, DEFAULT_TOLERANCE};
use crate::linalg::FieldMatrix;
use crate::suites;
use crate::verify::{effective_tolerance, multivariate_checks, univariate_checks, Check, SampleCounts, Tally};
use crate::worked::{gf4, matrix_r2x3, multivariate, string_c2};
use crate::{Result, TfcError};

pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha 0.3), seed_from_u64(seed)";

/// α entries must match their exact values to this tolerance.
pub const ALPHA_TOLERANCE: f64 = 1e-12;

/// The complex α is published rounded to four decimals.
pub const PRINTED_ALPHA_TOLERANCE: f64 = 1e-4;

/// Random remaining-coordinate settings per free function in the multivariate checks.
pub const MULTIVARIATE_POINTS_PER_SAMPLE: usize = 20;

/// Decimal places used for α and probe values in text reports.
pub const TEXT_DECIMALS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleId {
    MatrixR2x3,
    StringC2,
    Gf4,
    Multivariate,
}

impl ExampleId {
    pub const ALL: [ExampleId; 4] =
        [ExampleId::MatrixR2x3, ExampleId::StringC2, ExampleId::Gf4, ExampleId::Multivariate];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleId::MatrixR2x3 => "matrix_r2x3",
            ExampleId::StringC2 => "string_c2",
            ExampleId::Gf4 => "gf4",
            ExampleId::Multivariate => "multivariate",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = TfcError;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| TfcError::UnknownExample(s.to_string()))
    }
}

impl Serialize for ExampleId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = TfcError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(TfcError::InvalidInput(format!("unknown format {other:?} (expected text or json)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0, samples: 100, tolerance: DEFAULT_TOLERANCE }
    }
}

/// A field matrix at full precision (`entries`) and rounded for display.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RenderedMatrix {
    pub label: String,
    pub entries: Vec<Vec<serde_json::Value>>,
    pub rounded: Vec<Vec<String>>,
}

impl RenderedMatrix {
    pub fn new<F: Field>(label: impl Into<String>, m: &FieldMatrix<F>) -> Self {
        let rows = m.to_rows();
        RenderedMatrix {
            label: label.into(),
            entries: rows
                .iter()
                .map(|r| r.iter().map(|v| serde_json::to_value(v).unwrap_or(serde_json::Value::Null)).collect())
                .collect(),
            rounded: rows.iter().map(|r| r.iter().map(|v| v.render(TEXT_DECIMALS)).collect()).collect(),
        }
    }
}

/// A value of the embedded function shown for a fixed free function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Probe {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub example_id: ExampleId,
    pub generator: String,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub alpha_matrices: Vec<RenderedMatrix>,
    pub probes: Vec<Probe>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(
        id: ExampleId,
        cfg: &RunConfig,
        alpha_matrices: Vec<RenderedMatrix>,
        probes: Vec<Probe>,
        checks: Vec<Check>,
    ) -> Self {
        let passed = checks.iter().all(|c| c.pass);
        VerificationReport {
            example_id: id,
            generator: GENERATOR.to_string(),
            seed: cfg.seed,
            samples: cfg.samples,
            tolerance: cfg.tolerance,
            alpha_matrices,
            probes,
            checks,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.to_json(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "example {}", self.example_id);
        let _ = writeln!(
            out,
            "  seed {}  samples {}  tolerance {:e}  generator {}",
            self.seed, self.samples, self.tolerance, self.generator
        );
        for m in &self.alpha_matrices {
            let _ = writeln!(out, "  {}:", m.label);
            write_matrix(&mut out, &m.rounded);
        }
        if !self.probes.is_empty() {
            let _ = writeln!(out, "  probes:");
            for p in &self.probes {
                let _ = writeln!(out, "    {} = {}", p.label, p.value);
            }
        }
        let _ = writeln!(out, "  checks:");
        write_checks(&mut out, &self.checks);
        let _ = writeln!(out, "  result: {}", pass_word(self.passed));
        out
    }
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_matrix(out: &mut String, rows: &[Vec<String>]) {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "    [{}]", cells.join("  "));
    }
}

fn write_checks(out: &mut String, checks: &[Check]) {
    for c in checks {
        let _ = writeln!(
            out,
            "    {}  {} (samples {}, max deviation {:.3e}, tolerance {:e})",
            pass_word(c.pass),
            c.description,
            c.samples,
            c.max_deviation,
            c.tolerance
        );
    }
}

fn render_vector<F: Field>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.render(TEXT_DECIMALS)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn matrix_check<F: Field>(description: &str, got: &FieldMatrix<F>, want: &FieldMatrix<F>, tolerance: f64) -> Check {
    let dev = got.max_deviation(want).unwrap_or(f64::INFINITY);
    Check::new(description, got.entries().len(), dev, tolerance)
}

/// Builds one worked problem, compares its α with the known values, and runs
/// the seeded sample checks.
pub fn run_example(id: ExampleId, cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let counts = SampleCounts::new(cfg.samples);
    match id {
        ExampleId::MatrixR2x3 => {
            let expr = matrix_r2x3::expression()?;
            let sw = expr.switching();
            let mut checks = vec![
                matrix_check(
                    "support matrix = [[1,3],[1,0]]",
                    sw.support_matrix(),
                    &matrix_r2x3::expected_support_matrix(),
                    0.0,
                ),
                matrix_check("alpha = [[0,1],[1/3,-1/3]]", sw.alpha(), &matrix_r2x3::expected_alpha(), ALPHA_TOLERANCE),
            ];
            checks.extend(univariate_checks(
                &expr,
                &mut rng,
                counts,
                cfg.tolerance,
                |r| {
                    let map = matrix_r2x3::AffineMap::random(r);
                    move |x: &matrix_r2x3::Input| map.eval(x)
                },
                matrix_r2x3::random_input,
            )?);
            let zero = matrix_r2x3::AffineMap::zero();
            let u = expr.bind(|x: &matrix_r2x3::Input| zero.eval(x))?;
            let labels = ["[[1,3,5],[2,4,7]]", "[[1,0,1],[0,1,0]]", "[[0,0,1],[1,0,0]]"];
            let probes = matrix_r2x3::constraint_points()
                .iter()
                .zip(labels)
                .map(|(p, l)| Ok(Probe { label: format!("u({l}; g = 0)"), value: render_vector(&u.eval(p)?) }))
                .collect::<Result<_>>()?;
            let alpha = vec![RenderedMatrix::new("alpha", sw.alpha())];
            Ok(VerificationReport::new(id, cfg, alpha, probes, checks))
        }
        ExampleId::StringC2 => {
            let expr = string_c2::expression()?;
            let sw = expr.switching();
            let exact = inverse_2x2(sw.support_matrix())?;
            let mut checks = vec![
                matrix_check(
                    "support matrix = [[4+2i,29-i],[0,11-2i]]",
                    sw.support_matrix(),
                    &string_c2::expected_support_matrix(),
                    0.0,
                ),
                matrix_check(
                    "alpha = printed values (4 decimals)",
                    sw.alpha(),
                    &string_c2::printed_alpha(),
                    PRINTED_ALPHA_TOLERANCE,
                ),
                matrix_check("alpha = closed-form 2x2 inverse", sw.alpha(), &exact, ALPHA_TOLERANCE),
            ];
            let mut s2 = Tally::new("s2(\"tfc\") = 29-i, s2(\"dont\") = 54-i, s2(\"panic\") = 43+i");
            for (x, want) in [
                ("tfc", Complex::new(29.0, -1.0)),
                ("dont", Complex::new(54.0, -1.0)),
                ("panic", Complex::new(43.0, 1.0)),
            ] {
                s2.record(string_c2::second_support(x)?.distance(&want));
            }
            checks.push(s2.finish(0.0));
            checks.extend(univariate_checks(
                &expr,
                &mut rng,
                counts,
                cfg.tolerance,
                |r| {
                    let map = string_c2::CipherMap::random(r);
                    move |x: &String| map.eval(x)
                },
                string_c2::random_input,
            )?);
            let zero = string_c2::CipherMap::zero();
            let u = expr.bind(|x: &String| zero.eval(x))?;
            let probes = ["tfc", "dont", "panic"]
                .iter()
                .map(|x| {
                    Ok(Probe { label: format!("u(\"{x}\"; g = 0)"), value: render_vector(&u.eval(&x.to_string())?) })
                })
                .collect::<Result<_>>()?;
            let alpha = vec![RenderedMatrix::new("alpha", sw.alpha())];
            Ok(VerificationReport::new(id, cfg, alpha, probes, checks))
        }
        ExampleId::Gf4 => {
            let expr = gf4::expression()?;
            let sw = expr.switching();
            let mut checks = vec![
                matrix_check("support matrix = [[1,1],[0,1]]", sw.support_matrix(), &gf4::expected_alpha(), 0.0),
                matrix_check("alpha = [[1,1],[0,1]]", sw.alpha(), &gf4::expected_alpha(), 0.0),
            ];
            checks.extend(univariate_checks(
                &expr,
                &mut rng,
                counts,
                cfg.tolerance,
                |r| {
                    let map = gf4::TableMap::random(r);
                    move |x: &Gf4| map.eval(x)
                },
                gf4::random_input,
            )?);
            checks.push(gf4_constant_sweep(&expr)?);
            let zero = gf4::TableMap::constant(gf4::space().zero());
            let u = expr.bind(|x: &Gf4| zero.eval(x))?;
            let diff = gf4::space().sub(&u.eval(&Gf4::A)?, &u.eval(&Gf4::B)?)?;
            let probes = vec![
                Probe { label: "u(1; g = 0) over t = 0,1,A,B".into(), value: u.eval(&Gf4::One)?.to_string() },
                Probe { label: "u(A; g = 0) - u(B; g = 0) over t = 0,1,A,B".into(), value: diff.to_string() },
            ];
            let alpha = vec![RenderedMatrix::new("alpha", sw.alpha())];
            Ok(VerificationReport::new(id, cfg, alpha, probes, checks))
        }
        ExampleId::Multivariate => run_multivariate(cfg, &mut rng, counts),
    }
}

fn run_multivariate(cfg: &RunConfig, rng: &mut ChaCha8Rng, counts: SampleCounts) -> Result<VerificationReport> {
    let id = ExampleId::Multivariate;
    let expr = multivariate::expression()?;
    let space = expr.space().clone();
    let tol = effective_tolerance(&space, cfg.tolerance);
    let x_sw = expr.switching(0).ok_or(TfcError::IndexOutOfRange { index: 0, len: 0 })?;
    let y_sw = expr.switching(1).ok_or(TfcError::IndexOutOfRange { index: 1, len: 0 })?;

    let mut checks = vec![
        matrix_check(
            "support matrix (x) = [[1,0],[0,-6]]",
            x_sw.support_matrix(),
            &multivariate::expected_x_support_matrix(),
            0.0,
        ),
        matrix_check("alpha (x) = [[1,0],[0,-1/6]]", x_sw.alpha(), &multivariate::expected_x_alpha(), ALPHA_TOLERANCE),
        matrix_check("alpha (y) = [[1]]", y_sw.alpha(), &multivariate::expected_y_alpha(), ALPHA_TOLERANCE),
    ];
    checks.extend(multivariate_checks(
        &expr,
        rng,
        counts,
        MULTIVARIATE_POINTS_PER_SAMPLE,
        cfg.tolerance,
        |r| {
            let p = multivariate::BivariatePolynomial::random(r);
            move |c: &[f64]| p.eval(c)
        },
        multivariate::random_coords,
    )?);

    if counts.satisfaction > 0 {
        let mut closed = Tally::new("recursive composition = expanded closed form");
        for _ in 0..counts.satisfaction {
            let p = multivariate::BivariatePolynomial::random(rng);
            let g = |c: &[f64]| p.eval(c);
            for _ in 0..MULTIVARIATE_POINTS_PER_SAMPLE {
                let c = multivariate::random_coords(rng);
                let reference = multivariate::expand_multivariate_reference(c[0], c[1], &g)?;
                closed.record(space.deviation(&expr.evaluate(&c, &g)?, &reference)?);
            }
        }
        checks.push(closed.finish(tol));
    }

    let zero = multivariate::BivariatePolynomial::zero();
    let g0 = |c: &[f64]| zero.eval(c);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let probes = [(0.0, 0.5), (3.0, 1.0), (6.0, -1.25)]
        .iter()
        .map(|&(x, y)| {
            let u = expr.evaluate(&[x, y], &g0)?;
            Ok(Probe { label: format!("u({x}, {y}; g = 0) at t = π/2"), value: u.eval(half_pi).render(TEXT_DECIMALS) })
        })
        .collect::<Result<_>>()?;
    let alpha = vec![RenderedMatrix::new("alpha (x)", x_sw.alpha()), RenderedMatrix::new("alpha (y)", y_sw.alpha())];
    Ok(VerificationReport::new(id, cfg, alpha, probes, checks))
}

/// Both GF(4) constraints for every constant free function `g(x) = c`.
fn gf4_constant_sweep(expr: &gf4::Expression) -> Result<Check> {
    let space = expr.space();
    let mut t = Tally::new("constant-g sweep over all 256 tables, both constraints");
    for table in gf4::all_tables() {
        let g = gf4::TableMap::constant(table);
        let u = expr.bind(|x: &Gf4| g.eval(x))?;
        let first = space.deviation(&u.eval(&Gf4::One)?, &gf4::shifted_identity())?;
        let diff = space.sub(&u.eval(&Gf4::A)?, &u.eval(&Gf4::B)?)?;
        let second = space.deviation(&diff, &FunctionTable::identity())?;
        t.record(first.max(second));
    }
    Ok(t.finish(0.0))
}

/// `[[a, b], [c, d]]⁻¹ = (ad − bc)⁻¹ [[d, −b], [−c, a]]`.
pub fn inverse_2x2<F: Field>(m: &FieldMatrix<F>) -> Result<FieldMatrix<F>> {
    if m.shape() != (2, 2) {
        return Err(TfcError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let (a, b, c, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    let det_inv = a.mul(d).sub(&b.mul(c)).invert()?;
    FieldMatrix::from_rows(vec![
        vec![d.mul(&det_inv), b.neg().mul(&det_inv)],
        vec![c.neg().mul(&det_inv), a.mul(&det_inv)],
    ])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregateReport {
    pub generator: String,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub examples: Vec<VerificationReport>,
    pub suites: Vec<Check>,
    pub examples_passed: usize,
    pub examples_total: usize,
    pub passed: bool,
}

impl AggregateReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.to_json(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.examples {
            out.push_str(&e.render_text());
            out.push('\n');
        }
        let _ = writeln!(out, "invariant suites");
        write_checks(&mut out, &self.suites);
        let _ = writeln!(
            out,
            "\n{}/{} examples pass; suites {}; overall {}",
            self.examples_passed,
            self.examples_total,
            pass_word(self.suites.iter().all(|c| c.pass)),
            pass_word(self.passed)
        );
        out
    }
}

/// Runs every example plus the algebraic invariant suites.
///
/// Matrix round trips use `10 × samples` random matrices; the GF(4) suites
/// are exhaustive and run regardless of `samples`.
pub fn run_all(cfg: &RunConfig) -> Result<AggregateReport> {
    let examples = ExampleId::ALL.iter().map(|&id| run_example(id, cfg)).collect::<Result<Vec<_>>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.samples;
    let tol = cfg.tolerance;
    let mut suites = vec![suites::gf4_field_axioms(), suites::gf4_inverse_exhaustive()];
    if n > 0 {
        suites.push(suites::field_axioms::<f64, _>("real", &mut rng, n, tol));
        suites.push(suites::field_axioms::<Complex, _>("complex", &mut rng, n, tol));
        suites.push(suites::vector_space_axioms("real scalars", &ScalarSpace::<f64>::new(), &mut rng, n, tol));
        suites.push(suites::vector_space_axioms("R^3", &TupleSpace::<f64>::new(3), &mut rng, n, tol));
        suites.push(suites::vector_space_axioms("C^2", &TupleSpace::<Complex>::new(2), &mut rng, n, tol));
        suites.push(suites::vector_space_axioms("GF(4) function tables", &gf4::space(), &mut rng, n, 0.0));
        suites.push(suites::vector_space_axioms(
            "real 2x3 matrices",
            &crate::algebra::MatrixSpace::<f64>::new(2, 3),
            &mut rng,
            n,
            tol,
        ));
        suites.push(suites::vector_space_axioms("sampled real functions", &multivariate::space(), &mut rng, n, tol));
        let (p, d) = suites::inverse_round_trips::<f64, _>("real", &mut rng, 10 * n, 1e-8, 1e-6);
        suites.extend([p, d]);
        let (p, d) = suites::inverse_round_trips::<Complex, _>("complex", &mut rng, 10 * n, 1e-8, 1e-6);
        suites.extend([p, d]);
    }

    let examples_passed = examples.iter().filter(|e| e.passed).count();
    let passed = examples_passed == examples.len() && suites.iter().all(|c| c.pass);
    Ok(AggregateReport {
        generator: GENERATOR.to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        tolerance: cfg.tolerance,
        examples_total: examples.len(),
        examples_passed,
        examples,
        suites,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ExampleId::ALL {
            assert_eq!(id.as_str().parse::<ExampleId>().unwrap(), id);
        }
        assert_eq!("nope".parse::<ExampleId>(), Err(TfcError::UnknownExample("nope".into())));
        assert!("yaml".parse::<Format>().is_err());
    }

    #[test]
    fn closed_form_2x2() {
        let m = FieldMatrix::from_rows(vec![vec![1.0, 3.0], vec![1.0, 0.0]]).unwrap();
        let inv = inverse_2x2(&m).unwrap();
        assert!(inv.max_deviation(&matrix_r2x3::expected_alpha()).unwrap() < 1e-15);
        let singular = FieldMatrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(inverse_2x2(&singular), Err(TfcError::ZeroInverse));
    }

    #[test]
    fn zero_samples_still_compares_alpha() {
        let cfg = RunConfig { samples: 0, ..RunConfig::default() };
        let r = run_example(ExampleId::Gf4, &cfg).unwrap();
        assert!(r.passed);
        assert_eq!(r.alpha_matrices[0].rounded, vec![vec!["1", "1"], vec!["0", "1"]]);
        assert!(r.checks.iter().any(|c| c.description.starts_with("alpha")));
        assert!(!r.checks.iter().any(|c| c.description.starts_with("u(1) = t + A")));
    }
}

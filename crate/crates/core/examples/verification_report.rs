//! Seeded verification of the worked examples, as text or JSON.
//!
//! Run with `cargo run -p tfc --example verification_report -- [seed] [json]`.

use tfc::report::{run_all, run_example, ExampleId, Format, RunConfig};

fn main() -> tfc::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let format = if args.next().as_deref() == Some("json") { Format::Json } else { Format::Text };
    let cfg = RunConfig { seed, samples: 25, ..RunConfig::default() };

    let report = run_example(ExampleId::Gf4, &cfg)?;
    println!("{}", report.render(format));

    let all = run_all(&cfg)?;
    for r in &all.examples {
        let worst = r.checks.iter().map(|c| c.max_deviation).fold(0.0, f64::max);
        println!(
            "{:<13} {} (worst deviation {worst:.1e})",
            r.example_id.as_str(),
            if r.passed { "pass" } else { "FAIL" }
        );
    }
    println!("overall: {}", if all.passed { "pass" } else { "FAIL" });
    Ok(())
}

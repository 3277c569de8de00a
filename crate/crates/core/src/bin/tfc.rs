use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tfc::report::{run_all, run_example, ExampleId, Format, RunConfig};

/// Reproduce and verify the worked constrained-expression problems.
#[derive(Parser)]
#[command(name = "tfc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one example: matrix_r2x3, string_c2, gf4 or multivariate.
    Run {
        example: ExampleId,
        #[command(flatten)]
        opts: Opts,
    },
    /// Verify all examples and the algebraic invariant suites.
    VerifyAll {
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long = "tol", default_value_t = 1e-9)]
    tolerance: f64,
    /// text or json
    #[arg(long, default_value = "text")]
    format: Format,
}

impl Opts {
    fn config(&self) -> RunConfig {
        RunConfig { seed: self.seed, samples: self.samples, tolerance: self.tolerance }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (rendered, passed) = match &cli.command {
        Command::Run { example, opts } => {
            run_example(*example, &opts.config()).map(|r| (r.render(opts.format), r.passed))
        }
        Command::VerifyAll { opts } => run_all(&opts.config()).map(|r| (r.render(opts.format), r.passed)),
    }
    .unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });
    println!("{rendered}");
    if passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}

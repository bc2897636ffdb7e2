use std::process::ExitCode;

use clap::{Parser, Subcommand};
use slicefock::ScalarKind;
use slicefock_cli::commands::{self, Method, Outcome, QuadCheckArgs, Table};
use slicefock_cli::{Format, Result, RunConfig, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "slicefock", version, about = "Slice-regular Fock space toolkit over ℍ and ℝₙ")]
struct Cli {
    /// Truncation degree N for kernels
    #[arg(long, global = true, default_value_t = 40)]
    trunc: usize,
    /// Radial Gauss–Laguerre nodes R
    #[arg(long, global = true, default_value_t = 45)]
    radial: usize,
    /// Angular nodes M
    #[arg(long, global = true, default_value_t = 85)]
    angular: usize,
    /// Relative tolerance for quadrature comparisons
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// quaternion or clifford:n
    #[arg(long, global = true)]
    kind: Option<ScalarKind>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a series at a point
    Eval {
        /// Series JSON file, or - for stdin
        #[arg(long)]
        series: String,
        /// Point as scalar JSON
        #[arg(long)]
        at: String,
    },
    /// Inner product of two series
    Inner {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Imaginary unit of the integration slice, as scalar JSON
        #[arg(long)]
        slice: Option<String>,
    },
    /// Truncated reproducing kernel at a point, or a Gram value with --s
    Kernel {
        #[arg(long)]
        at: String,
        #[arg(long)]
        s: Option<String>,
    },
    /// Slice-independence sweep over random pairs of imaginary units
    QuadCheck {
        #[arg(long, default_value_t = 6)]
        deg_f: usize,
        #[arg(long, default_value_t = 6)]
        deg_g: usize,
        #[arg(long, default_value_t = 20)]
        slices: usize,
    },
    /// Tensor inner-product axioms and adjointness on random data
    TensorCheck {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        max_level: usize,
        #[arg(long, default_value_t = 1000)]
        draws: usize,
    },
    /// Brownian covariance against min{t, s}
    Brownian {
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 10.0)]
        tmax: f64,
    },
    /// Run the full verification suite
    Verify,
    /// Write the verification report or a kernel Gram table to a file
    Export {
        #[arg(long, value_enum, default_value_t = Table::Report)]
        table: Table,
        #[arg(long)]
        out: String,
        /// Number of random points for the Gram table
        #[arg(long, default_value_t = 8)]
        points: usize,
    },
}

fn run(cli: Cli) -> Result<Outcome> {
    let default_format = match cli.command {
        Command::TensorCheck { .. } | Command::Brownian { .. } => Format::Json,
        _ => Format::Csv,
    };
    let config = RunConfig {
        trunc: cli.trunc,
        radial: cli.radial,
        angular: cli.angular,
        tol: cli.tol,
        seed: cli.seed,
        kind: cli.kind.unwrap_or(ScalarKind::Quaternion),
        format: cli.format.unwrap_or(default_format),
    };
    config.validate()?;
    match cli.command {
        Command::Eval { series, at } => commands::eval(&series, &at, cli.kind, config.format),
        Command::Inner { f, g, method, slice } => commands::inner(&f, &g, slice.as_deref(), method, &config, cli.kind),
        Command::Kernel { at, s } => commands::kernel_cmd(&at, s.as_deref(), &config, cli.kind),
        Command::QuadCheck { deg_f, deg_g, slices } => {
            commands::quad_check(QuadCheckArgs { deg_f, deg_g, slices }, &config)
        }
        Command::TensorCheck { dim, max_level, draws } => {
            commands::tensor_check(dim, max_level, draws, config.seed, config.format)
        }
        Command::Brownian { pairs, tmax } => commands::brownian(pairs, tmax, config.seed, config.format),
        Command::Verify => commands::verify_cmd(&config),
        Command::Export { table, out, points } => commands::export(table, &out, points, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(if outcome.passed { EXIT_PASS } else { EXIT_FAIL } as u8)
        }
        Err(e) => {
            eprintln!("slicefock: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use boostent::kinematics::{rapidity_from_beta, wigner_angle, ParticleRapidity};
use boostent::sweep::{
    run_sweep, write_records, OutputFormat, SweepConfig, SweepError, SweepMode, SweepRecord,
};
use boostent::verify::{run_verify, VerifyConfig};
use boostent::{Polarization, StateParameter};

const EXIT_VERIFY: u8 = 1;
const EXIT_ARGS: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "boostent",
    version,
    about = "Entanglement of a two-particle spin state under Lorentz boosts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every measure at a single (alpha, n) point
    Measure {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        n: f64,
        /// Also report the reduced concurrence with the extra 1/2 prefactor
        #[arg(long)]
        as_printed: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Sweep an (alpha, n) or (alpha, xi) grid and write the table
    Sweep(SweepArgs),
    /// Run every invariant suite and report pass/fail
    Verify {
        #[arg(long, default_value_t = 20)]
        grid_density: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Rapidities and Wigner angle for boost speed beta and particle momentum p/m
    Wigner {
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true)]
        p_over_m: f64,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    alpha_min: f64,
    #[arg(long, default_value_t = 0.99, allow_negative_numbers = true)]
    alpha_max: f64,
    #[arg(long, default_value_t = 99)]
    alpha_steps: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    n_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    n_max: f64,
    /// Points on the inner axis (n, or xi in kinematic mode)
    #[arg(long, default_value_t = 101)]
    n_steps: usize,
    #[arg(long, value_enum, default_value_t = SweepMode::DirectN)]
    mode: SweepMode,
    #[arg(long, allow_negative_numbers = true)]
    w_over_m: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    xi_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    xi_max: Option<f64>,
    /// Output file; standard output when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[arg(long)]
    as_printed: bool,
}

fn arg_error(flag: &str, reason: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: invalid value for {flag}: {reason}");
    ExitCode::from(EXIT_ARGS)
}

fn report(err: SweepError) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        SweepError::InvalidArgument { .. } | SweepError::Entanglement(_) => {
            ExitCode::from(EXIT_ARGS)
        }
        SweepError::Invariant { .. } => ExitCode::from(EXIT_VERIFY),
        SweepError::Io(_) | SweepError::Csv(_) | SweepError::Json(_) => ExitCode::from(EXIT_IO),
    }
}

fn measure(alpha: f64, n: f64, as_printed: bool, format: OutputFormat) -> ExitCode {
    let p = match StateParameter::new(alpha) {
        Ok(p) => p,
        Err(e) => return arg_error("--alpha", e),
    };
    let n = match Polarization::new(n) {
        Ok(n) => n,
        Err(e) => return arg_error("--n", e),
    };
    let rec = match SweepRecord::measure(p, n, None, as_printed) {
        Ok(r) => r,
        Err(e) => return report(e),
    };
    match write_records(&[rec], format, io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(e),
    }
}

fn sweep(args: SweepArgs) -> ExitCode {
    let config = SweepConfig {
        alpha_min: args.alpha_min,
        alpha_max: args.alpha_max,
        alpha_steps: args.alpha_steps,
        n_min: args.n_min,
        n_max: args.n_max,
        n_steps: args.n_steps,
        mode: args.mode,
        w_over_m: args.w_over_m,
        xi_min: args.xi_min,
        xi_max: args.xi_max,
        as_printed: args.as_printed,
    };
    let records = match run_sweep(&config) {
        Ok(r) => r,
        Err(e) => return report(e),
    };
    let result = match &args.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                write_records(&records, args.format, &mut w).and_then(|()| Ok(w.flush()?))
            }
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_IO);
            }
        },
        None => write_records(&records, args.format, io::stdout().lock()),
    };
    match result {
        Ok(()) => {
            log::info!("wrote {} records", records.len());
            ExitCode::SUCCESS
        }
        Err(e) => report(e),
    }
}

fn verify(grid_density: usize, seed: u64) -> ExitCode {
    if grid_density < 10 {
        return arg_error(
            "--grid-density",
            format!("{grid_density} is below the minimum of 10"),
        );
    }
    let report = run_verify(&VerifyConfig { grid_density, seed });
    print!("{report}");
    match report.first_failure() {
        None => {
            println!("all hard suites passed");
            ExitCode::SUCCESS
        }
        Some(s) => {
            println!(
                "FAILED: {} ({})",
                s.name,
                s.counterexample.as_deref().unwrap_or("no counterexample")
            );
            ExitCode::from(EXIT_VERIFY)
        }
    }
}

fn wigner(beta: f64, p_over_m: f64) -> ExitCode {
    let boost = match rapidity_from_beta(beta) {
        Ok(b) => b,
        Err(e) => return arg_error("--beta", e),
    };
    let particle = match ParticleRapidity::from_momentum_ratio(p_over_m) {
        Ok(p) => p,
        Err(e) => return arg_error("--p-over-m", e),
    };
    let theta = wigner_angle(boost, particle);
    println!("xi = {:?}", boost.xi);
    println!("delta = {:?}", particle.delta);
    println!("theta_rad = {:?}", theta.theta);
    println!("theta_deg = {:?}", theta.degrees());
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Measure {
            alpha,
            n,
            as_printed,
            format,
        } => measure(alpha, n, as_printed, format),
        Command::Sweep(args) => sweep(args),
        Command::Verify { grid_density, seed } => verify(grid_density, seed),
        Command::Wigner { beta, p_over_m } => wigner(beta, p_over_m),
    }
}

//! Weak-scaling benchmark driver.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use kinematics::bench::{
    emit, parse_sizes, run_sweep, BackendKind, BenchConfig, BenchError, Precision, ProblemKind,
};
use kinematics::kernels::DEFAULT_CHUNK_SIZE;

#[derive(Debug, Parser)]
#[command(name = "kinbench", about = "Time batch kinematics kernels against a sequential baseline")]
struct Args {
    #[arg(long, default_value = "invariant-masses")]
    problem: ProblemKind,
    #[arg(long, default_value = "double")]
    precision: Precision,
    #[arg(long, default_value = "seq")]
    backend: BackendKind,
    /// Worker threads for the parallel backend.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE)]
    chunk_size: usize,
    /// Copy inputs inside the timed region before each run.
    #[arg(long)]
    copying: bool,
    /// Comma list (`1024,4096`, `2^12`) or power-of-two range (`2^10..2^24`).
    #[arg(long, default_value = "2^10..2^24")]
    sizes: String,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory receiving results.csv and scaling.dat.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn run(args: Args) -> Result<(), BenchError> {
    let config = BenchConfig {
        problem: args.problem,
        precision: args.precision,
        backend: args.backend,
        workers: args.workers,
        chunk_size: args.chunk_size,
        copying: args.copying,
        sizes: parse_sizes(&args.sizes)?,
        repeats: args.repeats,
        seed: args.seed,
    };
    let records = run_sweep(&config)?;
    println!("{:>10}  {:>14}  {:>14}  {:>8}", "N", "best_ns", "baseline_ns", "speedup");
    for r in &records {
        println!(
            "{:>10}  {:>14}  {:>14}  {:>8.3}",
            r.n, r.best_ns, r.baseline_best_ns, r.speedup
        );
    }
    let (csv, plot) = emit(&records, &args.out)?;
    println!("wrote {} and {}", csv.display(), plot.display());
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kinbench: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

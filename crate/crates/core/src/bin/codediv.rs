//! Code similarity and divergence report for a TOML manifest.

use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use kinematics::divergence::analyze_path;

#[derive(Debug, Parser)]
#[command(name = "codediv", about = "Pairwise code similarity and divergence across platforms")]
struct Args {
    /// Manifest listing each platform's files per problem.
    manifest: PathBuf,
    /// Also write the report as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let report = match analyze_path(&args.manifest) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("codediv: {e}");
            return ExitCode::from(2);
        }
    };
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    print!("{}", report.render_table());
    if let Some(path) = args.csv {
        let written = File::create(&path)
            .map_err(|e| e.to_string())
            .and_then(|f| report.write_csv(f).map_err(|e| e.to_string()));
        if let Err(e) = written {
            eprintln!("codediv: {}: {e}", path.display());
            return ExitCode::from(4);
        }
    }
    ExitCode::SUCCESS
}

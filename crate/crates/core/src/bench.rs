//! Weak-scaling harness: generate particles, time a problem on a target
//! backend against the sequential baseline, and emit CSV and plot data.
//!
//! Timing follows best-of-`repeats` after one untimed warm-up per
//! (backend, size). The baseline is always the sequential backend reading
//! its inputs in place; the target's output must match it bit for bit
//! before any timing is accepted.

use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coords::{Coords4D, LorentzVector, PtEtaPhiM4D, PxPyPzE4D};
use crate::kernels::{dispatch, Backend, KernelError, Output, ParticleBatch, Problem, Transfer};
use crate::transforms::Boost;
use crate::Scalar;

pub const RESULTS_FILE: &str = "results.csv";
pub const PLOT_FILE: &str = "scaling.dat";

pub const PT_RANGE: (f64, f64) = (1.0, 100.0);
pub const ETA_RANGE: (f64, f64) = (-2.5, 2.5);
pub const MASS_RANGE: (f64, f64) = (0.1, 10.0);
/// Upper bound on the speed of the generated boost.
pub const MAX_BOOST_BETA: f64 = 0.9;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("backend output differs from baseline at N = {n}, element {index}")]
    Correctness { n: usize, index: usize },
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("malformed results: {0}")]
    Parse(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

impl BenchError {
    /// Process exit code for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Kernel(_) => 2,
            Self::Correctness { .. } => 3,
            Self::Io { .. } | Self::Parse(_) => 4,
        }
    }

    fn io(path: &Path, err: impl fmt::Display) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            message: err.to_string(),
        }
    }
}

macro_rules! keyword_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
        pub enum $name {
            $(#[serde(rename = $text)] $variant),+
        }

        impl $name {
            pub fn as_str(&self) -> &'static str {
                match self { $(Self::$variant => $text),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = BenchError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok(Self::$variant),)+
                    other => Err(BenchError::Config(format!(
                        concat!("unknown ", stringify!($name), " `{}`"), other
                    ))),
                }
            }
        }
    };
}

keyword_enum!(ProblemKind { InvariantMasses => "invariant-masses", Boost => "boost" });
keyword_enum!(Precision { Single => "single", Double => "double" });
keyword_enum!(BackendKind { Sequential => "seq", Parallel => "par" });

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub problem: ProblemKind,
    pub precision: Precision,
    pub backend: BackendKind,
    /// Ignored for the sequential backend.
    pub workers: usize,
    pub chunk_size: usize,
    pub copying: bool,
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            problem: ProblemKind::InvariantMasses,
            precision: Precision::Double,
            backend: BackendKind::Sequential,
            workers: 1,
            chunk_size: crate::kernels::DEFAULT_CHUNK_SIZE,
            copying: false,
            sizes: default_sizes(),
            repeats: 3,
            seed: 0,
        }
    }
}

/// Powers of two from 2^10 to 2^24.
pub fn default_sizes() -> Vec<usize> {
    (10..=24).map(|k| 1usize << k).collect()
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.sizes.is_empty() {
            return Err(BenchError::Config("size list is empty".into()));
        }
        if self.sizes[0] < 1 {
            return Err(BenchError::Config("sizes must be at least 1".into()));
        }
        if let Some(w) = self.sizes.windows(2).find(|w| w[0] >= w[1]) {
            return Err(BenchError::Config(format!(
                "sizes must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        if self.repeats < 1 {
            return Err(BenchError::Config("repeats must be at least 1".into()));
        }
        self.target_backend().map(|_| ())
    }

    /// Backend the sweep measures against the sequential baseline.
    pub fn target_backend(&self) -> Result<Backend, BenchError> {
        match self.backend {
            BackendKind::Sequential => Ok(Backend::Sequential),
            BackendKind::Parallel => Backend::parallel(self.workers, self.chunk_size)
                .map_err(|e| BenchError::Config(e.to_string())),
        }
    }

    fn transfer(&self) -> Transfer {
        if self.copying {
            Transfer::Copying
        } else {
            Transfer::Direct
        }
    }
}

/// Parses `1024,4096`, `2^10,2^12` or the inclusive range `2^10..2^24`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, BenchError> {
    fn term(t: &str) -> Result<usize, BenchError> {
        let t = t.trim();
        let bad = || BenchError::Config(format!("invalid size `{t}`"));
        match t.split_once('^') {
            Some(("2", exp)) => {
                let k: u32 = exp.trim().parse().map_err(|_| bad())?;
                1usize.checked_shl(k).filter(|_| k < usize::BITS).ok_or_else(bad)
            }
            Some(_) => Err(bad()),
            None => t.parse().map_err(|_| bad()),
        }
    }

    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (term(lo)?, term(hi)?);
        if !lo.is_power_of_two() || !hi.is_power_of_two() || lo > hi {
            return Err(BenchError::Config(format!("invalid power-of-two range `{text}`")));
        }
        let mut sizes = vec![lo];
        while *sizes.last().expect("non-empty") < hi {
            sizes.push(sizes.last().expect("non-empty") * 2);
        }
        return Ok(sizes);
    }
    text.split(',').map(term).collect()
}

/// One timed size of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRecord {
    pub problem: ProblemKind,
    pub precision: Precision,
    pub backend: BackendKind,
    pub workers: usize,
    pub copying: bool,
    pub n: usize,
    pub durations_ns: Vec<u64>,
    pub best_ns: u64,
    pub baseline_best_ns: u64,
    pub speedup: f64,
}

impl TimingRecord {
    /// Series label used in the plot data.
    pub fn series(&self) -> String {
        let mut label = match self.backend {
            BackendKind::Sequential => "seq".to_string(),
            BackendKind::Parallel => format!("par-w{}", self.workers),
        };
        if self.copying {
            label.push_str("-copying");
        }
        label
    }
}

fn sample(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    rng.gen_range(lo..=hi)
}

/// `n` timelike particles, deterministic in `(n, seed)` and the scalar type.
///
/// Drawn in PtEtaPhiM with pt, eta and m uniform over their ranges and phi
/// uniform on (-π, π], then converted to `C`. A draw that is not timelike
/// after conversion is redrawn.
pub fn generate_batch<C: Coords4D>(n: usize, seed: u64) -> ParticleBatch<C>
where
    C::Scalar: Scalar,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lit = <C::Scalar as Scalar>::lit;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let pt = sample(&mut rng, PT_RANGE);
        let eta = sample(&mut rng, ETA_RANGE);
        let phi = std::f64::consts::PI * (1.0 - 2.0 * rng.gen::<f64>());
        let m = sample(&mut rng, MASS_RANGE);
        let v = LorentzVector::<PtEtaPhiM4D<C::Scalar>>::new(lit(pt), lit(eta), lit(phi), lit(m))
            .convert::<C>();
        if v.mass2() > C::Scalar::default() {
            out.push(v);
        }
    }
    ParticleBatch::new(out)
}

/// Boost used by the boost problem, deterministic in `seed`.
pub fn generate_boost<S: Scalar>(seed: u64) -> Boost<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xB005_7B00_57B0_057B);
    let cos_theta: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let beta: f64 = rng.gen_range(0.0..MAX_BOOST_BETA);
    let sin_theta = (1.0 - cos_theta * cos_theta).sqrt();
    Boost::new(
        S::lit(beta * sin_theta * phi.cos()),
        S::lit(beta * sin_theta * phi.sin()),
        S::lit(beta * cos_theta),
    )
    .expect("generated beta is subluminal")
}

fn second_stream(seed: u64) -> u64 {
    seed ^ 0x9E37_79B9_7F4A_7C15
}

fn nanos(d: Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX).max(1)
}

struct Timed<C: Coords4D> {
    output: Output<C>,
    durations_ns: Vec<u64>,
}

impl<C: Coords4D> Timed<C> {
    fn best(&self) -> u64 {
        *self.durations_ns.iter().min().expect("repeats >= 1")
    }
}

fn time_problem<C: Coords4D>(
    problem: Problem<'_, C>,
    backend: Backend,
    transfer: Transfer,
    repeats: usize,
) -> Result<Timed<C>, BenchError> {
    dispatch(problem, backend, transfer)?; // warm-up
    let mut durations_ns = Vec::with_capacity(repeats);
    let mut output = None;
    for _ in 0..repeats {
        let run = dispatch(problem, backend, transfer)?;
        durations_ns.push(nanos(run.elapsed));
        output = Some(run.output);
    }
    Ok(Timed {
        output: output.expect("repeats >= 1"),
        durations_ns,
    })
}

fn sweep_typed<S: Scalar>(config: &BenchConfig) -> Result<Vec<TimingRecord>, BenchError>
where
    PxPyPzE4D<S>: Coords4D<Scalar = S>,
{
    let target = config.target_backend()?;
    let transfer = config.transfer();
    let boost = generate_boost::<S>(config.seed);
    let mut records = Vec::with_capacity(config.sizes.len());

    for &n in &config.sizes {
        let v1 = generate_batch::<PxPyPzE4D<S>>(n, config.seed);
        let v2 = match config.problem {
            ProblemKind::InvariantMasses => generate_batch::<PxPyPzE4D<S>>(n, second_stream(config.seed)),
            ProblemKind::Boost => ParticleBatch::new(Vec::new()),
        };
        let problem = match config.problem {
            ProblemKind::InvariantMasses => Problem::InvariantMasses { v1: &v1, v2: &v2 },
            ProblemKind::Boost => Problem::Boost {
                input: &v1,
                boost: &boost,
            },
        };

        let baseline = time_problem(problem, Backend::Sequential, Transfer::Direct, config.repeats)?;
        // the sequential direct target is the baseline itself
        let measured = if target == Backend::Sequential && transfer == Transfer::Direct {
            None
        } else {
            Some(time_problem(problem, target, transfer, config.repeats)?)
        };
        let timed = measured.as_ref().unwrap_or(&baseline);
        if let Some(index) = timed.output.first_mismatch(&baseline.output) {
            return Err(BenchError::Correctness { n, index });
        }

        let best_ns = timed.best();
        let baseline_best_ns = baseline.best();
        records.push(TimingRecord {
            problem: config.problem,
            precision: config.precision,
            backend: config.backend,
            workers: target.workers(),
            copying: config.copying,
            n,
            durations_ns: timed.durations_ns.clone(),
            best_ns,
            baseline_best_ns,
            speedup: baseline_best_ns as f64 / best_ns as f64,
        });
    }
    Ok(records)
}

/// Runs the configured sweep, one record per size.
pub fn run_sweep(config: &BenchConfig) -> Result<Vec<TimingRecord>, BenchError> {
    config.validate()?;
    match config.precision {
        Precision::Single => sweep_typed::<f32>(config),
        Precision::Double => sweep_typed::<f64>(config),
    }
}

const CSV_HEADER: [&str; 10] = [
    "problem",
    "precision",
    "backend",
    "workers",
    "copying",
    "N",
    "durations_ns",
    "best_ns",
    "baseline_best_ns",
    "speedup",
];

/// Writes the records as CSV; repeat durations are `;`-separated.
pub fn write_csv<W: Write>(records: &[TimingRecord], writer: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let durations = r
            .durations_ns
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(";");
        w.write_record([
            r.problem.as_str().to_string(),
            r.precision.as_str().to_string(),
            r.backend.as_str().to_string(),
            r.workers.to_string(),
            r.copying.to_string(),
            r.n.to_string(),
            durations,
            r.best_ns.to_string(),
            r.baseline_best_ns.to_string(),
            // shortest representation that parses back to the same bits
            r.speedup.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses CSV produced by [`write_csv`].
pub fn read_csv<R: Read>(reader: R) -> Result<Vec<TimingRecord>, BenchError> {
    let mut rdr = csv::Reader::from_reader(reader);
    let header = rdr.headers().map_err(|e| BenchError::Parse(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(BenchError::Parse(format!("unexpected header {header:?}")));
    }
    fn field<T: FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T, BenchError> {
        let raw = rec.get(i).unwrap_or_default();
        raw.parse()
            .map_err(|_| BenchError::Parse(format!("bad {} value `{raw}`", CSV_HEADER[i])))
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| BenchError::Parse(e.to_string()))?;
        let durations_ns = rec
            .get(6)
            .unwrap_or_default()
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| BenchError::Parse(format!("bad duration `{s}`"))))
            .collect::<Result<_, _>>()?;
        out.push(TimingRecord {
            problem: field(&rec, 0)?,
            precision: field(&rec, 1)?,
            backend: field(&rec, 2)?,
            workers: field(&rec, 3)?,
            copying: field(&rec, 4)?,
            n: field(&rec, 5)?,
            durations_ns,
            best_ns: field(&rec, 7)?,
            baseline_best_ns: field(&rec, 8)?,
            speedup: field(&rec, 9)?,
        });
    }
    Ok(out)
}

/// Whitespace-separated `N speedup` series, one block per backend label in
/// order of first appearance, blocks separated by a blank line.
pub fn write_plot_data<W: Write>(records: &[TimingRecord], mut w: W) -> std::io::Result<()> {
    let mut series: Vec<(String, Vec<&TimingRecord>)> = Vec::new();
    for r in records {
        let label = r.series();
        match series.iter_mut().find(|(l, _)| *l == label) {
            Some((_, points)) => points.push(r),
            None => series.push((label, vec![r])),
        }
    }
    for (i, (label, points)) in series.iter().enumerate() {
        if i > 0 {
            writeln!(w)?;
        }
        let first = points[0];
        writeln!(
            w,
            "# series: {label} problem={} precision={}",
            first.problem, first.precision
        )?;
        writeln!(w, "# N speedup")?;
        for p in points {
            writeln!(w, "{} {}", p.n, p.speedup)?;
        }
    }
    Ok(())
}

/// Writes `results.csv` and `scaling.dat` into `dir`, returning both paths.
pub fn emit(records: &[TimingRecord], dir: &Path) -> Result<(PathBuf, PathBuf), BenchError> {
    if records.is_empty() {
        return Err(BenchError::Config("no records to emit".into()));
    }
    fs::create_dir_all(dir).map_err(|e| BenchError::io(dir, e))?;

    let csv_path = dir.join(RESULTS_FILE);
    let mut buf = Vec::new();
    write_csv(records, &mut buf).map_err(|e| BenchError::io(&csv_path, e))?;
    fs::write(&csv_path, buf).map_err(|e| BenchError::io(&csv_path, e))?;

    let plot_path = dir.join(PLOT_FILE);
    let mut buf = Vec::new();
    write_plot_data(records, &mut buf).map_err(|e| BenchError::io(&plot_path, e))?;
    fs::write(&plot_path, buf).map_err(|e| BenchError::io(&plot_path, e))?;

    Ok((csv_path, plot_path))
}

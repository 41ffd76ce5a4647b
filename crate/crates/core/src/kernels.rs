//! Batch kernels for the invariant-mass and boost problems.
//!
//! A kernel body is a per-index closure; a [`Backend`] decides how the index
//! range is walked. `Sequential` runs it on the calling thread.
//! `Parallel` splits the output into fixed-size chunks, hands each worker a
//! contiguous run of chunks and joins before returning. Every output element
//! depends on exactly one input index, so all backends produce bitwise
//! identical results.

use std::num::NonZeroUsize;
use std::thread;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coords::{Coords4D, LorentzVector};
use crate::scalar::Scalar;
use crate::transforms::Boost;

/// Default number of elements per scheduling chunk.
pub const DEFAULT_CHUNK_SIZE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("batch length mismatch: v1 has {left} elements, v2 has {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("parallel backend needs at least one worker")]
    NoWorkers,
    #[error("chunk size must be at least 1")]
    EmptyChunk,
}

/// A contiguous array of Lorentz vectors sharing one coordinate system.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParticleBatch<C> {
    items: Vec<LorentzVector<C>>,
}

impl<C: Coords4D> ParticleBatch<C> {
    pub fn new(items: Vec<LorentzVector<C>>) -> Self {
        Self { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn as_slice(&self) -> &[LorentzVector<C>] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LorentzVector<C>> {
        self.items.iter()
    }

    pub fn into_vec(self) -> Vec<LorentzVector<C>> {
        self.items
    }

    /// Converts every element into another coordinate system.
    pub fn convert<D: Coords4D<Scalar = C::Scalar>>(&self) -> ParticleBatch<D> {
        ParticleBatch::new(self.items.iter().map(|v| v.convert()).collect())
    }

    /// True if both batches store the same bit patterns element by element.
    pub fn bitwise_eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self.items.iter().zip(&other.items).all(|(a, b)| same_bits(a, b))
    }
}

fn same_bits<C: Coords4D>(a: &LorentzVector<C>, b: &LorentzVector<C>) -> bool {
    let (x, y) = (a.coords().components(), b.coords().components());
    x.iter().zip(&y).all(|(p, q)| p.bit_pattern() == q.bit_pattern())
}

impl<C: Coords4D> FromIterator<LorentzVector<C>> for ParticleBatch<C> {
    fn from_iter<I: IntoIterator<Item = LorentzVector<C>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<C> std::ops::Index<usize> for ParticleBatch<C> {
    type Output = LorentzVector<C>;

    fn index(&self, i: usize) -> &Self::Output {
        &self.items[i]
    }
}

/// Worker count and chunk size of the parallel backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelSpec {
    workers: NonZeroUsize,
    chunk_size: NonZeroUsize,
}

impl ParallelSpec {
    pub fn workers(&self) -> usize {
        self.workers.get()
    }

    pub fn chunk_size(&self) -> usize {
        self.chunk_size.get()
    }
}

/// Execution strategy for a kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    #[default]
    Sequential,
    Parallel(ParallelSpec),
}

impl Backend {
    pub fn parallel(workers: usize, chunk_size: usize) -> Result<Self, KernelError> {
        let workers = NonZeroUsize::new(workers).ok_or(KernelError::NoWorkers)?;
        let chunk_size = NonZeroUsize::new(chunk_size).ok_or(KernelError::EmptyChunk)?;
        Ok(Self::Parallel(ParallelSpec {
            workers,
            chunk_size,
        }))
    }

    /// Parallel backend with [`DEFAULT_CHUNK_SIZE`].
    pub fn with_workers(workers: usize) -> Result<Self, KernelError> {
        Self::parallel(workers, DEFAULT_CHUNK_SIZE)
    }

    pub fn workers(&self) -> usize {
        match self {
            Self::Sequential => 1,
            Self::Parallel(spec) => spec.workers(),
        }
    }
}

/// Fills `out[i] = body(i)` for every index, partitioned per `backend`.
fn launch<T, F>(out: &mut [T], backend: Backend, body: F)
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let spec = match backend {
        Backend::Sequential => {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = body(i);
            }
            return;
        }
        Backend::Parallel(spec) => spec,
    };

    let n = out.len();
    if n == 0 {
        return;
    }
    let chunk = spec.chunk_size();
    let chunks = n.div_ceil(chunk);
    let workers = spec.workers().min(chunks);

    // worker w owns chunks [w*chunks/workers, (w+1)*chunks/workers)
    let mut bounds = Vec::with_capacity(workers + 1);
    for w in 0..=workers {
        bounds.push((w * chunks / workers * chunk).min(n));
    }

    let body = &body;
    thread::scope(|scope| {
        let mut rest = out;
        let mut jobs = Vec::with_capacity(workers);
        for w in 0..workers {
            let (mine, tail) = rest.split_at_mut(bounds[w + 1] - bounds[w]);
            rest = tail;
            jobs.push((bounds[w], mine));
        }
        let last = jobs.pop();
        for (start, slice) in jobs {
            scope.spawn(move || run_range(slice, start, chunk, body));
        }
        if let Some((start, slice)) = last {
            run_range(slice, start, chunk, body);
        }
    });
}

fn run_range<T, F: Fn(usize) -> T>(slice: &mut [T], start: usize, chunk: usize, body: &F) {
    for (k, part) in slice.chunks_mut(chunk).enumerate() {
        let base = start + k * chunk;
        for (i, slot) in part.iter_mut().enumerate() {
            *slot = body(base + i);
        }
    }
}

/// `out[i] = (v1[i] + v2[i]).mass()`.
pub fn invariant_masses<C: Coords4D>(
    v1: &ParticleBatch<C>,
    v2: &ParticleBatch<C>,
    backend: Backend,
) -> Result<Vec<C::Scalar>, KernelError> {
    if v1.len() != v2.len() {
        return Err(KernelError::LengthMismatch {
            left: v1.len(),
            right: v2.len(),
        });
    }
    let (a, b) = (v1.as_slice(), v2.as_slice());
    let mut out = vec![C::Scalar::default(); a.len()];
    launch(&mut out, backend, |i| {
        let w = a[i] + b[i];
        w.mass()
    });
    Ok(out)
}

/// `out[i] = boost.apply(v[i])`.
pub fn apply_boost<C: Coords4D>(
    v: &ParticleBatch<C>,
    boost: &Boost<C::Scalar>,
    backend: Backend,
) -> ParticleBatch<C> {
    let input = v.as_slice();
    let mut out = vec![LorentzVector::<C>::default(); input.len()];
    launch(&mut out, backend, |i| boost.apply(&input[i]));
    ParticleBatch::new(out)
}

/// One of the two benchmark problems together with its inputs.
#[derive(Debug, Clone, Copy)]
pub enum Problem<'a, C: Coords4D> {
    InvariantMasses {
        v1: &'a ParticleBatch<C>,
        v2: &'a ParticleBatch<C>,
    },
    Boost {
        input: &'a ParticleBatch<C>,
        boost: &'a Boost<C::Scalar>,
    },
}

/// Result of a problem run.
#[derive(Debug, Clone, PartialEq)]
pub enum Output<C: Coords4D> {
    Masses(Vec<C::Scalar>),
    Boosted(ParticleBatch<C>),
}

impl<C: Coords4D> Output<C> {
    pub fn len(&self) -> usize {
        match self {
            Self::Masses(m) => m.len(),
            Self::Boosted(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bitwise_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::Masses(a), Self::Masses(b)) => {
                a.len() == b.len()
                    && a.iter().zip(b).all(|(x, y)| x.bit_pattern() == y.bit_pattern())
            }
            (Self::Boosted(a), Self::Boosted(b)) => a.bitwise_eq(b),
            _ => false,
        }
    }

    /// Index of the first element whose bits differ, if any.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        match (self, other) {
            (Self::Masses(a), Self::Masses(b)) => a
                .iter()
                .zip(b)
                .position(|(x, y)| x.bit_pattern() != y.bit_pattern())
                .or((a.len() != b.len()).then(|| a.len().min(b.len()))),
            (Self::Boosted(a), Self::Boosted(b)) => a
                .iter()
                .zip(b.iter())
                .position(|(x, y)| !same_bits(x, y))
                .or((a.len() != b.len()).then(|| a.len().min(b.len()))),
            _ => Some(0),
        }
    }
}

/// How inputs reach the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Transfer {
    /// The kernel reads the caller's batches in place.
    #[default]
    Direct,
    /// Inputs are copied first, inside the timed region, emulating a
    /// host-to-device transfer.
    Copying,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dispatched<C: Coords4D> {
    pub output: Output<C>,
    pub elapsed: Duration,
}

fn run_problem<C: Coords4D>(problem: Problem<'_, C>, backend: Backend) -> Result<Output<C>, KernelError> {
    match problem {
        Problem::InvariantMasses { v1, v2 } => invariant_masses(v1, v2, backend).map(Output::Masses),
        Problem::Boost { input, boost } => Ok(Output::Boosted(apply_boost(input, boost, backend))),
    }
}

/// Runs a problem and measures the kernel with a monotonic clock.
///
/// Only the kernel (plus the input copy in [`Transfer::Copying`] mode) is
/// inside the timed region.
pub fn dispatch<C: Coords4D>(
    problem: Problem<'_, C>,
    backend: Backend,
    transfer: Transfer,
) -> Result<Dispatched<C>, KernelError> {
    if let Problem::InvariantMasses { v1, v2 } = problem {
        if v1.len() != v2.len() {
            return Err(KernelError::LengthMismatch {
                left: v1.len(),
                right: v2.len(),
            });
        }
    }
    let (output, elapsed) = match transfer {
        Transfer::Direct => {
            let start = Instant::now();
            let output = run_problem(problem, backend)?;
            (output, start.elapsed())
        }
        Transfer::Copying => {
            let start = Instant::now();
            let output = match problem {
                Problem::InvariantMasses { v1, v2 } => {
                    let (c1, c2) = (v1.clone(), v2.clone());
                    run_problem(Problem::InvariantMasses { v1: &c1, v2: &c2 }, backend)?
                }
                Problem::Boost { input, boost } => {
                    let (copy, b) = (input.clone(), *boost);
                    run_problem(Problem::Boost { input: &copy, boost: &b }, backend)?
                }
            };
            (output, start.elapsed())
        }
    };
    Ok(Dispatched { output, elapsed })
}

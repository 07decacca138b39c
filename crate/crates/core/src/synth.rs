//! Seeded synthetic coupled systems and shuffle surrogates.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)`; Gaussian
//! noise uses `rand_distr::Normal` (ziggurat) on that stream.

use rand::distr::Open01;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;
use crate::symbolize::SymbolSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    /// Fully chaotic logistic maps, x drives y.
    LogisticUnidir,
    /// First-order autoregressive pair, x drives y.
    ArUnidir,
    /// Two independent Gaussian white-noise series.
    IndependentNoise,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoupledSystemSpec {
    pub kind: SystemKind,
    pub n: usize,
    pub coupling: f64,
    pub noise_std: f64,
    pub seed: u64,
    pub burn_in: usize,
}

impl Default for CoupledSystemSpec {
    fn default() -> Self {
        Self {
            kind: SystemKind::LogisticUnidir,
            n: 10_000,
            coupling: 0.3,
            noise_std: 1.0,
            seed: 0,
            burn_in: 1000,
        }
    }
}

impl CoupledSystemSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameters("n must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.coupling) {
            return Err(Error::InvalidParameters(format!(
                "coupling must lie in [0, 1], got {}",
                self.coupling
            )));
        }
        if !(self.noise_std >= 0.0 && self.noise_std.is_finite()) {
            return Err(Error::InvalidParameters(format!(
                "noise_std must be finite and >= 0, got {}",
                self.noise_std
            )));
        }
        Ok(())
    }
}

/// Generates the `(x, y)` pair described by `spec`.
pub fn generate(spec: &CoupledSystemSpec) -> Result<(TimeSeries, TimeSeries)> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (xs, ys) = match spec.kind {
        SystemKind::LogisticUnidir => logistic(spec, &mut rng)?,
        SystemKind::ArUnidir => autoregressive(spec, &mut rng),
        SystemKind::IndependentNoise => {
            let normal = Normal::new(0.0, spec.noise_std).expect("validated std");
            (0..spec.n)
                .map(|_| (normal.sample(&mut rng), normal.sample(&mut rng)))
                .unzip()
        }
    };
    Ok((TimeSeries::new("x", xs)?, TimeSeries::new("y", ys)?))
}

fn logistic(spec: &CoupledSystemSpec, rng: &mut ChaCha8Rng) -> Result<(Vec<f64>, Vec<f64>)> {
    let c = spec.coupling;
    let mut x: f64 = rng.sample(Open01);
    let mut y: f64 = rng.sample(Open01);
    let mut xs = Vec::with_capacity(spec.n);
    let mut ys = Vec::with_capacity(spec.n);
    for step in 0..spec.burn_in + spec.n {
        if !(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0) {
            return Err(Error::DegenerateDynamics { step });
        }
        if step >= spec.burn_in {
            xs.push(x);
            ys.push(y);
        }
        let u = (1.0 - c) * y + c * x;
        y = 4.0 * u * (1.0 - u);
        x = 4.0 * x * (1.0 - x);
    }
    Ok((xs, ys))
}

fn autoregressive(spec: &CoupledSystemSpec, rng: &mut ChaCha8Rng) -> (Vec<f64>, Vec<f64>) {
    let normal = Normal::new(0.0, spec.noise_std).expect("validated std");
    let (mut x, mut y) = (0.0f64, 0.0f64);
    let mut xs = Vec::with_capacity(spec.n);
    let mut ys = Vec::with_capacity(spec.n);
    for step in 0..spec.burn_in + spec.n {
        let eps = normal.sample(rng);
        let eta = normal.sample(rng);
        let next_y = 0.5 * y + spec.coupling * x + eta;
        x = 0.5 * x + eps;
        y = next_y;
        if step >= spec.burn_in {
            xs.push(x);
            ys.push(y);
        }
    }
    (xs, ys)
}

/// Uniformly random reordering of `sym` (Fisher-Yates on a seeded stream).
pub fn shuffle(sym: &SymbolSequence, seed: u64) -> SymbolSequence {
    let mut symbols = sym.symbols().to_vec();
    symbols.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    sym.with_symbols(symbols)
}

/// Mixes `index` into `seed` (splitmix64 finalizer) to get independent
/// per-task seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{EmbeddingConfig, TimeSeries};
use crate::symbolize::{symbolize, KMeansParams, Symbolizer};
use crate::synth::derive_seed;

use super::estimate::{check_pair, transfer_entropy_pair, TePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// X -> Y
    Xy,
    /// Y -> X
    Yx,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceConfig {
    pub embedding: EmbeddingConfig,
    pub method: Symbolizer,
    pub window_len: usize,
    pub stride: usize,
}

/// Directed transfer entropies along a sliding window schedule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TeTrace {
    pub window_starts: Vec<usize>,
    pub te_xy: Vec<f64>,
    pub te_yx: Vec<f64>,
    pub config: TraceConfig,
}

impl TeTrace {
    pub fn len(&self) -> usize {
        self.window_starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window_starts.is_empty()
    }

    pub fn values(&self, direction: Direction) -> &[f64] {
        match direction {
            Direction::Xy => &self.te_xy,
            Direction::Yx => &self.te_yx,
        }
    }

    /// True if both traces evaluate the same slices of the input.
    pub fn same_schedule(&self, other: &TeTrace) -> bool {
        self.window_starts == other.window_starts
            && self.config.window_len == other.config.window_len
    }
}

/// Window starts `0, stride, 2*stride, ...` with `start + window_len <= n`.
pub fn window_schedule(n: usize, window_len: usize, stride: usize) -> Vec<usize> {
    if window_len == 0 || stride == 0 || window_len > n {
        return Vec::new();
    }
    (0..=n - window_len).step_by(stride).collect()
}

/// Transfer entropy in both directions over sliding slices
/// `[s, s + window_len)`.
///
/// Per-window codecs are local, so the full series is symbolized once and
/// the symbol sequence is sliced. K-means is refit on every slice with a
/// seed derived from `(seed, s)`.
pub fn sliding_te(
    x: &TimeSeries,
    y: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
    window_len: usize,
    stride: usize,
) -> Result<TeTrace> {
    check_pair(x, y, config)?;
    method.validate(config.m)?;
    if stride == 0 {
        return Err(Error::InvalidParameters("stride must be >= 1".into()));
    }
    let mut required = config.min_pair_length();
    if let Symbolizer::KMeans(p) = method {
        required = required.max(config.span() - 1 + p.k);
    }
    if window_len < required {
        return Err(Error::WindowTooSmall {
            window_len,
            required,
        });
    }
    if window_len > x.len() {
        return Err(Error::SeriesTooShort {
            required: window_len,
            actual: x.len(),
        });
    }
    let starts = window_schedule(x.len(), window_len, stride);

    let pairs: Vec<TePair> = match method {
        Symbolizer::KMeans(params) => starts
            .par_iter()
            .map(|&s| {
                let local = Symbolizer::KMeans(KMeansParams {
                    seed: derive_seed(params.seed, s as u64),
                    ..*params
                });
                let sx = symbolize(&x.slice(s, window_len)?, config, &local)?;
                let sy = symbolize(&y.slice(s, window_len)?, config, &local)?;
                transfer_entropy_pair(&sx, &sy, config.delta)
            })
            .collect::<Result<_>>()?,
        _ => {
            let sx = symbolize(x, config, method)?;
            let sy = symbolize(y, config, method)?;
            let count = config.window_count(window_len);
            starts
                .par_iter()
                .map(|&s| {
                    transfer_entropy_pair(&sx.slice(s, count), &sy.slice(s, count), config.delta)
                })
                .collect::<Result<_>>()?
        }
    };

    Ok(TeTrace {
        te_xy: pairs.iter().map(|p| p.xy).collect(),
        te_yx: pairs.iter().map(|p| p.yx).collect(),
        window_starts: starts,
        config: TraceConfig {
            embedding: *config,
            method: *method,
            window_len,
            stride,
        },
    })
}

/// Mean squared difference between two traces in one direction.
pub fn mse(a: &TeTrace, b: &TeTrace, direction: Direction) -> Result<f64> {
    if !a.same_schedule(b) || a.is_empty() {
        return Err(Error::ScheduleMismatch);
    }
    let (va, vb) = (a.values(direction), b.values(direction));
    Ok(va
        .iter()
        .zip(vb)
        .map(|(p, q)| (p - q) * (p - q))
        .sum::<f64>()
        / va.len() as f64)
}

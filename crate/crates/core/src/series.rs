//! Time-series containers and delay embedding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named, uniformly sampled series of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    name: String,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        let name = name.into();
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { name, index });
        }
        Ok(Self { name, values })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; a `TimeSeries` holds at least one sample.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Contiguous sub-series `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> Result<Self> {
        let end = start
            .checked_add(len)
            .filter(|&e| e <= self.len() && len > 0);
        match end {
            Some(end) => Ok(Self {
                name: self.name.clone(),
                values: self.values[start..end].to_vec(),
            }),
            None => Err(Error::SeriesTooShort {
                required: start.saturating_add(len.max(1)),
                actual: self.len(),
            }),
        }
    }
}

/// Embedding dimension `m`, delay `tau` and prediction horizon `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingConfig {
    pub m: usize,
    pub tau: usize,
    pub delta: usize,
}

impl Default for EmbeddingConfig {
    fn default() -> Self {
        Self {
            m: 3,
            tau: 1,
            delta: 1,
        }
    }
}

impl EmbeddingConfig {
    pub fn new(m: usize, tau: usize, delta: usize) -> Result<Self> {
        let config = Self { m, tau, delta };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidParameters(format!(
                "m must be >= 2, got {}",
                self.m
            )));
        }
        if self.tau < 1 {
            return Err(Error::InvalidParameters("tau must be >= 1".into()));
        }
        if self.delta < 1 {
            return Err(Error::InvalidParameters("delta must be >= 1".into()));
        }
        Ok(())
    }

    /// Number of samples spanned by one window, `(m - 1) * tau + 1`.
    pub fn span(&self) -> usize {
        (self.m - 1) * self.tau + 1
    }

    /// Number of windows a series of length `n` yields.
    pub fn window_count(&self, n: usize) -> usize {
        (n + 1).saturating_sub(self.span())
    }

    /// Number of usable (past, future) pairs, `max(0, n - (m - 1) * tau - delta)`.
    pub fn pair_count(&self, n: usize) -> usize {
        n.saturating_sub((self.m - 1) * self.tau + self.delta)
    }

    /// Smallest series length that yields at least one (past, future) pair.
    pub fn min_pair_length(&self) -> usize {
        (self.m - 1) * self.tau + self.delta + 1
    }
}

/// `m` samples drawn at `i, i + tau, ..., i + (m - 1) * tau`.
#[derive(Debug, Clone, PartialEq)]
pub struct Window(Vec<f64>);

impl Window {
    pub fn new(elements: Vec<f64>) -> Self {
        Self(elements)
    }

    pub fn elements(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl AsRef<[f64]> for Window {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for Window {
    fn from(v: Vec<f64>) -> Self {
        Self(v)
    }
}

/// Delay-embeds `series`; window `i` holds `(x_i, x_{i+tau}, ..., x_{i+(m-1)tau})`.
pub fn embed(series: &TimeSeries, config: &EmbeddingConfig) -> Result<Vec<Window>> {
    config.validate()?;
    let n = series.len();
    if n < config.span() {
        return Err(Error::SeriesTooShort {
            required: config.span(),
            actual: n,
        });
    }
    let values = series.values();
    Ok((0..config.window_count(n))
        .map(|i| Window((0..config.m).map(|j| values[i + j * config.tau]).collect()))
        .collect())
}

/// Visits every window as a borrowed buffer without allocating per window.
pub(crate) fn for_each_window<F>(values: &[f64], config: &EmbeddingConfig, mut f: F)
where
    F: FnMut(&[f64]),
{
    let mut buf = vec![0.0; config.m];
    for i in 0..config.window_count(values.len()) {
        for (j, slot) in buf.iter_mut().enumerate() {
            *slot = values[i + j * config.tau];
        }
        f(&buf);
    }
}

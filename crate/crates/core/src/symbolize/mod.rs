//! Window-to-symbol codecs.
//!
//! Each codec maps an embedded window onto a dense integer alphabet
//! `[0, A)`. Ordinal, binning and principal codecs are per-window pure
//! functions; k-means is fit on the whole batch of windows.

mod binning;
mod kmeans;
mod ordinal;
mod principal;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::alphabet_size;
use crate::error::{Error, Result};
use crate::series::{for_each_window, EmbeddingConfig, TimeSeries, Window};

pub use binning::binning_symbol;
pub use kmeans::kmeans_symbolize;
pub use ordinal::{ordinal_symbol, stable_argsort};
pub use principal::principal_symbol;

/// Integer symbol; every alphabet in this crate fits in 64 bits.
pub type Symbol = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KMeansParams {
    pub k: usize,
    pub seed: u64,
    pub max_iter: usize,
}

/// Symbolization method and its method-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Symbolizer {
    /// Rank order of the window elements, alphabet `m!`.
    Ordinal,
    /// Per-window equal-width bins, alphabet `b^m`.
    Binning { bins: usize },
    /// Ordered indices of the `t` largest and `t` smallest elements,
    /// alphabet `m!/(m-2t)!`.
    Principal { extremes: usize },
    /// Cluster index of the raw window vector, alphabet `k`.
    KMeans(KMeansParams),
}

impl Symbolizer {
    /// Binning with one bin per window element.
    pub fn binning_per_element(m: usize) -> Self {
        Symbolizer::Binning { bins: m }
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        if m < 2 {
            return bad(format!("m must be >= 2, got {m}"));
        }
        match *self {
            Symbolizer::Ordinal => Ok(()),
            Symbolizer::Binning { bins } if bins < 2 => {
                bad(format!("bins must be >= 2, got {bins}"))
            }
            Symbolizer::Binning { .. } => Ok(()),
            Symbolizer::Principal { extremes } if extremes < 1 || 2 * extremes > m => bad(format!(
                "principal needs 1 <= t and 2t <= m, got t={extremes}, m={m}"
            )),
            Symbolizer::Principal { .. } => Ok(()),
            Symbolizer::KMeans(p) if p.k < 2 => bad(format!("k must be >= 2, got {}", p.k)),
            Symbolizer::KMeans(p) if p.max_iter < 1 => bad("max_iter must be >= 1".into()),
            Symbolizer::KMeans(_) => Ok(()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Symbolizer::Ordinal => "ordinal",
            Symbolizer::Binning { .. } => "binning",
            Symbolizer::Principal { .. } => "principal",
            Symbolizer::KMeans(_) => "kmeans",
        }
    }
}

impl fmt::Display for Symbolizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbolizer::Ordinal => write!(f, "ordinal"),
            Symbolizer::Binning { bins } => write!(f, "binning(b={bins})"),
            Symbolizer::Principal { extremes } => write!(f, "principal(t={extremes})"),
            Symbolizer::KMeans(p) => write!(f, "kmeans(k={})", p.k),
        }
    }
}

/// Symbols in `[0, alphabet)` together with the method that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolSequence {
    symbols: Vec<Symbol>,
    alphabet: u64,
    method: Option<Symbolizer>,
}

impl SymbolSequence {
    /// Wraps externally produced symbols, checking the range invariant.
    pub fn new(symbols: Vec<Symbol>, alphabet: u64) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidParameters("alphabet must be >= 1".into()));
        }
        if let Some(s) = symbols.iter().find(|&&s| s >= alphabet) {
            return Err(Error::InvalidParameters(format!(
                "symbol {s} outside alphabet {alphabet}"
            )));
        }
        Ok(Self {
            symbols,
            alphabet,
            method: None,
        })
    }

    pub(crate) fn from_parts(symbols: Vec<Symbol>, alphabet: u64, method: Symbolizer) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet));
        Self {
            symbols,
            alphabet,
            method: Some(method),
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet(&self) -> u64 {
        self.alphabet
    }

    pub fn method(&self) -> Option<&Symbolizer> {
        self.method.as_ref()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbols `[start, start + len)`, keeping alphabet and provenance.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        Self {
            symbols: self.symbols[start..start + len].to_vec(),
            alphabet: self.alphabet,
            method: self.method,
        }
    }

    /// Number of distinct symbols that actually occur.
    pub fn distinct(&self) -> usize {
        let mut seen = self.symbols.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Fraction of the alphabet that occurs.
    pub fn occupancy(&self) -> f64 {
        self.distinct() as f64 / self.alphabet as f64
    }

    pub(crate) fn with_symbols(&self, symbols: Vec<Symbol>) -> Self {
        Self {
            symbols,
            alphabet: self.alphabet,
            method: self.method,
        }
    }
}

/// Embeds `series` and maps every window through `method`.
pub fn symbolize(
    series: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
) -> Result<SymbolSequence> {
    config.validate()?;
    let alphabet = alphabet_size(method, config.m)?;
    if series.len() < config.span() {
        return Err(Error::SeriesTooShort {
            required: config.span(),
            actual: series.len(),
        });
    }
    let mut symbols = Vec::with_capacity(config.window_count(series.len()));
    match *method {
        Symbolizer::Ordinal => {
            let mut codec = ordinal::OrdinalCodec::new(config.m);
            for_each_window(series.values(), config, |w| symbols.push(codec.encode(w)));
        }
        Symbolizer::Binning { bins } => {
            for_each_window(series.values(), config, |w| {
                symbols.push(binning::encode(w, bins))
            });
        }
        Symbolizer::Principal { extremes } => {
            let mut codec = principal::PrincipalCodec::new(config.m, extremes);
            for_each_window(series.values(), config, |w| symbols.push(codec.encode(w)));
        }
        Symbolizer::KMeans(params) => {
            let mut flat = Vec::with_capacity(config.window_count(series.len()) * config.m);
            for_each_window(series.values(), config, |w| flat.extend_from_slice(w));
            symbols = kmeans::cluster_flat(&flat, config.m, &params)?;
        }
    }
    Ok(SymbolSequence::from_parts(symbols, alphabet, *method))
}

/// Applies a per-window codec to already embedded windows.
pub fn symbolize_windows(windows: &[Window], method: &Symbolizer) -> Result<SymbolSequence> {
    let m = windows.first().map(Window::len).unwrap_or(0);
    if windows.iter().any(|w| w.len() != m) {
        return Err(Error::InvalidParameters("windows differ in length".into()));
    }
    if let Symbolizer::KMeans(params) = method {
        return kmeans_symbolize(windows, params.k, params.seed, params.max_iter);
    }
    let alphabet = alphabet_size(method, m)?;
    let symbols = match *method {
        Symbolizer::Ordinal => {
            let mut codec = ordinal::OrdinalCodec::new(m);
            windows.iter().map(|w| codec.encode(w.elements())).collect()
        }
        Symbolizer::Binning { bins } => windows
            .iter()
            .map(|w| binning::encode(w.elements(), bins))
            .collect(),
        Symbolizer::Principal { extremes } => {
            let mut codec = principal::PrincipalCodec::new(m, extremes);
            windows.iter().map(|w| codec.encode(w.elements())).collect()
        }
        Symbolizer::KMeans(_) => unreachable!(),
    };
    Ok(SymbolSequence::from_parts(symbols, alphabet, *method))
}

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{EmbeddingConfig, TimeSeries};
use crate::symbolize::{symbolize, Symbol, SymbolSequence, Symbolizer};

use super::counts::{accumulate, JointCounts};

/// Slack below zero tolerated (and clamped) in plug-in estimates.
pub const NEGATIVE_TOLERANCE: f64 = 1e-9;

/// Plug-in `TE_{Y->X}` in bits from triple counts:
/// `sum p(f,x,y) log2[p(f|x,y) / p(f|x)]`.
pub fn transfer_entropy(counts: &JointCounts) -> Result<f64> {
    if counts.is_empty() {
        return Err(Error::EmptyCounts);
    }
    let mut past_pair: HashMap<(Symbol, Symbol), u64> = HashMap::new();
    let mut future_past: HashMap<(Symbol, Symbol), u64> = HashMap::new();
    let mut past_x: HashMap<Symbol, u64> = HashMap::new();
    for &((f, x, y), c) in counts.triples() {
        *past_pair.entry((x, y)).or_default() += c;
        *future_past.entry((f, x)).or_default() += c;
        *past_x.entry(x).or_default() += c;
    }

    let mut sum = 0.0;
    for &((f, x, y), c) in counts.triples() {
        // p(f|x,y) / p(f|x) = c(f,x,y) c(x) / (c(x,y) c(f,x))
        let num = c as u128 * past_x[&x] as u128;
        let den = past_pair[&(x, y)] as u128 * future_past[&(f, x)] as u128;
        if num != den {
            sum += c as f64 * (num as f64 / den as f64).log2();
        }
    }
    let te = sum / counts.total() as f64;
    if te < -NEGATIVE_TOLERANCE {
        return Err(Error::NegativeTransferEntropy(te));
    }
    Ok(te.max(0.0))
}

/// Shannon entropy of the symbol histogram, in bits.
pub fn permutation_entropy(sym: &SymbolSequence) -> f64 {
    if sym.is_empty() {
        return 0.0;
    }
    let mut sorted = sym.symbols().to_vec();
    sorted.sort_unstable();
    let n = sorted.len() as f64;
    sorted
        .chunk_by(|a, b| a == b)
        .map(|run| {
            let p = run.len() as f64 / n;
            -p * p.log2()
        })
        .sum::<f64>()
        .max(0.0)
}

/// Permutation entropy divided by `log2(A)`; zero for a one-symbol alphabet.
pub fn normalized_permutation_entropy(sym: &SymbolSequence) -> f64 {
    if sym.alphabet() <= 1 {
        return 0.0;
    }
    permutation_entropy(sym) / (sym.alphabet() as f64).log2()
}

/// Both directed estimates for a pair of series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TePair {
    /// `TE_{X->Y}`: how much the past of x tells about the future of y.
    pub xy: f64,
    /// `TE_{Y->X}`.
    pub yx: f64,
}

/// Directed TEs from already symbolized series.
pub fn transfer_entropy_pair(
    sym_x: &SymbolSequence,
    sym_y: &SymbolSequence,
    delta: usize,
) -> Result<TePair> {
    let yx = transfer_entropy(&accumulate(sym_x, sym_y, delta)?)?;
    let xy = transfer_entropy(&accumulate(sym_y, sym_x, delta)?)?;
    Ok(TePair { xy, yx })
}

/// Symbolizes `x` and `y` with the same method and returns both directed
/// transfer entropies.
pub fn symbolic_transfer_entropy(
    x: &TimeSeries,
    y: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
) -> Result<TePair> {
    check_pair(x, y, config)?;
    let sx = symbolize(x, config, method)?;
    let sy = symbolize(y, config, method)?;
    transfer_entropy_pair(&sx, &sy, config.delta)
}

pub(crate) fn check_pair(x: &TimeSeries, y: &TimeSeries, config: &EmbeddingConfig) -> Result<()> {
    config.validate()?;
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < config.min_pair_length() {
        return Err(Error::SeriesTooShort {
            required: config.min_pair_length(),
            actual: x.len(),
        });
    }
    Ok(())
}

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::series::{EmbeddingConfig, TimeSeries};
use crate::symbolize::{symbolize, SymbolSequence, Symbolizer};
use crate::synth::{derive_seed, shuffle};

use super::counts::accumulate;
use super::estimate::{check_pair, transfer_entropy, TePair};
use super::trace::Direction;

const MIN_SURROGATES: usize = 19;

/// Shuffle-surrogate p-value `(1 + #{TE_s >= TE_obs}) / (1 + n)` for one
/// direction. Surrogates permute the whole source symbol sequence.
pub fn surrogate_pvalue(
    x: &TimeSeries,
    y: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
    direction: Direction,
    n_surrogates: usize,
    seed: u64,
) -> Result<f64> {
    let (sx, sy) = prepare(x, y, config, method, n_surrogates)?;
    match direction {
        Direction::Xy => pvalue(&sy, &sx, config.delta, n_surrogates, seed),
        Direction::Yx => pvalue(&sx, &sy, config.delta, n_surrogates, seed),
    }
}

/// P-values for both directions; the two directions use independent
/// surrogate streams derived from `seed`.
pub fn surrogate_pvalues(
    x: &TimeSeries,
    y: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
    n_surrogates: usize,
    seed: u64,
) -> Result<TePair> {
    let (sx, sy) = prepare(x, y, config, method, n_surrogates)?;
    Ok(TePair {
        xy: pvalue(&sy, &sx, config.delta, n_surrogates, seed)?,
        yx: pvalue(
            &sx,
            &sy,
            config.delta,
            n_surrogates,
            derive_seed(seed, u64::MAX),
        )?,
    })
}

fn prepare(
    x: &TimeSeries,
    y: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
    n_surrogates: usize,
) -> Result<(SymbolSequence, SymbolSequence)> {
    if n_surrogates < MIN_SURROGATES {
        return Err(Error::InvalidParameters(format!(
            "need at least {MIN_SURROGATES} surrogates, got {n_surrogates}"
        )));
    }
    check_pair(x, y, config)?;
    Ok((symbolize(x, config, method)?, symbolize(y, config, method)?))
}

/// P-value for `TE_{source -> target}`.
pub(crate) fn pvalue(
    target: &SymbolSequence,
    source: &SymbolSequence,
    delta: usize,
    n_surrogates: usize,
    seed: u64,
) -> Result<f64> {
    let observed = transfer_entropy(&accumulate(target, source, delta)?)?;
    let exceed = (0..n_surrogates as u64)
        .into_par_iter()
        .map(|i| {
            let shuffled = shuffle(source, derive_seed(seed, i));
            Ok(transfer_entropy(&accumulate(target, &shuffled, delta)?)? >= observed)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&e| e)
        .count();
    Ok((1 + exceed) as f64 / (1 + n_surrogates) as f64)
}

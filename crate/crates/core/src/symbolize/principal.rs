use crate::alphabet::falling_factorial;
use crate::error::{Error, Result};

use super::ordinal::argsort_into;
use super::Symbol;

/// Encodes the interleaved index tuple `(argmax_1, argmin_1, ..., argmax_t,
/// argmin_t)` of a window as a falling-factorial number in `[0, m!/(m-2t)!)`.
pub(crate) struct PrincipalCodec {
    extremes: usize,
    idx: Vec<usize>,
    used: Vec<bool>,
}

impl PrincipalCodec {
    pub(crate) fn new(m: usize, extremes: usize) -> Self {
        Self {
            extremes,
            idx: vec![0; m],
            used: vec![false; m],
        }
    }

    pub(crate) fn encode(&mut self, window: &[f64]) -> Symbol {
        let m = window.len();
        argsort_into(window, &mut self.idx);
        self.used.iter_mut().for_each(|u| *u = false);
        let mut symbol: Symbol = 0;
        let mut radix = m as u64;
        for r in 0..self.extremes {
            for index in [self.idx[m - 1 - r], self.idx[r]] {
                let rank = self.used[..index].iter().filter(|&&u| !u).count() as u64;
                self.used[index] = true;
                symbol = symbol * radix + rank;
                radix -= 1;
            }
        }
        symbol
    }
}

/// Principal pattern of `window` keeping `t` groups of extremes.
pub fn principal_symbol(window: &[f64], t: usize) -> Result<Symbol> {
    let m = window.len();
    if t < 1 || 2 * t > m {
        return Err(Error::InvalidParameters(format!(
            "principal needs 1 <= t and 2t <= m, got t={t}, m={m}"
        )));
    }
    falling_factorial(m as u64, 2 * t as u64)?;
    Ok(PrincipalCodec::new(m, t).encode(window))
}

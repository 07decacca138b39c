use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::Symbol;

/// Largest window for which `m!` fits in a `u64`.
pub(crate) const MAX_ORDINAL_M: usize = 20;

/// Indices of `window` in ascending order of value; equal values keep
/// index order.
pub fn stable_argsort(window: &[f64]) -> Vec<usize> {
    let mut idx = vec![0; window.len()];
    argsort_into(window, &mut idx);
    idx
}

// Insertion sort: stable and fast for the short windows used here.
pub(crate) fn argsort_into(window: &[f64], idx: &mut [usize]) {
    for (i, slot) in idx.iter_mut().enumerate() {
        *slot = i;
    }
    for i in 1..idx.len() {
        let cur = idx[i];
        let mut j = i;
        while j > 0 && precedes(window, cur, idx[j - 1]) {
            idx[j] = idx[j - 1];
            j -= 1;
        }
        idx[j] = cur;
    }
}

#[inline]
fn precedes(window: &[f64], a: usize, b: usize) -> bool {
    match window[a].partial_cmp(&window[b]) {
        Some(Ordering::Less) => true,
        Some(Ordering::Greater) => false,
        _ => a < b,
    }
}

pub(crate) struct OrdinalCodec {
    idx: Vec<usize>,
    factorials: Vec<u64>,
}

impl OrdinalCodec {
    pub(crate) fn new(m: usize) -> Self {
        let mut factorials = vec![1u64; m.max(1)];
        for i in 1..factorials.len() {
            factorials[i] = factorials[i - 1] * i as u64;
        }
        Self {
            idx: vec![0; m],
            factorials,
        }
    }

    pub(crate) fn encode(&mut self, window: &[f64]) -> Symbol {
        argsort_into(window, &mut self.idx);
        lehmer_rank(&self.idx, &self.factorials)
    }
}

/// Lexicographic rank of a permutation of `0..m`.
fn lehmer_rank(perm: &[usize], factorials: &[u64]) -> Symbol {
    let m = perm.len();
    let mut rank = 0;
    for i in 0..m {
        let smaller_after = perm[i + 1..].iter().filter(|&&p| p < perm[i]).count() as u64;
        rank += smaller_after * factorials[m - 1 - i];
    }
    rank
}

/// Ordinal pattern of `window`: the Lehmer rank of its stable argsort,
/// in `[0, m!)`.
pub fn ordinal_symbol(window: &[f64]) -> Result<Symbol> {
    if window.len() < 2 || window.len() > MAX_ORDINAL_M {
        return Err(Error::InvalidParameters(format!(
            "ordinal windows need 2 <= m <= {MAX_ORDINAL_M}, got {}",
            window.len()
        )));
    }
    Ok(OrdinalCodec::new(window.len()).encode(window))
}

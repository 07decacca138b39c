use crate::error::{Error, Result};
use crate::symbolize::{Symbol, SymbolSequence};

/// `(future_x, past_x, past_y)`.
pub type Triple = (Symbol, Symbol, Symbol);

// Above this many cells the table is built by sorting instead of a dense array.
const DENSE_LIMIT: u64 = 1 << 20;

/// Sparse occurrence counts of `(future_x, past_x, past_y)` triples.
///
/// Triples are kept sorted, so every reduction over them runs in a fixed
/// order and is bit-reproducible.
#[derive(Debug, Clone, PartialEq)]
pub struct JointCounts {
    triples: Vec<(Triple, u64)>,
    total: u64,
    alphabets: (u64, u64),
}

impl JointCounts {
    /// Builds counts from explicit entries; duplicates are merged and zero
    /// counts dropped.
    pub fn from_entries(
        entries: impl IntoIterator<Item = (Triple, u64)>,
        alphabets: (u64, u64),
    ) -> Self {
        let mut triples: Vec<(Triple, u64)> = entries.into_iter().filter(|&(_, c)| c > 0).collect();
        triples.sort_unstable_by_key(|&(t, _)| t);
        let mut merged: Vec<(Triple, u64)> = Vec::with_capacity(triples.len());
        for (t, c) in triples {
            match merged.last_mut() {
                Some((last, lc)) if *last == t => *lc += c,
                _ => merged.push((t, c)),
            }
        }
        let total = merged.iter().map(|&(_, c)| c).sum();
        Self {
            triples: merged,
            total,
            alphabets,
        }
    }

    pub fn triples(&self) -> &[(Triple, u64)] {
        &self.triples
    }

    pub fn get(&self, triple: Triple) -> u64 {
        self.triples
            .binary_search_by_key(&triple, |&(t, _)| t)
            .map(|i| self.triples[i].1)
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// `(A_x, A_y)`.
    pub fn alphabets(&self) -> (u64, u64) {
        self.alphabets
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

/// Counts triples `(x[i + delta], x[i], y[i])` for `i in 0..L - delta`.
///
/// The result estimates transfer entropy from `y` to `x`.
pub fn accumulate(
    sym_x: &SymbolSequence,
    sym_y: &SymbolSequence,
    delta: usize,
) -> Result<JointCounts> {
    let (xs, ys) = (sym_x.symbols(), sym_y.symbols());
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if delta == 0 {
        return Err(Error::InvalidParameters("delta must be >= 1".into()));
    }
    if xs.len() <= delta {
        return Err(Error::TooShort {
            len: xs.len(),
            delta,
        });
    }
    let alphabets = (sym_x.alphabet(), sym_y.alphabet());
    let pairs = xs.len() - delta;
    let (ax, ay) = alphabets;
    let cells = ax.checked_mul(ax).and_then(|v| v.checked_mul(ay));

    let triples = match cells {
        Some(cells) if cells <= DENSE_LIMIT => {
            let mut table = vec![0u64; cells as usize];
            for i in 0..pairs {
                table[((xs[i + delta] * ax + xs[i]) * ay + ys[i]) as usize] += 1;
            }
            table
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c > 0)
                .map(|(cell, &c)| {
                    let cell = cell as u64;
                    ((cell / (ax * ay), (cell / ay) % ax, cell % ay), c)
                })
                .collect()
        }
        _ => {
            let mut keys: Vec<Triple> = (0..pairs).map(|i| (xs[i + delta], xs[i], ys[i])).collect();
            keys.sort_unstable();
            let mut triples: Vec<(Triple, u64)> = Vec::new();
            for t in keys {
                match triples.last_mut() {
                    Some((last, c)) if *last == t => *c += 1,
                    _ => triples.push((t, 1)),
                }
            }
            triples
        }
    };
    Ok(JointCounts {
        triples,
        total: pairs as u64,
        alphabets,
    })
}

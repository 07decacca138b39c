//! Alphabet-size arithmetic for each symbolizer, with overflow detection.

use crate::error::{Error, Result};
use crate::symbolize::Symbolizer;

/// `n!`, or `Overflow` past `20!`.
pub fn factorial(n: u64) -> Result<u64> {
    (2..=n)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .ok_or(Error::Overflow)
}

/// `m! / (m - r)!`: ordered selections of `r` distinct items out of `m`.
pub fn falling_factorial(m: u64, r: u64) -> Result<u64> {
    if r > m {
        return Err(Error::InvalidParameters(format!("cannot pick {r} of {m}")));
    }
    ((m - r + 1)..=m)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .ok_or(Error::Overflow)
}

/// Number of distinct symbols `method` can emit for windows of length `m`.
///
/// `m!` for ordinal, `b^m` for binning, `m!/(m-2t)!` for principal and `k`
/// for k-means.
pub fn alphabet_size(method: &Symbolizer, m: usize) -> Result<u64> {
    method.validate(m)?;
    let m64 = m as u64;
    match *method {
        Symbolizer::Ordinal => factorial(m64),
        Symbolizer::Binning { bins } => {
            let exp = u32::try_from(m).map_err(|_| Error::Overflow)?;
            (bins as u64).checked_pow(exp).ok_or(Error::Overflow)
        }
        Symbolizer::Principal { extremes } => falling_factorial(m64, 2 * extremes as u64),
        Symbolizer::KMeans(params) => Ok(params.k as u64),
    }
}

/// Largest `m` with `n > 5 * m!`, the usual ceiling on embedding dimension.
pub fn advise_max_m(n: u64) -> Result<usize> {
    if n <= 10 {
        return Err(Error::NoValidM { n });
    }
    let n = n as u128;
    let mut m = 2usize;
    let mut next_factorial: u128 = 6; // (m + 1)!
    while n > 5 * next_factorial {
        m += 1;
        next_factorial *= m as u128 + 1;
    }
    Ok(m)
}

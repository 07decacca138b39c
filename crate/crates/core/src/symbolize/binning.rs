use crate::error::{Error, Result};

use super::Symbol;

/// Per-window equal-width binning, encoded little-endian in base `bins`.
///
/// The window range `[min, max]` is split into `bins` equal bins; the
/// maximum is clamped into the top bin and a constant window maps to
/// all-zero digits.
pub fn binning_symbol(window: &[f64], bins: usize) -> Result<Symbol> {
    if bins < 2 {
        return Err(Error::InvalidParameters(format!(
            "bins must be >= 2, got {bins}"
        )));
    }
    if window.is_empty() {
        return Err(Error::InvalidParameters("empty window".into()));
    }
    let exp = u32::try_from(window.len()).map_err(|_| Error::Overflow)?;
    (bins as u64).checked_pow(exp).ok_or(Error::Overflow)?;
    Ok(encode(window, bins))
}

pub(crate) fn encode(window: &[f64], bins: usize) -> Symbol {
    let (lo, hi) = window
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if hi == lo {
        return 0;
    }
    let b = bins as f64;
    let range = hi - lo;
    let top = bins as u64 - 1;
    let mut symbol = 0;
    let mut place = 1;
    for &e in window {
        let digit = ((b * (e - lo) / range).floor() as u64).min(top);
        symbol += digit * place;
        place *= bins as u64;
    }
    symbol
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constant_window_is_zero() {
        assert_eq!(binning_symbol(&[5.0, 5.0, 5.0, 5.0], 3).unwrap(), 0);
    }

    #[test]
    fn min_and_max_hit_end_bins() {
        assert_eq!(binning_symbol(&[0.0, 1.0], 2).unwrap(), 2);
        assert_eq!(binning_symbol(&[1.0, 0.0], 2).unwrap(), 1);
    }

    #[test]
    fn interior_digits() {
        // Range 4 split into 4 bins of width 1: digits (0, 1, 2, 3) -> 0 + 4 + 32 + 192.
        assert_eq!(binning_symbol(&[0.0, 1.5, 2.0, 4.0], 4).unwrap(), 228);
    }

    #[test]
    fn random_windows_stay_in_range_and_match_digit_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100_000 {
            let w: Vec<f64> = (0..3).map(|_| rng.random_range(-10.0..10.0)).collect();
            let s = binning_symbol(&w, 4).unwrap();
            assert!(s < 64);
            let lo = w.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let digits: Vec<u64> = w
                .iter()
                .map(|&e| {
                    let d = (4.0 * (e - lo) / (hi - lo)).floor();
                    if d >= 3.0 {
                        3
                    } else {
                        d as u64
                    }
                })
                .collect();
            assert_eq!(s, digits[0] + 4 * digits[1] + 16 * digits[2]);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(binning_symbol(&[0.0, 1.0], 1).is_err());
        assert!(binning_symbol(&[], 2).is_err());
        assert!(binning_symbol(&[0.0; 70], 2).is_err());
    }
}

//! Shared inputs for the criterion benchmarks.

use symte_core::{generate, CoupledSystemSpec, SystemKind, TimeSeries};

/// Coupled logistic pair of length `n` with a fixed seed.
pub fn logistic_pair(n: usize) -> (TimeSeries, TimeSeries) {
    generate(&CoupledSystemSpec {
        kind: SystemKind::LogisticUnidir,
        n,
        seed: 1,
        ..Default::default()
    })
    .expect("logistic generator")
}

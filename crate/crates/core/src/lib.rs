//! Symbolic transfer entropy with reduced-alphabet symbolizers.
//!
//! Series are delay-embedded into windows, each window is mapped to an
//! integer symbol by one of four codecs (ordinal, binning, principal,
//! k-means), and directed transfer entropy is estimated from symbol
//! co-occurrence counts.
//!
//! ```
//! use symte_core::{generate, symbolic_transfer_entropy, CoupledSystemSpec, EmbeddingConfig, Symbolizer};
//!
//! let (x, y) = generate(&CoupledSystemSpec { n: 5_000, ..Default::default() }).unwrap();
//! let te = symbolic_transfer_entropy(&x, &y, &EmbeddingConfig::default(), &Symbolizer::Principal { extremes: 1 })
//!     .unwrap();
//! assert!(te.xy > te.yx);
//! ```

pub mod alphabet;
pub mod entropy;
pub mod error;
pub mod series;
pub mod symbolize;
pub mod synth;

pub use alphabet::{advise_max_m, alphabet_size, factorial};
pub use entropy::{
    accumulate, mse, permutation_entropy, sliding_te, surrogate_pvalue, surrogate_pvalues,
    symbolic_transfer_entropy, transfer_entropy, Direction, JointCounts, TePair, TeTrace,
};
pub use error::{Error, Result};
pub use series::{embed, EmbeddingConfig, TimeSeries, Window};
pub use symbolize::{
    binning_symbol, kmeans_symbolize, ordinal_symbol, principal_symbol, symbolize, KMeansParams,
    Symbol, SymbolSequence, Symbolizer,
};
pub use synth::{generate, shuffle, CoupledSystemSpec, SystemKind};

//! Plug-in entropy and transfer-entropy estimators over symbol sequences.
//!
//! All estimates are in bits. The past state of each series is a single
//! symbol; the future symbol is the one `delta` windows ahead.

mod counts;
mod estimate;
mod surrogate;
mod trace;

pub use counts::{accumulate, JointCounts, Triple};
pub use estimate::{
    normalized_permutation_entropy, permutation_entropy, symbolic_transfer_entropy,
    transfer_entropy, transfer_entropy_pair, TePair, NEGATIVE_TOLERANCE,
};
pub use surrogate::{surrogate_pvalue, surrogate_pvalues};
pub use trace::{mse, sliding_te, window_schedule, Direction, TeTrace, TraceConfig};

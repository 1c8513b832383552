//! Ground truth independent of the construction: exhaustive search for
//! antimagic labelings of small trees and Prüfer-sequence tree enumeration.

mod pruefer;
mod search;

pub use pruefer::{decode, encode, sample_tree, trees_from_pruefer, PrueferSequences};
pub use search::{search_antimagic, OracleOutcome, OracleResult, DEFAULT_BUDGET};

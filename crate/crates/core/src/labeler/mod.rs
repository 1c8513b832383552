//! Two-step antimagic labeling for trees whose even-degree vertices induce
//! a path of even order.
//!
//! Step one labels a spine subtree: the even path extended by one odd-degree
//! vertex at each end and, in one sub-case, by an odd-degree path down to a
//! leaf. Its vertex sums are pairwise distinct modulo `m + 2` except for one
//! pair whose leaf member has the smaller sum. Step two labels the remaining
//! forest with complementary sibling pairs `t` and `m + 2 - t`, which leaves
//! every spine vertex's residue unchanged and gives every other vertex the
//! residue of its incoming edge label.

mod decompose;
mod labeling;
mod step1;
mod step2;

use thiserror::Error;

pub use decompose::{decompose, CaseTag, EvenPathDecomposition, Extension};
pub use labeling::EdgeLabeling;
pub use step1::{
    apply_swaps, expected_residues, initial_path_labels, label_step1, ExceptionPair,
    ExpectedResidues,
};
pub use step2::{build_pair_schedule, label_step2, PairSchedule};

use crate::even_path::EvenPathStatus;
use crate::tree::Tree;
use crate::verifier::residue_audit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("even-degree vertices do not induce a path of even order: {0}")]
    PreconditionViolated(EvenPathStatus),
    #[error("vertex {vertex} has an odd number of children in the remaining forest")]
    OddChildren { vertex: usize },
    #[error("{pairs} sibling pairs cannot fill label interval [{}, {}]", .interval.0, .interval.1)]
    IntervalMismatch {
        pairs: usize,
        interval: (usize, usize),
    },
    #[error("residue invariant violated: {0}")]
    InvariantViolated(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelOptions {
    /// Re-run the residue audit on the finished labeling.
    pub check_invariants: bool,
}

impl Default for LabelOptions {
    fn default() -> Self {
        LabelOptions {
            check_invariants: cfg!(debug_assertions),
        }
    }
}

/// Everything produced while labeling a tree.
#[derive(Debug, Clone)]
pub struct Construction {
    pub decomposition: EvenPathDecomposition,
    pub schedule: PairSchedule,
    pub labeling: EdgeLabeling,
}

impl Construction {
    pub fn ell(&self) -> usize {
        self.decomposition.ell()
    }
}

/// Antimagic labeling of `t` with default options.
pub fn label(t: &Tree) -> Result<EdgeLabeling, LabelError> {
    label_with(t, LabelOptions::default()).map(|c| c.labeling)
}

/// Runs both labeling steps in time linear in the edge count.
pub fn label_with(t: &Tree, options: LabelOptions) -> Result<Construction, LabelError> {
    let decomposition = decompose(t)?;
    let (partial, ell) = label_step1(t, &decomposition);
    let schedule = build_pair_schedule(t, &decomposition, &partial)?;
    let labeling = label_step2(partial, &schedule, decomposition.p, ell, t.edge_count())?;

    if options.check_invariants {
        let audit = residue_audit(t, &decomposition, &labeling, ell);
        if let Some(first) = audit.deviations.first() {
            return Err(LabelError::InvariantViolated(first.to_string()));
        }
    }
    Ok(Construction {
        decomposition,
        schedule,
        labeling,
    })
}

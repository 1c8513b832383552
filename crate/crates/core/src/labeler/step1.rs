use serde::Serialize;

use super::decompose::{CaseTag, EvenPathDecomposition};
use super::labeling::EdgeLabeling;
use crate::tree::Tree;

/// Labels of `e1..e_{2p+1}` before any swap: odd-indexed edges count up from
/// 1, even-indexed edges take the top `p` labels.
pub fn initial_path_labels(p: usize, m: usize) -> Vec<usize> {
    (1..=2 * p + 1)
        .map(|j| {
            if j % 2 == 1 {
                (j - 1) / 2 + 1
            } else {
                m - p + j / 2
            }
        })
        .collect()
}

/// Exchanges the labels of `e_{2i-1}` and `e_{2i}` for `1 <= i <= swaps`.
pub fn apply_swaps(labels: &mut [usize], swaps: usize) {
    for i in 1..=swaps {
        labels.swap(2 * i - 2, 2 * i - 1);
    }
}

/// Labels the spine subtree (and its extension, if any). Returns the partial
/// labeling and the extension length.
///
/// The labels used are exactly `[1, p + l + 1]` and `[m - p - l + 1, m]`.
pub fn label_step1(t: &Tree, d: &EvenPathDecomposition) -> (EdgeLabeling, usize) {
    let m = t.edge_count();
    let p = d.p;
    let mut path_labels = initial_path_labels(p, m);
    apply_swaps(&mut path_labels, d.swap_count);

    let mut labeling = EdgeLabeling::empty(m);
    for (&edge, &label) in d.path_edges.iter().zip(&path_labels) {
        labeling.set(edge, label);
    }

    let ell = d.ell();
    if let Some(ext) = &d.extension {
        labeling.set(d.e(2 * p + 1), p + ell + 1);
        for i in 0..ell {
            labeling.set(ext.path_edges[i], p + i + 1);
            labeling.set(ext.pendant_edges[i], m - p - i);
        }
    }
    (labeling, ell)
}

/// The one pair of spine-subtree vertices allowed to share a residue. The
/// leaf always has the strictly smaller sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExceptionPair {
    pub leaf: usize,
    pub partner: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedResidues {
    /// Sorted residues mod `m + 2` of the spine-subtree vertex sums.
    pub residues: Vec<usize>,
    pub exception: Option<ExceptionPair>,
}

/// Residue set of the spine subtree predicted by the case analysis.
pub fn expected_residues(d: &EvenPathDecomposition, m: usize, ell: usize) -> ExpectedResidues {
    let p = d.p;
    let range = |lo: usize, hi: usize| lo..=hi;
    let (residues, exception): (Vec<usize>, _) = match d.case_tag {
        CaseTag::P1 => (vec![0, 1, 2, m + 1], None),
        CaseTag::LeafEndpoint => (
            range(0, p + 1)
                .filter(|&r| r != p)
                .chain(range(m - p + 2, m + 1))
                .collect(),
            Some(ExceptionPair {
                leaf: d.v(0),
                partner: d.v(p + 2),
            }),
        ),
        CaseTag::SwapOnly => (
            range(0, p + 1)
                .chain(range(m - p + 1, m + 1).filter(|&r| r != m))
                .collect(),
            None,
        ),
        CaseTag::SwapAndExtend => {
            let ext = d
                .extension
                .as_ref()
                .expect("SwapAndExtend carries an extension");
            (
                range(0, p + ell)
                    .chain(range(m - p - ell + 1, m + 1).filter(|&r| r != m - 1))
                    .collect(),
                Some(ExceptionPair {
                    leaf: ext.path[ell],
                    partner: ext.path[0],
                }),
            )
        }
    };
    ExpectedResidues {
        residues,
        exception,
    }
}

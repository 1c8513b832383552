use std::collections::VecDeque;

use serde::Serialize;

use super::decompose::EvenPathDecomposition;
use super::labeling::EdgeLabeling;
use super::LabelError;
use crate::tree::Tree;

/// Sibling edge pairs covering every edge outside the spine subtree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PairSchedule {
    /// `(f1, f2)` edge ids; both leave the same vertex, `f1` goes to the
    /// smaller child id.
    pub pairs: Vec<(usize, usize)>,
}

impl PairSchedule {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Roots every component of the unlabeled forest at its spine-subtree
/// vertex and pairs up the children of each vertex.
///
/// Components are visited in spine order, each breadth-first; the children
/// of a vertex are paired in ascending id order.
pub fn build_pair_schedule(
    t: &Tree,
    d: &EvenPathDecomposition,
    partial: &EdgeLabeling,
) -> Result<PairSchedule, LabelError> {
    let n = t.vertex_count();
    let mut visited = vec![false; n];
    let roots = d.t1_vertices();
    for &r in &roots {
        visited[r] = true;
    }

    let mut pairs = Vec::with_capacity((t.edge_count() - partial.labeled_count()) / 2);
    let mut queue = VecDeque::new();
    let mut children = Vec::new();
    for &root in &roots {
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            children.clear();
            for inc in t.incidences(v) {
                if partial.is_labeled(inc.edge) || visited[inc.neighbor] {
                    continue;
                }
                visited[inc.neighbor] = true;
                children.push(*inc);
                queue.push_back(inc.neighbor);
            }
            if children.len() % 2 == 1 {
                return Err(LabelError::OddChildren { vertex: v });
            }
            pairs.extend(children.chunks_exact(2).map(|c| (c[0].edge, c[1].edge)));
        }
    }
    Ok(PairSchedule { pairs })
}

/// Gives pair `i` (1-based) the labels `p + l + 1 + i` and `m - p - l + 1 - i`,
/// so every pair sums to `m + 2`.
pub fn label_step2(
    mut partial: EdgeLabeling,
    schedule: &PairSchedule,
    p: usize,
    ell: usize,
    m: usize,
) -> Result<EdgeLabeling, LabelError> {
    let low = p + ell + 2;
    let high = m.saturating_sub(p + ell);
    let available = (high + 1).saturating_sub(low);
    if 2 * schedule.len() != available {
        return Err(LabelError::IntervalMismatch {
            pairs: schedule.len(),
            interval: (low, high),
        });
    }
    for (i, &(f1, f2)) in schedule.pairs.iter().enumerate() {
        partial.set(f1, low + i);
        partial.set(f2, high - i);
    }
    Ok(partial)
}

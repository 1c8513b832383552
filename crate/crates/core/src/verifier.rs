//! Independent checks on edge labelings: vertex sums, the antimagic property
//! and the residue structure the construction relies on.
//!
//! Sums are computed in `u64`. Labels are at most `m <= 2^31`, so a vertex
//! sum is bounded by `m * max_degree < 2^62`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::labeler::{expected_residues, EdgeLabeling, EvenPathDecomposition};
use crate::tree::Tree;

/// Maximum number of collision pairs a report lists.
pub const COLLISION_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("labeling covers {labeled} of {edges} edges")]
    IncompleteLabeling { labeled: usize, edges: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumReport {
    pub sums: Vec<u64>,
    pub modulus: u64,
    pub residues: Vec<u64>,
    /// Vertex pairs with equal sums, capped at [`COLLISION_CAP`].
    pub collisions: Vec<(usize, usize)>,
    /// Vertex pairs with equal residues, capped at [`COLLISION_CAP`].
    pub residue_collisions: Vec<(usize, usize)>,
}

pub fn vertex_sums(t: &Tree, labeling: &EdgeLabeling) -> Result<SumReport, VerifyError> {
    if labeling.len() != t.edge_count() || !labeling.is_complete() {
        return Err(VerifyError::IncompleteLabeling {
            labeled: labeling.labeled_count(),
            edges: t.edge_count(),
        });
    }
    let sums = raw_sums(t, labeling);
    let modulus = t.edge_count() as u64 + 2;
    let residues: Vec<u64> = sums.iter().map(|s| s % modulus).collect();
    Ok(SumReport {
        collisions: equal_pairs(&sums, COLLISION_CAP),
        residue_collisions: equal_pairs(&residues, COLLISION_CAP),
        sums,
        modulus,
        residues,
    })
}

/// Sums over labeled incident edges; unlabeled edges contribute nothing.
fn raw_sums(t: &Tree, labeling: &EdgeLabeling) -> Vec<u64> {
    let mut sums = vec![0u64; t.vertex_count()];
    for (&(u, v), &label) in t.edges().iter().zip(labeling.as_slice()) {
        sums[u] += label as u64;
        sums[v] += label as u64;
    }
    sums
}

/// Pairs of indices holding equal values, ordered by value then index.
fn equal_pairs(values: &[u64], cap: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| (values[i], i));
    let mut out = Vec::new();
    let mut start = 0;
    while start < order.len() && out.len() < cap {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        'group: for a in start..end {
            for b in a + 1..end {
                if out.len() == cap {
                    break 'group;
                }
                out.push((order[a], order[b]));
            }
        }
        start = end;
    }
    out
}

/// Why a labeling is not a bijection onto `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BijectionWitness {
    LengthMismatch {
        labels: usize,
        edges: usize,
    },
    Unlabeled {
        edge: usize,
    },
    OutOfRange {
        edge: usize,
        label: usize,
    },
    Duplicate {
        label: usize,
        first: usize,
        second: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum AntimagicVerdict {
    Antimagic,
    NotBijective(BijectionWitness),
    Collision { u: usize, v: usize, sum: u64 },
}

impl AntimagicVerdict {
    pub fn is_antimagic(&self) -> bool {
        matches!(self, AntimagicVerdict::Antimagic)
    }
}

fn bijection_witness(t: &Tree, labeling: &EdgeLabeling) -> Option<BijectionWitness> {
    let m = t.edge_count();
    let labels = labeling.as_slice();
    if labels.len() != m {
        return Some(BijectionWitness::LengthMismatch {
            labels: labels.len(),
            edges: m,
        });
    }
    let mut owner = vec![usize::MAX; m + 1];
    for (edge, &label) in labels.iter().enumerate() {
        if label == 0 {
            return Some(BijectionWitness::Unlabeled { edge });
        }
        if label > m {
            return Some(BijectionWitness::OutOfRange { edge, label });
        }
        if owner[label] != usize::MAX {
            return Some(BijectionWitness::Duplicate {
                label,
                first: owner[label],
                second: edge,
            });
        }
        owner[label] = edge;
    }
    None
}

/// True iff `labeling` is a bijection onto `1..=m` with pairwise distinct
/// vertex sums; otherwise a witness of the failure.
pub fn is_antimagic(t: &Tree, labeling: &EdgeLabeling) -> AntimagicVerdict {
    if let Some(w) = bijection_witness(t, labeling) {
        return AntimagicVerdict::NotBijective(w);
    }
    let sums = raw_sums(t, labeling);
    match equal_pairs(&sums, 1).first() {
        Some(&(u, v)) => AntimagicVerdict::Collision { u, v, sum: sums[u] },
        None => AntimagicVerdict::Antimagic,
    }
}

/// A way the finished labeling departs from the residue structure the
/// construction guarantees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Deviation {
    /// Labeling is not total on the tree.
    Incomplete,
    /// Spine-subtree residue set differs from the predicted one.
    ResidueSetMismatch {
        missing: Vec<u64>,
        unexpected: Vec<u64>,
    },
    /// Two spine-subtree vertices share a residue outside the allowed exception.
    UnexpectedCollision { u: usize, v: usize, residue: u64 },
    /// The predicted exception pair does not actually collide.
    MissingException { leaf: usize, partner: usize },
    /// The exception pair's designated leaf is not a leaf of the tree.
    ExceptionNotLeaf { vertex: usize },
    /// The exception pair's leaf does not have the strictly smaller sum.
    ExceptionOrder { leaf: usize, partner: usize },
    /// Final sum and spine-subtree sum of a spine vertex differ mod `m + 2`.
    SpineResidueShift {
        vertex: usize,
        spine_residue: u64,
        final_residue: u64,
    },
    /// A forest vertex's residue differs from its incoming edge label.
    ForestResidue {
        vertex: usize,
        residue: u64,
        incoming_label: usize,
    },
    /// A spine residue falls inside the forest label interval.
    IntervalOverlap { vertex: usize, residue: u64 },
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // JSON is the readable form; all variants serialize.
        let text = serde_json::to_string(self).map_err(|_| fmt::Error)?;
        f.write_str(&text)
    }
}

/// Predicted and observed residue sets of the spine subtree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueSets {
    pub expected: Vec<u64>,
    pub observed: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueAudit {
    pub ok: bool,
    /// Spine-subtree vertex pairs with equal residues.
    pub collisions: Vec<(usize, usize)>,
    pub residue_sets: ResidueSets,
    /// `(vertex, residue of its spine-subtree sum)` in spine order.
    pub t1_residues: Vec<(usize, u64)>,
    /// Label interval of the forest edges; `None` when it is empty.
    pub t2_interval: Option<(usize, usize)>,
    pub deviations: Vec<Deviation>,
}

/// Confirms the residue structure of a labeling produced for `t` from
/// decomposition `d`.
pub fn residue_audit(
    t: &Tree,
    d: &EvenPathDecomposition,
    labeling: &EdgeLabeling,
    ell: usize,
) -> ResidueAudit {
    let m = t.edge_count();
    let modulus = m as u64 + 2;
    let p = d.p;
    let mut deviations = Vec::new();

    let predicted = expected_residues(d, m, ell);
    let t2_low = p + ell + 2;
    let t2_high = m.saturating_sub(p + ell);
    let t2_interval = (t2_low <= t2_high).then_some((t2_low, t2_high));
    let in_t2 = |r: u64| t2_interval.is_some_and(|(lo, hi)| (lo as u64..=hi as u64).contains(&r));

    // Spine-subtree sums.
    let t1_vertices = d.t1_vertices();
    let mut t1_sum = vec![0u64; t.vertex_count()];
    for e in d.t1_edges() {
        let (u, v) = t.edge(e);
        let label = labeling.get(e).unwrap_or(0) as u64;
        t1_sum[u] += label;
        t1_sum[v] += label;
    }
    let t1_residues: Vec<(usize, u64)> = t1_vertices
        .iter()
        .map(|&v| (v, t1_sum[v] % modulus))
        .collect();
    let residue_values: Vec<u64> = t1_residues.iter().map(|&(_, r)| r).collect();
    let collisions: Vec<(usize, usize)> = equal_pairs(&residue_values, COLLISION_CAP)
        .into_iter()
        .map(|(a, b)| (t1_vertices[a], t1_vertices[b]))
        .collect();

    let mut observed = residue_values.clone();
    observed.sort_unstable();
    observed.dedup();
    let expected: Vec<u64> = predicted.residues.iter().map(|&r| r as u64).collect();
    if observed != expected {
        deviations.push(Deviation::ResidueSetMismatch {
            missing: expected
                .iter()
                .filter(|r| !observed.contains(r))
                .copied()
                .collect(),
            unexpected: observed
                .iter()
                .filter(|r| !expected.contains(r))
                .copied()
                .collect(),
        });
    }

    let same_pair =
        |(a, b): (usize, usize), x: usize, y: usize| (a == x && b == y) || (a == y && b == x);
    match predicted.exception {
        Some(ex) => {
            if !collisions
                .iter()
                .any(|&c| same_pair(c, ex.leaf, ex.partner))
            {
                deviations.push(Deviation::MissingException {
                    leaf: ex.leaf,
                    partner: ex.partner,
                });
            }
            if !t.is_leaf(ex.leaf) {
                deviations.push(Deviation::ExceptionNotLeaf { vertex: ex.leaf });
            }
            if t1_sum[ex.leaf] >= t1_sum[ex.partner] {
                deviations.push(Deviation::ExceptionOrder {
                    leaf: ex.leaf,
                    partner: ex.partner,
                });
            }
            for &(u, v) in &collisions {
                if !same_pair((u, v), ex.leaf, ex.partner) {
                    deviations.push(Deviation::UnexpectedCollision {
                        u,
                        v,
                        residue: t1_sum[u] % modulus,
                    });
                }
            }
        }
        None => {
            for &(u, v) in &collisions {
                deviations.push(Deviation::UnexpectedCollision {
                    u,
                    v,
                    residue: t1_sum[u] % modulus,
                });
            }
        }
    }

    for &(v, r) in &t1_residues {
        if in_t2(r) {
            deviations.push(Deviation::IntervalOverlap {
                vertex: v,
                residue: r,
            });
        }
    }

    if labeling.len() != m || !labeling.is_complete() {
        deviations.push(Deviation::Incomplete);
    } else {
        let sums = raw_sums(t, labeling);
        for &(v, r) in &t1_residues {
            if sums[v] % modulus != r {
                deviations.push(Deviation::SpineResidueShift {
                    vertex: v,
                    spine_residue: r,
                    final_residue: sums[v] % modulus,
                });
            }
        }
        // Walk the forest outward from the spine subtree to find incoming edges.
        let mut reached = vec![false; t.vertex_count()];
        let mut queue: VecDeque<usize> = t1_vertices.iter().copied().collect();
        for &v in &t1_vertices {
            reached[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            for inc in t.incidences(v) {
                if reached[inc.neighbor] {
                    continue;
                }
                reached[inc.neighbor] = true;
                queue.push_back(inc.neighbor);
                let w = inc.neighbor;
                let incoming = labeling.get(inc.edge).unwrap_or(0);
                if sums[w] % modulus != incoming as u64 {
                    deviations.push(Deviation::ForestResidue {
                        vertex: w,
                        residue: sums[w] % modulus,
                        incoming_label: incoming,
                    });
                }
            }
        }
    }

    ResidueAudit {
        ok: deviations.is_empty(),
        collisions,
        residue_sets: ResidueSets { expected, observed },
        t1_residues,
        t2_interval,
        deviations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    #[test]
    fn p4_sums() {
        let t = parse_tree("0 1\n1 2\n2 3").unwrap();
        let phi = EdgeLabeling::from_labels(vec![1, 3, 2]);
        let report = vertex_sums(&t, &phi).unwrap();
        assert_eq!(report.sums, vec![1, 4, 5, 2]);
        assert_eq!(report.modulus, 5);
        assert!(report.collisions.is_empty());
        assert!(is_antimagic(&t, &phi).is_antimagic());
    }

    #[test]
    fn p3_sums() {
        let t = parse_tree("0 1\n1 2").unwrap();
        let report = vertex_sums(&t, &EdgeLabeling::from_labels(vec![1, 2])).unwrap();
        assert_eq!(report.sums, vec![1, 3, 2]);
    }

    #[test]
    fn single_edge_collides() {
        let t = parse_tree("0 1").unwrap();
        assert_eq!(
            is_antimagic(&t, &EdgeLabeling::from_labels(vec![1])),
            AntimagicVerdict::Collision { u: 0, v: 1, sum: 1 }
        );
    }

    #[test]
    fn non_bijective_labelings() {
        let t = parse_tree("0 1\n1 2\n2 3").unwrap();
        assert_eq!(
            is_antimagic(&t, &EdgeLabeling::from_labels(vec![1, 1, 2])),
            AntimagicVerdict::NotBijective(BijectionWitness::Duplicate {
                label: 1,
                first: 0,
                second: 1
            })
        );
        assert_eq!(
            is_antimagic(&t, &EdgeLabeling::from_labels(vec![1, 4, 2])),
            AntimagicVerdict::NotBijective(BijectionWitness::OutOfRange { edge: 1, label: 4 })
        );
        assert_eq!(
            is_antimagic(&t, &EdgeLabeling::from_labels(vec![1, 2])),
            AntimagicVerdict::NotBijective(BijectionWitness::LengthMismatch {
                labels: 2,
                edges: 3
            })
        );
    }

    #[test]
    fn incomplete_labeling_rejected() {
        let t = parse_tree("0 1\n1 2").unwrap();
        let mut phi = EdgeLabeling::empty(2);
        phi.set(0, 1);
        assert_eq!(
            vertex_sums(&t, &phi),
            Err(VerifyError::IncompleteLabeling {
                labeled: 1,
                edges: 2
            })
        );
    }

    #[test]
    fn collision_cap() {
        let values = vec![7u64; 20];
        assert_eq!(equal_pairs(&values, COLLISION_CAP).len(), COLLISION_CAP);
        assert_eq!(equal_pairs(&[1, 2, 1, 2], 10), vec![(0, 2), (1, 3)]);
    }
}

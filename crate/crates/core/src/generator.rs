//! Seeded random trees whose even-degree vertices are exactly a path
//! `w1..w2p`.
//!
//! The spine `w1..w2p` is built first. Each spine end receives an odd
//! number of pendant subtrees and each inner spine vertex an even number, so
//! every spine vertex has even degree. Every pendant is an odd tree (each
//! vertex has an even number of children), which makes every off-spine
//! vertex odd-degree.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("p must be at least 1")]
    ZeroP,
    #[error("leaf endpoint bias {0} is outside [0, 1]")]
    BadBias(f64),
    #[error("extra budget {given} is infeasible: need an even count of at least {required}")]
    BudgetInfeasible { given: usize, required: usize },
    #[error("odd subtree budget {0} must be even")]
    OddBudget(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenSpec {
    /// Half the number of even-degree vertices.
    pub p: usize,
    /// Edges beyond the `2p - 1` spine edges. Must be even.
    pub extra_budget: usize,
    pub seed: u64,
    /// Probability that one spine end is forced to carry a leaf. Otherwise
    /// neither end has a leaf neighbor.
    pub leaf_endpoint_bias: f64,
}

impl GenSpec {
    pub fn new(p: usize, extra_budget: usize, seed: u64) -> Self {
        GenSpec {
            p,
            extra_budget,
            seed,
            leaf_endpoint_bias: 0.5,
        }
    }

    pub fn with_bias(mut self, bias: f64) -> Self {
        self.leaf_endpoint_bias = bias;
        self
    }

    /// Total edge count of the generated tree.
    pub fn edge_count(&self) -> usize {
        2 * self.p - 1 + self.extra_budget
    }
}

/// Minimum extra budget when a leaf is forced at one end.
pub const MIN_BUDGET_WITH_LEAF: usize = 2;
/// Minimum extra budget when neither end may have a leaf neighbor.
pub const MIN_BUDGET_WITHOUT_LEAF: usize = 6;

/// Rooted tree in parent-array form; vertex 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub parent: Vec<usize>,
}

impl RootedTree {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.parent.len()];
        for &p in &self.parent[1..] {
            counts[p] += 1;
        }
        counts
    }
}

/// Random rooted tree with `budget` edges in which every vertex has an even
/// number of children.
pub fn generate_odd_subtree(budget: usize, seed: u64) -> Result<RootedTree, GenError> {
    if budget % 2 == 1 {
        return Err(GenError::OddBudget(budget));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(RootedTree {
        parent: grow_odd_tree(&mut rng, budget),
    })
}

/// Grows from a single root by repeatedly giving a uniformly chosen vertex
/// two new children.
fn grow_odd_tree(rng: &mut ChaCha8Rng, budget: usize) -> Vec<usize> {
    let mut parent = Vec::with_capacity(budget + 1);
    parent.push(0);
    for _ in 0..budget / 2 {
        let host = rng.random_range(0..parent.len());
        parent.push(host);
        parent.push(host);
    }
    parent
}

struct Pendant {
    anchor: usize,
    budget: usize,
}

/// Builds a tree satisfying the even-path precondition with exactly `2p`
/// even-degree vertices.
pub fn generate(spec: &GenSpec) -> Result<Tree, GenError> {
    let p = spec.p;
    if p == 0 {
        return Err(GenError::ZeroP);
    }
    if !(0.0..=1.0).contains(&spec.leaf_endpoint_bias) {
        return Err(GenError::BadBias(spec.leaf_endpoint_bias));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let spine = 2 * p;
    let (first, last) = (0, spine - 1);

    let forced_leaf = rng.random_bool(spec.leaf_endpoint_bias);
    let required = if forced_leaf {
        MIN_BUDGET_WITH_LEAF
    } else {
        MIN_BUDGET_WITHOUT_LEAF
    };
    let budget = spec.extra_budget;
    if budget < required || budget % 2 == 1 {
        return Err(GenError::BudgetInfeasible {
            given: budget,
            required,
        });
    }

    // One pendant per end. A forced leaf pendant is never grown; without
    // one, both ends get a two-child pendant so neither has a leaf neighbor.
    let (mut pendants, fixed) = if forced_leaf {
        let (leaf_end, other) = if rng.random_bool(0.5) {
            (first, last)
        } else {
            (last, first)
        };
        let pendants = vec![
            Pendant {
                anchor: leaf_end,
                budget: 0,
            },
            Pendant {
                anchor: other,
                budget: 0,
            },
        ];
        (pendants, 1)
    } else {
        let pendants = vec![
            Pendant {
                anchor: first,
                budget: 2,
            },
            Pendant {
                anchor: last,
                budget: 2,
            },
        ];
        (pendants, 0)
    };
    // Pendant pairs may go to inner spine vertices, and to the ends only
    // when leaves are allowed there.
    let anchors: Vec<usize> = if forced_leaf {
        (0..spine).collect()
    } else {
        (1..spine - 1).collect()
    };

    let mut units = (budget - required) / 2;
    while units > 0 {
        units -= 1;
        if !anchors.is_empty() && rng.random_bool(0.5) {
            let anchor = anchors[rng.random_range(0..anchors.len())];
            pendants.push(Pendant { anchor, budget: 0 });
            pendants.push(Pendant { anchor, budget: 0 });
        } else {
            let i = rng.random_range(fixed..pendants.len());
            pendants[i].budget += 2;
        }
    }

    let n = spine + budget;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..spine {
        edges.push((i - 1, i));
    }
    let mut next_id = spine;
    for pendant in &pendants {
        let base_id = next_id;
        let parent = grow_odd_tree(&mut rng, pendant.budget);
        edges.push((pendant.anchor, base_id));
        for (child, &par) in parent.iter().enumerate().skip(1) {
            edges.push((base_id + par, base_id + child));
        }
        next_id += parent.len();
    }
    debug_assert_eq!(next_id, n);

    // Hide the construction order from downstream consumers.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    edges.shuffle(&mut rng);
    let edges = edges
        .into_iter()
        .map(|(u, v)| {
            if rng.random_bool(0.5) {
                (perm[u], perm[v])
            } else {
                (perm[v], perm[u])
            }
        })
        .collect();
    Ok(Tree::with_vertex_count(n, edges).expect("generator emits a tree"))
}

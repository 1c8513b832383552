use serde::Serialize;

use crate::labeler::EdgeLabeling;
use crate::tree::Tree;

/// Default node budget for [`search_antimagic`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum OracleOutcome {
    Found { labeling: EdgeLabeling },
    NoneExists,
    Timeout { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    #[serde(flatten)]
    pub outcome: OracleOutcome,
    pub nodes_explored: u64,
}

impl OracleResult {
    pub fn labeling(&self) -> Option<&EdgeLabeling> {
        match &self.outcome {
            OracleOutcome::Found { labeling } => Some(labeling),
            _ => None,
        }
    }
}

/// Edge order that completes vertices as early as possible: repeatedly take
/// the edge that would finish the most endpoints, ties by edge id.
fn completion_order(t: &Tree) -> Vec<usize> {
    let m = t.edge_count();
    let mut open: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut taken = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let best = (0..m)
            .filter(|&e| !taken[e])
            .max_by_key(|&e| {
                let (u, v) = t.edge(e);
                let completes = (open[u] == 1) as usize + (open[v] == 1) as usize;
                (completes, std::cmp::Reverse(e))
            })
            .expect("an edge remains");
        taken[best] = true;
        let (u, v) = t.edge(best);
        open[u] -= 1;
        open[v] -= 1;
        order.push(best);
    }
    order
}

struct Search<'a> {
    tree: &'a Tree,
    order: Vec<usize>,
    /// Vertices whose last incident edge is `order[depth]`.
    completes: Vec<Vec<usize>>,
    labels: Vec<usize>,
    used: Vec<bool>,
    sums: Vec<u64>,
    /// Multiplicity of each sum among completed vertices.
    taken_sums: Vec<u32>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let edge = self.order[depth];
        let (u, v) = self.tree.edge(edge);
        let m = self.order.len();
        for label in 1..=m {
            if self.used[label] {
                continue;
            }
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.used[label] = true;
            self.labels[edge] = label;
            self.sums[u] += label as u64;
            self.sums[v] += label as u64;

            let mut clash = false;
            let mut marked = 0;
            for &w in &self.completes[depth] {
                let s = self.sums[w] as usize;
                if self.taken_sums[s] > 0 {
                    clash = true;
                    break;
                }
                self.taken_sums[s] += 1;
                marked += 1;
            }
            if !clash {
                match self.run(depth + 1) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            for &w in &self.completes[depth][..marked] {
                self.taken_sums[self.sums[w] as usize] -= 1;
            }
            self.sums[u] -= label as u64;
            self.sums[v] -= label as u64;
            self.labels[edge] = 0;
            self.used[label] = false;
        }
        Step::Exhausted
    }
}

/// Exhaustive depth-first search for an antimagic labeling, pruning as soon
/// as two fully labeled vertices share a sum. Intended for `m <= 12`.
pub fn search_antimagic(t: &Tree, budget: u64) -> OracleResult {
    let m = t.edge_count();
    let order = completion_order(t);
    let mut remaining: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut completes = vec![Vec::new(); m];
    for (depth, &e) in order.iter().enumerate() {
        let (u, v) = t.edge(e);
        for w in [u, v] {
            remaining[w] -= 1;
            if remaining[w] == 0 {
                completes[depth].push(w);
            }
        }
    }
    let mut search = Search {
        tree: t,
        order,
        completes,
        labels: vec![0; m],
        used: vec![false; m + 1],
        sums: vec![0; t.vertex_count()],
        taken_sums: vec![0; m * (m + 1) / 2 + 1],
        nodes: 0,
        budget,
    };
    let outcome = match search.run(0) {
        Step::Found => OracleOutcome::Found {
            labeling: EdgeLabeling::from_labels(search.labels.clone()),
        },
        Step::Exhausted => OracleOutcome::NoneExists,
        Step::OutOfBudget => OracleOutcome::Timeout { budget },
    };
    OracleResult {
        outcome,
        nodes_explored: search.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;
    use crate::verifier::is_antimagic;

    #[test]
    fn single_edge_has_no_labeling() {
        let k2 = parse_tree("0 1").unwrap();
        let result = search_antimagic(&k2, DEFAULT_BUDGET);
        assert_eq!(result.outcome, OracleOutcome::NoneExists);
        assert_eq!(result.nodes_explored, 1);
    }

    #[test]
    fn p3_found() {
        let p3 = parse_tree("0 1\n1 2").unwrap();
        let result = search_antimagic(&p3, DEFAULT_BUDGET);
        let phi = result.labeling().unwrap();
        assert!(is_antimagic(&p3, phi).is_antimagic());
        let mut sums = crate::verifier::vertex_sums(&p3, phi).unwrap().sums;
        sums.sort_unstable();
        assert_eq!(sums, vec![1, 2, 3]);
    }

    #[test]
    fn tiny_budget_times_out() {
        let t = parse_tree("0 1\n1 2\n2 3\n3 4\n4 5").unwrap();
        let result = search_antimagic(&t, 2);
        assert_eq!(result.outcome, OracleOutcome::Timeout { budget: 2 });
        assert_eq!(result.nodes_explored, 2);
    }

    #[test]
    fn completion_order_prefers_leaf_edges() {
        // star: every edge completes its leaf
        let t = parse_tree("0 1\n0 2\n0 3").unwrap();
        assert_eq!(completion_order(&t), vec![0, 1, 2]);
        // path 0-1-2-3: end edges complete a leaf first
        let t = parse_tree("1 2\n0 1\n2 3").unwrap();
        assert_eq!(completion_order(&t)[0], 1);
    }
}

//! Immutable tree representation with compressed adjacency.

use std::fmt;

use thiserror::Error;

/// Errors raised while building or parsing a [`Tree`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("line {line}: expected two non-negative vertex ids")]
    MalformedLine { line: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {u}-{v} closes a cycle")]
    CycleDetected { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("a tree needs at least one edge")]
    Empty,
}

/// A simple, connected, acyclic graph on vertices `0..n`.
///
/// Edge ids follow construction order. Adjacency lists are stored in a
/// single flat buffer, each list sorted by neighbor id.
#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    incidence: Vec<Incidence>,
}

/// One entry of a vertex's adjacency list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub neighbor: usize,
    pub edge: usize,
}

impl Tree {
    /// Builds a tree from an edge list, inferring `n` as the largest id plus one.
    pub fn from_edges(edges: Vec<(usize, usize)>) -> Result<Self, TreeError> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::with_vertex_count(n, edges)
    }

    /// Builds a tree on exactly `n` vertices.
    pub fn with_vertex_count(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, TreeError> {
        if edges.is_empty() {
            return Err(TreeError::Empty);
        }
        if let Some(&(u, _)) = edges.iter().find(|&&(u, v)| u == v) {
            return Err(TreeError::SelfLoop { vertex: u });
        }
        let max_id = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        if max_id >= n || n > edges.len() + 1 {
            // Some vertex never appears in an edge, or too few edges to connect n vertices.
            return Err(TreeError::Disconnected);
        }

        let mut components = DisjointSets::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if !components.union(u, v) {
                let (a, b) = (u.min(v), u.max(v));
                let duplicate = edges[..i]
                    .iter()
                    .any(|&(x, y)| (x.min(y), x.max(y)) == (a, b));
                return Err(if duplicate {
                    TreeError::DuplicateEdge { u, v }
                } else {
                    TreeError::CycleDetected { u, v }
                });
            }
        }
        // n <= m + 1 and no cycle means m = n - 1 exactly when connected.
        if edges.len() + 1 != n {
            return Err(TreeError::Disconnected);
        }

        let (offsets, incidence) = sorted_adjacency(n, &edges);
        Ok(Tree {
            edges,
            offsets,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Adjacency of `v`, sorted by neighbor id.
    pub fn incidences(&self, v: usize) -> &[Incidence] {
        &self.incidence[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidences(v).iter().map(|inc| inc.neighbor)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Edge id joining `u` and `v`, if they are adjacent.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.incidences(u);
        list.binary_search_by_key(&v, |inc| inc.neighbor)
            .ok()
            .map(|i| list[i].edge)
    }

    /// Returns the tree obtained by renaming every vertex `v` to `perm[v]`.
    /// Edge ids are preserved.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Tree, TreeError> {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Tree::with_vertex_count(self.vertex_count(), edges)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Builds CSR adjacency in linear time. Scanning source vertices in
/// increasing order leaves every destination list sorted by neighbor id.
fn sorted_adjacency(n: usize, edges: &[(usize, usize)]) -> (Vec<usize>, Vec<Incidence>) {
    let mut offsets = vec![0usize; n + 1];
    for &(u, v) in edges {
        offsets[u + 1] += 1;
        offsets[v + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let placeholder = Incidence {
        neighbor: usize::MAX,
        edge: usize::MAX,
    };

    let mut unsorted = vec![placeholder; offsets[n]];
    let mut cursor = offsets.clone();
    for (id, &(u, v)) in edges.iter().enumerate() {
        unsorted[cursor[u]] = Incidence {
            neighbor: v,
            edge: id,
        };
        cursor[u] += 1;
        unsorted[cursor[v]] = Incidence {
            neighbor: u,
            edge: id,
        };
        cursor[v] += 1;
    }

    let mut sorted = vec![placeholder; offsets[n]];
    cursor.copy_from_slice(&offsets);
    for u in 0..n {
        for inc in &unsorted[offsets[u]..offsets[u + 1]] {
            let v = inc.neighbor;
            sorted[cursor[v]] = Incidence {
                neighbor: u,
                edge: inc.edge,
            };
            cursor[v] += 1;
        }
    }
    (offsets, sorted)
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Parses the edge-list interchange format: one `u v` pair per line,
/// `#` starts a comment, blank lines are ignored.
pub fn parse_tree(text: &str) -> Result<Tree, TreeError> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let malformed = TreeError::MalformedLine { line: idx + 1 };
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed);
        };
        let (Ok(u), Ok(v)) = (a.parse::<usize>(), b.parse::<usize>()) else {
            return Err(malformed);
        };
        edges.push((u, v));
    }
    Tree::from_edges(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_small_path() {
        let t = parse_tree("0 1\n1 2").unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.edge_count(), 2);
        assert_eq!(t.degree(1), 2);
        assert!(t.is_leaf(0) && t.is_leaf(2));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            parse_tree("0 1\n0 1"),
            Err(TreeError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(parse_tree("0 1\n2 3"), Err(TreeError::Disconnected));
        assert_eq!(parse_tree("0 0"), Err(TreeError::SelfLoop { vertex: 0 }));
        assert_eq!(
            parse_tree("0 1\n1 2\n2 0"),
            Err(TreeError::CycleDetected { u: 2, v: 0 })
        );
        assert_eq!(
            parse_tree("0 1\n1 x"),
            Err(TreeError::MalformedLine { line: 2 })
        );
        assert_eq!(
            parse_tree("0 1 2"),
            Err(TreeError::MalformedLine { line: 1 })
        );
        assert_eq!(parse_tree("# nothing\n\n"), Err(TreeError::Empty));
        assert_eq!(parse_tree("0 2"), Err(TreeError::Disconnected));
    }

    #[test]
    fn duplicate_reported_in_reverse_orientation() {
        assert_eq!(
            parse_tree("0 1\n1 2\n2 1"),
            Err(TreeError::DuplicateEdge { u: 2, v: 1 })
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_tree("# a path\n0 1 # first\n\n  1   2\n").unwrap();
        assert_eq!(t.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn adjacency_sorted_and_consistent() {
        let t = Tree::from_edges(vec![(3, 0), (0, 2), (1, 0), (4, 2)]).unwrap();
        let nbrs: Vec<_> = t.neighbors(0).collect();
        assert_eq!(nbrs, vec![1, 2, 3]);
        for (id, &(u, v)) in t.edges().iter().enumerate() {
            assert_eq!(t.edge_between(u, v), Some(id));
            assert_eq!(t.edge_between(v, u), Some(id));
        }
        assert_eq!(t.edge_between(1, 4), None);
        let degree_sum: usize = t.vertices().map(|v| t.degree(v)).sum();
        assert_eq!(degree_sum, 2 * t.edge_count());
    }

    #[test]
    fn huge_ids_fail_fast() {
        assert_eq!(
            parse_tree("0 1\n1 999999999999"),
            Err(TreeError::Disconnected)
        );
    }
}

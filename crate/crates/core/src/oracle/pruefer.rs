use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tree::Tree;

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labeled tree
/// in linear time.
///
/// # Panics
/// If `n < 2`, the sequence length is not `n - 2`, or an entry is `>= n`.
pub fn decode(seq: &[usize], n: usize) -> Tree {
    assert!(n >= 2, "a Prüfer tree needs at least two vertices");
    assert_eq!(seq.len(), n - 2, "sequence length must be n - 2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::with_vertex_count(n, edges).expect("Prüfer decoding yields a tree")
}

/// Prüfer sequence of a labeled tree.
pub fn encode(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return Vec::new();
    }
    // Root at n - 1 so every other vertex has a parent.
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![n - 1];
    parent[n - 1] = n - 1;
    while let Some(v) = stack.pop() {
        for u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut seq = Vec::with_capacity(n - 2);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        let next = parent[leaf];
        seq.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    seq
}

/// All Prüfer sequences of length `n - 2` over `0..n` that begin with a
/// fixed prefix, in lexicographic order.
#[derive(Debug, Clone)]
pub struct PrueferSequences {
    n: usize,
    prefix_len: usize,
    current: Option<Vec<usize>>,
}

impl PrueferSequences {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(n, &[])
    }

    /// Sequences starting with `prefix`; lets workers split the space.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Self {
        assert!(n >= 2);
        let len = n - 2;
        let current = (prefix.len() <= len && prefix.iter().all(|&x| x < n)).then(|| {
            let mut seq = prefix.to_vec();
            seq.resize(len, 0);
            seq
        });
        PrueferSequences {
            n,
            prefix_len: prefix.len(),
            current,
        }
    }
}

impl Iterator for PrueferSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let seq = self.current.as_mut().unwrap();
        let mut i = seq.len();
        loop {
            if i == self.prefix_len {
                self.current = None;
                break;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < self.n {
                break;
            }
            seq[i] = 0;
        }
        Some(out)
    }
}

/// Every labeled tree on `n` vertices, `n^(n-2)` in total.
pub fn trees_from_pruefer(n: usize) -> impl Iterator<Item = Tree> {
    PrueferSequences::new(n).map(move |seq| decode(&seq, n))
}

/// Uniform random labeled tree on `n >= 2` vertices.
pub fn sample_tree(n: usize, seed: u64) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    decode(&seq, n)
}

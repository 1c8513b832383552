//! AHU canonical encoding for free trees, used to deduplicate enumeration sweeps.

use std::collections::VecDeque;

use crate::tree::Tree;

/// Canonical parenthesis encoding of `t`, rooted at its center.
///
/// For a bicentral tree both centers are tried and the lexicographically
/// smaller encoding wins. Two trees get equal encodings iff they are isomorphic.
pub fn canonical_form(t: &Tree) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_encoding(t, c))
        .min()
        .expect("a tree has at least one center")
}

/// The one or two centers of `t`, found by repeatedly stripping leaves.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU encoding of `t` rooted at `root`: each vertex is `(` followed by its
/// children's encodings in sorted order, then `)`.
pub fn rooted_encoding(t: &Tree, root: usize) -> String {
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }

    let mut codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut root_code = String::new();
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut codes[v]);
        children.sort_unstable();
        let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        code.push('(');
        children.iter().for_each(|c| code.push_str(c));
        code.push(')');
        if v == root {
            root_code = code;
        } else {
            codes[parent[v]].push(code);
        }
    }
    root_code
}

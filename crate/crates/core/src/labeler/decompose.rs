use serde::Serialize;

use super::LabelError;
use crate::even_path::{find_even_path, EvenPathStatus};
use crate::tree::Tree;

/// Which branch of the path-labeling case analysis applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    /// Two even-degree vertices.
    P1,
    /// `p > 1` and `v0` is a leaf of the tree.
    LeafEndpoint,
    /// `p > 1` odd, neither path endpoint is a leaf.
    SwapOnly,
    /// `p > 1` even, neither path endpoint is a leaf; the path is extended
    /// through odd-degree vertices down to a leaf.
    SwapAndExtend,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [
        CaseTag::P1,
        CaseTag::LeafEndpoint,
        CaseTag::SwapOnly,
        CaseTag::SwapAndExtend,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::P1 => "P1",
            CaseTag::LeafEndpoint => "LeafEndpoint",
            CaseTag::SwapOnly => "SwapOnly",
            CaseTag::SwapAndExtend => "SwapAndExtend",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Odd-degree path `x0..xl` hanging off `v_{2p+1} = x0`, together with one
/// pendant neighbor `y_i` of each `x_i`, `i < l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    /// `x0..xl`.
    pub path: Vec<usize>,
    /// Edge ids of `x_i x_{i+1}`.
    pub path_edges: Vec<usize>,
    /// `y0..y_{l-1}`.
    pub pendants: Vec<usize>,
    /// Edge ids of `x_i y_i`.
    pub pendant_edges: Vec<usize>,
}

impl Extension {
    pub fn len(&self) -> usize {
        self.path_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path_edges.is_empty()
    }
}

/// The spine `v0..v_{2p+1}` through the even-degree vertices and the data
/// the labeling steps need about it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenPathDecomposition {
    pub p: usize,
    /// `v0..v_{2p+1}`; the inner `2p` vertices are the even-degree ones.
    pub path: Vec<usize>,
    /// `path_edges[i - 1]` is the id of `e_i = v_{i-1} v_i`.
    pub path_edges: Vec<usize>,
    pub case_tag: CaseTag,
    /// Number of swapped label pairs on the leading path edges.
    pub swap_count: usize,
    pub extension: Option<Extension>,
    /// Index of the vertex ending the swapped prefix.
    pub k: usize,
}

impl EvenPathDecomposition {
    /// Extension length, 0 when there is no extension.
    pub fn ell(&self) -> usize {
        self.extension.as_ref().map_or(0, Extension::len)
    }

    /// Edge id of `e_i`, `1 <= i <= 2p + 1`.
    pub fn e(&self, i: usize) -> usize {
        self.path_edges[i - 1]
    }

    pub fn v(&self, i: usize) -> usize {
        self.path[i]
    }

    /// Vertices of the labeled subtree in root order: the path, then
    /// `x1..xl`, then `y0..y_{l-1}`.
    pub fn t1_vertices(&self) -> Vec<usize> {
        let mut out = self.path.clone();
        if let Some(ext) = &self.extension {
            out.extend_from_slice(&ext.path[1..]);
            out.extend_from_slice(&ext.pendants);
        }
        out
    }

    /// Edge ids of the labeled subtree.
    pub fn t1_edges(&self) -> Vec<usize> {
        let mut out = self.path_edges.clone();
        if let Some(ext) = &self.extension {
            out.extend_from_slice(&ext.path_edges);
            out.extend_from_slice(&ext.pendant_edges);
        }
        out
    }
}

/// Index of the swap-prefix end vertex.
fn conflict_index(p: usize) -> usize {
    if p.is_multiple_of(2) {
        p - 2
    } else {
        p - 1
    }
}

/// Neighbor of `end` other than `inner`, preferring leaves, then smaller ids.
fn pick_endpoint(t: &Tree, end: usize, inner: usize) -> usize {
    let candidates = t.neighbors(end).filter(|&u| u != inner);
    let mut best: Option<usize> = None;
    for u in candidates {
        // neighbors arrive sorted, so the first leaf is the smallest leaf
        if t.is_leaf(u) {
            return u;
        }
        best.get_or_insert(u);
    }
    best.expect("even-degree path end has a neighbor off the path")
}

/// Splits `t` into the extended even path and, when needed, the odd-degree
/// extension down to a leaf.
pub fn decompose(t: &Tree) -> Result<EvenPathDecomposition, LabelError> {
    let mut inner = match find_even_path(t) {
        EvenPathStatus::EvenPathOfEvenOrder(seq) => seq,
        status => return Err(LabelError::PreconditionViolated(status)),
    };
    let p = inner.len() / 2;

    let mut first = pick_endpoint(t, inner[0], inner[1]);
    let mut last = pick_endpoint(t, inner[2 * p - 1], inner[2 * p - 2]);
    if !t.is_leaf(first) && t.is_leaf(last) {
        inner.reverse();
        std::mem::swap(&mut first, &mut last);
    }

    let mut path = Vec::with_capacity(2 * p + 2);
    path.push(first);
    path.extend_from_slice(&inner);
    path.push(last);
    let path_edges: Vec<usize> = path
        .windows(2)
        .map(|w| {
            t.edge_between(w[0], w[1])
                .expect("consecutive path vertices are adjacent")
        })
        .collect();

    let case_tag = if p == 1 {
        CaseTag::P1
    } else if t.is_leaf(first) {
        CaseTag::LeafEndpoint
    } else if p % 2 == 1 {
        CaseTag::SwapOnly
    } else {
        CaseTag::SwapAndExtend
    };
    let swap_count = match case_tag {
        CaseTag::SwapOnly | CaseTag::SwapAndExtend => (p - 1) / 2,
        _ => 0,
    };
    let extension = match case_tag {
        CaseTag::SwapAndExtend => Some(extend_from(t, last, inner[2 * p - 1])),
        _ => None,
    };

    Ok(EvenPathDecomposition {
        p,
        path,
        path_edges,
        case_tag,
        swap_count,
        extension,
        k: conflict_index(p.max(2)),
    })
}

/// Walks from `x0` away from `came_from`, always to the smallest-id
/// neighbor, until a leaf is reached. The next-smallest neighbor at each
/// step becomes the pendant.
fn extend_from(t: &Tree, x0: usize, came_from: usize) -> Extension {
    let mut ext = Extension {
        path: vec![x0],
        path_edges: Vec::new(),
        pendants: Vec::new(),
        pendant_edges: Vec::new(),
    };
    let mut prev = came_from;
    let mut cur = x0;
    while !t.is_leaf(cur) {
        let mut forward = t.incidences(cur).iter().filter(|inc| inc.neighbor != prev);
        // Off-path vertices have odd degree, so a non-leaf has at least two forward neighbors.
        let next = forward.next().expect("non-leaf has a forward neighbor");
        let pendant = forward
            .next()
            .expect("odd-degree non-leaf has a second forward neighbor");
        ext.path.push(next.neighbor);
        ext.path_edges.push(next.edge);
        ext.pendants.push(pendant.neighbor);
        ext.pendant_edges.push(pendant.edge);
        prev = cur;
        cur = next.neighbor;
    }
    ext
}

//! Classification of the even-degree vertex set.

use std::fmt;

use serde::Serialize;

use crate::tree::Tree;

/// Why the even-degree vertices fail to induce a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotAPathReason {
    Disconnected,
    BranchingVertex,
}

/// Structure of the subgraph induced by the even-degree vertices.
///
/// `OddCount` is reported only when those vertices do induce a path; a
/// non-path set is always `NotAPath` regardless of its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvenPathStatus {
    EmptyEven,
    OddCount(usize),
    /// Ordered vertices `v1..v2p`; the end with the smaller id comes first.
    EvenPathOfEvenOrder(Vec<usize>),
    NotAPath(NotAPathReason),
}

impl EvenPathStatus {
    pub fn tag(&self) -> &'static str {
        match self {
            EvenPathStatus::EmptyEven => "EmptyEven",
            EvenPathStatus::OddCount(_) => "OddCount",
            EvenPathStatus::EvenPathOfEvenOrder(_) => "EvenPathOfEvenOrder",
            EvenPathStatus::NotAPath(_) => "NotAPath",
        }
    }

    /// Half the path order, when the status is `EvenPathOfEvenOrder`.
    pub fn p(&self) -> Option<usize> {
        match self {
            EvenPathStatus::EvenPathOfEvenOrder(seq) => Some(seq.len() / 2),
            _ => None,
        }
    }
}

impl fmt::Display for EvenPathStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvenPathStatus::EmptyEven => write!(f, "EmptyEven"),
            EvenPathStatus::OddCount(c) => write!(f, "OddCount({c})"),
            EvenPathStatus::EvenPathOfEvenOrder(seq) => {
                write!(f, "EvenPathOfEvenOrder(p={})", seq.len() / 2)
            }
            EvenPathStatus::NotAPath(NotAPathReason::Disconnected) => {
                write!(f, "NotAPath(disconnected)")
            }
            EvenPathStatus::NotAPath(NotAPathReason::BranchingVertex) => {
                write!(f, "NotAPath(branching vertex)")
            }
        }
    }
}

/// Classifies the even-degree vertices of `t` in O(n + m).
pub fn find_even_path(t: &Tree) -> EvenPathStatus {
    let even = |v: usize| t.degree(v).is_multiple_of(2);
    let evens: Vec<usize> = t.vertices().filter(|&v| even(v)).collect();
    if evens.is_empty() {
        return EvenPathStatus::EmptyEven;
    }

    let mut induced_edges = 0usize;
    let mut endpoints = Vec::with_capacity(2);
    for &v in &evens {
        let inner = t.neighbors(v).filter(|&u| even(u)).count();
        if inner > 2 {
            return EvenPathStatus::NotAPath(NotAPathReason::BranchingVertex);
        }
        if inner <= 1 {
            endpoints.push(v);
        }
        induced_edges += inner;
    }
    // A forest on k vertices is connected iff it has k - 1 edges.
    if induced_edges / 2 + 1 != evens.len() {
        return EvenPathStatus::NotAPath(NotAPathReason::Disconnected);
    }
    if evens.len() % 2 == 1 {
        return EvenPathStatus::OddCount(evens.len());
    }

    let start = endpoints[0].min(endpoints[1]);
    let mut order = Vec::with_capacity(evens.len());
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        order.push(cur);
        let next = t.neighbors(cur).find(|&u| u != prev && even(u));
        match next {
            Some(u) => {
                prev = cur;
                cur = u;
            }
            None => break,
        }
    }
    debug_assert_eq!(order.len(), evens.len());
    EvenPathStatus::EvenPathOfEvenOrder(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    #[test]
    fn small_cases() {
        let p4 = parse_tree("0 1\n1 2\n2 3").unwrap();
        assert_eq!(
            find_even_path(&p4),
            EvenPathStatus::EvenPathOfEvenOrder(vec![1, 2])
        );
        let star = parse_tree("0 1\n0 2\n0 3").unwrap();
        assert_eq!(find_even_path(&star), EvenPathStatus::EmptyEven);
        let p5 = parse_tree("0 1\n1 2\n2 3\n3 4").unwrap();
        assert_eq!(find_even_path(&p5), EvenPathStatus::OddCount(3));
    }

    #[test]
    fn orientation_starts_at_smaller_end() {
        // 3 - 1 - 2 - 0: evens are 1 and 2
        let t = parse_tree("3 1\n1 2\n2 0").unwrap();
        assert_eq!(
            find_even_path(&t),
            EvenPathStatus::EvenPathOfEvenOrder(vec![1, 2])
        );
    }

    #[test]
    fn branching_and_disconnected() {
        // center 0 of degree 4 with four legs of length 2: evens 0,1,2,3,4 form a star
        let spider = parse_tree("0 1\n0 2\n0 3\n0 4\n1 5\n2 6\n3 7\n4 8").unwrap();
        assert_eq!(
            find_even_path(&spider),
            EvenPathStatus::NotAPath(NotAPathReason::BranchingVertex)
        );
        let split = parse_tree("0 1\n1 2\n2 3\n2 4\n3 5").unwrap();
        assert_eq!(
            find_even_path(&split),
            EvenPathStatus::NotAPath(NotAPathReason::Disconnected)
        );
    }

    #[test]
    fn spider_with_two_long_legs() {
        // Center 0 has degree 4. Legs 0-1-2 and 0-3-4 have length 2, plus leaves 5 and 6.
        // Degrees: 0:4, 1:2, 3:2, others 1. Evens {0,1,3} form the path 1-0-3.
        let t = parse_tree("0 1\n1 2\n0 3\n3 4\n0 5\n0 6").unwrap();
        assert_eq!(brute_force_status(&t), find_even_path(&t).tag());
        assert_eq!(find_even_path(&t), EvenPathStatus::OddCount(3));

        // Legs 0-1-2 and 0-5-6-7 with leaves 3, 4: evens 1, 0, 5, 6 form a path.
        let t = parse_tree("0 1\n1 2\n0 3\n0 4\n0 5\n5 6\n6 7").unwrap();
        assert_eq!(brute_force_status(&t), find_even_path(&t).tag());
        assert_eq!(
            find_even_path(&t),
            EvenPathStatus::EvenPathOfEvenOrder(vec![1, 0, 5, 6])
        );
    }

    /// Degree enumeration plus pairwise adjacency, independent of the walk.
    fn brute_force_status(t: &Tree) -> &'static str {
        let evens: Vec<usize> = t
            .vertices()
            .filter(|&v| t.degree(v).is_multiple_of(2))
            .collect();
        if evens.is_empty() {
            return "EmptyEven";
        }
        let adjacent = |a: usize, b: usize| t.neighbors(a).any(|x| x == b);
        let mut edges = 0;
        for (i, &a) in evens.iter().enumerate() {
            let mut deg = 0;
            for (j, &b) in evens.iter().enumerate() {
                if i != j && adjacent(a, b) {
                    deg += 1;
                    if i < j {
                        edges += 1;
                    }
                }
            }
            if deg > 2 {
                return "NotAPath";
            }
        }
        if edges + 1 != evens.len() {
            return "NotAPath";
        }
        if evens.len() % 2 == 1 {
            "OddCount"
        } else {
            "EvenPathOfEvenOrder"
        }
    }
}

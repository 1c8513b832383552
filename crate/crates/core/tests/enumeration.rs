use std::collections::BTreeMap;

use antimagic_core::oracle::{search_antimagic, trees_from_pruefer, OracleOutcome, DEFAULT_BUDGET};
use antimagic_core::{
    canonical_form, find_even_path, is_antimagic, label_with, residue_audit, vertex_sums,
    EdgeLabeling, LabelOptions, Tree,
};
use itertools::Itertools;

/// Free trees on n vertices, n = 0..=10.
const FREE_TREE_COUNTS: [usize; 11] = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

fn edge_set(t: &Tree) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = t
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    edges
}

/// Isomorphism by trying every vertex bijection.
fn brute_isomorphic(a: &Tree, b: &Tree) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return false;
    }
    let degrees = |t: &Tree| t.vertices().map(|v| t.degree(v)).sorted().collect_vec();
    if degrees(a) != degrees(b) {
        return false;
    }
    let target = edge_set(b);
    (0..n).permutations(n).any(|perm| {
        let mut mapped: Vec<_> = a
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        mapped.sort_unstable();
        mapped == target
    })
}

fn classes(n: usize) -> BTreeMap<String, Tree> {
    let mut out = BTreeMap::new();
    for t in trees_from_pruefer(n) {
        out.entry(canonical_form(&t)).or_insert(t);
    }
    out
}

#[test]
fn five_vertex_trees_have_three_forms() {
    assert_eq!(classes(5).len(), 3);
    assert_eq!(classes(4).len(), 2);
}

#[test]
fn canonical_form_counts_match_free_tree_counts() {
    for (n, &count) in FREE_TREE_COUNTS.iter().enumerate().take(9).skip(2) {
        assert_eq!(classes(n).len(), count, "n = {n}");
    }
}

#[test]
fn canonical_form_separates_every_class() {
    // Pairwise non-isomorphic representatives plus the class count above
    // give "equal encodings iff isomorphic".
    for n in 2..=8 {
        let reps: Vec<Tree> = classes(n).into_values().collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!brute_isomorphic(a, b), "n = {n}: {a:?} ~ {b:?}");
            }
        }
    }
}

#[test]
fn equal_forms_are_isomorphic_for_small_n() {
    for n in 2..=6 {
        let reps = classes(n);
        for t in trees_from_pruefer(n) {
            assert!(brute_isomorphic(&t, &reps[&canonical_form(&t)]));
        }
    }
}

#[test]
fn labeler_on_all_small_trees() {
    let checks = LabelOptions {
        check_invariants: true,
    };
    let mut labeled = 0;
    for n in 2..=8 {
        for t in trees_from_pruefer(n) {
            if find_even_path(&t).p().is_none() {
                continue;
            }
            let c = label_with(&t, checks).unwrap_or_else(|e| panic!("{t:?}: {e}"));
            assert!(is_antimagic(&t, &c.labeling).is_antimagic(), "{t:?}");
            let audit = residue_audit(&t, &c.decomposition, &c.labeling, c.ell());
            assert!(audit.ok, "{t:?}: {:?}", audit.deviations);
            // only the exception pair may share a residue in the full tree
            let report = vertex_sums(&t, &c.labeling).unwrap();
            assert!(report.residue_collisions.len() <= 1);
            labeled += 1;
        }
    }
    assert!(labeled > 0);
}

#[test]
fn oracle_and_labeler_agree_on_valid_trees() {
    for n in 4..=8 {
        for t in trees_from_pruefer(n) {
            if find_even_path(&t).p().is_none() {
                continue;
            }
            let result = search_antimagic(&t, DEFAULT_BUDGET);
            let found = result.labeling().expect("oracle finds a labeling");
            assert!(is_antimagic(&t, found).is_antimagic());
        }
    }
}

#[test]
fn every_small_tree_is_antimagic_except_k2() {
    let k2 = trees_from_pruefer(2).next().unwrap();
    assert_eq!(
        search_antimagic(&k2, DEFAULT_BUDGET).outcome,
        OracleOutcome::NoneExists
    );
    for n in 3..=8 {
        for t in classes(n).into_values() {
            let result = search_antimagic(&t, DEFAULT_BUDGET);
            assert!(
                matches!(result.outcome, OracleOutcome::Found { .. }),
                "{t:?}"
            );
        }
    }
}

/// Unpruned search over all m! bijections.
fn brute_force_exists(t: &Tree) -> bool {
    let m = t.edge_count();
    (1..=m)
        .permutations(m)
        .any(|labels| is_antimagic(t, &EdgeLabeling::from_labels(labels)).is_antimagic())
}

#[test]
fn pruned_search_matches_unpruned_brute_force() {
    for n in 2..=7 {
        for t in classes(n).into_values() {
            let pruned = search_antimagic(&t, DEFAULT_BUDGET).labeling().is_some();
            assert_eq!(pruned, brute_force_exists(&t), "{t:?}");
        }
    }
}

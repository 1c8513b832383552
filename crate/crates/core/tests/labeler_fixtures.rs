use antimagic_core::labeler::{
    apply_swaps, build_pair_schedule, expected_residues, initial_path_labels, label_step1,
    label_step2, ExceptionPair,
};
use antimagic_core::{
    decompose, is_antimagic, label, label_with, parse_tree, residue_audit, vertex_sums, CaseTag,
    EvenPathStatus, LabelError, LabelOptions, Tree,
};

fn tree(edges: &[(usize, usize)]) -> Tree {
    Tree::from_edges(edges.to_vec()).unwrap()
}

/// p = 5, m = 21, neither path endpoint a leaf.
fn p5_m21() -> Tree {
    let mut edges: Vec<_> = (1..=11).map(|i| (i - 1, i)).collect();
    edges.extend([(0, 12), (0, 13), (11, 14), (11, 15)]);
    edges.extend([(2, 16), (2, 17), (5, 18), (5, 19), (8, 20), (8, 21)]);
    tree(&edges)
}

/// p = 4, m = 21, extension of length 3 from v9 and two nontrivial forest
/// components (at v0 and v3).
fn p4_m21() -> Tree {
    let mut edges: Vec<_> = (1..=9).map(|i| (i - 1, i)).collect();
    edges.extend([(9, 10), (10, 11), (11, 12)]);
    edges.extend([(9, 13), (10, 14), (11, 15)]);
    edges.extend([(0, 16), (0, 17), (16, 18), (16, 19)]);
    edges.extend([(3, 20), (3, 21)]);
    tree(&edges)
}

fn p4_plus_two_leaves() -> Tree {
    parse_tree("0 1\n1 2\n2 3\n2 4\n2 5").unwrap()
}

#[test]
fn swap_only_p5_m21_parameters() {
    let t = p5_m21();
    assert_eq!(t.edge_count(), 21);
    let d = decompose(&t).unwrap();
    assert_eq!(
        (d.p, d.case_tag, d.swap_count, d.k),
        (5, CaseTag::SwapOnly, 2, 4)
    );

    assert_eq!(
        initial_path_labels(5, 21),
        vec![1, 17, 2, 18, 3, 19, 4, 20, 5, 21, 6]
    );
    let (partial, ell) = label_step1(&t, &d);
    assert_eq!(ell, 0);
    let path: Vec<_> = (1..=11).map(|i| partial.get(d.e(i)).unwrap()).collect();
    assert_eq!(path, vec![17, 1, 18, 2, 3, 19, 4, 20, 5, 21, 6]);

    let expected = expected_residues(&d, 21, 0);
    let want: Vec<usize> = (0..=6).chain((17..=22).filter(|&r| r != 21)).collect();
    assert_eq!(expected.residues, want);
    assert_eq!(expected.exception, None);

    // after the swaps v0 sums to m - p + 1 and v_k to p
    let sums = spine_sums(&t, &d, &partial);
    assert_eq!(sums[d.v(0)], 17);
    assert_eq!(sums[d.v(d.k)], 5);
}

#[test]
fn swap_and_extend_p4_m21_parameters() {
    let t = p4_m21();
    let d = decompose(&t).unwrap();
    assert_eq!(
        (d.p, d.case_tag, d.swap_count, d.k),
        (4, CaseTag::SwapAndExtend, 1, 2)
    );
    let ext = d.extension.as_ref().unwrap();
    assert_eq!(ext.path, vec![9, 10, 11, 12]);
    assert_eq!(ext.pendants, vec![13, 14, 15]);

    let mut before = initial_path_labels(4, 21);
    assert_eq!(before, vec![1, 18, 2, 19, 3, 20, 4, 21, 5]);
    apply_swaps(&mut before, 1);
    assert_eq!(&before[..2], &[18, 1]);

    let (partial, ell) = label_step1(&t, &d);
    assert_eq!(ell, 3);
    assert_eq!(partial.get(d.e(9)), Some(8));
    let path_labels: Vec<_> = ext
        .path_edges
        .iter()
        .map(|&e| partial.get(e).unwrap())
        .collect();
    assert_eq!(path_labels, vec![5, 6, 7]);
    let pendant_labels: Vec<_> = ext
        .pendant_edges
        .iter()
        .map(|&e| partial.get(e).unwrap())
        .collect();
    assert_eq!(pendant_labels, vec![17, 16, 15]);

    let mut used: Vec<usize> = partial
        .as_slice()
        .iter()
        .copied()
        .filter(|&l| l != 0)
        .collect();
    used.sort_unstable();
    let want: Vec<usize> = (1..=8).chain(15..=21).collect();
    assert_eq!(used, want);

    let expected = expected_residues(&d, 21, 3);
    let want: Vec<usize> = (0..=7).chain((15..=22).filter(|&r| r != 20)).collect();
    assert_eq!(expected.residues, want);
    assert_eq!(
        expected.exception,
        Some(ExceptionPair {
            leaf: 12,
            partner: 9
        })
    );
    let sums = spine_sums(&t, &d, &partial);
    assert_eq!(sums[9], 21 + 4 + 3 + 2);
    assert_eq!(sums[12], 4 + 3);
    assert_eq!(sums[9] % 23, 7);

    let schedule = build_pair_schedule(&t, &d, &partial).unwrap();
    assert_eq!(schedule.len(), 3);
    let full = label_step2(partial, &schedule, 4, 3, 21).unwrap();
    let pairs: Vec<_> = schedule
        .pairs
        .iter()
        .map(|&(a, b)| (full.get(a).unwrap(), full.get(b).unwrap()))
        .collect();
    assert_eq!(pairs, vec![(9, 14), (10, 13), (11, 12)]);
    assert!(pairs.iter().all(|&(a, b)| a + b == 23));

    assert!(is_antimagic(&t, &full).is_antimagic());
    let audit = residue_audit(&t, &d, &full, 3);
    assert!(audit.ok, "{:?}", audit.deviations);
    assert_eq!(audit.t2_interval, Some((9, 14)));
    assert_eq!(audit.collisions, vec![(9, 12)]);
}

#[test]
fn p4_path_end_to_end() {
    let t = parse_tree("0 1\n1 2\n2 3").unwrap();
    let labeling = label(&t).unwrap();
    assert_eq!(labeling.as_slice(), &[1, 3, 2]);
    assert_eq!(vertex_sums(&t, &labeling).unwrap().sums, vec![1, 4, 5, 2]);

    let d = decompose(&t).unwrap();
    let expected = expected_residues(&d, 3, 0);
    assert_eq!(expected.residues, vec![0, 1, 2, 4]);
    let audit = residue_audit(&t, &d, &labeling, 0);
    assert!(audit.ok);
    assert_eq!(audit.t2_interval, None);
    assert_eq!(audit.residue_sets.observed, vec![0, 1, 2, 4]);
}

#[test]
fn p4_with_two_leaves() {
    let t = p4_plus_two_leaves();
    let d = decompose(&t).unwrap();
    assert_eq!(d.path, vec![0, 1, 2, 3]);
    let (partial, ell) = label_step1(&t, &d);
    let schedule = build_pair_schedule(&t, &d, &partial).unwrap();
    assert_eq!(schedule.pairs, vec![(3, 4)]);
    let full = label_step2(partial, &schedule, 1, ell, 5).unwrap();
    assert_eq!(full.get(3), Some(3));
    assert_eq!(full.get(4), Some(4));

    let report = vertex_sums(&t, &full).unwrap();
    assert_eq!(report.sums, vec![1, 6, 14, 2, 3, 4]);
    assert!(report.collisions.is_empty());
    assert_eq!(label(&t).unwrap(), full);

    let audit = residue_audit(&t, &d, &full, 0);
    assert!(audit.ok);
    assert_eq!(report.residues[4], 3);
    assert_eq!(report.residues[5], 4);
}

#[test]
fn leaf_endpoint_case() {
    // p = 3: path 0..7 with 0 a leaf, v7 carries two leaves.
    let t = parse_tree("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n7 9").unwrap();
    let d = decompose(&t).unwrap();
    assert_eq!(d.case_tag, CaseTag::LeafEndpoint);
    assert_eq!(t.degree(d.v(0)), 1);
    let expected = expected_residues(&d, 9, 0);
    assert_eq!(
        expected.exception,
        Some(ExceptionPair {
            leaf: d.v(0),
            partner: d.v(5)
        })
    );
    let labeling = label(&t).unwrap();
    let sums = vertex_sums(&t, &labeling).unwrap().sums;
    assert_eq!(sums[d.v(0)], 1);
    assert_eq!(sums[d.v(5)], 9 + 3);
    assert!(is_antimagic(&t, &labeling).is_antimagic());
}

#[test]
fn p2_without_leaf_endpoints() {
    // swap_count = 0, so the conflict vertex is v0 itself.
    let t = parse_tree("0 1\n1 2\n2 3\n3 4\n4 5\n0 6\n0 7\n5 8\n5 9").unwrap();
    let d = decompose(&t).unwrap();
    assert_eq!(
        (d.p, d.case_tag, d.swap_count, d.k),
        (2, CaseTag::SwapAndExtend, 0, 0)
    );
    assert_eq!(d.ell(), 1);
    let construction = label_with(
        &t,
        LabelOptions {
            check_invariants: true,
        },
    )
    .unwrap();
    let labeling = &construction.labeling;
    assert!(is_antimagic(&t, labeling).is_antimagic());
    let sums = spine_sums(&t, &d, labeling);
    assert_eq!(sums[d.v(d.k)], 1);
    let audit = residue_audit(&t, &d, labeling, 1);
    assert!(audit.ok, "{:?}", audit.deviations);
}

#[test]
fn empty_schedule_when_spine_is_everything() {
    let t = parse_tree("0 1\n1 2\n2 3").unwrap();
    let d = decompose(&t).unwrap();
    let (partial, ell) = label_step1(&t, &d);
    let schedule = build_pair_schedule(&t, &d, &partial).unwrap();
    assert!(schedule.is_empty());
    let full = label_step2(partial.clone(), &schedule, 1, ell, 3).unwrap();
    assert_eq!(full, partial);
    assert!(full.is_complete());
}

#[test]
fn interval_mismatch_is_reported() {
    let t = p4_plus_two_leaves();
    let d = decompose(&t).unwrap();
    let (partial, _) = label_step1(&t, &d);
    let empty = Default::default();
    assert_eq!(
        label_step2(partial, &empty, 1, 0, 5),
        Err(LabelError::IntervalMismatch {
            pairs: 0,
            interval: (3, 4)
        })
    );
}

#[test]
fn preconditions() {
    let star = parse_tree("0 1\n0 2\n0 3").unwrap();
    assert_eq!(
        label(&star),
        Err(LabelError::PreconditionViolated(EvenPathStatus::EmptyEven))
    );
    let p5 = parse_tree("0 1\n1 2\n2 3\n3 4").unwrap();
    assert_eq!(
        label(&p5),
        Err(LabelError::PreconditionViolated(EvenPathStatus::OddCount(
            3
        )))
    );
}

fn spine_sums(
    t: &Tree,
    d: &antimagic_core::EvenPathDecomposition,
    labels: &antimagic_core::EdgeLabeling,
) -> Vec<usize> {
    let mut sums = vec![0; t.vertex_count()];
    for e in d.t1_edges() {
        let (u, v) = t.edge(e);
        let l = labels.get(e).unwrap_or(0);
        sums[u] += l;
        sums[v] += l;
    }
    sums
}

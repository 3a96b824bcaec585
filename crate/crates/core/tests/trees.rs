mod common;

use proptest::prelude::*;
use turanlab::blowup::{edge_blowup, Origin};
use turanlab::tree::{bipartition, independent_covering_number, TreeAnalysis};
use turanlab::Graph;

use common::{random_tree, rng, trees};

#[test]
fn tree_counts_match_known_sequence() {
    let counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
}

#[test]
fn gallai_and_konig_on_all_small_trees() {
    assert_eq!(
        common::suite_tree_invariants(10),
        1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106
    );
}

#[test]
fn independent_covering_on_all_small_forests() {
    assert!(common::suite_independent_covering(8) > 0);
}

#[test]
fn blowup_sizes_on_random_trees() {
    assert_eq!(common::suite_blowup_sizes(200, 0x5eed), 200);
}

#[test]
fn analysis_cross_checks_on_all_small_trees() {
    for n in 2..=10 {
        for t in trees(n) {
            let a = TreeAnalysis::new(&t).unwrap();
            assert_eq!(a.q, a.class_a_size());
            assert!(a.class_a_size() <= a.class_b_size());
            assert_eq!(a.class_a_size() + a.class_b_size(), n);
            assert!(a.alpha >= a.class_b_size());
            assert_eq!(independent_covering_number(&t).unwrap(), a.q);
            assert!(a.whlm.k >= 1);
        }
    }
}

proptest! {
    #[test]
    fn bipartition_is_proper(n in 2usize..40, seed in any::<u64>()) {
        let t = random_tree(n, &mut rng(seed));
        prop_assert!(t.is_tree());
        let bip = bipartition(&t).unwrap();
        prop_assert!(bip.class_a.len() <= bip.class_b.len());
        for (u, v) in t.edges() {
            prop_assert_ne!(bip.class_a.contains(&u), bip.class_a.contains(&v));
        }
    }

    #[test]
    fn blowup_structure(n in 2usize..15, p in 2usize..6, seed in any::<u64>()) {
        let t = random_tree(n, &mut rng(seed));
        let b = edge_blowup(&t, p).unwrap();
        let g = &b.graph;
        // the originals induce T itself, every fresh vertex has degree p
        let originals: Vec<usize> = (0..n).collect();
        prop_assert_eq!(g.induced_subgraph(&originals).unwrap(), t.clone());
        for v in n..g.order() {
            prop_assert_eq!(g.degree(v), p);
            let Origin::Edge(x, y) = b.origin[v] else { panic!("fresh vertex {v} tagged original") };
            prop_assert!(t.has_edge(x, y) && g.has_edge(v, x) && g.has_edge(v, y));
        }
        for v in 0..n {
            prop_assert_eq!(g.degree(v), t.degree(v) * p);
        }
    }
}

#[test]
fn blowup_rejects_small_p() {
    assert!(edge_blowup(&Graph::path(3), 1).is_err());
}

mod common;

use std::collections::BTreeSet;

use common::{atlas, brute_code};
use ivgraph::enumeration::{enumerate_interval_graphs, enumerate_matchings, realization_from_matching, SweepConfig};
use ivgraph::graph::intersection_graph;
use ivgraph::recognition::{is_chordal, maximal_cliques};
use ivgraph::{canonical_form, recognize, verify_realization, Graph};
use proptest::prelude::*;

/// Brute-force membership: some matching realization is isomorphic to `g`.
fn realized_by_some_matching(g: &Graph) -> bool {
    let target = brute_code(g);
    enumerate_matchings(g.order(), 10)
        .unwrap()
        .any(|m| brute_code(&intersection_graph(&realization_from_matching(&m)).unwrap()) == target)
}

#[test]
fn small_examples_against_matching_oracle() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!realized_by_some_matching(&c4));
    assert!(!recognize(&c4).is_interval);
    assert!(realized_by_some_matching(&claw));
    assert!(recognize(&claw).is_interval);
    assert!(recognize(&p4).is_interval);
    // every 4-vertex graph except C4 is interval
    let failing: Vec<_> = atlas(4).into_iter().filter(|g| !realized_by_some_matching(g)).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(brute_code(&failing[0]), brute_code(&c4));
}

#[test]
fn recognition_agrees_with_matching_sweep_up_to_seven() {
    for n in 1..=7 {
        let interval_codes: BTreeSet<_> =
            enumerate_interval_graphs(n, &SweepConfig::default()).unwrap().into_iter().collect();
        let graphs = atlas(n);
        let mut positives = 0;
        for g in &graphs {
            let r = recognize(g);
            assert_eq!(r.is_interval, interval_codes.contains(&canonical_form(g).unwrap()), "{g:?}");
            if r.is_interval {
                positives += 1;
                assert!(verify_realization(g, r.realization.as_ref().unwrap()).unwrap());
            } else {
                assert!(r.reason.is_some() && r.realization.is_none());
            }
        }
        assert_eq!(positives, interval_codes.len(), "n = {n}");
    }
}

#[test]
fn hereditary_and_union_closure() {
    let positives: Vec<Graph> =
        (1..=6).flat_map(atlas).filter(|g| recognize(g).is_interval).collect();
    for g in &positives {
        for v in 0..g.order() {
            assert!(recognize(&g.remove_vertex(v)).is_interval);
        }
    }
    for (i, a) in positives.iter().enumerate().step_by(5) {
        for b in positives.iter().skip(i % 11).step_by(13) {
            let u = a.disjoint_union(b).unwrap();
            let r = recognize(&u);
            assert!(r.is_interval);
            assert!(verify_realization(&u, r.realization.as_ref().unwrap()).unwrap());
        }
    }
}

#[test]
fn non_chordal_graphs_are_rejected_early() {
    for g in atlas(6) {
        if !is_chordal(&g) {
            assert!(!recognize(&g).is_interval);
        }
    }
}

proptest! {
    #[test]
    fn random_realizations_are_recognized(raw in proptest::collection::vec((-30i64..30, 0i64..12), 1..=16)) {
        let intervals: Vec<(i64, i64)> = raw.iter().map(|&(lo, len)| (lo, lo + len)).collect();
        let g = intersection_graph(&ivgraph::IntervalRealization::new(intervals).unwrap()).unwrap();
        let r = recognize(&g);
        prop_assert!(r.is_interval);
        prop_assert!(verify_realization(&g, r.realization.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn maximal_cliques_are_maximal_and_cover_edges(raw in proptest::collection::vec((-10i64..10, 0i64..6), 1..=12)) {
        let intervals: Vec<(i64, i64)> = raw.iter().map(|&(lo, len)| (lo, lo + len)).collect();
        let g = intersection_graph(&ivgraph::IntervalRealization::new(intervals).unwrap()).unwrap();
        let cliques = maximal_cliques(&g);
        let masks: Vec<u64> = cliques.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        for (i, c) in cliques.iter().enumerate() {
            for (x, &u) in c.iter().enumerate() {
                for &v in &c[x + 1..] {
                    prop_assert!(g.has_edge(u, v));
                }
            }
            // no vertex outside extends the clique
            for w in 0..g.order() {
                if masks[i] >> w & 1 == 0 {
                    prop_assert!(c.iter().any(|&u| !g.has_edge(u, w)));
                }
            }
        }
        for (u, v) in g.edges() {
            prop_assert!(masks.iter().any(|m| m >> u & 1 == 1 && m >> v & 1 == 1));
        }
        let distinct: BTreeSet<_> = masks.iter().collect();
        prop_assert_eq!(distinct.len(), masks.len());
    }
}

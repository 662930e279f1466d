use std::collections::BTreeSet;

use ivgraph::enumeration::{
    count_interval_graphs, double_factorial_odd, enumerate_interval_graphs, SweepConfig,
};
use ivgraph::graph6::emit_graph6;
use ivgraph::recognize;

const KNOWN: [u64; 8] = [1, 2, 4, 10, 27, 92, 369, 1807];

#[test]
fn counts_and_census_through_eight() {
    let cfg = SweepConfig::default();
    for n in 1..=8 {
        let r = count_interval_graphs(n, &cfg).unwrap();
        assert_eq!(r.i_n, KNOWN[n - 1], "n = {n}");
        assert_eq!(r.matchings_visited, double_factorial_odd(n));
        if n >= 2 {
            assert!(r.i_n < r.matchings_visited);
        }
    }
}

#[test]
fn counts_are_monotone() {
    let cfg = SweepConfig::default();
    let counts: Vec<u64> = (1..=7).map(|n| count_interval_graphs(n, &cfg).unwrap().i_n).collect();
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn worker_count_does_not_change_codes() {
    for n in [5, 7] {
        let one = enumerate_interval_graphs(n, &SweepConfig::with_workers(1)).unwrap();
        let four = enumerate_interval_graphs(n, &SweepConfig::with_workers(4)).unwrap();
        assert_eq!(one, four);
        assert!(one.windows(2).all(|w| w[0] < w[1]), "stream sorted and duplicate-free");
    }
}

#[test]
fn representatives_are_interval_and_distinct() {
    let codes = enumerate_interval_graphs(6, &SweepConfig::default()).unwrap();
    let mut lines = BTreeSet::new();
    for code in &codes {
        let g = code.to_graph().unwrap();
        assert!(recognize(&g).is_interval);
        assert!(lines.insert(emit_graph6(&g)));
    }
    assert_eq!(lines.len(), 92);
}

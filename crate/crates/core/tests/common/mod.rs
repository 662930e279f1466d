//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the canonical labeling search or the recognizer.
#![allow(dead_code)]

use itertools::Itertools;
use ivgraph::graph6::parse_graph6_lines;
use ivgraph::{Color, ColoredGraph, Graph};

pub fn atlas(n: usize) -> Vec<Graph> {
    let text = match n {
        1 => include_str!("../data/atlas_n1.g6"),
        2 => include_str!("../data/atlas_n2.g6"),
        3 => include_str!("../data/atlas_n3.g6"),
        4 => include_str!("../data/atlas_n4.g6"),
        5 => include_str!("../data/atlas_n5.g6"),
        6 => include_str!("../data/atlas_n6.g6"),
        7 => include_str!("../data/atlas_n7.g6"),
        _ => panic!("no atlas for n = {n}"),
    };
    parse_graph6_lines(text).unwrap()
}

pub fn atlas_text(n: usize) -> &'static str {
    match n {
        5 => include_str!("../data/atlas_n5.g6"),
        7 => include_str!("../data/atlas_n7.g6"),
        _ => panic!("no atlas text for n = {n}"),
    }
}

/// Smallest upper-triangle bit string over all vertex permutations.
pub fn brute_code(g: &Graph) -> Vec<bool> {
    let n = g.order();
    (0..n)
        .permutations(n)
        .map(|p| upper_triangle(g, &p))
        .min()
        .unwrap_or_default()
}

/// Like [`brute_code`] but only over color-preserving permutations, with
/// the color sequence prepended.
pub fn brute_colored_code(cg: &ColoredGraph) -> (Vec<Color>, Vec<bool>) {
    let n = cg.graph().order();
    (0..n)
        .permutations(n)
        .map(|p| {
            let colors: Vec<Color> = p.iter().map(|&v| cg.color(v)).collect();
            (colors, upper_triangle(cg.graph(), &p))
        })
        .min()
        .unwrap_or_default()
}

/// Bits `adj(order[i], order[j])` for `i < j`.
fn upper_triangle(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * n / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(g.has_edge(order[i], order[j]));
        }
    }
    out
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Deterministic pseudo-random permutation of `0..n`.
pub fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = (s >> 33) as usize % (i + 1);
        p.swap(i, j);
    }
    p
}

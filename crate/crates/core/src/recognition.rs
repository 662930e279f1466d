//! Interval-graph recognition through the maximal-clique characterization:
//! a graph is an interval graph iff its maximal cliques can be ordered so
//! that the cliques containing any fixed vertex are consecutive. Such an
//! ordering is itself a realization, vertex `v` getting
//! `[first clique index, last clique index]`.

use std::collections::HashSet;

use serde::Serialize;

use crate::graph::{bit, bits, intersection_graph, Graph, IntervalRealization};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NegativeReason {
    NotChordal,
    CliquesNotConsecutive,
}

impl NegativeReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NegativeReason::NotChordal => "not-chordal",
            NegativeReason::CliquesNotConsecutive => "cliques-not-consecutive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub is_interval: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realization: Option<IntervalRealization>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<NegativeReason>,
}

impl RecognitionResult {
    fn negative(reason: NegativeReason) -> Self {
        RecognitionResult { is_interval: false, realization: None, reason: Some(reason) }
    }
}

pub fn recognize(g: &Graph) -> RecognitionResult {
    if !is_chordal(g) {
        return RecognitionResult::negative(NegativeReason::NotChordal);
    }
    let cliques = maximal_clique_masks(g);
    match consecutive_clique_order(&cliques) {
        Some(order) => {
            let mut spans = vec![(i64::MAX, i64::MIN); g.order()];
            for (pos, &c) in order.iter().enumerate() {
                for v in bits(cliques[c]) {
                    let s = &mut spans[v];
                    s.0 = s.0.min(pos as i64);
                    s.1 = s.1.max(pos as i64);
                }
            }
            let realization = IntervalRealization::new(spans).expect("every vertex lies in a clique");
            RecognitionResult { is_interval: true, realization: Some(realization), reason: None }
        }
        None => RecognitionResult::negative(NegativeReason::CliquesNotConsecutive),
    }
}

/// True iff `r` realizes `g` under the identity labeling.
pub fn verify_realization(g: &Graph, r: &IntervalRealization) -> Result<bool> {
    if r.len() != g.order() {
        return Err(Error::SizeMismatch { expected: g.order(), actual: r.len() });
    }
    if r.is_empty() {
        return Ok(true);
    }
    Ok(intersection_graph(r)? == *g)
}

/// Inclusion-maximal cliques as sorted vertex lists, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        maximal_clique_masks(g).into_iter().map(|m| bits(m).collect()).collect();
    out.sort();
    out
}

pub(crate) fn maximal_clique_masks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(g, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(g: &Graph, r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // Tomita pivot: maximize |P ∩ N(u)|
    let pivot = bits(p | x).max_by_key(|&u| (p & g.neighbors(u)).count_ones()).unwrap();
    let (mut p, mut x) = (p, x);
    for v in bits(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | bit(v), p & nv, x & nv, out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0u32; n];
    let mut numbered = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| numbered & bit(v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        order.push(v);
        numbered |= bit(v);
        for u in bits(g.neighbors(v) & !numbered) {
            weight[u] += 1;
        }
    }
    // Reverse MCS order is a perfect elimination ordering iff chordal: each
    // vertex's earlier-visited neighbors must form a clique.
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let earlier = bits(g.neighbors(v)).filter(|&u| position[u] < i).fold(0u64, |acc, u| acc | bit(u));
        let Some(parent) = bits(earlier).max_by_key(|&u| position[u]) else {
            continue;
        };
        let rest = earlier & !bit(parent);
        if rest & !g.neighbors(parent) != 0 {
            return false;
        }
    }
    true
}

/// Searches for an ordering of `cliques` in which each vertex occurs in a
/// contiguous run. Returns clique indices in order.
fn consecutive_clique_order(cliques: &[u64]) -> Option<Vec<usize>> {
    let m = cliques.len();
    // a chordal graph has at most n <= 64 maximal cliques
    assert!(m <= 64, "more than 64 maximal cliques in a chordal graph");
    let mut order = Vec::with_capacity(m);
    let mut failed = HashSet::new();
    if place(cliques, 0, 0, None, &mut order, &mut failed) {
        Some(order)
    } else {
        None
    }
}

fn place(
    cliques: &[u64],
    placed: u64,
    seen: u64,
    prev: Option<usize>,
    order: &mut Vec<usize>,
    failed: &mut HashSet<(u64, usize)>,
) -> bool {
    let m = cliques.len();
    if order.len() == m {
        return true;
    }
    let open = prev.map_or(0, |p| cliques[p]);
    // Vertices seen but absent from the previous clique are closed for good.
    let closed = seen & !open;
    let remaining = (0..m).filter(|&c| placed & bit(c) == 0);
    if remaining.clone().any(|c| cliques[c] & closed != 0) {
        return false;
    }
    let key = (placed, prev.unwrap_or(usize::MAX));
    if failed.contains(&key) {
        return false;
    }
    for c in remaining {
        order.push(c);
        if place(cliques, placed | bit(c), seen | cliques[c], Some(c), order, failed) {
            return true;
        }
        order.pop();
    }
    failed.insert(key);
    false
}

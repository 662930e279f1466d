//! Simple undirected graphs stored as per-vertex neighbor bit rows, closed
//! integer interval realizations, and three-colored graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (one `u64` row per vertex).
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a row, lowest first.
#[inline]
pub(crate) fn bits(mut row: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if row == 0 {
            None
        } else {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` has bit `u` set iff `u` and `v` are adjacent. Rows are always
/// symmetric and have a clear diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor rows, checking symmetry and the
    /// diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if n < 64 && row >> n != 0 {
                return Err(Error::VertexOutOfRange { vertex: 63 - row.leading_zeros() as usize, n });
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Rows known to be valid (symmetric, zero diagonal, in range).
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// The graph with `v` deleted; higher vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let low = bit(v) - 1;
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let rows = (0..self.n).filter(|&u| u != v).map(|u| squeeze(self.rows[u])).collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: perm.len() });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = bits(self.rows[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Same graph viewed on vertices of `mask` only, renumbered in
    /// increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask).filter(|&v| v < self.n).collect();
        let mut rows = vec![0u64; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate() {
                if self.has_edge(u, w) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// One closed interval `[lo, hi]` per vertex, with exact integer endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalRealization {
    intervals: Vec<(i64, i64)>,
}

impl IntervalRealization {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        for (index, &(lo, hi)) in intervals.iter().enumerate() {
            if lo > hi {
                return Err(Error::InvertedInterval { index, lo, hi });
            }
        }
        Ok(IntervalRealization { intervals })
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Closed-interval intersection test for vertices `u` and `v`.
    #[inline]
    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.intervals[u], self.intervals[v]);
        a.0.max(b.0) <= a.1.min(b.1)
    }

    pub fn into_inner(self) -> Vec<(i64, i64)> {
        self.intervals
    }
}

/// Intersection graph of closed intervals: `u ~ v` iff
/// `max(lo_u, lo_v) <= min(hi_u, hi_v)`.
pub fn intersection_graph(realization: &IntervalRealization) -> Result<Graph> {
    if realization.is_empty() {
        return Err(Error::EmptyRealization);
    }
    let n = realization.len();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if realization.intersects(u, v) {
                g.rows[u] |= bit(v);
                g.rows[v] |= bit(u);
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
    White,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Blue, Color::Red, Color::White];

    pub fn letter(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
            Color::White => 'W',
        }
    }
}

/// A graph whose vertices are partitioned into blue, red and white classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<Color>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.order() {
            return Err(Error::SizeMismatch { expected: graph.order(), actual: colors.len() });
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    /// Bit mask of the vertices carrying `color`.
    pub fn class(&self, color: Color) -> u64 {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<ColoredGraph> {
        let graph = self.graph.permuted(perm)?;
        let mut colors = self.colors.clone();
        for (v, &p) in perm.iter().enumerate() {
            colors[p] = self.colors[v];
        }
        Ok(ColoredGraph { graph, colors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(iv: &[(i64, i64)]) -> IntervalRealization {
        IntervalRealization::new(iv.to_vec()).unwrap()
    }

    #[test]
    fn disjoint_intervals_have_no_edge() {
        let g = intersection_graph(&real(&[(0, 1), (2, 3)])).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn chained_intervals_form_path() {
        let g = intersection_graph(&real(&[(0, 2), (1, 3), (2, 4)])).unwrap();
        // (0,2) and (2,4) touch at 2, so this is a triangle under the closed rule
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let p3 = intersection_graph(&real(&[(0, 2), (1, 4), (3, 5)])).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(p3.degree(1), 2);
    }

    #[test]
    fn identical_points_form_triangle() {
        let g = intersection_graph(&real(&[(0, 0), (0, 0), (0, 0)])).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn inverted_interval_rejected() {
        assert_eq!(
            IntervalRealization::new(vec![(0, 1), (3, 2)]),
            Err(Error::InvertedInterval { index: 1, lo: 3, hi: 2 })
        );
        assert_eq!(intersection_graph(&real(&[])), Err(Error::EmptyRealization));
    }

    #[test]
    fn rows_validation() {
        assert!(matches!(Graph::from_rows(vec![0b10, 0b00]), Err(Error::Asymmetric(0, 1))));
        assert!(matches!(Graph::from_rows(vec![0b1]), Err(Error::SelfLoop(0))));
        assert!(matches!(Graph::from_rows(vec![0b100, 0]), Err(Error::VertexOutOfRange { .. })));
        assert!(Graph::empty(65).is_err());
        assert_eq!(Graph::complete(64).unwrap().edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn remove_and_union() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.remove_vertex(1).edge_count(), 0);
        assert_eq!(p3.remove_vertex(0), Graph::from_edges(2, &[(0, 1)]).unwrap());
        let u = p3.disjoint_union(&p3).unwrap();
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn permuting_moves_edges() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let q = p3.permuted(&[1, 0, 2]).unwrap();
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert!(p3.permuted(&[0, 0, 1]).is_err());
    }

    #[test]
    fn popcounts_sum_to_twice_edges() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let total: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
    }
}

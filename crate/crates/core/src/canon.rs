//! Canonical codes for small graphs.
//!
//! The labeling search refines an ordered vertex partition to an equitable
//! one, then individualizes each vertex of the first smallest non-singleton
//! cell in turn. Every leaf is a discrete partition, i.e. a relabeling, and
//! the code is the lexicographically smallest relabeled adjacency among the
//! leaves. Children that are images of an explored child under a known
//! automorphism fixing the current path are skipped; automorphisms come from
//! twin vertices and from leaves that reproduce the first or best code.
//!
//! Colored graphs start from the partition (blue, red, white), so only
//! color-preserving relabelings are searched.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, bits, ColoredGraph, Graph};
use crate::{Color, Error, Result};

/// Largest vertex count accepted by [`canonical_form`] and
/// [`colored_canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 16;

const KIND_PLAIN: u8 = 0;
const KIND_COLORED: u8 = 1;

/// Byte string identifying an isomorphism class.
///
/// Layout: a kind byte (0 plain, 1 colored), the vertex count, for colored
/// codes the blue/red/white class sizes, then the upper triangle of the
/// canonically relabeled adjacency matrix, row by row, packed MSB first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let code = CanonicalCode(bytes);
        code.decode()?;
        Ok(code)
    }

    pub fn is_colored(&self) -> bool {
        self.0.first() == Some(&KIND_COLORED)
    }

    /// The canonically labeled representative graph.
    pub fn to_graph(&self) -> Result<Graph> {
        self.decode().map(|(g, _)| g)
    }

    /// The canonically labeled representative with its coloring. Plain codes
    /// are reported as all-white.
    pub fn to_colored_graph(&self) -> Result<ColoredGraph> {
        let (g, colors) = self.decode()?;
        ColoredGraph::new(g, colors)
    }

    fn decode(&self) -> Result<(Graph, Vec<Color>)> {
        let bad = || Error::InvalidArgument("malformed canonical code".into());
        let (&kind, rest) = self.0.split_first().ok_or_else(bad)?;
        let (&n, rest) = rest.split_first().ok_or_else(bad)?;
        let n = n as usize;
        let (colors, payload) = match kind {
            KIND_PLAIN => (vec![Color::White; n], rest),
            KIND_COLORED => {
                if rest.len() < 3 || rest[..3].iter().map(|&c| c as usize).sum::<usize>() != n {
                    return Err(bad());
                }
                let mut colors = Vec::with_capacity(n);
                for (i, c) in Color::ALL.iter().enumerate() {
                    colors.extend(std::iter::repeat(*c).take(rest[i] as usize));
                }
                (colors, &rest[3..])
            }
            _ => return Err(bad()),
        };
        let nbits = n * n.saturating_sub(1) / 2;
        if payload.len() != nbits.div_ceil(8) {
            return Err(bad());
        }
        let mut g = vec![0u64; n];
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if payload[idx / 8] & (0x80 >> (idx % 8)) != 0 {
                    g[i] |= bit(j);
                    g[j] |= bit(i);
                }
                idx += 1;
            }
        }
        if nbits % 8 != 0 && payload[nbits / 8] & (0xff >> (nbits % 8)) != 0 {
            return Err(bad());
        }
        Ok((Graph::from_rows(g)?, colors))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalCode> {
    check_limit(g.order(), limit)?;
    Ok(plain_code(g.rows()))
}

pub fn colored_canonical_form(cg: &ColoredGraph) -> Result<CanonicalCode> {
    colored_canonical_form_with_limit(cg, DEFAULT_CANON_LIMIT)
}

pub fn colored_canonical_form_with_limit(cg: &ColoredGraph, limit: usize) -> Result<CanonicalCode> {
    let g = cg.graph();
    check_limit(g.order(), limit)?;
    let classes: Vec<u64> = Color::ALL.iter().map(|&c| cg.class(c)).collect();
    let cells: Vec<u64> = classes.iter().copied().filter(|&c| c != 0).collect();
    let (rows, _) = Search::run(g.rows(), cells);
    let n = g.order();
    let mut code = vec![KIND_COLORED, n as u8];
    code.extend(classes.iter().map(|c| c.count_ones() as u8));
    pack_rows(&rows, &mut code);
    Ok(CanonicalCode(code))
}

/// Canonical relabeling: `labeling[v]` is the position of vertex `v` in the
/// canonical order, so `g.permuted(&labeling)` is the representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_limit(g.order(), DEFAULT_CANON_LIMIT)?;
    let (_, order) = Search::run(g.rows(), initial_cells(g.order()));
    let mut labeling = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok(labeling)
}

/// Unchecked fast path for callers that already bound `rows.len()`.
pub(crate) fn plain_code(rows: &[u64]) -> CanonicalCode {
    let n = rows.len();
    let (canon, _) = Search::run(rows, initial_cells(n));
    let mut code = Vec::with_capacity(2 + (n * n).div_ceil(16));
    code.push(KIND_PLAIN);
    code.push(n as u8);
    pack_rows(&canon, &mut code);
    CanonicalCode(code)
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooManyVertices { n, limit });
    }
    Ok(())
}

fn initial_cells(n: usize) -> Vec<u64> {
    match n {
        0 => Vec::new(),
        64 => vec![u64::MAX],
        _ => vec![(1u64 << n) - 1],
    }
}

fn pack_rows(rows: &[u64], out: &mut Vec<u8>) {
    let n = rows.len();
    let mut acc = 0u8;
    let mut fill = 0;
    for i in 0..n {
        for j in i + 1..n {
            acc = (acc << 1) | ((rows[i] >> j) & 1) as u8;
            fill += 1;
            if fill == 8 {
                out.push(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(acc << (8 - fill));
    }
}

/// Splits cells until the ordered partition is equitable. Cells split into
/// buckets by neighbor count into a splitter cell, in ascending count
/// order, which keeps the result independent of vertex labels.
fn refine(rows: &[u64], cells: &mut Vec<u64>, scratch: &mut Vec<u64>) {
    let n = rows.len();
    let mut s = 0;
    while s < cells.len() && cells.len() < n {
        let splitter = cells[s];
        let width = splitter.count_ones() as usize + 1;
        let mut buckets = [0u64; 65];
        let mut split = false;
        scratch.clear();
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                scratch.push(cell);
                continue;
            }
            let (mut lo, mut hi) = (usize::MAX, 0);
            for v in bits(cell) {
                let k = (rows[v] & splitter).count_ones() as usize;
                buckets[k] |= bit(v);
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                buckets[lo] = 0;
                scratch.push(cell);
                continue;
            }
            split = true;
            for b in &mut buckets[lo..=hi.min(width - 1)] {
                if *b != 0 {
                    scratch.push(*b);
                    *b = 0;
                }
            }
        }
        std::mem::swap(cells, scratch);
        s = if split { 0 } else { s + 1 };
    }
}

struct Leaf {
    rows: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Known automorphisms as vertex maps.
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
    scratch: Vec<u64>,
}

const MAX_STORED_AUTOS: usize = 64;

impl<'a> Search<'a> {
    /// Returns the canonical relabeled rows and the canonical vertex order
    /// (`order[pos] = vertex`).
    fn run(rows: &'a [u64], cells: Vec<u64>) -> (Vec<u64>, Vec<usize>) {
        if rows.is_empty() {
            return (Vec::new(), Vec::new());
        }
        let mut search = Search {
            rows,
            first: None,
            best: None,
            autos: Vec::new(),
            path: Vec::new(),
            scratch: Vec::with_capacity(rows.len()),
        };
        search.visit(cells);
        let best = search.best.expect("search reaches at least one leaf");
        (best.rows, best.order)
    }

    fn visit(&mut self, mut cells: Vec<u64>) {
        let n = self.rows.len();
        refine(self.rows, &mut cells, &mut self.scratch);
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if tried.iter().any(|&u| self.twins(u, v)) || self.in_explored_orbit(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            self.path.push(v);
            self.visit(child);
            self.path.pop();
        }
    }

    #[inline]
    fn twins(&self, u: usize, v: usize) -> bool {
        self.rows[u] & !bit(v) == self.rows[v] & !bit(u)
    }

    /// True if `v` is in the orbit of some tried vertex under the group
    /// generated by stored automorphisms fixing the current path.
    fn in_explored_orbit(&self, v: usize, tried: &[usize]) -> bool {
        if tried.is_empty() || self.autos.is_empty() {
            return false;
        }
        let usable: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| self.path.iter().all(|&p| a[p] == p))
            .collect();
        if usable.is_empty() {
            return false;
        }
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in usable {
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.rows.len();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut inv = [0usize; 64];
        for (pos, &v) in order.iter().enumerate() {
            inv[v] = pos;
        }
        let relabeled: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.rows[v]).fold(0u64, |acc, u| acc | bit(inv[u])))
            .collect();

        let automorphism_to = |other: &Leaf| -> Vec<usize> {
            (0..n).map(|v| other.order[inv[v]]).collect()
        };
        if let Some(first) = &self.first {
            if first.rows == relabeled {
                let a = automorphism_to(first);
                self.store_auto(a);
                return;
            }
        }
        match self.best.as_ref().map(|b| relabeled.cmp(&b.rows)) {
            Some(Ordering::Equal) => {
                let a = automorphism_to(self.best.as_ref().unwrap());
                self.store_auto(a);
            }
            Some(Ordering::Greater) => {}
            Some(Ordering::Less) | None => {
                let leaf = Leaf { rows: relabeled, order };
                if self.first.is_none() {
                    self.first = Some(Leaf { rows: leaf.rows.clone(), order: leaf.order.clone() });
                }
                self.best = Some(leaf);
            }
        }
    }

    fn store_auto(&mut self, a: Vec<usize>) {
        if self.autos.len() < MAX_STORED_AUTOS && a.iter().enumerate().any(|(v, &w)| v != w) {
            self.autos.push(a);
        }
    }
}

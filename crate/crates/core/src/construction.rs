//! Three-colored interval graphs built from `2k` anchors and a choice of
//! white intervals.
//!
//! Blue anchors sit at `-1, ..., -k` and red anchors at `1, ..., k`, each a
//! short interval of half-width `eps < 1/2`. White intervals are `[-a, b]`
//! with `a, b` in `1..=k`. Choosing `n - 2k` distinct white intervals gives
//! an `n`-vertex colored interval graph in which white `[-a, b]` meets
//! exactly `a` blue and `b` red anchors, so the white intervals can be read
//! back off the graph from anchor degrees alone.
//!
//! Geometry is kept exact by scaling every endpoint by `2 * den` where
//! `eps = num / den`; with the default `eps = 1/4` that is a scale of 8, and
//! anchors become `[8j - 2, 8j + 2]`.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::binomial;
use crate::canon::colored_canonical_form_with_limit;
use crate::graph::{bit, intersection_graph, ColoredGraph, Graph, IntervalRealization, MAX_VERTICES};
use crate::recognition::{recognize, verify_realization};
use crate::{Color, Error, Result};

/// Anchor half-width as an exact fraction `num / den` in `(0, 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Epsilon {
    num: u32,
    den: u32,
}

impl Epsilon {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if num == 0 || den == 0 || 2 * num as u64 >= den as u64 {
            return Err(Error::InvalidArgument(format!("epsilon {num}/{den} not in (0, 1/2)")));
        }
        Ok(Epsilon { num, den })
    }

    fn scale(self) -> i64 {
        2 * self.den as i64
    }

    fn half_width(self) -> i64 {
        2 * self.num as i64
    }
}

impl Default for Epsilon {
    fn default() -> Self {
        Epsilon { num: 1, den: 4 }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse epsilon {s:?}, expected p/q"));
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        Epsilon::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    n: usize,
    k: usize,
    epsilon: Epsilon,
}

impl ConstructionParams {
    /// Checks `1 <= k`, `2k < n` and `n - 2k <= k^2`.
    pub fn new(n: usize, k: usize, epsilon: Epsilon) -> Result<Self> {
        if k == 0 || 2 * k >= n {
            return Err(Error::Infeasible(format!("need 1 <= k < n/2, got n = {n}, k = {k}")));
        }
        if n - 2 * k > k * k {
            return Err(Error::Infeasible(format!(
                "n - 2k = {} exceeds k^2 = {} for n = {n}, k = {k}",
                n - 2 * k,
                k * k
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        Ok(ConstructionParams { n, k, epsilon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    /// Number of white vertices, `n - 2k`.
    pub fn whites(&self) -> usize {
        self.n - 2 * self.k
    }

    /// Blue anchors `B_1..B_k` then red anchors `R_1..R_k`, scaled.
    pub fn anchors(&self) -> Vec<(i64, i64)> {
        let (s, w) = (self.epsilon.scale(), self.epsilon.half_width());
        let k = self.k as i64;
        let blues = (1..=k).map(|j| (-j * s - w, -j * s + w));
        let reds = (1..=k).map(|j| (j * s - w, j * s + w));
        blues.chain(reds).collect()
    }

    /// All `k^2` white intervals in lexicographic order.
    pub fn white_family(&self) -> Vec<White> {
        let k = self.k as u32;
        (1..=k).cartesian_product(1..=k).map(|(a, b)| White { a, b }).collect()
    }

    fn scaled(&self, w: White) -> (i64, i64) {
        let s = self.epsilon.scale();
        (-(w.a as i64) * s, w.b as i64 * s)
    }
}

/// The white interval `[-a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct White {
    pub a: u32,
    pub b: u32,
}

impl White {
    pub fn interval(self) -> (i64, i64) {
        (-(self.a as i64), self.b as i64)
    }
}

impl fmt::Display for White {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[-{}, {}]", self.a, self.b)
    }
}

/// A family member: colored graph plus the realization it came from.
/// Vertices are `B_1..B_k`, `R_1..R_k`, then whites in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredIntervalGraph {
    params: ConstructionParams,
    whites: Vec<White>,
    colored: ColoredGraph,
    realization: IntervalRealization,
}

impl ColoredIntervalGraph {
    pub fn params(&self) -> &ConstructionParams {
        &self.params
    }

    /// The chosen white intervals, sorted.
    pub fn whites(&self) -> &[White] {
        &self.whites
    }

    pub fn colored(&self) -> &ColoredGraph {
        &self.colored
    }

    pub fn graph(&self) -> &Graph {
        self.colored.graph()
    }

    /// Scaled integer realization of all `n` vertices.
    pub fn realization(&self) -> &IntervalRealization {
        &self.realization
    }
}

fn validate_whites(p: &ConstructionParams, chosen: &[White]) -> Result<Vec<White>> {
    if chosen.len() != p.whites() {
        return Err(Error::InvalidFamily(format!(
            "expected {} white intervals, got {}",
            p.whites(),
            chosen.len()
        )));
    }
    let k = p.k as u32;
    let mut seen = HashSet::new();
    for &w in chosen {
        if !(1..=k).contains(&w.a) || !(1..=k).contains(&w.b) {
            return Err(Error::InvalidFamily(format!("white {w} outside 1..={k}")));
        }
        if !seen.insert(w) {
            return Err(Error::InvalidFamily(format!("white {w} repeated")));
        }
    }
    let mut sorted = chosen.to_vec();
    sorted.sort_unstable();
    Ok(sorted)
}

/// Realization of anchors plus `chosen` whites, in vertex order.
pub fn anchored_realization(p: &ConstructionParams, chosen: &[White]) -> Result<IntervalRealization> {
    let whites = validate_whites(p, chosen)?;
    let mut intervals = p.anchors();
    intervals.extend(whites.iter().map(|&w| p.scaled(w)));
    IntervalRealization::new(intervals)
}

/// Adjacency from the rule: whites pairwise adjacent, anchors pairwise
/// non-adjacent, white `(a, b)` adjacent to `B_j` iff `j <= a` and to `R_j`
/// iff `j <= b`.
pub fn closed_form_graph(p: &ConstructionParams, whites: &[White]) -> Graph {
    let k = p.k;
    let mut rows = vec![0u64; p.n];
    let white_mask: u64 = (2 * k..p.n).fold(0, |acc, v| acc | bit(v));
    for (i, w) in whites.iter().enumerate() {
        let v = 2 * k + i;
        let blues = (1u64 << w.a) - 1;
        let reds = ((1u64 << w.b) - 1) << k;
        rows[v] = (white_mask & !bit(v)) | blues | reds;
        for u in crate::graph::bits(blues | reds) {
            rows[u] |= bit(v);
        }
    }
    Graph::from_rows_unchecked(rows)
}

pub fn build_colored_graph(p: &ConstructionParams, chosen: &[White]) -> Result<ColoredIntervalGraph> {
    let whites = validate_whites(p, chosen)?;
    let graph = closed_form_graph(p, &whites);
    let mut colors = vec![Color::Blue; p.k];
    colors.extend(std::iter::repeat(Color::Red).take(p.k));
    colors.extend(std::iter::repeat(Color::White).take(whites.len()));
    let realization = anchored_realization(p, &whites)?;
    Ok(ColoredIntervalGraph {
        params: *p,
        whites,
        colored: ColoredGraph::new(graph, colors)?,
        realization,
    })
}

/// Blue and red neighbor counts of white vertex `w`; the white interval it
/// came from is `[-a, b]` with `(a, b)` the returned pair.
pub fn decode_white_vertex(g: &ColoredGraph, w: usize) -> Result<White> {
    if w >= g.graph().order() {
        return Err(Error::VertexOutOfRange { vertex: w, n: g.graph().order() });
    }
    if g.color(w) != Color::White {
        return Err(Error::NotWhite(w));
    }
    let nbrs = g.graph().neighbors(w);
    let a = (nbrs & g.class(Color::Blue)).count_ones();
    let b = (nbrs & g.class(Color::Red)).count_ones();
    Ok(White { a, b })
}

/// Reads the white family back off a colored graph, using only colors and
/// adjacency.
pub fn recover_whites(g: &ColoredGraph) -> Result<Vec<White>> {
    let k = g.class(Color::Blue).count_ones();
    let reds = g.class(Color::Red).count_ones();
    if k != reds {
        return Err(Error::InvalidFamily(format!("{k} blue but {reds} red vertices")));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in crate::graph::bits(g.class(Color::White)) {
        let w = decode_white_vertex(g, v)?;
        if w.a == 0 || w.b == 0 || w.a > k || w.b > k {
            return Err(Error::InvalidFamily(format!("vertex {v} decodes to {w}, outside 1..={k}")));
        }
        if !seen.insert(w) {
            return Err(Error::InvalidFamily(format!("vertex {v} decodes to repeated {w}")));
        }
        out.push(w);
    }
    out.sort_unstable();
    Ok(out)
}

/// `C(k^2, n - 2k)`; zero when `n - 2k` is negative or exceeds `k^2`.
pub fn family_size(n: u64, k: u64) -> BigUint {
    match n.checked_sub(2 * k) {
        Some(m) if m <= k * k => binomial(k * k, m),
        _ => BigUint::default(),
    }
}

/// One graph per `(n - 2k)`-subset of the white family, in lexicographic
/// subset order.
pub fn enumerate_family(p: &ConstructionParams) -> impl Iterator<Item = ColoredIntervalGraph> + '_ {
    p.white_family()
        .into_iter()
        .combinations(p.whites())
        .map(move |subset| build_colored_graph(p, &subset).expect("subsets of the family are valid"))
}

/// Outcome of checking a whole family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub n: usize,
    pub k: usize,
    pub expected: String,
    pub families: u64,
    pub distinct_codes: u64,
    pub round_trip: bool,
    pub geometric_agrees: bool,
    pub recognized: u64,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.families.to_string()
            && self.distinct_codes == self.families
            && self.round_trip
            && self.geometric_agrees
            && self.recognized == self.families
    }
}

/// Enumerates the family and checks count, pairwise distinct colored
/// codes, exact decoding, closed-form versus geometric adjacency, and
/// interval recognition of every member.
pub fn check_family(p: &ConstructionParams) -> Result<FamilyCheck> {
    let mut codes = HashSet::new();
    let mut families = 0u64;
    let mut round_trip = true;
    let mut geometric_agrees = true;
    let mut recognized = 0u64;
    for member in enumerate_family(p) {
        families += 1;
        codes.insert(colored_canonical_form_with_limit(member.colored(), MAX_VERTICES)?);
        round_trip &= recover_whites(member.colored())? == member.whites();
        geometric_agrees &= intersection_graph(member.realization())? == *member.graph()
            && verify_realization(member.graph(), member.realization())?;
        let r = recognize(member.graph());
        if r.is_interval && verify_realization(member.graph(), r.realization.as_ref().unwrap())? {
            recognized += 1;
        }
    }
    Ok(FamilyCheck {
        n: p.n,
        k: p.k,
        expected: family_size(p.n as u64, p.k as u64).to_string(),
        families,
        distinct_codes: codes.len() as u64,
        round_trip,
        geometric_agrees,
        recognized,
    })
}

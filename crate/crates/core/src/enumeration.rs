//! Counting unlabeled interval graphs by sweeping perfect matchings of
//! `2n` endpoint slots.
//!
//! Every interval graph on `n` vertices has a realization with `2n`
//! distinct endpoints, so reading each perfect matching of positions
//! `1..=2n` as `n` closed intervals reaches every class. The sweep pairs the
//! smallest unmatched position with each larger free position in turn,
//! which visits each of the `(2n-1)!!` matchings exactly once.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{plain_code, CanonicalCode, DEFAULT_CANON_LIMIT};
use crate::graph::{bit, bits, IntervalRealization};
use crate::{Error, Result};

/// Default largest `n` accepted by the sweep.
pub const DEFAULT_CAP: usize = 10;

/// The cap can be raised up to this value, the canonical-form limit.
pub const MAX_CAP: usize = DEFAULT_CANON_LIMIT;

/// Labeled-graph cache entries kept per worker before the cache is reset.
const LABELED_CACHE_LIMIT: usize = 1 << 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub cap: usize,
    pub workers: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { cap: DEFAULT_CAP, workers: 1 }
    }
}

impl SweepConfig {
    pub fn with_workers(workers: usize) -> Self {
        SweepConfig { workers, ..Self::default() }
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.cap > MAX_CAP {
            return Err(Error::InvalidArgument(format!("cap {} exceeds {MAX_CAP}", self.cap)));
        }
        if self.workers == 0 {
            return Err(Error::InvalidArgument("worker count must be at least 1".into()));
        }
        check_n(n, self.cap)
    }
}

fn check_n(n: usize, cap: usize) -> Result<()> {
    if n == 0 || n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    Ok(())
}

/// A perfect matching of positions `1..=2n` into `n` pairs `(l, r)`,
/// `l < r`, listed by increasing left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EndpointMatching {
    pairs: Vec<(u32, u32)>,
}

impl EndpointMatching {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        let n = pairs.len();
        let mut used = vec![false; 2 * n + 1];
        for &(l, r) in &pairs {
            if !(l < r) {
                return Err(Error::InvalidMatching(format!("pair ({l}, {r}) is not increasing")));
            }
            for p in [l, r] {
                let p = p as usize;
                if p == 0 || p > 2 * n {
                    return Err(Error::InvalidMatching(format!("position {p} outside 1..={}", 2 * n)));
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::InvalidMatching(format!("position {p} used twice")));
                }
            }
        }
        pairs.sort_unstable();
        Ok(EndpointMatching { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }
}

/// Iterator over all perfect matchings of `1..=2n` in sweep order.
///
/// The state is a mixed-radix counter: digit `i` selects which free
/// position (among `2(n-i)-1` candidates) is matched with the smallest free
/// position at level `i`.
#[derive(Debug, Clone)]
pub struct Matchings {
    n: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Matchings {
    fn radix(&self, level: usize) -> usize {
        2 * (self.n - level) - 1
    }

    fn decode(&self) -> EndpointMatching {
        let mut free: Vec<u32> = (1..=2 * self.n as u32).collect();
        let pairs = self
            .digits
            .iter()
            .map(|&d| {
                let r = free.remove(1 + d);
                let l = free.remove(0);
                (l, r)
            })
            .collect();
        EndpointMatching { pairs }
    }
}

impl Iterator for Matchings {
    type Item = EndpointMatching;

    fn next(&mut self) -> Option<EndpointMatching> {
        if self.done {
            return None;
        }
        let out = self.decode();
        self.done = true;
        for level in (0..self.n).rev() {
            if self.digits[level] + 1 < self.radix(level) {
                self.digits[level] += 1;
                self.digits[level + 1..].iter_mut().for_each(|d| *d = 0);
                self.done = false;
                break;
            }
        }
        Some(out)
    }
}

pub fn enumerate_matchings(n: usize, cap: usize) -> Result<Matchings> {
    check_n(n, cap)?;
    Ok(Matchings { n, digits: vec![0; n], done: false })
}

/// `(2n-1)!!` as a `u64`; exact for `n <= 16`.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|j| 2 * j - 1).product()
}

/// Vertex `i` becomes the interval `[l_i, r_i]` of the `i`-th pair.
pub fn realization_from_matching(m: &EndpointMatching) -> IntervalRealization {
    let intervals = m.pairs.iter().map(|&(l, r)| (l as i64, r as i64)).collect();
    IntervalRealization::new(intervals).expect("matching pairs are increasing")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub n: usize,
    pub i_n: u64,
    pub matchings_visited: u64,
    pub elapsed: Duration,
}

pub fn count_interval_graphs(n: usize, config: &SweepConfig) -> Result<CountResult> {
    let start = Instant::now();
    let (codes, visited) = sweep(n, config)?;
    Ok(CountResult { n, i_n: codes.len() as u64, matchings_visited: visited, elapsed: start.elapsed() })
}

/// Canonical codes of all interval graphs on `n` vertices, each once, in
/// lexicographic order.
pub fn enumerate_interval_graphs(n: usize, config: &SweepConfig) -> Result<Vec<CanonicalCode>> {
    Ok(sweep(n, config)?.0.into_iter().collect())
}

fn sweep(n: usize, config: &SweepConfig) -> Result<(BTreeSet<CanonicalCode>, u64)> {
    config.check(n)?;
    // Split on the first two levels: (2n-1)(2n-3) independent subtrees.
    let split = n.min(2);
    let mut prefixes: Vec<Vec<usize>> = vec![Vec::new()];
    for level in 0..split {
        let radix = 2 * (n - level) - 1;
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (0..radix).map(move |d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let (codes, visited) = pool.install(|| {
        prefixes
            .par_iter()
            .fold(
                || Sweeper::new(n),
                |mut s, prefix| {
                    s.run(prefix);
                    s
                },
            )
            .map(|s| (s.codes, s.visited))
            .reduce(
                || (HashSet::new(), 0),
                |(mut a, va), (b, vb)| {
                    if a.len() < b.len() {
                        return (b.into_iter().chain(a).collect(), va + vb);
                    }
                    a.extend(b);
                    (a, va + vb)
                },
            )
    });
    Ok((codes.into_iter().collect(), visited))
}

/// Depth-first matching sweep with incremental adjacency.
///
/// Positions are 0-based internally. Opening vertex `v` at position `p`
/// makes it adjacent to exactly the earlier vertices whose right endpoint
/// lies beyond `p`, so `lower[v]` (neighbors with smaller index) is fixed at
/// the moment `v` is opened.
struct Sweeper {
    n: usize,
    lower: [u64; MAX_CAP],
    right: [u32; MAX_CAP],
    visited: u64,
    labeled: HashSet<u128>,
    codes: HashSet<CanonicalCode>,
}

impl Sweeper {
    fn new(n: usize) -> Self {
        Sweeper {
            n,
            lower: [0; MAX_CAP],
            right: [0; MAX_CAP],
            visited: 0,
            labeled: HashSet::new(),
            codes: HashSet::new(),
        }
    }

    fn run(&mut self, prefix: &[usize]) {
        let free = (1u64 << (2 * self.n)) - 1;
        self.descend(0, free, prefix);
    }

    fn descend(&mut self, v: usize, free: u64, prefix: &[usize]) {
        if v == self.n {
            self.leaf();
            return;
        }
        let p = free.trailing_zeros();
        let active = (0..v).filter(|&u| self.right[u] > p).fold(0u64, |acc, u| acc | bit(u));
        self.lower[v] = active;
        let rest = free & !(1u64 << p);
        for (choice, r) in bits(rest).enumerate() {
            if let Some(&forced) = prefix.get(v) {
                if choice != forced {
                    continue;
                }
            }
            self.right[v] = r as u32;
            self.descend(v + 1, rest & !bit(r), prefix);
        }
    }

    fn leaf(&mut self) {
        self.visited += 1;
        let mut key = 0u128;
        let mut offset = 0;
        for v in 1..self.n {
            key |= (self.lower[v] as u128) << offset;
            offset += v;
        }
        if !self.labeled.insert(key) {
            return;
        }
        if self.labeled.len() >= LABELED_CACHE_LIMIT {
            self.labeled.clear();
        }
        let mut rows = [0u64; MAX_CAP];
        for v in 0..self.n {
            rows[v] |= self.lower[v];
            for u in bits(self.lower[v]) {
                rows[u] |= bit(v);
            }
        }
        self.codes.insert(plain_code(&rows[..self.n]));
    }
}

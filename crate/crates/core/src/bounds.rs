//! Bounds on the number of unlabeled interval graphs, evaluated in natural
//! logarithms.
//!
//! * upper: `I_n <= (2n-1)!!`, the number of perfect matchings of `2n`
//!   endpoints;
//! * anchored-family lower: `I_n * 3^n >= C(k^2, n - 2k)` for every
//!   feasible `k`, since the family members are distinct three-colored
//!   interval graphs and a graph has at most `3^n` colorings;
//! * permutation lower: `I_{3m} >= m! / 3^{3m}`.
//!
//! Large factorial ratios have two independent routes: an exact one
//! (big-integer products, or prime exponents from Legendre's formula) and a
//! log-gamma one based on the Stirling series.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::f64::consts::LN_2;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::{Error, Result};

/// `log_double_factorial` uses exact big integers up to this `n`.
pub const EXACT_DOUBLE_FACTORIAL_MAX: u64 = 10_000;

/// `log_binomial` uses exact prime exponents up to this `a`.
pub const EXACT_BINOMIAL_MAX: u64 = 1_000_000;

/// Slack for log-domain comparisons, relative to the magnitude compared.
pub const LINK_SLACK: f64 = 1e-9;

const LN_3: f64 = 1.098_612_288_668_109_8;

/// Below this many factors, factorial ratios are summed term by term.
const DIRECT_SUM_MAX: u64 = 64;

pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn double_factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, j| acc * (2 * j - 1))
}

/// Natural log of a positive big integer, from its top 64 bits.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log of zero");
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).ln() + shift as f64 * LN_2
}

/// ln((2n-1)!!): exact big integer for `n <= 10^4`, log-gamma beyond.
pub fn log_double_factorial(n: u64) -> f64 {
    if n <= EXACT_DOUBLE_FACTORIAL_MAX {
        log_double_factorial_exact(n)
    } else {
        log_double_factorial_lgamma(n)
    }
}

pub fn log_double_factorial_exact(n: u64) -> f64 {
    ln_biguint(&double_factorial(n))
}

/// ln((2n)! / (2^n n!)).
pub fn log_double_factorial_lgamma(n: u64) -> f64 {
    ln_factorial_ratio(2 * n, n) - n as f64 * LN_2
}

/// ln C(a, b): exact prime exponents for `a <= 10^6`, log-gamma beyond.
pub fn log_binomial(a: u64, b: u64) -> Result<f64> {
    if b > a {
        return Err(Error::InvalidArgument(format!("binomial({a}, {b}) with b > a")));
    }
    Ok(if a <= EXACT_BINOMIAL_MAX {
        log_binomial_exact(a, b)
    } else {
        log_binomial_lgamma(a, b)
    })
}

/// ln C(a, b) from exact integer arithmetic: the big-integer product when
/// `min(b, a - b)` is small, otherwise prime exponents.
pub fn log_binomial_exact(a: u64, b: u64) -> f64 {
    assert!(b <= a);
    let s = b.min(a - b);
    if s == 0 {
        return 0.0;
    }
    // rough word-operation counts of the two routes
    let bits = 64 - a.leading_zeros() as u64;
    let product_cost = s * (s * bits / 64 + 1);
    let sieve_cost = 4 * a / bits;
    if product_cost <= sieve_cost {
        ln_biguint(&binomial(a, b))
    } else {
        log_binomial_legendre(a, b)
    }
}

/// ln C(a, b) as `sum_p e_p ln p`, where `e_p` is the exact exponent of the
/// prime `p` in C(a, b) by Legendre's formula.
pub fn log_binomial_legendre(a: u64, b: u64) -> f64 {
    assert!(b <= a);
    let c = a - b;
    if b.min(c) == 0 {
        return 0.0;
    }
    let legendre = |x: u64, p: u64| {
        let mut e = 0;
        let mut q = x / p;
        while q > 0 {
            e += q;
            q /= p;
        }
        e
    };
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &p in primes_up_to(a).iter() {
        let e = legendre(a, p) - legendre(b, p) - legendre(c, p);
        if e > 0 {
            // Neumaier summation
            let term = e as f64 * (p as f64).ln();
            let t = sum + term;
            comp += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
            sum = t;
        }
    }
    sum + comp
}

/// ln C(a, b) through log-gamma.
pub fn log_binomial_lgamma(a: u64, b: u64) -> f64 {
    assert!(b <= a);
    let s = b.min(a - b);
    ln_factorial_ratio(a, a - s) - ln_factorial(s)
}

/// ln(x!) via log-gamma, summed directly for small `x`.
pub fn ln_factorial(x: u64) -> f64 {
    if x <= DIRECT_SUM_MAX {
        (2..=x).map(|i| (i as f64).ln()).sum()
    } else {
        ln_gamma(x as f64 + 1.0)
    }
}

/// ln(a! / c!) for `a >= c`.
///
/// When both are large the Stirling series is differenced analytically so
/// that the two O(a ln a) terms never cancel in floating point.
fn ln_factorial_ratio(a: u64, c: u64) -> f64 {
    assert!(a >= c);
    let s = a - c;
    if s <= DIRECT_SUM_MAX {
        return (c + 1..=a).map(|x| (x as f64).ln()).sum();
    }
    if c < DIRECT_SUM_MAX {
        return ln_gamma(a as f64 + 1.0) - ln_factorial(c);
    }
    // ln Γ(x+1) = (x + 1/2) ln x - x + ln(2π)/2 + 1/(12x) - 1/(360x^3) + 1/(1260x^5) - ...
    let tail = |x: f64| {
        let inv = 1.0 / x;
        let inv2 = inv * inv;
        inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
    };
    let (af, cf, sf) = (a as f64, c as f64, s as f64);
    let log_ratio = -(-sf / af).ln_1p(); // ln(a / c)
    (cf + 0.5) * log_ratio + sf * af.ln() - sf + tail(af) - tail(cf)
}

fn primes_up_to(limit: u64) -> Cow<'static, [u64]> {
    static CACHED: OnceLock<Vec<u64>> = OnceLock::new();
    if limit > EXACT_BINOMIAL_MAX {
        return Cow::Owned(sieve(limit));
    }
    let primes = CACHED.get_or_init(|| sieve(EXACT_BINOMIAL_MAX));
    let end = primes.partition_point(|&p| p <= limit);
    Cow::Borrowed(&primes[..end])
}

fn sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Checks `1 <= k`, `2k < n` and `n - 2k <= k^2`.
pub fn is_feasible(n: u64, k: u64) -> bool {
    k >= 1 && 2 * k < n && (n - 2 * k) as u128 <= (k as u128) * (k as u128)
}

fn require_feasible(n: u64, k: u64) -> Result<()> {
    if !is_feasible(n, k) {
        return Err(Error::Infeasible(format!("(n, k) = ({n}, {k}) needs 1 <= k < n/2 and n - 2k <= k^2")));
    }
    Ok(())
}

/// Feasible `k` for a given `n`, as an inclusive range (possibly empty).
pub fn feasible_k_range(n: u64) -> std::ops::RangeInclusive<u64> {
    let hi = n.div_ceil(2).saturating_sub(1);
    // smallest k with k^2 + 2k >= n
    let mut lo = ((n as f64 + 1.0).sqrt() - 1.0).floor().max(1.0) as u64;
    while lo * lo + 2 * lo < n {
        lo += 1;
    }
    while lo > 1 && (lo - 1) * (lo - 1) + 2 * (lo - 1) >= n {
        lo -= 1;
    }
    lo..=hi
}

/// `floor(n / ln n)`, clamped into `[1, ceil(n/2) - 1]`. Refuses `n < 8`.
pub fn default_k(n: u64) -> Result<u64> {
    if n < 8 {
        return Err(Error::InvalidArgument(format!("default k needs n >= 8, got {n}")));
    }
    let k = (n as f64 / (n as f64).ln()).floor() as u64;
    Ok(k.clamp(1, n.div_ceil(2) - 1))
}

/// ln C(k^2, n - 2k): log of the anchored family size.
pub fn log_family(n: u64, k: u64) -> Result<f64> {
    require_feasible(n, k)?;
    log_binomial(k * k, n - 2 * k)
}

/// `ln C(k^2, n - 2k) - n ln 3`, a lower bound on `ln I_n`.
pub fn theorem1_lower(n: u64, k: u64) -> Result<f64> {
    Ok(log_family(n, k)? - n as f64 * LN_3)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PermutationBound {
    pub value: f64,
    /// True when `3 | n`, so the bound is stated for `n` itself.
    pub exact_form: bool,
}

/// `ln(m!) - 3m ln 3` with `m = floor(n / 3)`.
pub fn yp_lower(n: u64) -> Result<PermutationBound> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("permutation bound needs n >= 3, got {n}")));
    }
    let m = n / 3;
    Ok(PermutationBound { value: ln_factorial(m) - 3.0 * m as f64 * LN_3, exact_form: n % 3 == 0 })
}

/// `lhs >= rhs` up to [`LINK_SLACK`] relative to the larger magnitude.
pub fn log_ge(lhs: f64, rhs: f64) -> bool {
    lhs + LINK_SLACK * lhs.abs().max(rhs.abs()).max(1.0) >= rhs
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChainReport {
    pub n: u64,
    pub k: u64,
    /// ln C(k^2, n - 2k)
    pub log_family: f64,
    /// (n - 2k) ln(k^2 / (n - 2k))
    pub power_middle: f64,
    /// n ln(k^2 / n)
    pub power_final: f64,
    /// log_family >= power_middle
    pub l1: bool,
    /// power_middle >= power_final
    pub l2: bool,
    /// log_family >= power_final
    pub l3: bool,
}

pub fn chain_report(n: u64, k: u64) -> Result<ChainReport> {
    let log_family = log_family(n, k)?;
    let m = (n - 2 * k) as f64;
    let kk = (k * k) as f64;
    let power_middle = m * (kk / m).ln();
    let power_final = n as f64 * (kk / n as f64).ln();
    Ok(ChainReport {
        n,
        k,
        log_family,
        power_middle,
        power_final,
        l1: log_ge(log_family, power_middle),
        l2: log_ge(power_middle, power_final),
        l3: log_ge(log_family, power_final),
    })
}

/// Exhaustive argmax of [`theorem1_lower`] over feasible `k`; ties go to
/// the smaller `k`.
pub fn best_k_exhaustive(n: u64) -> Result<u64> {
    let mut best: Option<(u64, f64)> = None;
    for k in feasible_k_range(n) {
        let v = theorem1_lower(n, k)?;
        if best.map_or(true, |(_, b)| v > b) {
            best = Some((k, v));
        }
    }
    best.map(|(k, _)| k).ok_or_else(|| Error::Infeasible(format!("no feasible k for n = {n}")))
}

/// Ternary search for the argmax, relying on unimodality in `k`, finished
/// by a scan of the last few candidates.
pub fn best_k_ternary(n: u64) -> Result<u64> {
    let range = feasible_k_range(n);
    let (mut lo, mut hi) = (*range.start(), *range.end());
    if lo > hi {
        return Err(Error::Infeasible(format!("no feasible k for n = {n}")));
    }
    let f = |k| theorem1_lower(n, k).expect("k within feasible range");
    while hi - lo > 8 {
        let m1 = lo + (hi - lo) / 3;
        let m2 = hi - (hi - lo) / 3;
        if f(m1) < f(m2) {
            lo = m1 + 1;
        } else {
            hi = m2;
        }
    }
    let mut best = (lo, f(lo));
    for k in lo + 1..=hi {
        let v = f(k);
        if v > best.1 {
            best = (k, v);
        }
    }
    Ok(best.0)
}

/// Best `k`, exhaustive for moderate `n` and ternary beyond.
pub fn best_k(n: u64) -> Result<u64> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!("best k needs n >= 5, got {n}")));
    }
    if n <= 20_000 {
        best_k_exhaustive(n)
    } else {
        best_k_ternary(n)
    }
}

/// Exact check of `i_n * 3^n >= C(k^2, n - 2k)`.
pub fn counting_inequality(n: u64, k: u64, i_n: u64) -> Result<bool> {
    require_feasible(n, k)?;
    let lhs = BigUint::from(i_n) * BigUint::from(3u32).pow(n as u32);
    Ok(lhs >= binomial(k * k, n - 2 * k))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub k_used: Option<u64>,
    pub log_family: Option<f64>,
    pub theorem1_lower: Option<f64>,
    pub yp_lower: Option<f64>,
    pub yp_exact: bool,
    pub matchings_upper: f64,
    pub exact_log_in: Option<f64>,
    /// theorem1_lower / (n ln n)
    pub ratio: Option<f64>,
    pub l1: Option<bool>,
    pub l2: Option<bool>,
    pub l3: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Picks `k` for a table row: the override if given, else `default_k` for
/// `n >= 8`, else the best feasible `k` if one exists.
fn row_k(n: u64, k_override: Option<u64>) -> Result<u64> {
    match k_override {
        Some(k) => Ok(k),
        None if n >= 8 => default_k(n),
        None => best_k_exhaustive(n),
    }
}

pub fn bound_report(n: u64, k_override: Option<u64>, exact_i_n: Option<u64>) -> BoundReport {
    let mut report = BoundReport {
        n,
        k_used: None,
        log_family: None,
        theorem1_lower: None,
        yp_lower: None,
        yp_exact: false,
        matchings_upper: if n >= 1 { log_double_factorial(n) } else { 0.0 },
        exact_log_in: exact_i_n.filter(|&i| i > 0).map(|i| (i as f64).ln()),
        ratio: None,
        l1: None,
        l2: None,
        l3: None,
        error: None,
    };
    if n < 3 {
        report.error = Some(format!("n = {n} below 3"));
        return report;
    }
    if let Ok(yp) = yp_lower(n) {
        report.yp_lower = Some(yp.value);
        report.yp_exact = yp.exact_form;
    }
    let chain = row_k(n, k_override).and_then(|k| chain_report(n, k));
    match chain {
        Ok(c) => {
            let lower = c.log_family - n as f64 * LN_3;
            report.k_used = Some(c.k);
            report.log_family = Some(c.log_family);
            report.theorem1_lower = Some(lower);
            report.ratio = Some(lower / (n as f64 * (n as f64).ln()));
            report.l1 = Some(c.l1);
            report.l2 = Some(c.l2);
            report.l3 = Some(c.l3);
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

/// One [`BoundReport`] per `n`. `exact_counts` supplies known `I_n`.
pub fn bounds_table(
    n_values: &[u64],
    k_override: Option<u64>,
    exact_counts: &BTreeMap<u64, u64>,
) -> Vec<BoundReport> {
    n_values
        .iter()
        .map(|&n| bound_report(n, k_override, exact_counts.get(&n).copied()))
        .collect()
}

/// Lower and upper bounds around an exactly known `ln I_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sandwich {
    pub n: u64,
    pub i_n: u64,
    pub ln_i_n: f64,
    pub best_k: Option<u64>,
    pub best_theorem1_lower: Option<f64>,
    pub yp_lower: Option<f64>,
    pub lower: Option<f64>,
    pub matchings_upper: f64,
    pub holds: bool,
}

/// Takes the best anchored-family bound over all feasible `k` and the
/// permutation bound when `3 | n`.
pub fn sandwich(n: u64, i_n: u64) -> Result<Sandwich> {
    if n == 0 || i_n == 0 {
        return Err(Error::InvalidArgument("sandwich needs n >= 1 and i_n >= 1".into()));
    }
    let best = best_k_exhaustive(n).ok();
    let best_lower = best.map(|k| theorem1_lower(n, k)).transpose()?;
    let yp = yp_lower(n).ok().filter(|y| y.exact_form).map(|y| y.value);
    let lower = match (best_lower, yp) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    };
    let ln_i_n = (i_n as f64).ln();
    let upper = log_double_factorial(n);
    let holds = lower.map_or(true, |l| log_ge(ln_i_n, l)) && log_ge(upper, ln_i_n);
    Ok(Sandwich {
        n,
        i_n,
        ln_i_n,
        best_k: best,
        best_theorem1_lower: best_lower,
        yp_lower: yp,
        lower,
        matchings_upper: upper,
        holds,
    })
}

//! Bound computations: the girth-5 minimum-degree lower bound, Bertrand
//! prime search, the √(n/8) witness family, the diameter-2 upper-bound
//! check, and consolidated per-graph bound reports.

use thiserror::Error;

use crate::game::{cop_number_with_budget, SolveError, DEFAULT_STATE_BUDGET};
use crate::geometry::{field_order_supported, incidence_graph, projective_plane};
use crate::graph::{attach_pendant_path, Graph};
use crate::strategy::frankl_upper_bound;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the prime interval (x, 2x) needs x > 1")]
    IntervalBase,
    #[error("witness graphs start at order 72 (got {n})")]
    WitnessTooSmall { n: usize },
    #[error("the diameter-2 bound needs diameter exactly 2 (graph has {})", found.map_or_else(|| "no finite diameter".to_string(), |d| d.to_string()))]
    DiameterNotTwo { found: Option<usize> },
}

/// Minimum degree as a cop-number lower bound, available only when the
/// girth is at least 5 (an acyclic graph has no girth and qualifies
/// vacuously — the bound is then the trivial δ = 1 of a tree, or 0).
pub fn girth_mindeg_lower(g: &Graph) -> Option<usize> {
    let m = g.metrics();
    match m.girth {
        Some(girth) if girth < 5 => None,
        _ => Some(m.min_degree),
    }
}

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly between x and 2x; one always exists for x > 1.
pub fn prime_in_interval(x: u64) -> Result<u64, BoundsError> {
    if x <= 1 {
        return Err(BoundsError::IntervalBase);
    }
    (x + 1..2 * x)
        .find(|&p| is_prime(p))
        .ok_or(BoundsError::IntervalBase) // unreachable for x > 1
}

/// The projective-plane order used by [`witness_graph`] for a given n, and
/// the guaranteed lower bound q+1 — pure arithmetic, so the full
/// 72 ≤ n ≤ 10⁵ guarantee sweep needs no graph construction.
pub fn witness_parameters(n: usize) -> Result<(usize, usize), BoundsError> {
    if n < 72 {
        return Err(BoundsError::WitnessTooSmall { n });
    }
    let q = (2..=255usize)
        .filter(|&q| field_order_supported(q))
        .take_while(|&q| 2 * (q * q + q + 1) <= n)
        .last()
        .expect("n >= 72 admits q = 5");
    let bound = q + 1;
    // The construction's whole point; if this ever failed the family would
    // not witness √(n/8).
    assert!(
        (bound * bound) as f64 >= n as f64 / 8.0,
        "q+1 = {bound} misses sqrt({n}/8)"
    );
    Ok((q, bound))
}

/// A connected n-vertex graph with cop number at least q+1 ≥ √(n/8): the
/// incidence graph of PG(2,q) for the largest supported q that fits,
/// padded to order exactly n by a pendant path (degree-one additions never
/// change the cop number). The bound is valid by the girth-5 minimum-degree
/// theorem: the core is (q+1)-regular with girth 6, and every padding
/// vertex only hangs off it.
pub fn witness_graph(n: usize) -> Result<(Graph, usize), BoundsError> {
    let (q, bound) = witness_parameters(n)?;
    let plane = projective_plane(q).expect("witness orders are supported");
    let core = incidence_graph(&plane).graph;
    let g = attach_pendant_path(&core, n - core.n());
    debug_assert_eq!(g.n(), n);
    Ok((g, bound))
}

/// Checks c ≤ 2√n − 1 for a diameter-2 graph; c must be the exact cop
/// number (the caller owns that claim).
pub fn diameter2_check(g: &Graph, c: usize) -> Result<bool, BoundsError> {
    let found = g.metrics().diameter;
    if found != Some(2) {
        return Err(BoundsError::DiameterNotTwo { found });
    }
    Ok(c as f64 <= 2.0 * (g.n() as f64).sqrt() - 1.0)
}

/// How the report's cop number was obtained.
#[derive(Clone, Debug, PartialEq)]
pub enum CopNumberEstimate {
    Exact { c: usize, method: &'static str },
    /// Solver gave up (cop cap or state budget); the truth lies in
    /// [lower, upper].
    Censored { lower: usize, upper: usize },
}

/// One bound with its provenance, e.g. (3, "girth≥5 min degree").
#[derive(Clone, Debug, PartialEq)]
pub struct BoundEntry {
    pub value: usize,
    pub provenance: &'static str,
}

/// Everything known about one graph's cop number: the exact value or a
/// censoring interval, every applicable bound with provenance, and the
/// Meyniel ratio c/√n.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub id: String,
    pub n: usize,
    pub estimate: CopNumberEstimate,
    pub lower_bounds: Vec<BoundEntry>,
    pub upper_bounds: Vec<BoundEntry>,
    /// c/√n when c is exact.
    pub meyniel_ratio: Option<f64>,
    /// True when the (lower bound on the) ratio reaches the configured d.
    pub extremal: bool,
}

/// Assembles a [`BoundReport`] with the default cop cap and state budget;
/// `d` is the extremal-family ratio threshold.
pub fn meyniel_report(g: &Graph, id: &str, d: f64) -> BoundReport {
    meyniel_report_with(g, id, d, 4, DEFAULT_STATE_BUDGET)
}

pub fn meyniel_report_with(
    g: &Graph,
    id: &str,
    d: f64,
    k_max: usize,
    budget: u64,
) -> BoundReport {
    let n = g.n();
    let mut lower_bounds = vec![BoundEntry {
        value: 1,
        provenance: "nonempty graph",
    }];
    if let Some(delta) = girth_mindeg_lower(g) {
        lower_bounds.push(BoundEntry {
            value: delta.max(1),
            provenance: "girth≥5 min degree",
        });
    }
    let (frankl, _) = frankl_upper_bound(g);
    let mut upper_bounds = vec![BoundEntry {
        value: frankl,
        provenance: "frankl decomposition",
    }];
    if g.metrics().diameter == Some(2) {
        upper_bounds.push(BoundEntry {
            value: (2.0 * (n as f64).sqrt() - 1.0).floor() as usize,
            provenance: "diameter-2 theorem",
        });
    }

    let estimate = match cop_number_with_budget(g, k_max, budget) {
        Ok(c) => CopNumberEstimate::Exact {
            c,
            method: "retrograde",
        },
        Err(SolveError::KMaxExhausted { .. }) => CopNumberEstimate::Censored {
            lower: lower_max(&lower_bounds).max(k_max + 1),
            upper: upper_min(&upper_bounds),
        },
        Err(_) => CopNumberEstimate::Censored {
            lower: lower_max(&lower_bounds),
            upper: upper_min(&upper_bounds),
        },
    };
    let ratio_floor = match &estimate {
        CopNumberEstimate::Exact { c, .. } => *c as f64 / (n as f64).sqrt(),
        CopNumberEstimate::Censored { lower, .. } => *lower as f64 / (n as f64).sqrt(),
    };
    BoundReport {
        id: id.to_string(),
        n,
        meyniel_ratio: match &estimate {
            CopNumberEstimate::Exact { .. } => Some(ratio_floor),
            CopNumberEstimate::Censored { .. } => None,
        },
        extremal: ratio_floor >= d,
        estimate,
        lower_bounds,
        upper_bounds,
    }
}

fn lower_max(entries: &[BoundEntry]) -> usize {
    entries.iter().map(|e| e.value).max().unwrap_or(1)
}

fn upper_min(entries: &[BoundEntry]) -> usize {
    entries.iter().map(|e| e.value).min().unwrap_or(usize::MAX)
}

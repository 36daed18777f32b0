//! The naive random coloring procedure on graphs with sparse neighbourhoods:
//! regularization, seeded trials with per-vertex repeat statistics, the
//! greedy completion, and Monte Carlo summaries.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{verify_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::rational::Rational;

/// Default cap on the size of the regularized graph.
pub const DEFAULT_REGULARIZE_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SparseConfig {
    /// Edge deficit: every `N(v)` misses at least `b` of its `C(Δ,2)` pairs.
    pub b: u64,
    /// Palette size of the random assignment, normally `⌊Δ/2⌋`.
    pub c: u32,
    pub trials: u32,
    pub seed: u64,
    pub max_attempts: u32,
    pub regularize_limit: usize,
}

impl SparseConfig {
    /// `C = ⌊Δ/2⌋`, 1000 trials, 16 attempts.
    pub fn for_degree(delta: usize, b: u64, seed: u64) -> Self {
        SparseConfig {
            b,
            c: (delta / 2) as u32,
            trials: 1000,
            seed,
            max_attempts: 16,
            regularize_limit: DEFAULT_REGULARIZE_LIMIT,
        }
    }

    /// Whether `B > Δ(ln Δ)³`, where the asymptotic argument applies.
    pub fn in_asymptotic_regime(&self, delta: usize) -> bool {
        let d = delta as f64;
        delta >= 2 && self.b as f64 > d * d.ln().powi(3)
    }
}

/// `r = ⌈B/(e⁶Δ)⌉`, the number of repeated colors each vertex needs.
pub fn repeats_needed(b: u64, delta: usize) -> u32 {
    if delta == 0 {
        return 0;
    }
    (Rational::integer(b as i64) / (Rational::e6() * Rational::from(delta))).ceil() as u32
}

/// The regular supergraph and where `g` sits inside it.
#[derive(Clone, Debug)]
pub struct Regularized {
    pub graph: Graph,
    /// Copies of `g` are stacked in blocks of `n`; vertex `i` of `g` is `i`
    /// here, and vertex `j` here is a copy of `j mod n`.
    pub original_n: usize,
    pub doublings: u32,
}

pub fn regularize(g: &Graph) -> Result<Regularized> {
    regularize_with_limit(g, DEFAULT_REGULARIZE_LIMIT)
}

/// Doubles `g` and joins the two copies of every minimum-degree vertex until
/// the result is `Δ`-regular. Each step raises the minimum degree by one.
pub fn regularize_with_limit(g: &Graph, limit: usize) -> Result<Regularized> {
    if g.n() == 0 {
        return Err(Error::Precondition("cannot regularize the empty graph".into()));
    }
    let mut h = g.clone();
    let mut doublings = 0;
    while !h.is_regular() {
        let n = h.n();
        if 2 * n > limit {
            return Err(Error::capacity("regularize", 2 * n, limit));
        }
        let low = h.min_degree();
        let mut b = GraphBuilder::new(2 * n);
        for (u, v) in h.edges() {
            b.add_edge(u, v)?;
            b.add_edge(u + n, v + n)?;
        }
        for v in (0..n).filter(|&v| h.degree(v) == low) {
            b.add_edge(v, v + n)?;
        }
        h = b.build();
        doublings += 1;
    }
    Ok(Regularized {
        graph: h,
        original_n: g.n(),
        doublings,
    })
}

/// One run of the naive procedure and its per-vertex counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub assignment: Vec<u32>,
    /// `None` where the vertex was uncolored by the rule.
    pub retained: Vec<Option<u32>>,
    /// Colors assigned to at least two nonadjacent neighbours.
    pub at: Vec<u32>,
    /// Those among `at` lost by at least one such neighbour.
    pub del: Vec<u32>,
    pub x: Vec<u32>,
    /// Colors assigned to exactly two nonadjacent neighbours, both retained.
    pub x_prime: Vec<u32>,
}

impl TrialRecord {
    pub fn retained_coloring(&self, c: u32) -> Coloring {
        Coloring::from_colors(self.retained.clone())
            .and_then(|col| col.with_palette(c))
            .expect("colors in 1..=C")
    }
}

fn require_regular(g: &Graph) -> Result<()> {
    if !g.is_regular() {
        return Err(Error::Precondition(format!(
            "graph is not regular (degrees {}..={})",
            g.min_degree(),
            g.max_degree()
        )));
    }
    Ok(())
}

/// Assigns each vertex a uniform color in `1..=C` from the stream
/// `(seed, trial)` and uncolors every vertex sharing its color with a
/// neighbour.
pub fn naive_color_trial(g: &Graph, cfg: &SparseConfig, trial: u64) -> Result<TrialRecord> {
    require_regular(g)?;
    if cfg.c == 0 {
        return Err(Error::InvalidParameter("palette size C must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let assignment: Vec<u32> = (0..g.n()).map(|_| rng.gen_range(1..=cfg.c)).collect();
    let retained: Vec<Option<u32>> = (0..g.n())
        .map(|w| {
            let clash = g.neighbors(w).iter().any(|&u| assignment[u] == assignment[w]);
            (!clash).then_some(assignment[w])
        })
        .collect();

    let n = g.n();
    let (mut at, mut del, mut x, mut x_prime) = (vec![0; n], vec![0; n], vec![0; n], vec![0; n]);
    let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); cfg.c as usize + 1];
    for v in 0..n {
        for &u in g.neighbors(v) {
            by_color[assignment[u] as usize].push(u);
        }
        for holders in by_color.iter_mut() {
            if holders.len() >= 2 {
                let spread = holders
                    .iter()
                    .enumerate()
                    .any(|(i, &a)| holders[i + 1..].iter().any(|&b| !g.has_edge(a, b)));
                if spread {
                    at[v] += 1;
                    if holders.iter().any(|&u| retained[u].is_none()) {
                        del[v] += 1;
                    } else {
                        x[v] += 1;
                        if holders.len() == 2 {
                            x_prime[v] += 1;
                        }
                    }
                }
            }
            holders.clear();
        }
    }
    Ok(TrialRecord {
        trial,
        assignment,
        retained,
        at,
        del,
        x,
        x_prime,
    })
}

/// Colors of `partial` held by at least two neighbours of `v`.
fn repeated_colors(g: &Graph, partial: &Coloring, v: usize) -> u32 {
    let mut seen: Vec<u32> = g.neighbors(v).iter().filter_map(|&u| partial.get(u)).collect();
    seen.sort_unstable();
    let mut count = 0;
    let mut i = 0;
    while i < seen.len() {
        let j = seen[i..].iter().take_while(|&&c| c == seen[i]).count();
        if j >= 2 {
            count += 1;
        }
        i += j;
    }
    count
}

/// Completes a partial coloring with palette `c` in which every uncolored
/// vertex sees at least `r` repeated colors, using at most `Δ+1−r` colors.
///
/// Each class `1..=c` is first grown greedily until every uncolored vertex
/// sees all `c` colors; the rest is then colored greedily with fresh colors.
pub fn complete_from_partial(g: &Graph, partial: &Coloring, c: u32, r: u32) -> Result<Coloring> {
    if partial.n() != g.n() || !partial.is_proper(g) {
        return Err(Error::Precondition("partial coloring is not proper on this graph".into()));
    }
    if partial.max_color() > c {
        return Err(Error::Precondition(format!(
            "partial coloring uses color {} beyond the palette {c}",
            partial.max_color()
        )));
    }
    if let Some(v) = partial.uncolored().into_iter().find(|&v| repeated_colors(g, partial, v) < r) {
        return Err(Error::Precondition(format!(
            "uncolored vertex {v} sees {} repeated colors, fewer than r = {r}",
            repeated_colors(g, partial, v)
        )));
    }
    let mut out = partial.clone();
    for color in 1..=c {
        for v in 0..g.n() {
            if out.get(v).is_none() && g.neighbors(v).iter().all(|&u| out.get(u) != Some(color)) {
                out.set(v, color);
            }
        }
    }
    for v in 0..g.n() {
        if out.get(v).is_none() {
            let taken: Vec<u32> = g.neighbors(v).iter().filter_map(|&u| out.get(u)).collect();
            let fresh = (c + 1..).find(|x| !taken.contains(x)).expect("unbounded");
            out.set(v, fresh);
        }
    }
    let cap = (g.max_degree() as u32 + 1).saturating_sub(r).max(1);
    if !verify_coloring(g, &out) || out.max_color() > cap {
        return Err(Error::ContractViolation(format!(
            "completion used {} colors, above Δ+1−r = {cap}",
            out.max_color()
        )));
    }
    Ok(out)
}

/// Mean and standard error of a sample.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
}

impl Estimate {
    fn from_sums(sum: f64, sum_sq: f64, trials: u32) -> Self {
        let t = trials as f64;
        let mean = sum / t;
        let stderr = if trials > 1 {
            let var = ((sum_sq - t * mean * mean) / (t - 1.0)).max(0.0);
            (var / t).sqrt()
        } else {
            0.0
        };
        Estimate { mean, stderr }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexStats {
    pub vertex: usize,
    pub at: Estimate,
    pub del: Estimate,
    pub x: Estimate,
    pub x_prime: Estimate,
    /// `C(Δ,2) − e(N(v))`.
    pub non_edges: u64,
    /// `min(B, non_edges)`.
    pub b_effective: u64,
    /// Set when `B` exceeded the non-edges of `N(v)`.
    pub clamped: bool,
    /// `mean(AT_v) ≤ non_edges/C` within three standard errors.
    pub at_bound_ok: bool,
    /// `mean(X'_v) ≥ (B_eff/C)(1−1/C)^{6C}` within three standard errors.
    pub x_prime_bound_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloStats {
    pub seed: u64,
    pub trials: u32,
    pub b: u64,
    pub c: u32,
    pub delta: usize,
    pub vertices: Vec<VertexStats>,
    pub min_mean_x: f64,
    pub mean_mean_x: f64,
    pub min_mean_x_prime: f64,
    pub max_mean_at: f64,
    pub any_clamped: bool,
    pub at_bound_ok: bool,
    pub x_prime_bound_ok: bool,
}

impl MonteCarloStats {
    /// One row per vertex; the seed is repeated on every row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "seed,trials,vertex,at_mean,at_se,del_mean,del_se,x_mean,x_se,x_prime_mean,x_prime_se,\
             non_edges,b_effective,clamped,at_bound_ok,x_prime_bound_ok\n",
        );
        for s in &self.vertices {
            writeln!(
                out,
                "{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{},{},{},{},{}",
                self.seed,
                self.trials,
                s.vertex,
                s.at.mean,
                s.at.stderr,
                s.del.mean,
                s.del.stderr,
                s.x.mean,
                s.x.stderr,
                s.x_prime.mean,
                s.x_prime.stderr,
                s.non_edges,
                s.b_effective,
                s.clamped,
                s.at_bound_ok,
                s.x_prime_bound_ok
            )
            .expect("string write");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}

/// Runs `cfg.trials` trials and averages the per-vertex counts.
pub fn monte_carlo_stats(g: &Graph, cfg: &SparseConfig) -> Result<MonteCarloStats> {
    if cfg.trials == 0 {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    require_regular(g)?;
    let n = g.n();
    let mut sums = vec![[0f64; 8]; n];
    for t in 0..cfg.trials {
        let rec = naive_color_trial(g, cfg, t as u64)?;
        for v in 0..n {
            let vals = [rec.at[v], rec.del[v], rec.x[v], rec.x_prime[v]];
            for (i, &val) in vals.iter().enumerate() {
                sums[v][2 * i] += val as f64;
                sums[v][2 * i + 1] += (val as f64).powi(2);
            }
        }
    }
    let delta = g.max_degree();
    let pairs = (delta * delta.saturating_sub(1) / 2) as u64;
    let c = cfg.c as f64;
    let decay = (1.0 - 1.0 / c).powf(6.0 * c);
    let vertices: Vec<VertexStats> = (0..n)
        .map(|v| {
            let est = |i: usize| Estimate::from_sums(sums[v][2 * i], sums[v][2 * i + 1], cfg.trials);
            let (at, del, x, x_prime) = (est(0), est(1), est(2), est(3));
            let non_edges = pairs - g.neighborhood_edge_count(v).expect("vertex in range") as u64;
            let b_effective = cfg.b.min(non_edges);
            VertexStats {
                vertex: v,
                at,
                del,
                x,
                x_prime,
                non_edges,
                b_effective,
                clamped: cfg.b > non_edges,
                at_bound_ok: at.mean <= non_edges as f64 / c + 3.0 * at.stderr,
                x_prime_bound_ok: x_prime.mean + 3.0 * x_prime.stderr >= b_effective as f64 / c * decay,
            }
        })
        .collect();
    let means_x: Vec<f64> = vertices.iter().map(|s| s.x.mean).collect();
    Ok(MonteCarloStats {
        seed: cfg.seed,
        trials: cfg.trials,
        b: cfg.b,
        c: cfg.c,
        delta,
        min_mean_x: means_x.iter().copied().fold(f64::INFINITY, f64::min),
        mean_mean_x: means_x.iter().sum::<f64>() / n.max(1) as f64,
        min_mean_x_prime: vertices.iter().map(|s| s.x_prime.mean).fold(f64::INFINITY, f64::min),
        max_mean_at: vertices.iter().map(|s| s.at.mean).fold(0.0, f64::max),
        any_clamped: vertices.iter().any(|s| s.clamped),
        at_bound_ok: vertices.iter().all(|s| s.at_bound_ok),
        x_prime_bound_ok: vertices.iter().all(|s| s.x_prime_bound_ok),
        vertices,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseColoring {
    pub coloring: Coloring,
    pub r: u32,
    pub attempts: u32,
    pub regularized_n: usize,
}

/// Why [`sparse_color`] gave up: no trial gave every vertex `r` repeats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseFailure {
    pub r: u32,
    pub attempts: u32,
    /// Vertex of the regularized graph with fewest repeats in the best trial.
    pub witness: usize,
    /// The original vertex it copies.
    pub witness_original: usize,
    pub witness_x: u32,
    pub best_trial: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SparseOutcome {
    Colored(SparseColoring),
    Exhausted(SparseFailure),
}

/// Retries the naive procedure on the regularized graph until every vertex
/// has `X_v ≥ r`, then completes it; the result uses at most `Δ+1−r` colors.
pub fn sparse_color(g: &Graph, cfg: &SparseConfig) -> Result<SparseOutcome> {
    if cfg.max_attempts == 0 {
        return Err(Error::InvalidParameter("max_attempts must be positive".into()));
    }
    let reg = regularize_with_limit(g, cfg.regularize_limit)?;
    let h = &reg.graph;
    let delta = h.max_degree();
    let pairs = (delta * delta.saturating_sub(1) / 2) as u64;
    for v in 0..h.n() {
        let non_edges = pairs - h.neighborhood_edge_count(v)? as u64;
        if non_edges < cfg.b {
            return Err(Error::Precondition(format!(
                "N({}) misses only {non_edges} pairs, fewer than B = {}",
                v % reg.original_n,
                cfg.b
            )));
        }
    }
    let r = repeats_needed(cfg.b, delta);
    let mut best: Option<(u32, usize, u64)> = None;
    for attempt in 0..cfg.max_attempts {
        let trial = attempt as u64;
        let rec = naive_color_trial(h, cfg, trial)?;
        let (witness, &min_x) = rec.x.iter().enumerate().min_by_key(|&(_, x)| *x).expect("nonempty graph");
        if min_x >= r {
            let full = complete_from_partial(h, &rec.retained_coloring(cfg.c), cfg.c, r)?;
            let coloring = full.restrict(&(0..reg.original_n).collect::<Vec<_>>());
            return Ok(SparseOutcome::Colored(SparseColoring {
                coloring,
                r,
                attempts: attempt + 1,
                regularized_n: h.n(),
            }));
        }
        if best.is_none_or(|(x, _, _)| min_x > x) {
            best = Some((min_x, witness, trial));
        }
    }
    let (witness_x, witness, best_trial) = best.expect("at least one attempt");
    Ok(SparseOutcome::Exhausted(SparseFailure {
        r,
        attempts: cfg.max_attempts,
        witness,
        witness_original: witness % reg.original_n,
        witness_x,
        best_trial,
    }))
}

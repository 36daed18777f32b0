//! The recursive coloring pipeline behind `χ ≤ ⌈(1−ε)(Δ+1) + εω⌉` and its
//! report.
//!
//! Each level picks one branch: Brooks for small `Δ`; peel a maximal stable
//! set meeting every maximum clique when `ω > (2/3)(Δ+1)`; remove and
//! re-insert a vertex with a dense neighbourhood; otherwise the sparse
//! random procedure, with a greedy fallback when it gives up.

use serde::Serialize;

use crate::cliques::{
    check_hajnal, clique_components, clique_number_with_limit, greedy_clique_lower_bound, kostochka_for_family,
    maximum_cliques_with_limit, omega_exceeds_two_thirds, HajnalCertificate, KostochkaReport,
};
use crate::coloring::{
    brooks_bound, brooks_coloring, chromatic_number_exact_with_limit, extend_dense, greedy_coloring, greedy_extend,
    verify_coloring, Coloring, DenseAudit, DenseParams,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::sparse::{sparse_color, SparseConfig, SparseOutcome, DEFAULT_REGULARIZE_LIMIT};
use crate::transversal::{extend_to_maximal, hitting_stable_set_with_limit, HittingOutcome};

/// Environment variable that overrides the default seed.
pub const SEED_ENV: &str = "CHIBOUND_SEED";
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineConfig {
    pub epsilon: Rational,
    /// Graphs with `Δ ≤ delta0` go straight to Brooks.
    pub delta0: usize,
    /// Dense-branch threshold: more than `(1−rho)·C(Δ,2)` edges in `N(v)`.
    pub rho: Rational,
    /// Density deficit handed to the dense partition.
    pub alpha: Rational,
    pub seed: u64,
    pub sparse_max_attempts: u32,
    pub regularize_limit: usize,
    /// Largest `n` for which exact χ is computed for the report.
    pub exact_chi_limit: usize,
    /// Largest `n` for exact clique computations.
    pub clique_limit: usize,
    /// The rational stand-in for `e⁶`.
    pub e6: Rational,
}

impl PipelineConfig {
    /// `ε = min{1/Δ0, 1/(320e⁶)}`, `ρ = α = 1/160`.
    pub fn with_delta0(delta0: usize) -> Self {
        let rho = Rational::new(1, 160);
        PipelineConfig {
            epsilon: default_epsilon(delta0),
            delta0,
            rho,
            alpha: rho,
            seed: DEFAULT_SEED,
            sparse_max_attempts: 16,
            regularize_limit: DEFAULT_REGULARIZE_LIMIT,
            exact_chi_limit: 20,
            clique_limit: 256,
            e6: Rational::e6(),
        }
    }

    /// Defaults, with the seed taken from `CHIBOUND_SEED` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = std::env::var(SEED_ENV) {
            cfg.seed = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{SEED_ENV}={raw:?} is not a u64")))?;
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |x: Rational| x.is_positive() && x < Rational::one();
        if !unit(self.epsilon) {
            return Err(Error::InvalidParameter(format!("epsilon = {} outside (0, 1)", self.epsilon)));
        }
        if !unit(self.rho) {
            return Err(Error::InvalidParameter(format!("rho = {} outside (0, 1)", self.rho)));
        }
        if !self.alpha.is_positive() || self.alpha >= Rational::new(1, 144) {
            return Err(Error::InvalidParameter(format!("alpha = {} outside (0, 1/144)", self.alpha)));
        }
        if self.sparse_max_attempts == 0 {
            return Err(Error::InvalidParameter("sparse_max_attempts must be positive".into()));
        }
        Ok(())
    }
}

impl Default for PipelineConfig {
    /// `Δ0 = 3`.
    fn default() -> Self {
        Self::with_delta0(3)
    }
}

pub fn default_epsilon(delta0: usize) -> Rational {
    let tiny = (Rational::integer(320) * Rational::e6()).recip();
    if delta0 == 0 {
        tiny
    } else {
        Rational::new(1, delta0 as i64).min(tiny)
    }
}

/// `⌈(1−ε)(Δ+1) + εω⌉`.
pub fn target_bound(delta: usize, omega: usize, epsilon: Rational) -> i64 {
    ((Rational::one() - epsilon) * Rational::from(delta + 1) + epsilon * Rational::from(omega)).ceil()
}

/// One level of the recursion, recorded before it recurses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum BranchStep {
    Brooks {
        n: usize,
        delta: usize,
    },
    PeelStableSet {
        n: usize,
        delta: usize,
        omega: usize,
        hitting_size: usize,
        peeled: usize,
        delta_after: usize,
        omega_after: usize,
    },
    DenseExtend {
        n: usize,
        delta: usize,
        /// Vertex id at this level of the recursion.
        v: usize,
        neighborhood_edges: usize,
        audit: DenseAudit,
    },
    Sparse {
        n: usize,
        delta: usize,
        omega: usize,
        b: u64,
        r: u32,
        attempts: u32,
        colors: u32,
    },
    GreedyFallback {
        n: usize,
        delta: usize,
        stage: String,
        reason: String,
    },
    /// The assembled coloring used more colors than Brooks needs and was
    /// replaced by a Brooks coloring.
    BrooksTightening {
        before: usize,
        after: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub hajnal: Vec<HajnalCertificate>,
    pub kostochka: Vec<KostochkaReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputStats {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub omega: usize,
    /// False when `ω` is only a greedy lower bound.
    pub omega_exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<u32>,
}

/// The `⌈(Δ+1+ω)/2⌉` statistic; tabulated, not claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReedStat {
    pub bound: i64,
    pub met: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub input: InputStats,
    pub bound: i64,
    pub colors_used: usize,
    pub proper: bool,
    /// Proper, total, and within the bound.
    pub passes: bool,
    pub reed: ReedStat,
    pub coloring: Coloring,
    pub branch_trace: Vec<BranchStep>,
    pub certificates: Certificates,
    pub seed: u64,
    pub config: PipelineConfig,
    pub elapsed_ms: u64,
}

impl ColoringReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// ω exactly when capacity allows, else a greedy lower bound.
fn omega_of(g: &Graph, cfg: &PipelineConfig) -> Result<(usize, bool)> {
    match clique_number_with_limit(g, cfg.clique_limit) {
        Ok(w) => Ok((w, true)),
        Err(Error::Capacity { .. }) => Ok((greedy_clique_lower_bound(g), false)),
        Err(e) => Err(e),
    }
}

fn pairs(delta: usize) -> usize {
    delta * delta.saturating_sub(1) / 2
}

struct Run<'c> {
    cfg: &'c PipelineConfig,
    trace: Vec<BranchStep>,
    certificates: Certificates,
}

impl Run<'_> {
    fn fallback(&mut self, g: &Graph, stage: &str, reason: String) -> Coloring {
        self.trace.push(BranchStep::GreedyFallback {
            n: g.n(),
            delta: g.max_degree(),
            stage: stage.into(),
            reason,
        });
        greedy_coloring(g, &(0..g.n()).collect::<Vec<_>>()).expect("identity order")
    }

    fn solve(&mut self, g: &Graph) -> Result<Coloring> {
        let n = g.n();
        if n == 0 {
            return Ok(Coloring::empty(0));
        }
        let delta = g.max_degree();
        if delta <= self.cfg.delta0 {
            self.trace.push(BranchStep::Brooks { n, delta });
            return Ok(brooks_coloring(g));
        }

        let (omega, _) = omega_of(g, self.cfg)?;
        if omega_exceeds_two_thirds(omega, delta) {
            return self.peel(g, omega);
        }

        let threshold = (Rational::one() - self.cfg.rho) * Rational::from(pairs(delta));
        for v in 0..n {
            let inside = g.neighborhood_edge_count(v)?;
            if Rational::from(inside) > threshold {
                return self.dense(g, v, inside);
            }
        }
        self.sparse(g, omega)
    }

    fn peel(&mut self, g: &Graph, omega: usize) -> Result<Coloring> {
        let (n, delta) = (g.n(), g.max_degree());
        let hit = match hitting_stable_set_with_limit(g, self.cfg.clique_limit) {
            Ok(HittingOutcome::Found(h)) => h,
            Ok(HittingOutcome::Inapplicable { .. }) => {
                return Err(Error::Internal("hitting set inapplicable although ω > (2/3)(Δ+1)".into()))
            }
            Err(e) => return Ok(self.fallback(g, "peel-stable-set", e.to_string())),
        };
        if let Ok(fam) = maximum_cliques_with_limit(g, self.cfg.clique_limit) {
            let comps = clique_components(&fam);
            for comp in &comps {
                self.certificates.hajnal.push(check_hajnal(g, &fam, &comp.members)?);
            }
            self.certificates.kostochka.push(kostochka_for_family(g, &fam, &comps));
        }
        let s = extend_to_maximal(g, &hit.set)?;
        let rest = g.without(&g.set_of(&s));
        let (omega_after, _) = omega_of(&rest.graph, self.cfg)?;
        self.trace.push(BranchStep::PeelStableSet {
            n,
            delta,
            omega,
            hitting_size: hit.set.len(),
            peeled: s.len(),
            delta_after: rest.graph.max_degree(),
            omega_after,
        });
        let sub = self.solve(&rest.graph)?;
        let mut out = Coloring::empty(n);
        out.absorb(&sub, &rest.parent);
        let fresh = sub.max_color() + 1;
        for &v in &s {
            out.set(v, fresh);
        }
        Ok(out)
    }

    fn dense(&mut self, g: &Graph, v: usize, inside: usize) -> Result<Coloring> {
        let (n, delta) = (g.n(), g.max_degree());
        let rest = g.without_vertex(v);
        let at = self.trace.len();
        let sub = self.solve(&rest.graph)?;
        let mut base = Coloring::empty(n);
        base.absorb(&sub, &rest.parent);
        let params = DenseParams {
            alpha: self.cfg.alpha,
            epsilon: self.cfg.rho,
        };
        match extend_dense(g, v, params, &base) {
            Ok((c, audit)) => {
                self.trace.insert(
                    at,
                    BranchStep::DenseExtend {
                        n,
                        delta,
                        v,
                        neighborhood_edges: inside,
                        audit,
                    },
                );
                Ok(c)
            }
            Err(e) => {
                self.trace.insert(
                    at,
                    BranchStep::GreedyFallback {
                        n,
                        delta,
                        stage: "dense-extend".into(),
                        reason: e.to_string(),
                    },
                );
                greedy_extend(g, &mut base, &[v]);
                Ok(base)
            }
        }
    }

    fn sparse(&mut self, g: &Graph, omega: usize) -> Result<Coloring> {
        let (n, delta) = (g.n(), g.max_degree());
        let b = (self.cfg.rho * Rational::from(pairs(delta))).floor() as u64;
        let mut scfg = SparseConfig::for_degree(delta, b, self.cfg.seed);
        scfg.max_attempts = self.cfg.sparse_max_attempts;
        scfg.regularize_limit = self.cfg.regularize_limit;
        match sparse_color(g, &scfg) {
            Ok(SparseOutcome::Colored(s)) => {
                self.trace.push(BranchStep::Sparse {
                    n,
                    delta,
                    omega,
                    b,
                    r: s.r,
                    attempts: s.attempts,
                    colors: s.coloring.max_color(),
                });
                Ok(s.coloring)
            }
            Ok(SparseOutcome::Exhausted(f)) => Ok(self.fallback(
                g,
                "sparse",
                format!(
                    "no trial reached r = {} repeats in {} attempts; best trial {} leaves vertex {} with {}",
                    f.r, f.attempts, f.best_trial, f.witness_original, f.witness_x
                ),
            )),
            Err(e) => Ok(self.fallback(g, "sparse", e.to_string())),
        }
    }
}

/// Colors `g` by the recursion and reports the outcome against the target
/// bound.
pub fn bound_chi(g: &Graph, cfg: &PipelineConfig) -> Result<ColoringReport> {
    cfg.validate()?;
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let clock = Clock::start();
    let (omega, omega_exact) = omega_of(g, cfg)?;
    let delta = g.max_degree();
    let chi = if g.n() <= cfg.exact_chi_limit {
        Some(chromatic_number_exact_with_limit(g, cfg.exact_chi_limit)?.0)
    } else {
        None
    };

    let mut run = Run {
        cfg,
        trace: Vec::new(),
        certificates: Certificates::default(),
    };
    let mut coloring = run.solve(g)?;
    let brooks = brooks_bound(g);
    if coloring.colors_used() > brooks {
        let better = brooks_coloring(g);
        run.trace.push(BranchStep::BrooksTightening {
            before: coloring.colors_used(),
            after: better.colors_used(),
        });
        coloring = better;
    }
    let coloring = coloring.compacted();

    let proper = verify_coloring(g, &coloring);
    if !proper {
        return Err(Error::Internal("pipeline produced an improper coloring".into()));
    }
    let colors_used = coloring.colors_used();
    let bound = target_bound(delta, omega, cfg.epsilon);
    let reed_bound = (delta + 1 + omega).div_ceil(2) as i64;
    Ok(ColoringReport {
        input: InputStats {
            n: g.n(),
            m: g.m(),
            delta,
            omega,
            omega_exact,
            chi,
        },
        bound,
        colors_used,
        proper,
        passes: proper && colors_used as i64 <= bound,
        reed: ReedStat {
            bound: reed_bound,
            met: colors_used as i64 <= reed_bound,
        },
        coloring,
        branch_trace: run.trace,
        certificates: run.certificates,
        seed: cfg.seed,
        config: cfg.clone(),
        elapsed_ms: clock.elapsed_ms(),
    })
}

/// Wall time where the platform has a clock; zero in the browser build.
struct Clock(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Clock {
    fn start() -> Self {
        Clock(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed_ms(&self) -> u64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed().as_millis() as u64;
        #[cfg(target_arch = "wasm32")]
        0
    }
}

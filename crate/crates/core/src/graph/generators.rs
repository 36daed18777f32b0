//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphBuilder};
use crate::cliques::clique_number_with_limit;
use crate::error::{Error, Result};

/// `G(n, p)`: every pair independently with probability `p`, pairs visited
/// in lexicographic order on a ChaCha8 stream keyed by `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// A uniformly-ish random `d`-regular graph by the pairing model with restarts.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n.max(1) || (n * d) % 2 == 1 {
        return Err(Error::InvalidParameter(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Steger-Wormald: pair random suitable points, restart when stuck.
    'attempt: for _ in 0..1_000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut b = GraphBuilder::new(n);
        while !points.is_empty() {
            let mut placed = false;
            for _ in 0..50 * points.len() {
                let i = rng.gen_range(0..points.len());
                let j = rng.gen_range(0..points.len());
                let (u, v) = (points[i], points[j]);
                if u == v || b.has_edge(u, v) {
                    continue;
                }
                b.add_edge(u, v)?;
                let (hi, lo) = (i.max(j), i.min(j));
                points.swap_remove(hi);
                points.swap_remove(lo);
                placed = true;
                break;
            }
            if !placed {
                continue 'attempt;
            }
        }
        return Ok(b.build());
    }
    Err(Error::Infeasible(format!("pairing model failed for n={n}, d={d}")))
}

/// A graph with a dense centre vertex, for exercising the dense extension.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub graph: Graph,
    pub center: usize,
    /// Non-edges planted inside `N(center)`.
    pub missing_in_neighborhood: usize,
}

/// Largest integer strictly below `alpha·C(delta, 2)`.
fn max_missing_edges(delta: usize, alpha: f64) -> Option<usize> {
    let cap = alpha * (delta * (delta - 1) / 2) as f64;
    let floor = cap.floor();
    let m = if floor == cap { floor - 1.0 } else { floor };
    (m >= 0.0).then_some(m as usize)
}

/// Builds a graph with `Δ ≤ delta`, a centre of degree `delta` whose
/// neighbourhood holds more than `(1−alpha)·C(delta, 2)` edges, and
/// `ω ≤ (2/3)(delta+1)`.
///
/// The neighbourhood is `K_delta` minus a matching (at least
/// `delta+1−⌊2(delta+1)/3⌋` pairs are needed to push ω down), optionally plus
/// one "leaky" vertex with extra non-edges and many outside neighbours, and a
/// sparse random outer part. Fails when the non-edge budget cannot pay for the
/// matching.
pub fn planted_dense_instance(delta: usize, alpha: f64, seed: u64) -> Result<PlantedInstance> {
    if !(alpha > 0.0 && alpha < 1.0 / 144.0) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} outside (0, 1/144)")));
    }
    if delta < 8 {
        return Err(Error::InvalidParameter(format!("delta = {delta} < 8")));
    }
    let omega_cap = 2 * (delta + 1) / 3;
    let needed = delta + 1 - omega_cap;
    let budget = max_missing_edges(delta, alpha).unwrap_or(0);
    if needed > budget || needed > delta / 2 {
        return Err(Error::Infeasible(format!(
            "delta={delta}, alpha={alpha}: keeping ω ≤ {omega_cap} needs {needed} non-edges in N(v) \
             but density above (1−alpha)·C(delta,2) allows at most {budget}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        if let Some(inst) = try_plant(delta, alpha, needed, budget, &mut rng)? {
            return Ok(inst);
        }
    }
    Err(Error::Infeasible(format!(
        "delta={delta}, alpha={alpha}: no instance with ω ≤ {omega_cap} after 20 attempts"
    )))
}

fn try_plant(
    delta: usize,
    alpha: f64,
    needed: usize,
    budget: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<PlantedInstance>> {
    let s = rng.gen_range(needed..=budget.min(delta / 2));
    let leak_target = (alpha.sqrt() * (delta + 1) as f64).floor() as usize + 1;
    // A leaky matched vertex needs leak_target − 1 extra non-edges.
    let leaky = s >= 1 && budget - s >= leak_target.saturating_sub(1) && rng.gen_bool(0.75);
    let outer = leak_target.max(delta / 4) + 2;
    let n = 1 + delta + outer;

    let mut b = GraphBuilder::new(n);
    let nbhd: Vec<usize> = (1..=delta).collect();
    let mut order = nbhd.clone();
    order.shuffle(rng);
    let matched: Vec<(usize, usize)> = (0..s).map(|i| (order[2 * i], order[2 * i + 1])).collect();

    for &u in &nbhd {
        b.add_edge(0, u)?;
        for &w in &nbhd {
            if u < w {
                b.add_edge(u, w)?;
            }
        }
    }
    let mut missing = 0;
    for &(u, w) in &matched {
        b.remove_edge(u, w);
        missing += 1;
    }
    if leaky {
        let u = matched[0].0;
        let mut others: Vec<usize> = nbhd.iter().copied().filter(|&w| w != u && b.has_edge(u, w)).collect();
        others.shuffle(rng);
        for &w in others.iter().take(leak_target - 1) {
            b.remove_edge(u, w);
            missing += 1;
        }
    }

    let outside: Vec<usize> = (delta + 1..n).collect();
    // Fill free degree slots of the neighbourhood towards the outer part.
    for &u in &nbhd {
        let slots = delta - b.degree(u);
        if slots == 0 {
            continue;
        }
        let full = leaky && u == matched[0].0;
        let mut targets: Vec<usize> = outside.iter().copied().filter(|&w| b.degree(w) < delta).collect();
        targets.shuffle(rng);
        let take = if full { slots } else { rng.gen_range(0..=slots) };
        for &w in targets.iter().take(take) {
            b.add_edge(u, w)?;
        }
    }
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            if b.degree(x) < delta && b.degree(y) < delta && rng.gen_bool(0.2) {
                b.add_edge(x, y)?;
            }
        }
    }

    // Random relabelling so nothing downstream can lean on the layout.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let built = b.build();
    let g = Graph::from_edges(n, built.edges().map(|(x, y)| (perm[x], perm[y])))?;
    let center = perm[0];

    let c2 = delta * (delta - 1) / 2;
    let inside = g.neighborhood_edge_count(center)?;
    let dense = ((c2 - inside) as f64) < alpha * c2 as f64;
    let omega = clique_number_with_limit(&g, g.n())?;
    let ok = g.max_degree() <= delta
        && g.degree(center) == delta
        && dense
        && 3 * omega <= 2 * (delta + 1);
    Ok(ok.then_some(PlantedInstance {
        graph: g,
        center,
        missing_in_neighborhood: missing,
    }))
}

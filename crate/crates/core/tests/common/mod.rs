//! Shared corpus and brute-force oracles for the integration tests. The
//! oracles deliberately avoid the library's search code.

#![allow(dead_code)]

use chibound::graph::{nonisomorphic_graphs, parse_dimacs, random_graph};
use chibound::Graph;

/// Every graph on at most 8 vertices up to isomorphism, then 1000 seeded
/// `G(n, p)` samples with `n ≤ 16`, `p ∈ {0.2, 0.5, 0.8}`.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 0..=8 {
        for (i, g) in nonisomorphic_graphs(n).into_iter().enumerate() {
            out.push((format!("iso-{n}-{i}"), g));
        }
    }
    out.extend(random_corpus());
    out
}

pub fn random_corpus() -> Vec<(String, Graph)> {
    (0..1000u64)
        .map(|i| {
            let n = 1 + (i % 16) as usize;
            let p = [0.2, 0.5, 0.8][((i / 16) % 3) as usize];
            (format!("gnp-{n}-{p}-{i}"), random_graph(n, p, 1000 + i).unwrap())
        })
        .collect()
}

pub const BENCHMARKS: [&str; 5] = ["myciel3", "myciel4", "myciel5", "queen5_5", "queen6_6"];

pub fn benchmark(name: &str) -> Graph {
    let path = format!("{}/tests/data/{name}.col", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_dimacs(&text).unwrap()
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).contains(&v)
}

/// Every clique, by extending with higher-numbered common neighbours.
pub fn all_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, current: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for v in from..g.n() {
            if current.iter().all(|&u| adjacent(g, u, v)) {
                current.push(v);
                grow(g, current, v + 1, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, &mut Vec::new(), 0, &mut out);
    out
}

pub fn brute_omega(g: &Graph) -> usize {
    all_cliques(g).iter().map(Vec::len).max().unwrap_or(0)
}

pub fn brute_maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let all = all_cliques(g);
    let w = all.iter().map(Vec::len).max().unwrap_or(0);
    all.into_iter().filter(|c| c.len() == w).collect()
}

pub fn brute_max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.neighbors(v).len()).max().unwrap_or(0)
}

/// Smallest `k` admitting a proper coloring, by plain backtracking.
pub fn brute_chi(g: &Graph) -> u32 {
    fn fits(g: &Graph, k: u32, colors: &mut Vec<u32>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        let top = k.min(colors.iter().copied().max().unwrap_or(0) + 1);
        for c in 1..=top {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors.push(c);
                if fits(g, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (0..).find(|&k| fits(g, k, &mut Vec::new())).unwrap()
}

/// Maximum matching size of the complement: disjoint nonadjacent pairs.
pub fn brute_antimatching(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, start: usize) -> usize {
        let Some(v) = (start..g.n()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for u in v + 1..g.n() {
            if !used[u] && !adjacent(g, u, v) {
                used[u] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.n()], 0)
}

pub fn is_stable(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&u| set.iter().all(|&v| !adjacent(g, u, v)))
}

//! Exact maximum matchings by branch and bound, and antimatchings (matchings
//! of the complement).

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_MATCHING_LIMIT: usize = 64;

/// Vertex-disjoint pairs, each stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

/// Vertex-disjoint pairs of non-adjacent vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Antimatching {
    pairs: Vec<(usize, usize)>,
}

fn normalize(pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = pairs
        .into_iter()
        .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    out.sort_unstable();
    out
}

fn check_disjoint(pairs: &[(usize, usize)], n: usize) -> Result<()> {
    let mut used = vec![false; n];
    for &(u, v) in pairs {
        if u == v || v >= n {
            return Err(Error::InvalidEdge(u, v));
        }
        if used[u] || used[v] {
            return Err(Error::Precondition(format!(
                "pair ({u}, {v}) shares a vertex with another pair"
            )));
        }
        used[u] = true;
        used[v] = true;
    }
    Ok(())
}

impl Matching {
    /// Disjoint pairs over vertices `0..n`; no host graph is consulted.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>, n: usize) -> Result<Self> {
        let pairs = normalize(pairs);
        check_disjoint(&pairs, n)?;
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs disjoint and every pair an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        check_disjoint(&self.pairs, g.n()).is_ok()
            && self.pairs.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// `mate[v]` is the partner of `v`, if matched.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.pairs {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

impl Antimatching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs disjoint and no pair an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        check_disjoint(&self.pairs, g.n()).is_ok()
            && self.pairs.iter().all(|&(u, v)| !g.has_edge(u, v))
    }

    pub fn into_matching(self) -> Matching {
        Matching { pairs: self.pairs }
    }
}

/// Maximum-cardinality matching, exact for `n ≤ 64`.
pub fn max_matching(g: &Graph) -> Result<Matching> {
    max_matching_with_limit(g, DEFAULT_MATCHING_LIMIT)
}

pub fn max_matching_with_limit(g: &Graph, limit: usize) -> Result<Matching> {
    if g.n() > limit {
        return Err(Error::capacity("max_matching", g.n(), limit));
    }
    let mut search = Search {
        g,
        current: Vec::new(),
        best: greedy_matching(g),
    };
    search.run(g.vertex_set());
    Ok(Matching {
        pairs: normalize(search.best),
    })
}

/// Maximum antimatching: a maximum matching of the complement.
pub fn max_antimatching(g: &Graph) -> Result<Antimatching> {
    max_antimatching_with_limit(g, DEFAULT_MATCHING_LIMIT)
}

pub fn max_antimatching_with_limit(g: &Graph, limit: usize) -> Result<Antimatching> {
    if g.n() > limit {
        return Err(Error::capacity("max_antimatching", g.n(), limit));
    }
    let m = max_matching_with_limit(&g.complement(), limit)?;
    Ok(Antimatching { pairs: m.pairs })
}

/// Repeatedly match a free vertex of minimum free degree to its free
/// neighbour of minimum free degree.
fn greedy_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut free = g.vertex_set();
    let mut out = Vec::new();
    loop {
        let pick = free
            .ones()
            .map(|v| (g.adjacency(v).intersection_count(&free), v))
            .filter(|&(d, _)| d > 0)
            .min();
        let Some((_, v)) = pick else { break };
        let u = g
            .adjacency(v)
            .intersection(&free)
            .min_by_key(|&u| g.adjacency(u).intersection_count(&free))
            .expect("positive free degree");
        free.set(v, false);
        free.set(u, false);
        out.push((v, u));
    }
    out
}

struct Search<'g> {
    g: &'g Graph,
    current: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn free_degree(&self, v: usize, free: &FixedBitSet) -> usize {
        self.g.adjacency(v).intersection_count(free)
    }

    /// Sum over components of the free subgraph of ⌊size/2⌋.
    fn component_bound(&self, free: &FixedBitSet) -> usize {
        let mut unseen = free.clone();
        let mut bound = 0;
        let mut stack = Vec::new();
        while let Some(s) = unseen.ones().next() {
            unseen.set(s, false);
            stack.push(s);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for w in self.g.adjacency(u).intersection(&unseen).collect::<Vec<_>>() {
                    unseen.set(w, false);
                    stack.push(w);
                }
            }
            bound += size / 2;
        }
        bound
    }

    fn run(&mut self, mut free: FixedBitSet) {
        let mark = self.current.len();
        // Isolated vertices leave; a vertex of free degree one is matched to
        // its only neighbour, which some maximum matching always does.
        loop {
            let mut changed = false;
            for v in free.ones().collect::<Vec<_>>() {
                if !free.contains(v) {
                    continue;
                }
                match self.free_degree(v, &free) {
                    0 => {
                        free.set(v, false);
                        changed = true;
                    }
                    1 => {
                        let u = self.g.adjacency(v).intersection(&free).next().expect("degree 1");
                        free.set(v, false);
                        free.set(u, false);
                        self.current.push((v, u));
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        if free.is_clear() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else if self.current.len() + self.component_bound(&free) > self.best.len() {
            let v = free
                .ones()
                .min_by_key(|&v| self.free_degree(v, &free))
                .expect("nonempty");
            let candidates: Vec<usize> = self.g.adjacency(v).intersection(&free).collect();
            for u in candidates {
                let mut next = free.clone();
                next.set(v, false);
                next.set(u, false);
                self.current.push((v, u));
                self.run(next);
                self.current.pop();
            }
            let mut next = free;
            next.set(v, false);
            self.run(next);
        }
        self.current.truncate(mark);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_graph;

    /// Plain exhaustive search: the lowest vertex is either unmatched or
    /// matched to one of its neighbours.
    fn brute_force_matching(g: &Graph) -> usize {
        fn go(g: &Graph, used: &mut Vec<bool>, start: usize) -> usize {
            let Some(v) = (start..g.n()).find(|&v| !used[v]) else {
                return 0;
            };
            used[v] = true;
            let mut best = go(g, used, v + 1);
            for &u in g.neighbors(v) {
                if !used[u] {
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

    #[test]
    fn small_examples() {
        assert_eq!(max_matching(&Graph::complete(4)).unwrap().len(), 2);
        assert_eq!(max_matching(&Graph::cycle(5)).unwrap().len(), 2);
        assert_eq!(max_matching(&Graph::star(5)).unwrap().len(), 1);
        assert_eq!(brute_force_matching(&Graph::complete(4)), 2);
        assert_eq!(brute_force_matching(&Graph::cycle(5)), 2);
    }

    #[test]
    fn antimatching_examples() {
        assert_eq!(max_antimatching(&Graph::complete(7)).unwrap().len(), 0);
        let c5 = Graph::cycle(5);
        let am = max_antimatching(&c5).unwrap();
        assert_eq!(am.len(), 2);
        assert!(am.is_valid_in(&c5));
        // ⌊(5 − ω)/2⌋ with ω(C5) = 2.
        assert!(am.len() >= (5 - 2) / 2);
        assert_eq!(max_antimatching(&Graph::empty(6)).unwrap().len(), 3);
    }

    #[test]
    fn capacity_is_enforced() {
        let g = Graph::empty(70);
        assert!(matches!(max_matching(&g), Err(Error::Capacity { .. })));
        assert!(max_matching_with_limit(&g, 100).is_ok());
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        for seed in 0..300u64 {
            let n = (seed % 11) as usize;
            let p = [0.15, 0.3, 0.5, 0.8][(seed % 4) as usize];
            let g = random_graph(n, p, seed).unwrap();
            let m = max_matching(&g).unwrap();
            assert!(m.is_valid_in(&g));
            assert_eq!(m.len(), brute_force_matching(&g), "{g:?}");
        }
    }

    #[test]
    fn matching_constructor_validates() {
        assert!(Matching::new([(0, 1), (2, 3)], 4).is_ok());
        assert!(Matching::new([(0, 1), (1, 2)], 4).is_err());
        assert!(Matching::new([(0, 0)], 4).is_err());
        assert!(Matching::new([(0, 5)], 4).is_err());
        let m = Matching::new([(3, 2)], 4).unwrap();
        assert_eq!(m.pairs(), &[(2, 3)]);
        assert_eq!(m.mates(4), vec![None, None, Some(3), Some(2)]);
    }
}

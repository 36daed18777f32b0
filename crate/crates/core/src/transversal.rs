//! Independent systems of representatives (ISRs) over partitioned graphs,
//! totally dominating certificates, and the stable set meeting every maximum
//! clique.

use serde::Serialize;

use crate::cliques::{clique_components, maximum_cliques_with_limit, omega_exceeds_two_thirds, DEFAULT_CLIQUE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

pub const DEFAULT_ISR_LIMIT: usize = 64;
/// Largest `|V_J ∪ {x_1}|` for which a dominating certificate is searched.
pub const CERTIFICATE_SEARCH_LIMIT: usize = 14;

/// How the classes of a [`PartitionedGraph`] are to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassMode {
    /// Classes are cliques; degree conditions count neighbours outside the class.
    Clique,
    /// Classes are stable sets; degree conditions count all neighbours.
    Stable,
}

/// A host graph with its vertex set partitioned into ordered classes.
#[derive(Clone, Debug)]
pub struct PartitionedGraph {
    host: Graph,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    mode: ClassMode,
}

impl PartitionedGraph {
    pub fn new(host: Graph, classes: Vec<Vec<usize>>, mode: ClassMode) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Precondition("a partition needs at least one class".into()));
        }
        let mut class_of = vec![usize::MAX; host.n()];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Precondition(format!("class {i} is empty")));
            }
            for &v in class {
                if v >= host.n() {
                    return Err(Error::UnknownVertex(v));
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::Precondition(format!("vertex {v} is in two classes")));
                }
                class_of[v] = i;
            }
            let ok = match mode {
                ClassMode::Clique => host.is_clique(class),
                ClassMode::Stable => host.is_stable(class),
            };
            if !ok {
                return Err(Error::Precondition(format!("class {i} is not a {mode:?} set")));
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Precondition(format!("vertex {v} is in no class")));
        }
        Ok(PartitionedGraph {
            host,
            classes,
            class_of,
            mode,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn mode(&self) -> ClassMode {
        self.mode
    }

    pub fn r(&self) -> usize {
        self.classes.len()
    }

    /// Neighbours of `v` in other classes.
    pub fn out_degree(&self, v: usize) -> usize {
        let c = self.class_of[v];
        self.host.neighbors(v).iter().filter(|&&w| self.class_of[w] != c).count()
    }

    /// The same partition with intra-class edges deleted, read in stable mode.
    /// ISRs of the two are the same sets.
    pub fn to_stable_mode(&self) -> PartitionedGraph {
        let host = Graph::from_edges(
            self.host.n(),
            self.host.edges().filter(|&(u, v)| self.class_of[u] != self.class_of[v]),
        )
        .expect("subset of valid edges");
        PartitionedGraph {
            host,
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
            mode: ClassMode::Stable,
        }
    }

    /// True iff `set` is stable and meets every class exactly once.
    pub fn is_isr(&self, set: &[usize]) -> bool {
        let mut hit = vec![0usize; self.r()];
        for &v in set {
            if v >= self.host.n() {
                return false;
            }
            hit[self.class_of[v]] += 1;
        }
        hit.iter().all(|&h| h == 1) && self.host.is_stable(set)
    }

    /// The partition restricted to the classes in `keep` (renumbered in order).
    pub fn restrict(&self, keep: &[usize]) -> PartitionedGraph {
        let vertices: Vec<usize> = keep.iter().flat_map(|&i| self.classes[i].iter().copied()).collect();
        let sub = self.host.induced(&vertices);
        let index = sub.index_in(self.host.n());
        let classes = keep
            .iter()
            .map(|&i| self.classes[i].iter().map(|&v| index[v].expect("kept")).collect())
            .collect();
        PartitionedGraph::new(sub.graph, classes, self.mode).expect("restriction of a valid partition")
    }
}

/// A set `D = X ∪ Y` totally dominating `V_J ∪ {x_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatingCertificate {
    /// Class indices `J`, excluding the class of `x1`.
    pub j: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub x1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransversalResult {
    Found { set: Vec<usize> },
    /// Search exhausted. `witness` is present when a dominating certificate
    /// was searched for and found.
    NotFound { witness: Option<DominatingCertificate> },
}

impl TransversalResult {
    pub fn set(&self) -> Option<&[usize]> {
        match self {
            TransversalResult::Found { set } => Some(set),
            TransversalResult::NotFound { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.set().is_some()
    }
}

struct IsrSearch<'a> {
    pg: &'a PartitionedGraph,
    /// Candidate lists, in search order.
    classes: Vec<Vec<usize>>,
    blocked: Vec<u32>,
    chosen: Vec<usize>,
}

impl IsrSearch<'_> {
    fn set_blocks(&mut self, v: usize, delta: i32) {
        for &w in self.pg.host.neighbors(v) {
            self.blocked[w] = (self.blocked[w] as i32 + delta) as u32;
        }
    }

    fn run(&mut self, idx: usize) -> bool {
        if idx == self.classes.len() {
            return true;
        }
        for i in 0..self.classes[idx].len() {
            let v = self.classes[idx][i];
            if self.blocked[v] > 0 {
                continue;
            }
            self.set_blocks(v, 1);
            // Forward check: every later class keeps an unblocked candidate.
            let viable = self.classes[idx + 1..]
                .iter()
                .all(|c| c.iter().any(|&w| self.blocked[w] == 0));
            if viable {
                self.chosen.push(v);
                if self.run(idx + 1) {
                    return true;
                }
                self.chosen.pop();
            }
            self.set_blocks(v, -1);
        }
        false
    }
}

/// Exhaustive ISR search, optionally through a prescribed vertex.
pub fn find_isr(pg: &PartitionedGraph, required: Option<usize>) -> Result<TransversalResult> {
    find_isr_with_limit(pg, required, DEFAULT_ISR_LIMIT)
}

pub fn find_isr_with_limit(
    pg: &PartitionedGraph,
    required: Option<usize>,
    limit: usize,
) -> Result<TransversalResult> {
    let n = pg.host.n();
    if n > limit {
        return Err(Error::capacity("find_isr", n, limit));
    }
    if let Some(x) = required {
        if x >= n {
            return Err(Error::UnknownVertex(x));
        }
    }
    if let Some(set) = isr_search(pg, required) {
        return Ok(TransversalResult::Found { set });
    }
    let witness = match required {
        Some(x1) => {
            let others: Vec<usize> = (0..pg.r()).filter(|&i| i != pg.class_of(x1)).collect();
            // The certificate exists when the other classes have an ISR.
            if others.is_empty() || isr_search(&pg.restrict(&others), None).is_some() {
                search_certificate(pg, x1)
            } else {
                None
            }
        }
        None => None,
    };
    Ok(TransversalResult::NotFound { witness })
}

fn isr_search(pg: &PartitionedGraph, required: Option<usize>) -> Option<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = pg
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| match required {
            Some(x) if pg.class_of(x) == i => vec![x],
            _ => c.clone(),
        })
        .collect();
    classes.sort_by_key(Vec::len);
    let mut search = IsrSearch {
        pg,
        classes,
        blocked: vec![0; pg.host.n()],
        chosen: Vec::new(),
    };
    search.run(0).then(|| {
        let mut set = search.chosen;
        set.sort_unstable();
        set
    })
}

/// Checks the four certificate conditions and total domination.
pub fn check_certificate(pg: &PartitionedGraph, cert: &DominatingCertificate) -> bool {
    let g = &pg.host;
    let n = g.n();
    let in_range = |s: &[usize]| s.iter().all(|&v| v < n);
    if cert.x1 >= n || !in_range(&cert.x) || !in_range(&cert.y) {
        return false;
    }
    let home = pg.class_of(cert.x1);
    let mut in_j = vec![false; pg.r()];
    for &i in &cert.j {
        if i >= pg.r() || i == home || in_j[i] {
            return false;
        }
        in_j[i] = true;
    }
    let in_target = |v: usize| v == cert.x1 || in_j[pg.class_of(v)];

    // 1. D is the union of disjoint stable sets X and Y, inside V_J ∪ {x1}.
    if cert.x.iter().any(|v| cert.y.contains(v)) {
        return false;
    }
    if !g.is_stable(&cert.x) || !g.is_stable(&cert.y) {
        return false;
    }
    if !cert.x.iter().chain(&cert.y).all(|&v| in_target(v)) {
        return false;
    }
    // 2. Y is a partial ISR of V_J.
    let mut seen = vec![false; pg.r()];
    for &y in &cert.y {
        let c = pg.class_of(y);
        if !in_j[c] || seen[c] {
            return false;
        }
        seen[c] = true;
    }
    // 3. Every vertex of Y has exactly one neighbour in X.
    if !cert
        .y
        .iter()
        .all(|&y| cert.x.iter().filter(|&&x| g.has_edge(x, y)).count() == 1)
    {
        return false;
    }
    // 4. x1 ∈ X.
    if !cert.x.contains(&cert.x1) {
        return false;
    }
    // Total domination of V_J ∪ {x1}.
    let d: Vec<usize> = cert.x.iter().chain(&cert.y).copied().collect();
    (0..n)
        .filter(|&v| in_target(v))
        .all(|v| d.iter().any(|&u| g.has_edge(u, v)))
}

/// Exhaustive search for a dominating certificate through `x1`, over every
/// `J` (smallest first) and every split of `V_J` into X, Y and the rest.
pub fn search_certificate(pg: &PartitionedGraph, x1: usize) -> Option<DominatingCertificate> {
    let home = pg.class_of(x1);
    let others: Vec<usize> = (0..pg.r()).filter(|&i| i != home).collect();
    let mut subsets: Vec<Vec<usize>> = (0u32..(1 << others.len()))
        .map(|mask| {
            others
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect();
    subsets.sort_by_key(Vec::len);
    for j in subsets {
        let vertices: Vec<usize> = j.iter().flat_map(|&i| pg.classes[i].iter().copied()).collect();
        if vertices.len() + 1 > CERTIFICATE_SEARCH_LIMIT {
            continue;
        }
        let mut cert = DominatingCertificate {
            j: j.clone(),
            x: vec![x1],
            y: Vec::new(),
            x1,
        };
        if assign(pg, &vertices, 0, &mut cert) {
            cert.x.sort_unstable();
            cert.y.sort_unstable();
            return Some(cert);
        }
    }
    None
}

fn assign(pg: &PartitionedGraph, vertices: &[usize], i: usize, cert: &mut DominatingCertificate) -> bool {
    if i == vertices.len() {
        return check_certificate(pg, cert);
    }
    let v = vertices[i];
    let g = &pg.host;
    if assign(pg, vertices, i + 1, cert) {
        return true;
    }
    if cert.x.iter().all(|&x| !g.has_edge(x, v)) {
        cert.x.push(v);
        if assign(pg, vertices, i + 1, cert) {
            return true;
        }
        cert.x.pop();
    }
    let c = pg.class_of(v);
    if cert.y.iter().all(|&y| !g.has_edge(y, v) && pg.class_of(y) != c) {
        cert.y.push(v);
        if assign(pg, vertices, i + 1, cert) {
            return true;
        }
        cert.y.pop();
    }
    false
}

/// Every vertex's degree measure is at most `min{k, |V_i| − k}` for its class.
/// The measure is the out-of-class degree in clique mode and the total degree
/// in stable mode.
pub fn verify_lopsided_condition(pg: &PartitionedGraph, k: u32) -> bool {
    lopsided_condition_holds(pg, Rational::integer(k as i64))
}

/// [`verify_lopsided_condition`] for a rational `k`.
pub fn lopsided_condition_holds(pg: &PartitionedGraph, k: Rational) -> bool {
    pg.classes.iter().all(|class| {
        let cap = k.min(Rational::from(class.len()) - k);
        class.iter().all(|&v| {
            let d = match pg.mode {
                ClassMode::Clique => pg.out_degree(v),
                ClassMode::Stable => pg.host.degree(v),
            };
            Rational::from(d) <= cap
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSet {
    pub set: Vec<usize>,
    pub omega: usize,
    pub delta: usize,
    /// `(Δ+1)/3`, unrounded.
    pub k: Rational,
    pub maximum_cliques: usize,
    pub components: usize,
    /// The lopsided condition on `H = G[∪F_i]` with clique classes `F_i`.
    pub lopsided: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HittingOutcome {
    Inapplicable { omega: usize, delta: usize },
    Found(HittingSet),
}

pub fn hitting_stable_set(g: &Graph) -> Result<HittingOutcome> {
    hitting_stable_set_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

/// A stable set meeting every maximum clique when `ω > (2/3)(Δ+1)`.
///
/// Builds `H`, the graph induced on the intersections `F_i` of the
/// clique-graph components, partitioned into the cliques `F_i`, and takes an
/// ISR of it.
pub fn hitting_stable_set_with_limit(g: &Graph, limit: usize) -> Result<HittingOutcome> {
    let delta = g.max_degree();
    let fam = maximum_cliques_with_limit(g, limit)?;
    let omega = fam.omega;
    if !omega_exceeds_two_thirds(omega, delta) {
        return Ok(HittingOutcome::Inapplicable { omega, delta });
    }
    let components = clique_components(&fam);
    let vertices: Vec<usize> = components.iter().flat_map(|c| c.intersection.iter().copied()).collect();
    if components.iter().any(|c| c.intersection.is_empty()) {
        return Err(Error::Internal(format!(
            "a clique-graph component has empty intersection although ω = {omega} > 2(Δ+1)/3 with Δ = {delta}"
        )));
    }
    let sub = g.induced(&vertices);
    let index = sub.index_in(g.n());
    let classes: Vec<Vec<usize>> = components
        .iter()
        .map(|c| c.intersection.iter().map(|&v| index[v].expect("in H")).collect())
        .collect();
    let pg = PartitionedGraph::new(sub.graph, classes, ClassMode::Clique)?;
    let k = Rational::new(delta as i64 + 1, 3);
    let lopsided = lopsided_condition_holds(&pg, k);
    let result = find_isr_with_limit(&pg, None, limit.max(pg.host().n()))?;
    let Some(local) = result.set() else {
        return Err(Error::Internal(format!(
            "no ISR of the clique intersections (ω = {omega}, Δ = {delta}, lopsided = {lopsided})"
        )));
    };
    let mut set: Vec<usize> = local.iter().map(|&i| sub.parent[i]).collect();
    set.sort_unstable();
    let hits_all = fam.cliques.iter().all(|c| c.iter().any(|v| set.binary_search(v).is_ok()));
    if !g.is_stable(&set) || !hits_all {
        return Err(Error::Internal(format!("ISR {set:?} does not hit every maximum clique")));
    }
    Ok(HittingOutcome::Found(HittingSet {
        set,
        omega,
        delta,
        k,
        maximum_cliques: fam.cliques.len(),
        components: components.len(),
        lopsided,
    }))
}

/// Adds vertices in increasing order until the set is maximal stable.
pub fn extend_to_maximal(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::UnknownVertex(v));
    }
    if !g.is_stable(s) {
        return Err(Error::Precondition(format!("{s:?} is not stable")));
    }
    let mut inside = g.set_of(s);
    let mut dominated = g.set_of(s);
    for &v in s {
        dominated.union_with(g.adjacency(v));
    }
    for v in 0..g.n() {
        if !dominated.contains(v) {
            inside.insert(v);
            dominated.insert(v);
            dominated.union_with(g.adjacency(v));
        }
    }
    Ok(inside.ones().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::maximum_cliques;

    fn brute_force_isr(pg: &PartitionedGraph, required: Option<usize>) -> bool {
        fn go(pg: &PartitionedGraph, i: usize, chosen: &mut Vec<usize>, required: Option<usize>) -> bool {
            if i == pg.r() {
                return pg.is_isr(chosen) && required.is_none_or(|x| chosen.contains(&x));
            }
            for &v in &pg.classes()[i] {
                chosen.push(v);
                if go(pg, i + 1, chosen, required) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        go(pg, 0, &mut Vec::new(), required)
    }

    #[test]
    fn partition_validation() {
        let g = Graph::path(3);
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 2], vec![1]], ClassMode::Stable).is_ok());
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 1], vec![2]], ClassMode::Stable).is_err());
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 1], vec![2]], ClassMode::Clique).is_ok());
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0], vec![2]], ClassMode::Stable).is_err());
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 1], vec![1, 2]], ClassMode::Clique).is_err());
        assert!(PartitionedGraph::new(g, vec![], ClassMode::Stable).is_err());
    }

    #[test]
    fn isr_examples() {
        let pg = PartitionedGraph::new(Graph::empty(4), vec![vec![0, 1], vec![2, 3]], ClassMode::Stable).unwrap();
        let r = find_isr(&pg, None).unwrap();
        assert!(pg.is_isr(r.set().unwrap()));

        // a-b-c-d-a with a=0, b=1, c=2, d=3; classes {a,c}, {b,d}.
        let c4 = Graph::cycle(4);
        let pg = PartitionedGraph::new(c4, vec![vec![0, 2], vec![1, 3]], ClassMode::Stable).unwrap();
        assert!(!brute_force_isr(&pg, None));
        // Every transversal pairs a vertex with one of its two neighbours.
        assert_eq!(find_isr(&pg, None).unwrap(), TransversalResult::NotFound { witness: None });

        let pg = PartitionedGraph::new(Graph::complete(2), vec![vec![0], vec![1]], ClassMode::Stable).unwrap();
        assert!(!find_isr(&pg, None).unwrap().is_found());
    }

    #[test]
    fn isr_in_c4_with_matching_classes() {
        // With classes {a,b}, {c,d}, the transversal {a,c} is stable.
        let c4 = Graph::cycle(4);
        let pg = PartitionedGraph::new(c4, vec![vec![0, 1], vec![2, 3]], ClassMode::Clique).unwrap();
        let r = find_isr(&pg, None).unwrap();
        assert_eq!(r.set(), Some(&[0, 2][..]));
        assert!(brute_force_isr(&pg, None));
    }

    #[test]
    fn required_vertex_is_honoured() {
        let pg = PartitionedGraph::new(Graph::path(4), vec![vec![0, 2], vec![1, 3]], ClassMode::Stable).unwrap();
        for x in 0..4 {
            let found = find_isr(&pg, Some(x)).unwrap();
            assert_eq!(found.is_found(), brute_force_isr(&pg, Some(x)), "x = {x}");
            if let Some(s) = found.set() {
                assert!(s.contains(&x));
            }
        }
    }

    #[test]
    fn lopsided_examples() {
        let pg = PartitionedGraph::new(Graph::empty(8), vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], ClassMode::Stable)
            .unwrap();
        assert!(verify_lopsided_condition(&pg, 2));

        // Class {0} of size 1 ≤ k with a neighbour outside: min{1, 0} = 0.
        let pg = PartitionedGraph::new(Graph::path(2), vec![vec![0], vec![1]], ClassMode::Clique).unwrap();
        assert!(!verify_lopsided_condition(&pg, 1));

        // Two K4 classes, each vertex with at most two neighbours across.
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a, b));
                edges.push((a + 4, b + 4));
            }
        }
        edges.extend([(0, 4), (0, 5), (1, 4), (1, 5), (2, 6), (3, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        let pg = PartitionedGraph::new(g, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], ClassMode::Clique).unwrap();
        assert!((0..8).all(|v| pg.out_degree(v) <= 2));
        assert!(verify_lopsided_condition(&pg, 2));
        assert!(!verify_lopsided_condition(&pg, 1));
        for v in 0..8 {
            assert!(find_isr(&pg, Some(v)).unwrap().is_found());
        }
    }

    #[test]
    fn certificate_examples() {
        // x1 = 0 alone in its class; leaves 1, 2, 3 form the other class.
        let star = Graph::star(3);
        let pg = PartitionedGraph::new(star, vec![vec![0], vec![1, 2, 3]], ClassMode::Stable).unwrap();

        let bare = DominatingCertificate { j: vec![], x: vec![0], y: vec![], x1: 0 };
        assert!(!check_certificate(&pg, &bare));

        let no_y = DominatingCertificate { j: vec![1], x: vec![0], y: vec![], x1: 0 };
        assert!(!check_certificate(&pg, &no_y));

        let good = DominatingCertificate { j: vec![1], x: vec![0], y: vec![1], x1: 0 };
        assert!(check_certificate(&pg, &good));

        // y = 1 with two neighbours in X breaks condition 3.
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let pg = PartitionedGraph::new(g, vec![vec![0, 3], vec![1], vec![2]], ClassMode::Stable).unwrap();
        let two = DominatingCertificate { j: vec![1, 2], x: vec![0, 2], y: vec![1], x1: 0 };
        assert!(!check_certificate(&pg, &two));
    }

    #[test]
    fn missing_isr_through_x1_yields_certificate() {
        // Star: x1 = 0 in class {0}; its neighbours form class {1,2,3}.
        let pg = PartitionedGraph::new(Graph::star(3), vec![vec![0], vec![1, 2, 3]], ClassMode::Stable).unwrap();
        match find_isr(&pg, Some(0)).unwrap() {
            TransversalResult::NotFound { witness: Some(cert) } => assert!(check_certificate(&pg, &cert)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hitting_examples() {
        match hitting_stable_set(&Graph::complete(3)).unwrap() {
            HittingOutcome::Found(h) => assert_eq!(h.set.len(), 1),
            other => panic!("{other:?}"),
        }

        let two = Graph::disjoint_union(&[&Graph::complete(4), &Graph::complete(4)]);
        match hitting_stable_set(&two).unwrap() {
            HittingOutcome::Found(h) => {
                assert_eq!((h.omega, h.delta), (4, 3));
                assert_eq!(h.set.len(), 2);
                assert!(two.is_stable(&h.set));
                let fam = maximum_cliques(&two).unwrap();
                assert!(fam.cliques.iter().all(|c| c.iter().any(|v| h.set.contains(v))));
            }
            other => panic!("{other:?}"),
        }

        assert_eq!(
            hitting_stable_set(&Graph::cycle(5)).unwrap(),
            HittingOutcome::Inapplicable { omega: 2, delta: 2 }
        );
    }

    #[test]
    fn extend_to_maximal_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(extend_to_maximal(&k5, &[]).unwrap().len(), 1);
        // a-b-c: {a} grows to {a, c}.
        assert_eq!(extend_to_maximal(&Graph::path(3), &[0]).unwrap(), vec![0, 2]);
        assert_eq!(extend_to_maximal(&Graph::path(3), &[0, 2]).unwrap(), vec![0, 2]);
        assert!(extend_to_maximal(&Graph::path(3), &[0, 1]).is_err());
    }
}

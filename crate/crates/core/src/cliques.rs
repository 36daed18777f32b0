//! Maximum cliques, the clique graph `G(𝒞)` and its components, and the
//! intersection certificates of Hajnal and Kostochka.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_LIMIT: usize = 64;

/// All maximum cliques of a graph, each sorted, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueFamily {
    pub omega: usize,
    pub cliques: Vec<Vec<usize>>,
}

/// One connected component of the clique graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueComponent {
    /// Indices into [`CliqueFamily::cliques`].
    pub members: Vec<usize>,
    /// `D_i`: union of the member cliques.
    pub union: Vec<usize>,
    /// `F_i`: common intersection of the member cliques.
    pub intersection: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HajnalCertificate {
    pub intersection_size: usize,
    pub union_size: usize,
    pub bound: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostochkaCertificate {
    pub members: usize,
    pub intersection_size: usize,
    /// `2ω − (Δ+1)`.
    pub bound: i64,
    /// Every two member cliques intersect.
    pub pairwise_intersecting: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum KostochkaReport {
    /// `ω ≤ (2/3)(Δ+1)`: no intersection guarantee applies.
    Inapplicable { omega: usize, delta: usize },
    Applicable {
        omega: usize,
        delta: usize,
        components: Vec<KostochkaCertificate>,
    },
}

impl KostochkaReport {
    pub fn pass(&self) -> bool {
        match self {
            KostochkaReport::Inapplicable { .. } => true,
            KostochkaReport::Applicable { components, .. } => components.iter().all(|c| c.pass),
        }
    }
}

/// `3ω > 2(Δ+1)`, the hypothesis shared by the Kostochka certificate and the hitting set.
pub fn omega_exceeds_two_thirds(omega: usize, delta: usize) -> bool {
    3 * omega > 2 * (delta + 1)
}

/// Sequential greedy colouring of `p` in increasing vertex order; returns the
/// vertices sorted by colour with their colour numbers (1-based).
fn color_sort(g: &Graph, p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut remaining = p.clone();
    let mut order = Vec::with_capacity(p.count_ones(..));
    let mut colors = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !remaining.is_clear() {
        color += 1;
        let mut candidates = remaining.clone();
        while let Some(v) = candidates.ones().next() {
            candidates.set(v, false);
            candidates.difference_with(g.adjacency(v));
            remaining.set(v, false);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

struct MaxClique<'g> {
    g: &'g Graph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl MaxClique<'_> {
    fn expand(&mut self, mut p: FixedBitSet) {
        let (order, colors) = color_sort(self.g, &p);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let mut next = p.clone();
            next.intersect_with(self.g.adjacency(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.set(v, false);
        }
    }
}

/// One maximum clique, by branch and bound with greedy-colouring bounds.
pub fn maximum_clique_with_limit(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    if g.n() > limit {
        return Err(Error::capacity("maximum_clique", g.n(), limit));
    }
    let mut search = MaxClique {
        g,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(g.vertex_set());
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    maximum_clique_with_limit(g, limit).map(|c| c.len())
}

/// A clique found greedily from each start vertex; a lower bound on ω for
/// graphs beyond the exact limit.
pub fn greedy_clique_lower_bound(g: &Graph) -> usize {
    (0..g.n())
        .map(|s| {
            let mut cand = g.adjacency(s).clone();
            let mut size = 1;
            while let Some(v) = cand
                .ones()
                .max_by_key(|&v| (g.adjacency(v).intersection_count(&cand), std::cmp::Reverse(v)))
            {
                size += 1;
                cand.intersect_with(g.adjacency(v));
            }
            size
        })
        .max()
        .unwrap_or(0)
}

pub fn maximum_cliques(g: &Graph) -> Result<CliqueFamily> {
    maximum_cliques_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

/// Every clique of size ω: branch and bound for ω, then pivoting
/// Bron–Kerbosch pruned to branches that can still reach size ω.
pub fn maximum_cliques_with_limit(g: &Graph, limit: usize) -> Result<CliqueFamily> {
    let omega = clique_number_with_limit(g, limit)?;
    let mut cliques = Vec::new();
    if omega > 0 {
        let mut r = Vec::new();
        bron_kerbosch(g, omega, &mut r, g.vertex_set(), g.empty_set(), &mut cliques);
    }
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    Ok(CliqueFamily { omega, cliques })
}

fn bron_kerbosch(
    g: &Graph,
    omega: usize,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() && r.len() == omega {
            out.push(r.clone());
        }
        return;
    }
    if r.len() + p.count_ones(..) < omega {
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| g.adjacency(u).intersection_count(&p))
        .expect("p nonempty");
    let mut branch = p.clone();
    branch.difference_with(g.adjacency(pivot));
    for v in branch.ones() {
        r.push(v);
        let mut np = p.clone();
        np.intersect_with(g.adjacency(v));
        let mut nx = x.clone();
        nx.intersect_with(g.adjacency(v));
        bron_kerbosch(g, omega, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

fn intersects(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn union_and_intersection(cliques: &[&Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut union: Vec<usize> = cliques.iter().flat_map(|c| c.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    let intersection = cliques[0]
        .iter()
        .copied()
        .filter(|v| cliques.iter().all(|c| c.binary_search(v).is_ok()))
        .collect();
    (union, intersection)
}

/// Connected components of the clique graph (cliques adjacent iff they
/// share a vertex), via union-find over all pairs.
pub fn clique_components(fam: &CliqueFamily) -> Vec<CliqueComponent> {
    let k = fam.cliques.len();
    let mut parent: Vec<usize> = (0..k).collect();
    for a in 0..k {
        for b in a + 1..k {
            if intersects(&fam.cliques[a], &fam.cliques[b]) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        let root = find(&mut parent, i);
        groups[root].push(i);
    }
    groups
        .into_iter()
        .filter(|m| !m.is_empty())
        .map(|members| {
            let cliques: Vec<&Vec<usize>> = members.iter().map(|&i| &fam.cliques[i]).collect();
            let (union, intersection) = union_and_intersection(&cliques);
            CliqueComponent {
                members,
                union,
                intersection,
            }
        })
        .collect()
}

/// `|∩sub| + |∪sub| ≥ 2ω` for a nonempty set of maximum cliques, given by
/// indices into `fam`.
pub fn check_hajnal(g: &Graph, fam: &CliqueFamily, subset: &[usize]) -> Result<HajnalCertificate> {
    if subset.is_empty() {
        return Err(Error::Precondition("Hajnal check needs a nonempty family".into()));
    }
    let mut cliques = Vec::with_capacity(subset.len());
    for &i in subset {
        let c = fam
            .cliques
            .get(i)
            .ok_or_else(|| Error::Precondition(format!("no clique with index {i}")))?;
        if c.len() != fam.omega || !g.is_clique(c) {
            return Err(Error::Precondition(format!("{c:?} is not a maximum clique")));
        }
        cliques.push(c);
    }
    let (union, intersection) = union_and_intersection(&cliques);
    let bound = 2 * fam.omega;
    Ok(HajnalCertificate {
        intersection_size: intersection.len(),
        union_size: union.len(),
        bound,
        pass: intersection.len() + union.len() >= bound,
    })
}

/// Per-component `|F_i| ≥ 2ω − (Δ+1)` when `ω > (2/3)(Δ+1)`.
pub fn check_kostochka(g: &Graph) -> Result<KostochkaReport> {
    check_kostochka_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

pub fn check_kostochka_with_limit(g: &Graph, limit: usize) -> Result<KostochkaReport> {
    let fam = maximum_cliques_with_limit(g, limit)?;
    Ok(kostochka_for_family(g, &fam, &clique_components(&fam)))
}

/// Kostochka certificates for an already enumerated family.
pub fn kostochka_for_family(
    g: &Graph,
    fam: &CliqueFamily,
    components: &[CliqueComponent],
) -> KostochkaReport {
    let (omega, delta) = (fam.omega, g.max_degree());
    if !omega_exceeds_two_thirds(omega, delta) {
        return KostochkaReport::Inapplicable { omega, delta };
    }
    let bound = 2 * omega as i64 - (delta as i64 + 1);
    let components = components
        .iter()
        .map(|c| {
            let pairwise_intersecting = c.members.iter().all(|&a| {
                c.members
                    .iter()
                    .all(|&b| intersects(&fam.cliques[a], &fam.cliques[b]))
            });
            KostochkaCertificate {
                members: c.members.len(),
                intersection_size: c.intersection.len(),
                bound,
                pairwise_intersecting,
                pass: c.intersection.len() as i64 >= bound,
            }
        })
        .collect();
    KostochkaReport::Applicable {
        omega,
        delta,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_graph;

    /// Every vertex subset, keeping the cliques of the largest size.
    fn brute_force_max_cliques(g: &Graph) -> (usize, Vec<Vec<usize>>) {
        let n = g.n();
        let mut best = 0;
        let mut found = Vec::new();
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.is_clique(&set) {
                continue;
            }
            if set.len() > best {
                best = set.len();
                found.clear();
            }
            if set.len() == best {
                found.push(set);
            }
        }
        found.sort();
        (best, found)
    }

    /// Two K_4's sharing three vertices: {0,1,2,3} and {0,1,2,4}.
    fn two_k4_sharing_three() -> Graph {
        let mut edges = Vec::new();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            edges.push((a, b));
        }
        for x in [3, 4] {
            for c in 0..3 {
                edges.push((c, x));
            }
        }
        Graph::from_edges(5, edges).unwrap()
    }

    #[test]
    fn maximum_cliques_examples() {
        let fam = maximum_cliques(&Graph::complete(4)).unwrap();
        assert_eq!(fam.omega, 4);
        assert_eq!(fam.cliques, vec![vec![0, 1, 2, 3]]);

        let fam = maximum_cliques(&Graph::cycle(5)).unwrap();
        assert_eq!(fam.omega, 2);
        assert_eq!(fam.cliques.len(), 5);
        assert_eq!(brute_force_max_cliques(&Graph::cycle(5)).1, fam.cliques);

        let two = Graph::disjoint_union(&[&Graph::complete(3), &Graph::complete(3)]);
        let fam = maximum_cliques(&two).unwrap();
        assert_eq!(fam.omega, 3);
        assert_eq!(fam.cliques, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        assert_eq!(maximum_cliques(&Graph::empty(0)).unwrap().cliques.len(), 0);
    }

    #[test]
    fn maximum_cliques_match_brute_force() {
        for seed in 0..400u64 {
            let n = (seed % 11) as usize;
            let p = [0.2, 0.5, 0.8][(seed % 3) as usize];
            let g = random_graph(n, p, seed).unwrap();
            let fam = maximum_cliques(&g).unwrap();
            let (omega, cliques) = brute_force_max_cliques(&g);
            if n > 0 {
                assert_eq!(fam.omega, omega, "{g:?}");
                assert_eq!(fam.cliques, cliques, "{g:?}");
            }
        }
    }

    #[test]
    fn components_examples() {
        let two = Graph::disjoint_union(&[&Graph::complete(3), &Graph::complete(3)]);
        let comps = clique_components(&maximum_cliques(&two).unwrap());
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].union, vec![0, 1, 2]);
        assert_eq!(comps[0].intersection, vec![0, 1, 2]);
        assert_eq!(comps[1].intersection, vec![3, 4, 5]);

        let g = two_k4_sharing_three();
        let comps = clique_components(&maximum_cliques(&g).unwrap());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].intersection.len(), 3);
        assert_eq!(comps[0].union.len(), 5);

        let comps = clique_components(&maximum_cliques(&Graph::complete(4)).unwrap());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].union, vec![0, 1, 2, 3]);
        assert_eq!(comps[0].intersection, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hajnal_examples() {
        let k4 = Graph::complete(4);
        let fam = maximum_cliques(&k4).unwrap();
        let cert = check_hajnal(&k4, &fam, &[0]).unwrap();
        assert_eq!((cert.intersection_size, cert.union_size, cert.bound), (4, 4, 8));
        assert!(cert.pass);

        let g = two_k4_sharing_three();
        let fam = maximum_cliques(&g).unwrap();
        let cert = check_hajnal(&g, &fam, &[0, 1]).unwrap();
        assert_eq!((cert.intersection_size, cert.union_size, cert.bound), (3, 5, 8));
        assert!(cert.pass);

        let c5 = Graph::cycle(5);
        let fam = maximum_cliques(&c5).unwrap();
        let cert = check_hajnal(&c5, &fam, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((cert.intersection_size, cert.union_size, cert.bound), (0, 5, 4));
        assert!(cert.pass);

        assert!(check_hajnal(&c5, &fam, &[]).is_err());
        assert!(check_hajnal(&c5, &fam, &[9]).is_err());
    }

    #[test]
    fn kostochka_examples() {
        match check_kostochka(&Graph::complete(5)).unwrap() {
            KostochkaReport::Applicable { omega, delta, components } => {
                assert_eq!((omega, delta), (5, 4));
                assert_eq!(components.len(), 1);
                assert_eq!(components[0].intersection_size, 5);
                assert_eq!(components[0].bound, 5);
                assert!(components[0].pass);
            }
            other => panic!("{other:?}"),
        }

        // Two K5's sharing four vertices: {0..4} and {0,1,2,3,5}.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a, b));
            }
            edges.push((a, 4));
            edges.push((a, 5));
        }
        let g = Graph::from_edges(6, edges).unwrap();
        match check_kostochka(&g).unwrap() {
            KostochkaReport::Applicable { omega, delta, components } => {
                assert_eq!((omega, delta), (5, 5));
                assert_eq!(components.len(), 1);
                assert_eq!(components[0].intersection_size, 4);
                assert_eq!(components[0].bound, 4);
                assert!(components[0].pass && components[0].pairwise_intersecting);
            }
            other => panic!("{other:?}"),
        }

        assert_eq!(
            check_kostochka(&Graph::cycle(5)).unwrap(),
            KostochkaReport::Inapplicable { omega: 2, delta: 2 }
        );
    }

    #[test]
    fn greedy_lower_bound_never_exceeds_omega() {
        for seed in 0..100u64 {
            let g = random_graph(12, 0.5, seed).unwrap();
            let lb = greedy_clique_lower_bound(&g);
            assert!(lb <= clique_number(&g).unwrap());
            assert!(lb >= 1);
        }
    }
}

//! Simple undirected graphs and the primitives shared by every other module.

mod catalog;
mod dimacs;
mod generators;
mod matching;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use catalog::{canonical_form, nonisomorphic_graphs};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use generators::{planted_dense_instance, random_graph, random_regular, PlantedInstance};
pub use matching::{
    max_antimatching, max_antimatching_with_limit, max_matching, max_matching_with_limit,
    Antimatching, Matching, DEFAULT_MATCHING_LIMIT,
};

/// A set of vertices, indexed by vertex id.
pub type VertexSet = FixedBitSet;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Both a bitset row and a sorted neighbour list are kept per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

/// An induced subgraph together with the map from its vertices to the parent's.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `parent[i]` is the parent-graph id of subgraph vertex `i`.
    pub parent: Vec<usize>,
}

impl Subgraph {
    /// Inverse of `parent`: `None` for parent vertices that were dropped.
    pub fn index_in(&self, parent_n: usize) -> Vec<Option<usize>> {
        let mut index = vec![None; parent_n];
        for (i, &p) in self.parent.iter().enumerate() {
            index[p] = Some(i);
        }
        index
    }
}

/// Incremental construction of a [`Graph`]. Duplicate edges collapse.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<FixedBitSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u == v || u >= n || v >= n {
            return Err(Error::InvalidEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn build(self) -> Graph {
        Graph::from_rows(self.adj)
    }
}

impl Graph {
    fn from_rows(adj: Vec<FixedBitSet>) -> Graph {
        let neighbors: Vec<Vec<usize>> = adj.iter().map(|row| row.ones().collect()).collect();
        let degree_sum: usize = neighbors.iter().map(Vec::len).sum();
        Graph {
            adj,
            neighbors,
            edge_count: degree_sum / 2,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from 0-indexed pairs, collapsing duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("in range");
            }
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("in range")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("in range")
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("in range")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("in range")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("in range")
    }

    /// Vertex-disjoint union; the vertices of `parts[i]` follow those of `parts[i-1]`.
    pub fn disjoint_union(parts: &[&Graph]) -> Graph {
        let n = parts.iter().map(|g| g.n()).sum();
        let mut b = GraphBuilder::new(n);
        let mut offset = 0;
        for g in parts {
            for (u, v) in g.edges() {
                b.add_edge(u + offset, v + offset).expect("in range");
            }
            offset += g.n();
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Δ; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighbourhood `N(v)` as a bitset.
    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `Ñ(v) = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> FixedBitSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.n());
        all.insert_range(..);
        all
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n())
    }

    pub fn set_of(&self, vertices: &[usize]) -> FixedBitSet {
        let mut s = self.empty_set();
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    /// Number of edges with both endpoints in `N(v)`.
    pub fn neighborhood_edge_count(&self, v: usize) -> Result<usize> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let nv = &self.adj[v];
        let twice: usize = self.neighbors[v]
            .iter()
            .map(|&u| self.adj[u].intersection_count(nv))
            .sum();
        Ok(twice / 2)
    }

    pub fn is_stable(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&w| !self.has_edge(u, w)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&w| u != w && self.has_edge(u, w)))
    }

    /// True iff the graph is a complete graph (including `K_0`, `K_1`).
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Connected odd cycle `C_{2k+1}`, `k ≥ 1`.
    pub fn is_odd_cycle(&self) -> bool {
        let n = self.n();
        n >= 3 && n % 2 == 1 && self.m() == n && self.is_regular() && self.max_degree() == 2
            && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.neighbors[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    b.add_edge(i, j).expect("in range");
                }
            }
        }
        Subgraph {
            graph: b.build(),
            parent: vertices.to_vec(),
        }
    }

    /// `G − removed`, keeping the remaining vertices in increasing order.
    pub fn without(&self, removed: &FixedBitSet) -> Subgraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn without_vertex(&self, v: usize) -> Subgraph {
        let mut s = self.empty_set();
        s.insert(v);
        self.without(&s)
    }

    /// Edge `uv` is present iff it is absent here (`u ≠ v`).
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// A copy with room for more vertices and edges.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            adj: self.adj.clone(),
        }
    }

    /// `GraphBuilder` on `n + extra` vertices holding this graph's edges.
    pub fn to_builder_with_extra(&self, extra: usize) -> GraphBuilder {
        let n = self.n() + extra;
        let mut b = GraphBuilder::new(n);
        for (u, v) in self.edges() {
            b.add_edge(u, v).expect("in range");
        }
        b
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

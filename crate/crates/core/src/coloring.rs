//! Colorings and the constructive coloring procedures: greedy, exact χ,
//! Brooks, list coloring of cliques minus a matching, and the extension of a
//! coloring across a dense neighbourhood.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cliques::{clique_number_with_limit, maximum_clique_with_limit};
use crate::error::{Error, Result};
use crate::graph::{max_antimatching_with_limit, Graph, Matching};
use crate::rational::Rational;

/// Default capacity of [`chromatic_number_exact`].
pub const DEFAULT_EXACT_LIMIT: usize = 20;
/// Colors are tracked in a `u64` mask during the exact search.
const EXACT_HARD_LIMIT: usize = 63;

/// A partial map from vertices to colors `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<u32>>,
    palette: u32,
}

impl Coloring {
    /// No vertex colored, palette 0.
    pub fn empty(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
            palette: 0,
        }
    }

    /// Palette is the largest color present.
    pub fn from_colors(colors: Vec<Option<u32>>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == Some(0)) {
            return Err(Error::InvalidParameter(format!("vertex {v} has color 0; colors start at 1")));
        }
        let palette = colors.iter().flatten().copied().max().unwrap_or(0);
        Ok(Coloring { colors, palette })
    }

    pub fn total(colors: Vec<u32>) -> Result<Self> {
        Self::from_colors(colors.into_iter().map(Some).collect())
    }

    /// Widens the palette to `k`, which must cover every color present.
    pub fn with_palette(mut self, k: u32) -> Result<Self> {
        if k < self.max_color() {
            return Err(Error::InvalidParameter(format!(
                "palette {k} below the largest color {}",
                self.max_color()
            )));
        }
        self.palette = k;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors[v]
    }

    /// Assigns `c ≥ 1` to `v`, growing the palette if needed.
    pub fn set(&mut self, v: usize, c: u32) {
        assert!(c >= 1, "colors start at 1");
        self.colors[v] = Some(c);
        self.palette = self.palette.max(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn colors(&self) -> &[Option<u32>] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors present.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.colors[v].is_some()).collect()
    }

    pub fn uncolored(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.colors[v].is_none()).collect()
    }

    /// `classes()[c-1]` holds the vertices of color `c`, for `c` up to the palette.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.palette.max(self.max_color()) as usize];
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                out[*c as usize - 1].push(v);
            }
        }
        out
    }

    /// No edge of `g` joins two vertices of equal color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && g.edges().all(|(u, v)| match (self.colors[u], self.colors[v]) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            })
            && self.colors.iter().flatten().all(|&c| c >= 1 && c <= self.palette)
    }

    /// Renames colors to `1..=colors_used` by first appearance.
    pub fn compacted(&self) -> Coloring {
        let mut rename = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                c.map(|c| {
                    let next = rename.len() as u32 + 1;
                    *rename.entry(c).or_insert(next)
                })
            })
            .collect();
        Coloring::from_colors(colors).expect("colors start at 1")
    }

    /// The coloring restricted to `parent`'s vertices, indexed as a subgraph.
    pub fn restrict(&self, parent: &[usize]) -> Coloring {
        Coloring {
            colors: parent.iter().map(|&v| self.colors[v]).collect(),
            palette: self.palette,
        }
    }

    /// Copies colors of a subgraph back onto this coloring.
    pub fn absorb(&mut self, sub: &Coloring, parent: &[usize]) {
        for (i, &v) in parent.iter().enumerate() {
            if let Some(c) = sub.colors[i] {
                self.set(v, c);
            }
        }
        self.palette = self.palette.max(sub.palette);
    }

    /// Plain-text `v color` lines with 1-based vertex ids, colored vertices only.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                writeln!(out, "{} {}", v + 1, c).expect("string write");
            }
        }
        out
    }

    /// Parses [`Coloring::to_text`] output; `#` starts a comment line.
    pub fn from_text(text: &str, n: usize) -> Result<Coloring> {
        let mut colors = vec![None; n];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::Parse { line: i + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(bad(format!("expected `vertex color`, got {line:?}")));
            }
            let v: usize = fields[0].parse().map_err(|_| bad(format!("bad vertex {:?}", fields[0])))?;
            let c: u32 = fields[1].parse().map_err(|_| bad(format!("bad color {:?}", fields[1])))?;
            if v == 0 || v > n {
                return Err(bad(format!("vertex {v} outside 1..={n}")));
            }
            if c == 0 {
                return Err(bad("colors start at 1".into()));
            }
            if colors[v - 1].replace(c).is_some() {
                return Err(bad(format!("vertex {v} colored twice")));
            }
        }
        Coloring::from_colors(colors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    /// Parses `{"palette": k, "assignment": {"v": c, ...}}` with 1-based keys.
    pub fn from_json(text: &str, n: usize) -> Result<Coloring> {
        let bad = |message: String| Error::Parse { line: 0, message };
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let map = value
            .get("assignment")
            .and_then(|a| a.as_object())
            .ok_or_else(|| bad("missing \"assignment\" object".into()))?;
        let mut colors = vec![None; n];
        for (key, c) in map {
            let v: usize = key.parse().map_err(|_| bad(format!("bad vertex key {key:?}")))?;
            let c = c
                .as_u64()
                .filter(|&c| c >= 1 && c <= u32::MAX as u64)
                .ok_or_else(|| bad(format!("bad color for vertex {key}")))?;
            if v == 0 || v > n {
                return Err(bad(format!("vertex {v} outside 1..={n}")));
            }
            colors[v - 1] = Some(c as u32);
        }
        let coloring = Coloring::from_colors(colors)?;
        match value.get("palette").and_then(|p| p.as_u64()) {
            Some(k) => coloring.with_palette(k as u32),
            None => Ok(coloring),
        }
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Assignment<'a>(&'a [Option<u32>]);
        impl Serialize for Assignment<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(None)?;
                for (v, c) in self.0.iter().enumerate() {
                    if let Some(c) = c {
                        map.serialize_entry(&(v + 1).to_string(), c)?;
                    }
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("palette", &self.palette)?;
        map.serialize_entry("assignment", &Assignment(&self.colors))?;
        map.end()
    }
}

/// Admissible colors per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<u32>>) -> Result<Self> {
        if let Some(v) = lists.iter().position(|l| l.contains(&0)) {
            return Err(Error::InvalidParameter(format!("list of vertex {v} contains color 0")));
        }
        Ok(ListAssignment { lists })
    }

    pub fn from_slices(lists: &[&[u32]]) -> Result<Self> {
        Self::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &BTreeSet<u32> {
        &self.lists[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(BTreeSet::len).collect()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(BTreeSet::len).min().unwrap_or(0)
    }
}

/// Total and proper.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    c.n() == g.n() && c.is_total() && c.is_proper(g)
}

/// Least color in `1..` absent from the colored neighbours of `v`.
fn least_free(g: &Graph, c: &Coloring, v: usize) -> u32 {
    let taken: BTreeSet<u32> = g.neighbors(v).iter().filter_map(|&w| c.get(w)).collect();
    (1..).find(|x| !taken.contains(x)).expect("unbounded range")
}

/// Colors the uncolored vertices of `order` greedily, in sequence.
pub fn greedy_extend(g: &Graph, c: &mut Coloring, order: &[usize]) {
    for &v in order {
        if c.get(v).is_none() {
            let x = least_free(g, c, v);
            c.set(v, x);
        }
    }
}

/// First-fit coloring along `order`, which must be a permutation of the vertices.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let mut seen = vec![false; g.n()];
    for &v in order {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParameter(format!("order is not a permutation: {order:?}")));
        }
    }
    if order.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "order has {} vertices, graph has {}",
            order.len(),
            g.n()
        )));
    }
    let mut c = Coloring::empty(g.n());
    greedy_extend(g, &mut c, order);
    Ok(c)
}

pub fn chromatic_number_exact(g: &Graph) -> Result<(u32, Coloring)> {
    chromatic_number_exact_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// χ and an optimal coloring by DSATUR branch and bound, seeded with a
/// maximum clique colored `1..=ω`.
pub fn chromatic_number_exact_with_limit(g: &Graph, limit: usize) -> Result<(u32, Coloring)> {
    let n = g.n();
    let limit = limit.min(EXACT_HARD_LIMIT);
    if n > limit {
        return Err(Error::capacity("chromatic_number_exact", n, limit));
    }
    if n == 0 {
        return Ok((0, Coloring::empty(0)));
    }
    let clique = maximum_clique_with_limit(g, n)?;
    let mut search = Dsatur {
        g,
        colors: vec![0; n],
        forbidden: vec![[0u8; EXACT_HARD_LIMIT + 2]; n],
        best: Vec::new(),
        best_k: u32::MAX,
        lower: clique.len() as u32,
    };
    for (i, &v) in clique.iter().enumerate() {
        search.assign(v, i as u32 + 1);
    }
    search.run(clique.len(), clique.len() as u32);
    let coloring = Coloring::total(search.best).expect("colors start at 1");
    Ok((search.best_k, coloring))
}

struct Dsatur<'g> {
    g: &'g Graph,
    colors: Vec<u32>,
    /// `forbidden[v][c]` counts colored neighbours of `v` with color `c`.
    forbidden: Vec<[u8; EXACT_HARD_LIMIT + 2]>,
    best: Vec<u32>,
    best_k: u32,
    lower: u32,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            self.forbidden[w][c as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::take(&mut self.colors[v]);
        for &w in self.g.neighbors(v) {
            self.forbidden[w][c as usize] -= 1;
        }
    }

    fn saturation(&self, v: usize, used: u32) -> usize {
        (1..=used as usize).filter(|&c| self.forbidden[v][c] > 0).count()
    }

    fn run(&mut self, colored: usize, used: u32) {
        if self.best_k <= self.lower {
            return;
        }
        if colored == self.colors.len() {
            if used < self.best_k {
                self.best_k = used;
                self.best = self.colors.clone();
            }
            return;
        }
        let v = (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let open = self.g.neighbors(v).iter().filter(|&&w| self.colors[w] == 0).count();
                (self.saturation(v, used), open, std::cmp::Reverse(v))
            })
            .expect("an uncolored vertex");
        let top = (used + 1).min(self.best_k.saturating_sub(1));
        for c in 1..=top {
            if self.forbidden[v][c as usize] == 0 {
                self.assign(v, c);
                self.run(colored + 1, used.max(c));
                self.unassign(v);
                if self.best_k <= self.lower {
                    return;
                }
            }
        }
    }
}

/// Brooks coloring, component by component: at most `Δ` colors per
/// component unless it is complete or an odd cycle, where `Δ+1` are used.
pub fn brooks_coloring(g: &Graph) -> Coloring {
    let mut out = Coloring::empty(g.n());
    for comp in g.components() {
        let sub = g.induced(&comp);
        let local = brooks_connected(&sub.graph);
        out.absorb(&local, &sub.parent);
    }
    out
}

/// Per-component Brooks bound: the most colors any component needs.
pub fn brooks_bound(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|comp| {
            let h = g.induced(comp).graph;
            let d = h.max_degree();
            if h.is_complete() || h.is_odd_cycle() {
                d + 1
            } else {
                d.max(1)
            }
        })
        .max()
        .unwrap_or(0)
}

fn bfs_order(g: &Graph, root: usize, removed: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    seen[root] = true;
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let Some(start) = (0..g.n()).find(|v| !removed.contains(v)) else {
        return true;
    };
    bfs_order(g, start, removed).len() + removed.len() == g.n()
}

/// Greedy along the reverse of a BFS order from `root`: every vertex but the
/// root still has its uncolored BFS parent when colored.
fn reverse_bfs_greedy(g: &Graph, root: usize) -> Coloring {
    let mut order = bfs_order(g, root, &[]);
    order.reverse();
    let mut c = Coloring::empty(g.n());
    greedy_extend(g, &mut c, &order);
    c
}

fn brooks_connected(h: &Graph) -> Coloring {
    let n = h.n();
    let delta = h.max_degree();
    if n <= 1 || h.is_complete() {
        return Coloring::total((1..=n as u32).collect()).expect("positive colors");
    }
    if delta <= 2 {
        // A path or a cycle: alternate along a traversal.
        let start = (0..n).min_by_key(|&v| h.degree(v)).expect("nonempty");
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = h.neighbors(cur).iter().find(|&&w| w != prev && w != start) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        let mut c = Coloring::empty(n);
        for (i, &v) in order.iter().enumerate() {
            c.set(v, (i % 2) as u32 + 1);
        }
        if h.is_odd_cycle() {
            c.set(*order.last().expect("nonempty"), 3);
        }
        return c;
    }
    if let Some(root) = (0..n).find(|&v| h.degree(v) < delta) {
        return reverse_bfs_greedy(h, root);
    }
    if let Some(x) = (0..n).find(|&x| !connected_without(h, &[x])) {
        // Regular with a cut vertex: color each piece with x as a low-degree
        // root, then rename colors so x agrees everywhere.
        let rest = h.without_vertex(x);
        let mut out = Coloring::empty(n);
        for comp in rest.graph.components() {
            let mut part: Vec<usize> = comp.iter().map(|&i| rest.parent[i]).collect();
            part.push(x);
            let sub = h.induced(&part);
            let root = sub.parent.len() - 1;
            let mut local = reverse_bfs_greedy(&sub.graph, root);
            let cx = local.get(root).expect("total");
            for i in 0..local.n() {
                let c = local.get(i).expect("total");
                local.set(i, if c == cx { 1 } else if c == 1 { cx } else { c });
            }
            out.absorb(&local, &sub.parent);
        }
        return out;
    }
    // 2-connected, regular, not complete, Δ ≥ 3.
    for v in 0..n {
        let nb = h.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if h.has_edge(u, w) || !connected_without(h, &[u, w]) {
                    continue;
                }
                let mut c = Coloring::empty(n);
                c.set(u, 1);
                c.set(w, 1);
                let mut order = bfs_order(h, v, &[u, w]);
                order.reverse();
                greedy_extend(h, &mut c, &order);
                return c;
            }
        }
    }
    unreachable!("a 2-connected regular non-complete graph always has a Brooks pivot")
}

/// Colors `K_n` minus the matching `m` from `lists`, each of size at least
/// `n − |m|`.
///
/// While `2ℓ < n` an unmatched vertex is universal: give it its smallest
/// color and delete that color elsewhere. At `2ℓ = n`, a pair with a common
/// color takes the smallest such color together. When every pair has
/// disjoint lists, Hall's condition holds and a vertex-saturating matching
/// into the colors finishes.
pub fn list_color_matching_complement(n: usize, m: &Matching, lists: &ListAssignment) -> Result<Coloring> {
    if lists.len() != n {
        return Err(Error::Precondition(format!("{} lists for {n} vertices", lists.len())));
    }
    let mut mate = vec![None; n];
    for &(u, v) in m.pairs() {
        if v >= n {
            return Err(Error::Precondition(format!("pair ({u}, {v}) outside 0..{n}")));
        }
        mate[u] = Some(v);
        mate[v] = Some(u);
    }
    let need = n - m.len();
    if let Some(v) = (0..n).find(|&v| lists.list(v).len() < need) {
        return Err(Error::Precondition(format!(
            "list of vertex {v} has {} colors, fewer than n − ℓ = {need}",
            lists.list(v).len()
        )));
    }

    let mut lists: Vec<BTreeSet<u32>> = lists.lists.clone();
    let mut alive = vec![true; n];
    let mut out = Coloring::empty(n);
    let mut remaining = n;
    let take = |v: usize, c: u32, lists: &mut Vec<BTreeSet<u32>>, alive: &mut Vec<bool>, out: &mut Coloring| {
        out.set(v, c);
        alive[v] = false;
        for (w, l) in lists.iter_mut().enumerate() {
            if alive[w] {
                l.remove(&c);
            }
        }
    };
    while remaining > 0 {
        let live_mate = |v: usize| mate[v].filter(|&w| alive[w]);
        let ell = (0..n).filter(|&v| alive[v] && live_mate(v).is_some_and(|w| v < w)).count();
        if 2 * ell < remaining {
            let u = (0..n).find(|&v| alive[v] && live_mate(v).is_none()).expect("an unmatched vertex");
            let c = *lists[u]
                .first()
                .ok_or_else(|| Error::Internal(format!("list of universal vertex {u} emptied")))?;
            take(u, c, &mut lists, &mut alive, &mut out);
            remaining -= 1;
            continue;
        }
        let shared = (0..n).filter(|&v| alive[v]).find_map(|v| {
            let w = live_mate(v)?;
            lists[v].intersection(&lists[w]).next().map(|&c| (v, w, c))
        });
        if let Some((v, w, c)) = shared {
            out.set(v, c);
            take(w, c, &mut lists, &mut alive, &mut out);
            alive[v] = false;
            remaining -= 2;
            continue;
        }
        let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let assignment = saturating_matching(&vertices, &lists).ok_or_else(|| {
            Error::Internal("Hall's condition failed for disjoint-list pairs".into())
        })?;
        for (v, c) in vertices.into_iter().zip(assignment) {
            out.set(v, c);
        }
        break;
    }
    Ok(out)
}

/// Kuhn's augmenting paths: distinct colors for `vertices` from their lists.
fn saturating_matching(vertices: &[usize], lists: &[BTreeSet<u32>]) -> Option<Vec<u32>> {
    let palette: Vec<u32> = vertices
        .iter()
        .flat_map(|&v| lists[v].iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index = |c: u32| palette.binary_search(&c).expect("listed color");
    let mut owner: Vec<Option<usize>> = vec![None; palette.len()];

    fn augment(
        i: usize,
        vertices: &[usize],
        lists: &[BTreeSet<u32>],
        index: &dyn Fn(u32) -> usize,
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &c in &lists[vertices[i]] {
            let j = index(c);
            if visited[j] {
                continue;
            }
            visited[j] = true;
            if owner[j].is_none_or(|k| augment(k, vertices, lists, index, owner, visited)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..vertices.len() {
        let mut visited = vec![false; palette.len()];
        if !augment(i, vertices, lists, &index, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut out = vec![0; vertices.len()];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            out[*i] = palette[j];
        }
    }
    Some(out)
}

/// `g` with `Δ − d(v)` pendant vertices hung from `v`, so that `d(v) = Δ`.
/// Original vertices keep their ids; pendants are appended.
#[derive(Clone, Debug)]
pub struct PendantCompletion {
    pub graph: Graph,
    pub original_n: usize,
    pub added: usize,
}

impl PendantCompletion {
    /// The coloring of the original vertices.
    pub fn pull_back(&self, c: &Coloring) -> Coloring {
        c.restrict(&(0..self.original_n).collect::<Vec<_>>())
    }
}

pub fn pendant_completion(g: &Graph, v: usize) -> Result<PendantCompletion> {
    if v >= g.n() {
        return Err(Error::UnknownVertex(v));
    }
    let added = g.max_degree() - g.degree(v);
    let mut b = g.to_builder_with_extra(added);
    for i in 0..added {
        b.add_edge(v, g.n() + i)?;
    }
    Ok(PendantCompletion {
        graph: b.build(),
        original_n: g.n(),
        added,
    })
}

/// The split of `Ñ(v)` into vertices with many outside neighbours (`D1`),
/// some (`D2`), and few (`D3`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensePartition {
    pub v: usize,
    pub d1: Vec<usize>,
    pub d2: Vec<usize>,
    pub d3: Vec<usize>,
    pub alpha: Rational,
    pub delta: usize,
    /// `|D1|/(Δ+1)`.
    pub beta1: Rational,
    /// `|D2|/(Δ+1)`.
    pub beta2: Rational,
    pub c1: Rational,
    /// `√α`, rounded; every comparison against it is made exactly by squaring.
    pub c2: f64,
    /// Edges between `Ñ(v)` and the rest of the graph.
    pub boundary_edges: usize,
}

fn check_alpha(alpha: Rational) -> Result<()> {
    if !alpha.is_positive() || alpha >= Rational::new(1, 144) {
        return Err(Error::Precondition(format!("alpha = {alpha} outside (0, 1/144)")));
    }
    Ok(())
}

/// `x > √α·y` for nonnegative integers, exactly.
fn exceeds_sqrt_alpha(x: usize, alpha: Rational, y: usize) -> bool {
    let (x, y) = (x as i64, y as i64);
    Rational::integer(x * x) > alpha * Rational::integer(y * y)
}

/// Partitions `Ñ(v)`; requires `d(v) = Δ`, `alpha ∈ (0, 1/144)` and more
/// than `(1−α)·C(Δ, 2)` edges inside `N(v)`.
pub fn dense_partition(g: &Graph, v: usize, alpha: Rational) -> Result<DensePartition> {
    if v >= g.n() {
        return Err(Error::UnknownVertex(v));
    }
    check_alpha(alpha)?;
    let delta = g.max_degree();
    if g.degree(v) != delta {
        return Err(Error::Precondition(format!(
            "d(v) = {} but Δ = {delta}; complete with pendants first",
            g.degree(v)
        )));
    }
    let pairs = (delta * delta.saturating_sub(1) / 2) as i64;
    let inside = g.neighborhood_edge_count(v)? as i64;
    if Rational::integer(inside) <= (Rational::one() - alpha) * Rational::integer(pairs) {
        return Err(Error::Precondition(format!(
            "N(v) has {inside} edges, not more than (1 − {alpha})·{pairs}"
        )));
    }

    let closed = g.closed_neighborhood(v);
    let outside_count = |u: usize| g.neighbors(u).iter().filter(|&&w| !closed.contains(w)).count();
    let d1: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| 2 * outside_count(u) > delta + 1)
        .collect();
    let mut far = closed.clone();
    far.toggle_range(..);
    for &u in &d1 {
        far.insert(u);
    }
    let d2: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|u| !d1.contains(u))
        .filter(|&u| exceeds_sqrt_alpha(g.adjacency(u).intersection_count(&far), alpha, delta + 1))
        .collect();
    let d3: Vec<usize> = closed.ones().filter(|u| !d1.contains(u) && !d2.contains(u)).collect();
    let boundary_edges: usize = closed.ones().map(outside_count).sum();

    let part = DensePartition {
        v,
        beta1: Rational::new(d1.len() as i64, delta as i64 + 1),
        beta2: Rational::new(d2.len() as i64, delta as i64 + 1),
        d1,
        d2,
        d3,
        alpha,
        delta,
        c1: Rational::new(1, 2),
        c2: alpha.to_f64().sqrt(),
        boundary_edges,
    };
    // |D1| < (1/3)√α(Δ+1), |D2| < √α(Δ+1), fewer than αΔ² boundary edges.
    let d = delta as i64;
    let side = [
        (
            "9|D1|² < α(Δ+1)²",
            Rational::integer(9 * (part.d1.len() as i64).pow(2)) < alpha * Rational::integer((d + 1).pow(2)),
        ),
        (
            "|D2|² < α(Δ+1)²",
            Rational::integer((part.d2.len() as i64).pow(2)) < alpha * Rational::integer((d + 1).pow(2)),
        ),
        ("v ∈ D3", part.d3.contains(&v)),
        (
            "boundary edges < αΔ²",
            Rational::integer(boundary_edges as i64) < alpha * Rational::integer(d * d),
        ),
    ];
    if let Some((name, _)) = side.iter().find(|(_, ok)| !ok) {
        return Err(Error::ContractViolation(format!("dense partition side condition {name} fails: {part:?}")));
    }
    Ok(part)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DenseParams {
    pub alpha: Rational,
    pub epsilon: Rational,
}

/// The numbers behind one dense extension, for reports and audits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseAudit {
    pub v: usize,
    pub delta: usize,
    pub pendants_added: usize,
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub k: u32,
    pub k_prime: u32,
    /// Largest number of colored neighbours met by a `D2` vertex.
    pub d2_max_colored_neighbors: usize,
    pub antimatching: usize,
    pub omega_d3: usize,
    /// `|D3| − |M|`.
    pub list_need: usize,
    pub min_list: usize,
}

/// Extends `base` (proper, coloring at least `V ∖ (D2 ∪ D3)`) to all of `g`
/// with `k' = max{⌊(1−ε)(Δ+1)⌋, colors in base}` colors. Colors that `base`
/// puts on `D2 ∪ D3` are discarded.
pub fn extend_dense(g: &Graph, v: usize, params: DenseParams, base: &Coloring) -> Result<(Coloring, DenseAudit)> {
    let DenseParams { alpha, epsilon } = params;
    check_alpha(alpha)?;
    // 0 < ε < 1/6 − 2√α.
    let slack = Rational::new(1, 6) - epsilon;
    if !epsilon.is_positive() || !slack.is_positive() || slack * slack <= Rational::integer(4) * alpha {
        return Err(Error::Precondition(format!("epsilon = {epsilon} outside (0, 1/6 − 2√{alpha})")));
    }
    if base.n() != g.n() {
        return Err(Error::Precondition(format!("base colors {} vertices, graph has {}", base.n(), g.n())));
    }
    if !base.is_proper(g) {
        return Err(Error::Precondition("base coloring is not proper".into()));
    }

    let completion = pendant_completion(g, v)?;
    let h = &completion.graph;
    let part = dense_partition(h, v, alpha)?;
    let delta = part.delta;
    let k = ((Rational::one() - epsilon) * Rational::from(delta + 1)).floor() as u32;
    let k_prime = k.max(base.max_color());
    let dump = |what: &str| Error::ContractViolation(format!("{what}; k = {k}, k' = {k_prime}, partition = {part:?}"));

    let mut c = Coloring::empty(h.n());
    let mut in_d23 = vec![false; h.n()];
    for &u in part.d2.iter().chain(&part.d3) {
        in_d23[u] = true;
    }
    for u in 0..g.n() {
        if !in_d23[u] {
            let color = base
                .get(u)
                .ok_or_else(|| Error::Precondition(format!("base leaves vertex {u} outside D2 ∪ D3 uncolored")))?;
            c.set(u, color);
        }
    }

    // (1/2 − ε − (7/6)√α)(Δ+1) > 0.
    let half = Rational::new(1, 2) - epsilon;
    if !(half.is_positive() && half * half > Rational::new(49, 36) * alpha) {
        return Err(dump("greedy margin (1/2 − ε − (7/6)√α)(Δ+1) is not positive"));
    }
    let mut d2_max_colored_neighbors = 0;
    for &u in &part.d2 {
        let colored = h.neighbors(u).iter().filter(|&&w| c.get(w).is_some()).count();
        d2_max_colored_neighbors = d2_max_colored_neighbors.max(colored);
        let x = least_free(h, &c, u);
        if x > k_prime {
            return Err(dump(&format!("no color in 1..=k' left for D2 vertex {u}")));
        }
        c.set(u, x);
    }

    let g3 = h.induced(&part.d3);
    let am = max_antimatching_with_limit(&g3.graph, g3.graph.n())?;
    let omega_d3 = clique_number_with_limit(&g3.graph, g3.graph.n())?;
    let size = part.d3.len();
    if 3 * omega_d3 > 2 * (delta + 1) {
        return Err(Error::Precondition(format!(
            "ω(G|D3) = {omega_d3} exceeds (2/3)(Δ+1) with Δ = {delta}"
        )));
    }
    if am.len() < size.saturating_sub(omega_d3) / 2 {
        return Err(dump(&format!("antimatching {} < ⌊(|D3| − ω)/2⌋ with ω = {omega_d3}", am.len())));
    }
    let list_need = size - am.len();
    if 6 * list_need > 5 * (delta + 1) {
        return Err(dump(&format!("|D3| − |M| = {list_need} exceeds (5/6)(Δ+1)")));
    }
    let lists: Vec<BTreeSet<u32>> = part
        .d3
        .iter()
        .map(|&u| {
            let taken: BTreeSet<u32> = h.neighbors(u).iter().filter_map(|&w| c.get(w)).collect();
            (1..=k).filter(|x| !taken.contains(x)).collect()
        })
        .collect();
    let lists = ListAssignment::new(lists)?;
    let min_list = lists.min_size();
    let five_sixths = (Rational::new(5, 6) * Rational::from(delta + 1)).ceil() - 1;
    if min_list < list_need || (min_list as i64) < five_sixths {
        return Err(dump(&format!(
            "smallest list {min_list} below |D3| − |M| = {list_need} or ⌈(5/6)(Δ+1)⌉ − 1 = {five_sixths}"
        )));
    }
    let m = Matching::new(am.pairs().iter().copied(), size)?;
    let local = list_color_matching_complement(size, &m, &lists)?;
    c.absorb(&local, &g3.parent);

    let c = completion.pull_back(&c).with_palette(k_prime)?;
    if !verify_coloring(g, &c) {
        return Err(dump("extended coloring is not proper and total"));
    }
    let audit = DenseAudit {
        v,
        delta,
        pendants_added: completion.added,
        d1: part.d1.len(),
        d2: part.d2.len(),
        d3: size,
        k,
        k_prime,
        d2_max_colored_neighbors,
        antimatching: am.len(),
        omega_d3,
        list_need,
        min_list,
    };
    Ok((c, audit))
}

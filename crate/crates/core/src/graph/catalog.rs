//! Catalog of all graphs up to isomorphism on a few vertices.
//!
//! Canonical forms come from colour refinement followed by trying every
//! ordering that respects the refined cells; that is exact, and cheap enough
//! up to about ten vertices.

use std::collections::HashSet;

use super::{Graph, GraphBuilder};

/// Largest `n` accepted by [`canonical_form`]: the code is a `u64` over the
/// `n(n−1)/2` upper-triangle bits.
const MAX_CANONICAL_N: usize = 11;

/// Ordered cells of the stable colouring.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let count = if n == 0 { 0 } else { c + 1 };
        color = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

/// A code equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_N, "canonical_form supports n ≤ {MAX_CANONICAL_N}");
    let cells = refined_cells(g);
    let slots: Vec<&[usize]> = cells
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.as_slice(), c.len()))
        .collect();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut best = 0u64;
    search(g, &slots, &mut order, &mut used, &mut best);
    best
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// `slots[p]` is the cell that position `p` must be filled from.
fn search(g: &Graph, slots: &[&[usize]], order: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
    let p = order.len();
    if p == g.n() {
        *best = (*best).max(code_of(g, order));
        return;
    }
    for &v in slots[p] {
        if !used[v] {
            used[v] = true;
            order.push(v);
            search(g, slots, order, used, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// Every graph on `n` vertices up to isomorphism, in a deterministic order.
///
/// Built by adding a vertex with every possible neighbourhood to each graph
/// on `n − 1` vertices and keeping one representative per canonical form.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "catalog generation supports n ≤ 9");
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut b: GraphBuilder = g.to_builder_with_extra(1);
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        b.add_edge(u, k - 1).expect("in range");
                    }
                }
                let h = b.build();
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // Graphs on n unlabeled vertices: 1, 1, 2, 4, 11, 34, 156, 1044.
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn canonical_form_is_relabelling_invariant() {
        let p = Graph::petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 4, 6];
        let q = Graph::from_edges(10, p.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(canonical_form(&p), canonical_form(&q));
        assert_ne!(canonical_form(&Graph::cycle(5)), canonical_form(&Graph::path(5)));
    }
}

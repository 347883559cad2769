//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on n vertices are generated by attaching a new vertex to every
//! representative on n−1 vertices in all 2^(n−1) ways and deduplicating by
//! a canonical form. The canonical form is the minimum upper-triangle edge
//! bitmask over all permutations that respect the (degree, sorted neighbor
//! degrees) signature classes — isomorphisms preserve those signatures, so
//! the minimum is a complete invariant. Practical through n = 7 (1044
//! graphs, 853 connected), which is all the exhaustive checks need.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order the enumeration supports.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// All graphs on n unlabeled vertices, one representative per isomorphism
/// class, in canonical-bitmask order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_ENUMERATION_ORDER).contains(&n),
        "enumeration supports 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}"
    );
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let mut masks: Vec<u64> = Vec::new();
    let mut seen: HashSet<u64> = HashSet::new();
    for parent in all_graphs(n - 1) {
        for attach in 0u32..(1 << (n - 1)) {
            let mut g = Graph::empty(n);
            for (u, v) in parent.edges() {
                g.add_edge(u, v).expect("parent edges are valid");
            }
            for v in 0..n - 1 {
                if attach >> v & 1 == 1 {
                    g.add_edge(v, n - 1).expect("new vertex is in range");
                }
            }
            let key = canonical_mask(&g);
            if seen.insert(key) {
                masks.push(key);
            }
        }
    }
    masks.sort_unstable();
    masks.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// The connected members of [`all_graphs`].
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Upper-triangle bitmask of the edge set: bit for (u,v), u < v, at position
/// u·n − u(u+1)/2 + (v − u − 1).
fn edge_mask(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut mask = 0u64;
    let mut inv = vec![0usize; n];
    for (pos, &v) in perm.iter().enumerate() {
        inv[v] = pos;
    }
    for (a, b) in g.edges() {
        let (u, v) = (inv[a].min(inv[b]), inv[a].max(inv[b]));
        mask |= 1 << (u * n - u * (u + 1) / 2 + (v - u - 1));
    }
    mask
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            bit += 1;
        }
    }
    g
}

fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    // Signature classes: vertices sorted by (degree, sorted neighbor
    // degrees); only within-class permutations can be isomorphisms.
    let sig = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| sig(v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        let same_class = classes.last().is_some_and(|c| sig(c[0]) == sig(v));
        if same_class {
            classes.last_mut().unwrap().push(v);
        } else {
            classes.push(vec![v]);
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    permute_classes(g, &classes, 0, &mut perm, &mut best);
    best
}

/// Walks every product of within-class permutations, updating the minimum
/// mask. Class sizes are small for almost all graphs; the worst case (a
/// single class, e.g. vertex-transitive graphs) is n! = 5040 at n = 7.
fn permute_classes(
    g: &Graph,
    classes: &[Vec<usize>],
    idx: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if idx == classes.len() {
        *best = (*best).min(edge_mask(g, perm));
        return;
    }
    let mut class = classes[idx].clone();
    permutations(&mut class, 0, &mut |p| {
        let len = perm.len();
        perm.extend_from_slice(p);
        permute_classes(g, classes, idx + 1, perm, best);
        perm.truncate(len);
    });
}

fn permutations(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

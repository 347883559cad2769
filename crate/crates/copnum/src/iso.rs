//! Graph isomorphism by pruned backtracking.
//!
//! Fine for the orders this crate cares about (incidence graphs of small
//! planes, enumeration up to 7 vertices); no attempt at nauty-grade
//! canonical refinement.

use crate::graph::Graph;

/// An explicit isomorphism `g -> h` as a vertex mapping, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    {
        let mut a = sig_g.clone();
        let mut b = sig_h.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    // Map the most constrained vertices (rarest signature) first.
    let mut order: Vec<usize> = (0..n).collect();
    let rarity = |v: usize| sig_g.iter().filter(|s| **s == sig_g[v]).count();
    order.sort_by_key(|&v| (rarity(v), std::cmp::Reverse(g.degree(v))));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(g, h, &sig_g, &sig_h, &order, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Degree plus sorted multiset of neighbor degrees: a cheap invariant that
/// collapses most non-matches before backtracking starts.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    h: &Graph,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'candidates: for w in 0..h.n() {
        if used[w] || sig_g[v] != sig_h[w] {
            continue;
        }
        // Consistency with everything already mapped.
        for &prev in &order[..depth] {
            if g.has_edge(v, prev) != h.has_edge(w, mapping[prev]) {
                continue 'candidates;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if assign(g, h, sig_g, sig_h, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}

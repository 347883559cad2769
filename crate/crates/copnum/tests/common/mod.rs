//! Shared test oracles, all deliberately independent of the engine's
//! retrograde queue: the game values here come from level-set iteration
//! over an explicitly enumerated state space.

// Each integration-test target compiles this module separately and none
// uses every helper.
#![allow(dead_code)]

use std::collections::BTreeMap;

use copnum::game::{GameState, Side};
use copnum::graph::Graph;
use copnum::CopConfig;

/// A state key: sorted cop multiset, robber vertex, side to move.
pub type StateKey = (Vec<usize>, usize, Side);

/// Exact distance-to-capture for every state by memoized minimax: F₀ is
/// the capture set, and F_{t+1} adds cop-to-move states with some
/// successor in F_t (value 1 + min) and robber-to-move states with every
/// successor in F_t (value 1 + max). `None` marks robber-win states.
///
/// Values are assigned level by level into a buffer, so pass t uses only
/// passes < t — an algorithm with nothing in common with the engine's
/// FIFO-and-counter implementation beyond the game rules themselves.
pub fn oracle_dtc(g: &Graph, k: usize) -> BTreeMap<StateKey, Option<u64>> {
    let n = g.n();
    let configs = multisets(n, k);
    let closed = |v: usize| -> Vec<usize> {
        let mut c = g.neighbors(v).to_vec();
        c.push(v);
        c.sort_unstable();
        c
    };

    let mut dist: BTreeMap<StateKey, Option<u64>> = BTreeMap::new();
    for cfg in &configs {
        for r in 0..n {
            for side in [Side::Cops, Side::Robber] {
                let v = if cfg.contains(&r) { Some(0) } else { None };
                dist.insert((cfg.clone(), r, side), v);
            }
        }
    }

    // All joint cop moves from a configuration, as sorted multisets.
    let cop_succs = |cfg: &[usize]| -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &c in cfg {
            let mut next = Vec::new();
            for partial in &out {
                for &t in &closed(c) {
                    let mut p = partial.clone();
                    p.push(t);
                    next.push(p);
                }
            }
            out = next;
        }
        for m in &mut out {
            m.sort_unstable();
        }
        out.sort();
        out.dedup();
        out
    };

    loop {
        let mut assignments: Vec<(StateKey, u64)> = Vec::new();
        for (key, val) in &dist {
            if val.is_some() {
                continue;
            }
            let (cfg, r, side) = key;
            let value = match side {
                Side::Cops => cop_succs(cfg)
                    .into_iter()
                    .filter_map(|m| dist[&(m, *r, Side::Robber)])
                    .min()
                    .map(|d| d + 1),
                Side::Robber => {
                    let vals: Vec<Option<u64>> = closed(*r)
                        .into_iter()
                        .map(|rp| dist[&(cfg.clone(), rp, Side::Cops)])
                        .collect();
                    if vals.iter().all(|v| v.is_some()) {
                        vals.into_iter().map(|v| v.unwrap()).max().map(|d| d + 1)
                    } else {
                        None
                    }
                }
            };
            if let Some(v) = value {
                assignments.push((key.clone(), v));
            }
        }
        if assignments.is_empty() {
            return dist;
        }
        for (key, v) in assignments {
            dist.insert(key, Some(v));
        }
    }
}

/// Every sorted k-multiset over 0..n.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in min..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Compares the engine's solved table against the oracle on every state.
pub fn assert_matches_oracle(g: &Graph, k: usize) {
    let solved = copnum::solve(g, k).expect("solvable instance");
    for (key, want) in oracle_dtc(g, k) {
        let (cfg, r, side) = key;
        let s = GameState::new(CopConfig::new(cfg.clone()), r, side);
        let got = solved.dtc(&s).expect("state in range");
        assert_eq!(
            got.map(u64::from),
            want,
            "dtc mismatch at cops={cfg:?} robber={r} side={side}"
        );
    }
}

/// All geodesics of g: for every pair u < v, every shortest u–v path,
/// enumerated by walking the BFS distance gradient.
pub fn all_geodesics(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        let dist = g.bfs_distances(u);
        for v in u + 1..n {
            if dist[v] == copnum::graph::UNREACHABLE {
                continue;
            }
            // Backtrack from v toward u along strictly decreasing distance.
            let mut stack = vec![vec![v]];
            while let Some(path) = stack.pop() {
                let last = *path.last().unwrap();
                if last == u {
                    let mut p = path.clone();
                    p.reverse();
                    out.push(p);
                    continue;
                }
                for &w in g.neighbors(last) {
                    if dist[w] + 1 == dist[last] {
                        let mut p = path.clone();
                        p.push(w);
                        stack.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Induced-subgraph tree test: connected with exactly |V| − 1 edges.
pub fn is_induced_tree(g: &Graph, vertices: &[usize]) -> bool {
    let (h, _) = g.induced_subgraph(vertices);
    h.is_connected() && h.edge_count() == h.n().saturating_sub(1)
}

/// Every listed vertex is on the path or adjacent to some path vertex.
pub fn path_dominates(g: &Graph, path: &[usize], vertices: &[usize]) -> bool {
    vertices
        .iter()
        .all(|&v| path.contains(&v) || path.iter().any(|&p| g.has_edge(p, v)))
}

/// Exact domination number by increasing-size exhaustive search over
/// closed-neighborhood bitmasks. Only sensible for n ≤ ~20.
pub fn domination_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 1 && n <= 32, "brute-force domination needs 1..=32 vertices");
    let full: u64 = (1u64 << n) - 1;
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect();

    fn covers(closed: &[u64], full: u64, acc: u64, start: usize, left: usize) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..closed.len()).any(|v| covers(closed, full, acc | closed[v], v + 1, left - 1))
    }

    (1..=n)
        .find(|&size| covers(&closed, full, 0, 0, size))
        .expect("the full vertex set dominates")
}

/// Drives a memoryless cop strategy against *every* robber behavior:
/// cops place, the robber tries every start, and play branches over every
/// robber move. Returns the worst-case number of plies to capture, or
/// `None` if some play evades forever (a reachable uncaptured cycle).
pub fn exhaustive_capture_plies(
    g: &Graph,
    strategy: &mut dyn copnum::game::CopStrategy,
) -> Option<usize> {
    use std::collections::HashMap;

    let placement = strategy.place(g);
    let closed = |v: usize| -> Vec<usize> {
        let mut c = g.neighbors(v).to_vec();
        c.push(v);
        c
    };

    // Intern reachable states; successors[i] lists node indices, and a
    // capture transition is recorded as a terminal edge (no successor).
    let mut index: HashMap<(Vec<usize>, usize, Side), usize> = HashMap::new();
    let mut nodes: Vec<(Vec<usize>, usize, Side)> = Vec::new();
    let mut succs: Vec<Vec<usize>> = Vec::new();
    let mut captures_now: Vec<bool> = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    let intern = |key: (Vec<usize>, usize, Side),
                      index: &mut HashMap<(Vec<usize>, usize, Side), usize>,
                      nodes: &mut Vec<(Vec<usize>, usize, Side)>,
                      succs: &mut Vec<Vec<usize>>,
                      captures_now: &mut Vec<bool>,
                      queue: &mut std::collections::VecDeque<usize>|
     -> usize {
        if let Some(&i) = index.get(&key) {
            return i;
        }
        let i = nodes.len();
        index.insert(key.clone(), i);
        nodes.push(key);
        succs.push(Vec::new());
        captures_now.push(false);
        queue.push_back(i);
        i
    };

    for r in 0..g.n() {
        if placement.positions().contains(&r) {
            continue; // placement-time capture
        }
        intern(
            (placement.positions().to_vec(), r, Side::Cops),
            &mut index,
            &mut nodes,
            &mut succs,
            &mut captures_now,
            &mut queue,
        );
    }

    while let Some(i) = queue.pop_front() {
        let (cops, r, side) = nodes[i].clone();
        match side {
            Side::Cops => {
                let state = GameState::new(CopConfig::new(cops.clone()), r, Side::Cops);
                let reply = strategy.select(g, &[state]);
                if reply.positions().contains(&r) {
                    captures_now[i] = true;
                } else {
                    let j = intern(
                        (reply.positions().to_vec(), r, Side::Robber),
                        &mut index,
                        &mut nodes,
                        &mut succs,
                        &mut captures_now,
                        &mut queue,
                    );
                    succs[i].push(j);
                }
            }
            Side::Robber => {
                for rp in closed(r) {
                    if cops.contains(&rp) {
                        continue; // walking onto a cop is immediate capture
                    }
                    let j = intern(
                        (cops.clone(), rp, Side::Cops),
                        &mut index,
                        &mut nodes,
                        &mut succs,
                        &mut captures_now,
                        &mut queue,
                    );
                    succs[i].push(j);
                }
            }
        }
    }

    // Kahn peel on the successor digraph; leftovers are cycle states the
    // robber can repeat forever.
    let n_nodes = nodes.len();
    let mut out_deg: Vec<usize> = succs.iter().map(Vec::len).collect();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n_nodes];
    for (i, ss) in succs.iter().enumerate() {
        for &j in ss {
            preds[j].push(i);
        }
    }
    // plies[i]: worst-case plies to capture from node i with i's side to move.
    let mut plies: Vec<Option<usize>> = vec![None; n_nodes];
    let mut stack: Vec<usize> = (0..n_nodes).filter(|&i| out_deg[i] == 0).collect();
    let mut peeled = 0usize;
    while let Some(i) = stack.pop() {
        peeled += 1;
        let worst_succ = succs[i].iter().map(|&j| plies[j].unwrap()).max();
        plies[i] = Some(match (captures_now[i], worst_succ) {
            (true, s) => s.map_or(1, |w| (w + 1).max(1)),
            (false, Some(w)) => w + 1,
            // No capture and no successors: a robber node whose every move
            // is suicide — the robber still must move, so capture is next.
            (false, None) => 1,
        });
        for &p in &preds[i] {
            out_deg[p] -= 1;
            if out_deg[p] == 0 {
                stack.push(p);
            }
        }
    }
    if peeled < n_nodes {
        return None;
    }
    plies.into_iter().map(Option::unwrap).max().or(Some(0))
}

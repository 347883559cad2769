//! Randomized invariants. Graphs are generated from a vertex count and a
//! bitmask over vertex pairs, so every case shrinks to a readable edge
//! set.

mod common;

use copnum::bounds::{meyniel_report, CopNumberEstimate};
use copnum::game::solve;
use copnum::graph::{attach_pendant_path, is_isometric_path, moore_bound_holds, Graph};
use copnum::strategy::{ceil_log2, extract_mdc};
use copnum::{CopConfig, GameState, Side};
use proptest::prelude::*;

/// Builds the graph whose pair (u,v), u < v, is an edge iff bit
/// `pair_index(u,v)` of `bits` is set. Supports n ≤ 11 (55 pairs).
fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #[test]
    fn parse_serialize_round_trip(g in arb_graph(11)) {
        let text = g.serialize();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn moore_inequality_on_connected_graphs(g in arb_connected(10)) {
        let m = g.metrics();
        if m.max_degree > 2 {
            let d = m.diameter.unwrap();
            prop_assert!(
                moore_bound_holds(g.n(), m.max_degree, d),
                "order {} exceeds the Moore bound for max degree {} and diameter {}",
                g.n(), m.max_degree, d
            );
        }
    }

    #[test]
    fn isometric_paths_satisfy_their_definition(
        g in arb_connected(10),
        picks in any::<(u64, u64)>(),
    ) {
        let u = (picks.0 % g.n() as u64) as usize;
        let v = (picks.1 % g.n() as u64) as usize;
        let path = g.isometric_path(u, v).unwrap();
        prop_assert_eq!(path.first(), Some(&u));
        prop_assert_eq!(path.last(), Some(&v));
        prop_assert!(is_isometric_path(&g, &path));
        // Definitional check, spelled out: hop counts along the path equal
        // host-graph distances.
        for (i, &a) in path.iter().enumerate() {
            let dist = g.bfs_distances(a);
            for (j, &b) in path.iter().enumerate().skip(i) {
                prop_assert_eq!(dist[b] as usize, j - i);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pendant_paths_never_change_the_cop_number(
        g in arb_connected(6),
        extra in 1usize..=3,
    ) {
        let before = copnum::cop_number(&g, g.n()).unwrap();
        let after = copnum::cop_number(&attach_pendant_path(&g, extra), g.n()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn more_cops_never_hurt(g in arb_connected(6)) {
        for k in 1..=2usize {
            let now = solve(&g, k).unwrap();
            let more = solve(&g, k + 1).unwrap();
            if now.is_cop_win() {
                prop_assert!(more.is_cop_win(), "cop-win lost going from k={} to k={}", k, k + 1);
            }
        }
    }

    #[test]
    fn solved_tables_satisfy_the_fixed_point_equations(
        g in arb_connected(5),
        k in 1usize..=2,
    ) {
        let solved = solve(&g, k).unwrap();
        for cfg in common::multisets(g.n(), k) {
            for r in 0..g.n() {
                for side in [Side::Cops, Side::Robber] {
                    let s = GameState::new(CopConfig::new(cfg.clone()), r, side);
                    let dtc = solved.dtc(&s).unwrap();
                    if cfg.contains(&r) {
                        prop_assert_eq!(dtc, Some(0));
                        continue;
                    }
                    // Successor values, per the side to move.
                    let succ: Vec<Option<u32>> = match side {
                        Side::Cops => solved
                            .joint_moves(&CopConfig::new(cfg.clone()))
                            .into_iter()
                            .map(|m| solved.dtc(&GameState::new(m, r, Side::Robber)).unwrap())
                            .collect(),
                        Side::Robber => {
                            let mut ms: Vec<usize> = g.neighbors(r).to_vec();
                            ms.push(r);
                            ms.into_iter()
                                .map(|rp| {
                                    solved
                                        .dtc(&GameState::new(CopConfig::new(cfg.clone()), rp, Side::Cops))
                                        .unwrap()
                                })
                                .collect()
                        }
                    };
                    let want = match side {
                        Side::Cops => succ.iter().flatten().min().map(|d| d + 1),
                        Side::Robber => {
                            if succ.iter().all(|v| v.is_some()) {
                                succ.iter().flatten().max().map(|d| d + 1)
                            } else {
                                None
                            }
                        }
                    };
                    prop_assert_eq!(dtc, want, "state cops={:?} robber={} {}", cfg, r, side);
                }
            }
        }
    }

    #[test]
    fn mdc_is_an_induced_tree_with_a_dominating_path(g in arb_connected(11)) {
        let mdc = extract_mdc(&g);
        prop_assert_eq!(mdc.order, mdc.vertices.len());
        prop_assert_eq!(mdc.benchmark, ceil_log2(g.n()));
        prop_assert!(common::is_induced_tree(&g, &mdc.vertices));
        prop_assert!(mdc.path.iter().all(|v| mdc.vertices.contains(v)));
        prop_assert!(common::path_dominates(&g, &mdc.path, &mdc.vertices));
    }

    #[test]
    fn bound_reports_bracket_the_exact_value(g in arb_connected(6)) {
        let report = meyniel_report(&g, "prop", 0.5);
        let lo = report.lower_bounds.iter().map(|b| b.value).max().unwrap();
        let hi = report.upper_bounds.iter().map(|b| b.value).min().unwrap();
        prop_assert!(lo <= hi, "bracket empty: {} > {}", lo, hi);
        match report.estimate {
            CopNumberEstimate::Exact { c, .. } => {
                prop_assert!(lo <= c && c <= hi, "exact {} outside [{}, {}]", c, lo, hi);
            }
            CopNumberEstimate::Censored { lower, upper } => {
                prop_assert!(lower <= upper);
            }
        }
    }
}

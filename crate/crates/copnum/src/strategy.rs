//! Executable cop strategies and their verification.
//!
//! The rules implemented here come from constructive proofs: guarding an
//! isometric path by shadowing the robber's distance projection, the
//! parallel-class play on truncated affine incidence graphs, and the greedy
//! neighborhood/path decomposition bounding the cop number from above.
//! [`verify_guard`] checks guard claims exhaustively against every robber
//! behavior, distinguishing genuine failures from an insufficient warm-up.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::game::{
    joint_move_legal, CopConfig, CopStrategy, GameState, RobberStrategy, Side, SolveResult,
};
use crate::geometry::{incidence_graph, IncidenceStructure};
use crate::graph::{is_isometric_path, Graph, UNREACHABLE};
use crate::random::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrategyError {
    #[error("the given path is not isometric in the host graph")]
    NotIsometric,
    #[error("structure has no parallel-class labels")]
    MissingLabels,
    #[error("no surviving line carries class label {label}")]
    ClassMissing { label: usize },
    #[error("class {label} does not cover every point exactly once")]
    BadClassCover { label: usize },
    #[error("the incidence graph is disconnected")]
    Disconnected,
    #[error("subset vertex {v} out of range")]
    SubsetOutOfRange { v: usize },
    #[error("strategy returned an illegal move from [{state}]")]
    IllegalStrategyMove { state: GameState },
    #[error("warm-up of {warmup} rounds is insufficient: a violation remains reachable after it, but only in the transient prefix")]
    WarmupInsufficient { warmup: u64 },
}

/// One cop shadowing an isometric path: the cop walks along the path toward
/// the vertex whose path-coordinate is the robber's clamped distance from
/// the path's start. Once synchronized, any robber step onto the path lands
/// next to (or on) the cop.
#[derive(Clone, Debug)]
pub struct PathGuardStrategy {
    path: Vec<usize>,
    coord: HashMap<usize, usize>,
    dist_from_start: Vec<u32>,
}

/// Builds the path-guarding strategy, refusing non-isometric paths (the
/// projection argument breaks without isometry — see the theta-graph test).
pub fn isometric_path_guard(g: &Graph, path: &[usize]) -> Result<PathGuardStrategy, StrategyError> {
    if !is_isometric_path(g, path) {
        return Err(StrategyError::NotIsometric);
    }
    Ok(PathGuardStrategy::new_unchecked(g, path))
}

impl PathGuardStrategy {
    /// Skips the isometry check; exists so tests can demonstrate what goes
    /// wrong on a non-isometric path.
    pub fn new_unchecked(g: &Graph, path: &[usize]) -> Self {
        PathGuardStrategy {
            path: path.to_vec(),
            coord: path.iter().enumerate().map(|(i, &v)| (v, i)).collect(),
            dist_from_start: g.bfs_distances(path[0]),
        }
    }

    fn target(&self, robber: usize) -> usize {
        let clamp = self.path.len() - 1;
        let d = self.dist_from_start[robber];
        if d == UNREACHABLE {
            clamp
        } else {
            (d as usize).min(clamp)
        }
    }
}

impl CopStrategy for PathGuardStrategy {
    fn place(&mut self, _: &Graph) -> CopConfig {
        CopConfig::new(vec![self.path[0]])
    }

    fn select(&mut self, g: &Graph, history: &[GameState]) -> CopConfig {
        let cur = history.last().expect("history is never empty");
        let cop = cur.cops.positions()[0];
        let next = match self.coord.get(&cop) {
            Some(&i) => {
                let t = self.target(cur.robber);
                match i.cmp(&t) {
                    std::cmp::Ordering::Less => self.path[i + 1],
                    std::cmp::Ordering::Greater => self.path[i - 1],
                    std::cmp::Ordering::Equal => cop,
                }
            }
            // Off the path (not reachable from this strategy's own
            // placement): step along a shortest route back to the start.
            None => g
                .isometric_path(cop, self.path[0])
                .map(|p| if p.len() > 1 { p[1] } else { p[0] })
                .unwrap_or(cop),
        };
        CopConfig::new(vec![next])
    }
}

/// A single motionless cop. Guards any clique or closed neighborhood it
/// dominates: everything adjacent to the post is captured on entry.
pub struct StaticVertexGuard(pub usize);

impl CopStrategy for StaticVertexGuard {
    fn place(&mut self, _: &Graph) -> CopConfig {
        CopConfig::new(vec![self.0])
    }

    fn select(&mut self, g: &Graph, history: &[GameState]) -> CopConfig {
        let cur = history.last().expect("history is never empty");
        let cop = cur.cops.positions()[0];
        if cur.robber == cop || g.has_edge(cop, cur.robber) {
            CopConfig::new(vec![cur.robber])
        } else {
            cur.cops.clone()
        }
    }
}

/// The parallel-class play on the incidence graph of a truncated affine
/// plane: one cop per line of a surviving class.
///
/// Every point lies on exactly one line of the class, so a robber on a
/// point-vertex is always adjacent to a cop at home. A robber on a
/// line-vertex L is attacked through the unique class-line crossing L at
/// its smallest point; after that the robber's every option loses within
/// two rounds. At most one cop is ever away from home, and only ever on a
/// point of its own line.
#[derive(Clone, Debug)]
pub struct ParallelClassStrategy {
    homes: Vec<usize>,
    /// Point-vertex → its covering class line's vertex (the attacker's way
    /// home doubles as the capture assignment).
    home_of_point: Vec<usize>,
    n_points: usize,
}

pub fn parallel_class_strategy(
    s: &IncidenceStructure,
    class_label: usize,
) -> Result<ParallelClassStrategy, StrategyError> {
    let labels = s
        .parallel_class
        .as_ref()
        .ok_or(StrategyError::MissingLabels)?;
    let class_lines: Vec<usize> = (0..s.lines.len())
        .filter(|&j| labels[j] == class_label)
        .collect();
    if class_lines.is_empty() {
        return Err(StrategyError::ClassMissing { label: class_label });
    }
    let mut cover = vec![0usize; s.points];
    for &j in &class_lines {
        for &p in &s.lines[j] {
            cover[p] += 1;
        }
    }
    if cover.iter().any(|&c| c != 1) {
        return Err(StrategyError::BadClassCover { label: class_label });
    }
    let lg = incidence_graph(s);
    if !lg.graph.is_connected() {
        return Err(StrategyError::Disconnected);
    }
    let mut home_of_point = vec![usize::MAX; s.points];
    for &j in &class_lines {
        for &p in &s.lines[j] {
            home_of_point[p] = s.points + j;
        }
    }
    Ok(ParallelClassStrategy {
        homes: class_lines.iter().map(|&j| s.points + j).collect(),
        home_of_point,
        n_points: s.points,
    })
}

impl ParallelClassStrategy {
    /// Number of cops the strategy plays with (q, the class size).
    pub fn k(&self) -> usize {
        self.homes.len()
    }

    fn is_home(&self, v: usize) -> bool {
        self.homes.binary_search(&v).is_ok()
    }

    /// A displaced cop stands on a point of its own line; home is one step
    /// away through the covering map.
    fn way_home(&self, v: usize) -> usize {
        if v < self.n_points {
            self.home_of_point[v]
        } else {
            v
        }
    }
}

impl CopStrategy for ParallelClassStrategy {
    fn place(&mut self, _: &Graph) -> CopConfig {
        CopConfig::new(self.homes.clone())
    }

    fn select(&mut self, g: &Graph, history: &[GameState]) -> CopConfig {
        let cur = history.last().expect("history is never empty");
        let r = cur.robber;
        let mut pos = cur.cops.positions().to_vec();

        // Capture beats everything; stragglers head home in the same ply.
        if let Some(i) = pos.iter().position(|&c| g.has_edge(c, r)) {
            for (j, p) in pos.iter_mut().enumerate() {
                if j == i {
                    *p = r;
                } else if !self.is_home(*p) {
                    *p = self.way_home(*p);
                }
            }
            return CopConfig::new(pos);
        }

        // No capture available: regroup if anyone is displaced.
        if pos.iter().any(|&p| !self.is_home(p)) {
            for p in pos.iter_mut() {
                if !self.is_home(*p) {
                    *p = self.way_home(*p);
                }
            }
            return CopConfig::new(pos);
        }

        // All cops home. A robber on a point would be adjacent to its
        // covering cop (handled above), so he is on a line-vertex L: send
        // the cop whose line crosses L at its smallest point.
        if r >= self.n_points {
            let p = g.neighbors(r)[0];
            let attacker_home = self.home_of_point[p];
            for q in pos.iter_mut() {
                if *q == attacker_home {
                    *q = p;
                    break;
                }
            }
        }
        CopConfig::new(pos)
    }
}

/// What a decomposition piece is, for the record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceKind {
    ClosedNeighborhood { center: usize },
    IsometricPath,
}

/// One removed piece; path pieces keep their vertex order so isometry in
/// the residual graph can be re-checked.
#[derive(Clone, Debug)]
pub struct Piece {
    pub vertices: Vec<usize>,
    pub kind: PieceKind,
}

#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
}

/// Greedy decomposition bound on the cop number: repeatedly delete, from
/// each residual component, the larger of a maximum closed neighborhood and
/// a diameter-realizing isometric path (ties prefer the neighborhood), one
/// guard per piece. The piece count bounds c(g) from above because each
/// piece is 1-guardable in the graph it was removed from.
///
/// A static bound cannot follow only the robber's component the way the
/// adaptive argument does, so piece counts are summed over all components —
/// conservative but still an upper bound.
pub fn frankl_upper_bound(g: &Graph) -> (usize, Decomposition) {
    let mut pieces = Vec::new();
    let mut worklist: VecDeque<Vec<usize>> = g.components().into();
    while let Some(comp) = worklist.pop_front() {
        let (h, back) = g.induced_subgraph(&comp);

        // Maximum closed neighborhood, smallest center on ties.
        let center = (0..h.n())
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("components are non-empty");
        let nbhd_size = h.degree(center) + 1;

        // Diameter-realizing geodesic, lexicographically first endpoints.
        let (mut du, mut dv, mut dd) = (0, 0, 0);
        for u in 0..h.n() {
            let dist = h.bfs_distances(u);
            for v in 0..h.n() {
                if dist[v] != UNREACHABLE && (dist[v] as usize) > dd {
                    (du, dv, dd) = (u, v, dist[v] as usize);
                }
            }
        }
        let path = h.isometric_path(du, dv).expect("component is connected");

        let piece = if nbhd_size >= path.len() {
            let mut vs: Vec<usize> = h.neighbors(center).iter().map(|&w| back[w]).collect();
            vs.push(back[center]);
            vs.sort_unstable();
            Piece {
                vertices: vs,
                kind: PieceKind::ClosedNeighborhood {
                    center: back[center],
                },
            }
        } else {
            Piece {
                vertices: path.iter().map(|&w| back[w]).collect(),
                kind: PieceKind::IsometricPath,
            }
        };

        let mut gone = vec![false; h.n()];
        for &v in &piece.vertices {
            let local = back.binary_search(&v).expect("piece vertex is in the component");
            gone[local] = true;
        }
        let rest: Vec<usize> = (0..h.n()).filter(|&v| !gone[v]).map(|v| back[v]).collect();
        pieces.push(piece);
        if !rest.is_empty() {
            let (hr, backr) = g.induced_subgraph(&rest);
            for block in hr.components() {
                worklist.push_back(block.into_iter().map(|v| backr[v]).collect());
            }
        }
    }
    (pieces.len(), Decomposition { pieces })
}

/// A greedily extracted caterpillar: an induced tree containing a
/// dominating path, reported with its order and the ⌈log₂ n⌉ benchmark.
#[derive(Clone, Debug)]
pub struct MdcResult {
    /// All chosen vertices, sorted.
    pub vertices: Vec<usize>,
    /// The dominating path, in path order.
    pub path: Vec<usize>,
    pub order: usize,
    pub benchmark: usize,
}

/// Grows an induced caterpillar from a diameter-realizing geodesic: a
/// vertex joins if it is adjacent to exactly one path vertex and to nothing
/// else already chosen, so the spine dominates everything and no cycle can
/// form.
pub fn extract_mdc(g: &Graph) -> MdcResult {
    let n = g.n();
    // Operate on vertex 0's component; the documented precondition is a
    // connected graph.
    let comp: Vec<usize> = g.components().into_iter().next().unwrap_or_default();
    let (mut du, mut dv, mut dd) = (comp[0], comp[0], 0);
    for &u in &comp {
        let dist = g.bfs_distances(u);
        for &v in &comp {
            if dist[v] != UNREACHABLE && (dist[v] as usize) > dd {
                (du, dv, dd) = (u, v, dist[v] as usize);
            }
        }
    }
    let path = g.isometric_path(du, dv).expect("endpoints share a component");
    let mut on_path = vec![false; n];
    let mut chosen = vec![false; n];
    for &v in &path {
        on_path[v] = true;
        chosen[v] = true;
    }
    for v in 0..n {
        if chosen[v] {
            continue;
        }
        let mut path_adj = 0;
        let mut other_adj = 0;
        for &w in g.neighbors(v) {
            if on_path[w] {
                path_adj += 1;
            } else if chosen[w] {
                other_adj += 1;
            }
        }
        if path_adj == 1 && other_adj == 0 {
            chosen[v] = true;
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| chosen[v]).collect();
    MdcResult {
        order: vertices.len(),
        benchmark: ceil_log2(n),
        vertices,
        path,
    }
}

/// ⌈log₂ n⌉ with the conventional 0 for n ≤ 1.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Outcome of [`verify_guard`]: either the subset is guarded, or a
/// violating play is exhibited (initial placement through the robber's
/// unanswered entry).
#[derive(Clone, Debug)]
pub struct GuardVerification {
    pub guarded: bool,
    pub violation: Option<Vec<GameState>>,
}

/// Exhaustively checks the guard property: after `warmup` rounds, every
/// robber move ending inside `subset` must be answered by capture on the
/// very next cop ply, for every robber behavior.
///
/// The strategy is treated as a function of the current state (both
/// strategies in this module are), so the game unfolds over a finite state
/// digraph. A violation whose source recurs (is reachable from a cycle) is
/// a genuine guard failure; one reachable after the warm-up but only along
/// acyclic prefixes means the warm-up was too short, reported as
/// [`StrategyError::WarmupInsufficient`].
pub fn verify_guard(
    g: &Graph,
    subset: &[usize],
    strategy: &mut dyn CopStrategy,
    warmup: u64,
) -> Result<GuardVerification, StrategyError> {
    let n = g.n();
    let mut in_subset = vec![false; n];
    for &v in subset {
        if v >= n {
            return Err(StrategyError::SubsetOutOfRange { v });
        }
        in_subset[v] = true;
    }

    let placement = strategy.place(g);
    let k = placement.len();

    let mut states: Vec<GameState> = Vec::new();
    let mut ids: HashMap<GameState, u32> = HashMap::new();
    let mut replies: Vec<Option<CopConfig>> = Vec::new();
    let mut parent: Vec<u32> = Vec::new();
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut preds: Vec<Vec<u32>> = Vec::new();
    let mut initial: Vec<bool> = Vec::new();

    // Interns a state; cop-side states get their reply computed eagerly
    // (the strategy is memoryless, so ask it once per state).
    let intern = |s: GameState,
                      from: u32,
                      strategy: &mut dyn CopStrategy,
                      states: &mut Vec<GameState>,
                      ids: &mut HashMap<GameState, u32>,
                      replies: &mut Vec<Option<CopConfig>>,
                      parent: &mut Vec<u32>,
                      out: &mut Vec<Vec<u32>>,
                      preds: &mut Vec<Vec<u32>>,
                      initial: &mut Vec<bool>|
     -> Result<u32, StrategyError> {
        if let Some(&id) = ids.get(&s) {
            return Ok(id);
        }
        let id = states.len() as u32;
        let reply = if s.side == Side::Cops && !s.is_capture() {
            let cfg = strategy.select(g, std::slice::from_ref(&s));
            let legal = cfg.len() == k
                && cfg.positions().iter().all(|&v| v < n)
                && joint_move_legal(g, s.cops.positions(), cfg.positions());
            if !legal {
                return Err(StrategyError::IllegalStrategyMove { state: s });
            }
            Some(cfg)
        } else {
            None
        };
        ids.insert(s.clone(), id);
        states.push(s);
        replies.push(reply);
        parent.push(from);
        out.push(Vec::new());
        preds.push(Vec::new());
        initial.push(from == u32::MAX);
        Ok(id)
    };

    let mut queue: VecDeque<u32> = VecDeque::new();
    for r in 0..n {
        let s = GameState::new(placement.clone(), r, Side::Cops);
        let id = intern(
            s,
            u32::MAX,
            strategy,
            &mut states,
            &mut ids,
            &mut replies,
            &mut parent,
            &mut out,
            &mut preds,
            &mut initial,
        )?;
        queue.push_back(id);
    }

    // (source robber-side state, in-subset cop-side successor) pairs whose
    // reply fails to capture.
    let mut violations: Vec<(u32, u32)> = Vec::new();

    let mut head = 0;
    while head < queue.len() {
        let id = queue[head];
        head += 1;
        let s = states[id as usize].clone();
        if s.is_capture() {
            continue;
        }
        let succs: Vec<GameState> = match s.side {
            Side::Cops => {
                let cfg = replies[id as usize].clone().expect("computed at intern");
                vec![GameState::new(cfg, s.robber, Side::Robber)]
            }
            Side::Robber => {
                let mut v: Vec<GameState> = g
                    .neighbors(s.robber)
                    .iter()
                    .map(|&r| GameState::new(s.cops.clone(), r, Side::Cops))
                    .collect();
                v.push(GameState::new(s.cops.clone(), s.robber, Side::Cops));
                v
            }
        };
        for succ in succs {
            let known = ids.contains_key(&succ);
            let sid = intern(
                succ,
                id,
                strategy,
                &mut states,
                &mut ids,
                &mut replies,
                &mut parent,
                &mut out,
                &mut preds,
                &mut initial,
            )?;
            out[id as usize].push(sid);
            preds[sid as usize].push(id);
            if !known {
                queue.push_back(sid);
            }
            // A robber ply ending in the subset, uncaptured: the next cop
            // ply must capture.
            if s.side == Side::Robber {
                let t = &states[sid as usize];
                if in_subset[t.robber] && !t.is_capture() {
                    let answered = replies[sid as usize]
                        .as_ref()
                        .map_or(true, |cfg| cfg.contains(t.robber));
                    if !answered {
                        violations.push((id, sid));
                    }
                }
            }
        }
    }

    if violations.is_empty() {
        return Ok(GuardVerification {
            guarded: true,
            violation: None,
        });
    }

    // Which states can occur after the warm-up? Peel in-degree-0 states
    // repeatedly: survivors are exactly the states reachable from a cycle
    // (occur at unbounded rounds); for peeled states the longest-path DP
    // gives the latest ply they can occur at.
    let count = states.len();
    let mut indeg: Vec<usize> = preds.iter().map(|p| p.len()).collect();
    let mut peeled = vec![false; count];
    let mut latest_ply = vec![0u64; count];
    let mut peel: VecDeque<usize> = (0..count).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = peel.pop_front() {
        peeled[v] = true;
        latest_ply[v] = preds[v]
            .iter()
            .map(|&p| latest_ply[p as usize] + 1)
            .max()
            .unwrap_or(0);
        for &w in &out[v] {
            indeg[w as usize] -= 1;
            if indeg[w as usize] == 0 {
                peel.push_back(w as usize);
            }
        }
    }

    // A robber move in round t is the ply 2t-1 edge out of a ply-(2t-1)
    // state; post-warm-up means ply >= 2*warmup + 1.
    let threshold = warmup.saturating_mul(2).saturating_add(1);
    let mut transient_late = false;
    for &(src, hit) in &violations {
        if !peeled[src as usize] {
            // Recurrent: genuine guard failure. Reconstruct a play.
            let mut play = Vec::new();
            let mut cur = hit;
            loop {
                play.push(states[cur as usize].clone());
                if parent[cur as usize] == u32::MAX {
                    break;
                }
                cur = parent[cur as usize];
            }
            play.reverse();
            let failed = &states[hit as usize];
            let reply = replies[hit as usize].clone().expect("non-capture cop state");
            play.push(GameState::new(reply, failed.robber, Side::Robber));
            return Ok(GuardVerification {
                guarded: false,
                violation: Some(play),
            });
        }
        if latest_ply[src as usize] >= threshold {
            transient_late = true;
        }
    }
    if transient_late {
        return Err(StrategyError::WarmupInsufficient { warmup });
    }
    Ok(GuardVerification {
        guarded: true,
        violation: None,
    })
}

/// Plays the solved table: best placement, then dtc-optimal moves.
pub struct OptimalCopStrategy<'a> {
    result: &'a SolveResult,
}

impl<'a> OptimalCopStrategy<'a> {
    pub fn new(result: &'a SolveResult) -> Self {
        OptimalCopStrategy { result }
    }
}

impl CopStrategy for OptimalCopStrategy<'_> {
    fn place(&mut self, _: &Graph) -> CopConfig {
        self.result.best_initial_placement().unwrap_or_else(|_| {
            // Losing either way: any deterministic placement does.
            CopConfig::new(vec![0; self.result.k()])
        })
    }

    fn select(&mut self, _: &Graph, history: &[GameState]) -> CopConfig {
        let cur = history.last().expect("history is never empty");
        self.result
            .optimal_move(cur)
            .map(|s| s.cops)
            .unwrap_or_else(|_| cur.cops.clone())
    }
}

/// Plays the solved table for the robber: survives when the table says the
/// state is a robber win, resists longest otherwise.
pub struct OptimalRobberStrategy<'a> {
    result: &'a SolveResult,
}

impl<'a> OptimalRobberStrategy<'a> {
    pub fn new(result: &'a SolveResult) -> Self {
        OptimalRobberStrategy { result }
    }
}

impl RobberStrategy for OptimalRobberStrategy<'_> {
    fn place(&mut self, g: &Graph, cops: &CopConfig) -> usize {
        // Max dtc with robber-win as infinity, smallest vertex on ties.
        let mut best = (0u64, 0usize);
        let mut found = false;
        for r in 0..g.n() {
            let s = GameState::new(cops.clone(), r, Side::Cops);
            let score = match self.result.dtc(&s) {
                Ok(Some(d)) => d as u64,
                Ok(None) => u64::MAX,
                Err(_) => continue,
            };
            if !found || score > best.0 {
                best = (score, r);
                found = true;
            }
        }
        best.1
    }

    fn select(&mut self, _: &Graph, history: &[GameState]) -> usize {
        let cur = history.last().expect("history is never empty");
        self.result
            .optimal_move(cur)
            .map(|s| s.robber)
            .unwrap_or(cur.robber)
    }
}

/// Uniformly random legal play for the cops, from a seeded generator.
pub struct RandomCopStrategy {
    k: usize,
    rng: SplitMix64,
}

impl RandomCopStrategy {
    pub fn new(k: usize, seed: u64) -> Self {
        RandomCopStrategy {
            k,
            rng: SplitMix64::new(seed),
        }
    }
}

impl CopStrategy for RandomCopStrategy {
    fn place(&mut self, g: &Graph) -> CopConfig {
        CopConfig::new(
            (0..self.k)
                .map(|_| self.rng.below(g.n() as u64) as usize)
                .collect(),
        )
    }

    fn select(&mut self, g: &Graph, history: &[GameState]) -> CopConfig {
        let cur = history.last().expect("history is never empty");
        CopConfig::new(
            cur.cops
                .positions()
                .iter()
                .map(|&c| {
                    let moves = g.degree(c) + 1;
                    let pick = self.rng.below(moves as u64) as usize;
                    if pick == g.degree(c) {
                        c
                    } else {
                        g.neighbors(c)[pick]
                    }
                })
                .collect(),
        )
    }
}

/// Uniformly random legal play for the robber, from a seeded generator.
pub struct RandomRobberStrategy {
    rng: SplitMix64,
}

impl RandomRobberStrategy {
    pub fn new(seed: u64) -> Self {
        RandomRobberStrategy {
            rng: SplitMix64::new(seed),
        }
    }
}

impl RobberStrategy for RandomRobberStrategy {
    fn place(&mut self, g: &Graph, _: &CopConfig) -> usize {
        self.rng.below(g.n() as u64) as usize
    }

    fn select(&mut self, g: &Graph, history: &[GameState]) -> usize {
        let cur = history.last().expect("history is never empty");
        let r = cur.robber;
        let moves = g.degree(r) + 1;
        let pick = self.rng.below(moves as u64) as usize;
        if pick == g.degree(r) {
            r
        } else {
            g.neighbors(r)[pick]
        }
    }
}

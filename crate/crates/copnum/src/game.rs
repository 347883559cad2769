//! Exact solution of the k-cop pursuit game by retrograde analysis.
//!
//! Rules of play: cops commit a starting configuration, the robber places
//! with full knowledge of it, and the sides then alternate plies starting
//! with a joint cop move. Every piece moves within its closed neighborhood
//! (passing is always legal), cops are interchangeable and may stack, and
//! the game ends the instant a cop shares the robber's vertex — including
//! when the robber walks onto a cop himself.
//!
//! The solver classifies the full state space backwards from the capture
//! states. A state is indexed by (cop multiset rank, robber vertex, side to
//! move); multiset ranks are colexicographic, so the space has exactly
//! `C(n+k-1,k) * n * 2` states. Distance-to-capture (dtc) is measured in
//! plies and satisfies the minimax fixed point: cops-to-move states take
//! `1 + min` over winning successors, robber-to-move states `1 + max`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Refuse state spaces beyond this many states unless the caller raises the
/// limit explicitly; solving degrades unhelpfully rather than gracefully
/// past it (hundreds of MB of tables, minutes of backward induction).
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

/// Sentinel in the dtc table: the state is a robber win (capture never
/// forced, distance effectively infinite).
const UNSOLVED: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph must be connected and non-empty")]
    NotConnected,
    #[error("at least one cop is required")]
    ZeroCops,
    #[error("state space of {states} states exceeds the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u64 },
    #[error("no cop count up to {k_max} wins; try a larger bound")]
    KMaxExhausted { k_max: usize },
    #[error("no winning initial placement exists for this cop count")]
    NoWinningPlacement,
    #[error("state does not belong to this solution: {reason}")]
    StateMismatch { reason: String },
    #[error("the state is terminal; no move to make")]
    TerminalState,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimulateError {
    #[error("at least one cop is required")]
    ZeroCops,
    #[error("illegal cop placement: {reason}")]
    IllegalPlacement { reason: String },
    #[error("illegal move from state [{state}]: {reason}")]
    IllegalMove { state: GameState, reason: String },
}

/// Which side owns the next ply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Cops,
    Robber,
}

impl Side {
    pub fn opponent(self) -> Side {
        match self {
            Side::Cops => Side::Robber,
            Side::Robber => Side::Cops,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Cops => "cops",
            Side::Robber => "robber",
        })
    }
}

/// Positions of the k interchangeable cops: a sorted multiset (stacking on
/// one vertex is allowed).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CopConfig(Vec<usize>);

impl CopConfig {
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        CopConfig(positions)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for CopConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A full position of the game. Ordering is lexicographic on
/// (cops, robber, side), which is the tie-break order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GameState {
    pub cops: CopConfig,
    pub robber: usize,
    pub side: Side,
}

impl GameState {
    pub fn new(cops: CopConfig, robber: usize, side: Side) -> Self {
        GameState { cops, robber, side }
    }

    /// Terminal test: some cop stands on the robber.
    pub fn is_capture(&self) -> bool {
        self.cops.contains(self.robber)
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cops={} robber={} to-move={}",
            self.cops, self.robber, self.side
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    CopWin,
    RobberWin,
}

/// One adjudicated play: the state sequence from initial placement to
/// capture or the round cap.
#[derive(Clone, Debug)]
pub struct PlayRecord {
    pub states: Vec<GameState>,
    pub captured: bool,
    /// Rounds elapsed — a round is a cop ply plus a robber ply. Capture on
    /// either ply of round t reports t; placement-time capture reports 0.
    pub rounds: u64,
}

/// A cop controller for [`simulate`]: commits a placement, then maps the
/// full history to the next joint move.
pub trait CopStrategy {
    fn place(&mut self, g: &Graph) -> CopConfig;
    fn select(&mut self, g: &Graph, history: &[GameState]) -> CopConfig;
}

/// A robber controller for [`simulate`]: places with the cop configuration
/// in view, then maps the full history to the next vertex.
pub trait RobberStrategy {
    fn place(&mut self, g: &Graph, cops: &CopConfig) -> usize;
    fn select(&mut self, g: &Graph, history: &[GameState]) -> usize;
}

/// The solved game for one (graph, k) pair: outcome and distance-to-capture
/// for every state, plus the best initial placement when one exists.
#[derive(Clone, Debug)]
pub struct SolveResult {
    graph: Graph,
    k: usize,
    /// Pascal's triangle up to C(n+k-1, k), for ranking configurations.
    binom: Vec<Vec<u64>>,
    /// dtc per state, `UNSOLVED` meaning ROBBER_WIN.
    dtc: Vec<u32>,
    best_placement: Option<CopConfig>,
    /// Worst-case dtc over robber replies to the best placement.
    minimax_plies: Option<u32>,
}

pub fn solve(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    solve_with_budget(g, k, DEFAULT_STATE_BUDGET)
}

/// [`solve`] with an explicit state budget in place of
/// [`DEFAULT_STATE_BUDGET`]. Indices are kept in 32 bits, so budgets beyond
/// `u32::MAX` are not honored.
pub fn solve_with_budget(g: &Graph, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroCops);
    }
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    let n = g.n();

    let states = state_count(n, k);
    if states > budget as u128 || states > u32::MAX as u128 {
        return Err(SolveError::BudgetExceeded { states, budget });
    }

    let binom = binom_table(n + k, k + 1);
    let num_configs = binom[n + k - 1][k] as usize;
    let configs = enumerate_configs(n, k, num_configs, &binom);
    let total = num_configs * n * 2;

    // Closed neighborhoods, sorted: the per-piece move sets.
    let closed: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut c: Vec<u32> = g.neighbors(v).iter().map(|&w| w as u32).collect();
            let pos = c.binary_search(&(v as u32)).unwrap_err();
            c.insert(pos, v as u32);
            c
        })
        .collect();

    let mut dtc = vec![UNSOLVED; total];
    // Successor counters for robber-to-move states (even half-index
    // rank*n + robber): the number of robber moves not yet known cop-win.
    // deg+1 <= n <= 65535 whenever the budget admits the space.
    let mut counter: Vec<u16> = Vec::with_capacity(num_configs * n);
    let degs: Vec<u16> = (0..n).map(|v| (g.degree(v) + 1) as u16).collect();
    for _ in 0..num_configs {
        counter.extend_from_slice(&degs);
    }

    // Seed the queue with every capture state, both sides, dtc 0.
    let mut queue: Vec<u32> = Vec::new();
    for rank in 0..num_configs {
        let cfg = &configs[rank * k..rank * k + k];
        let mut prev = u32::MAX;
        for &c in cfg {
            if c == prev {
                continue;
            }
            prev = c;
            let base = ((rank * n + c as usize) * 2) as u32;
            dtc[base as usize] = 0;
            dtc[base as usize + 1] = 0;
            queue.push(base);
            queue.push(base + 1);
        }
    }

    // Backward induction, FIFO: states pop in nondecreasing dtc order, so
    // the first predecessor hit realizes 1+min (cop side) and the counter
    // exhausting realizes 1+max (robber side).
    let mut head = 0usize;
    let mut tuple = vec![0u32; k]; // scratch: one joint-move choice, sorted
    let mut odometer = vec![0usize; k];
    while head < queue.len() {
        let s = queue[head] as usize;
        head += 1;
        let d = dtc[s];
        let half = s >> 1;
        let r = half % n;
        let rank = half / n;
        if s & 1 == 1 {
            // Robber just about to move at s; predecessors are cop-to-move
            // states one joint move away. The joint-move relation is
            // symmetric, so predecessors = successors of the configuration.
            let cfg = &configs[rank * k..rank * k + k];
            odometer.iter_mut().for_each(|x| *x = 0);
            loop {
                for i in 0..k {
                    tuple[i] = closed[cfg[i] as usize][odometer[i]];
                }
                tuple.sort_unstable();
                let pr = rank_config(&binom, &tuple);
                let pidx = (pr * n + r) * 2;
                if dtc[pidx] == UNSOLVED {
                    dtc[pidx] = d + 1;
                    queue.push(pidx as u32);
                }
                // Advance the mixed-radix odometer.
                let mut i = 0;
                while i < k {
                    odometer[i] += 1;
                    if odometer[i] < closed[cfg[i] as usize].len() {
                        break;
                    }
                    odometer[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        } else {
            // Cops just about to move at s; predecessors are robber-to-move
            // states with the robber one step away (or standing still).
            for &rp in &closed[r] {
                let pidx = (rank * n + rp as usize) * 2 + 1;
                if dtc[pidx] != UNSOLVED {
                    continue;
                }
                let c = &mut counter[pidx >> 1];
                *c -= 1;
                if *c == 0 {
                    dtc[pidx] = d + 1;
                    queue.push(pidx as u32);
                }
            }
        }
    }
    drop(counter);

    // Best initial placement: wins against every robber reply, minimal
    // worst-case dtc, lexicographically least configuration.
    let mut best: Option<(u32, usize)> = None;
    for rank in 0..num_configs {
        let mut worst = 0u32;
        let mut all_win = true;
        for r in 0..n {
            let d = dtc[(rank * n + r) * 2];
            if d == UNSOLVED {
                all_win = false;
                break;
            }
            worst = worst.max(d);
        }
        if !all_win {
            continue;
        }
        let cfg = &configs[rank * k..rank * k + k];
        let better = match best {
            None => true,
            Some((bw, brank)) => {
                let bcfg = &configs[brank * k..brank * k + k];
                worst < bw || (worst == bw && cfg < bcfg)
            }
        };
        if better {
            best = Some((worst, rank));
        }
    }
    let (minimax_plies, best_placement) = match best {
        Some((w, rank)) => {
            let cfg = configs[rank * k..rank * k + k]
                .iter()
                .map(|&c| c as usize)
                .collect();
            (Some(w), Some(CopConfig(cfg)))
        }
        None => (None, None),
    };

    Ok(SolveResult {
        graph: g.clone(),
        k,
        binom,
        dtc,
        best_placement,
        minimax_plies,
    })
}

impl SolveResult {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn state_count(&self) -> u64 {
        self.dtc.len() as u64
    }

    /// True when some initial placement wins against every robber reply.
    pub fn is_cop_win(&self) -> bool {
        self.best_placement.is_some()
    }

    pub fn outcome(&self, s: &GameState) -> Result<Outcome, SolveError> {
        Ok(if self.dtc_raw(self.index(s)?) == UNSOLVED {
            Outcome::RobberWin
        } else {
            Outcome::CopWin
        })
    }

    /// Distance to capture in plies; `None` for robber-win states.
    pub fn dtc(&self, s: &GameState) -> Result<Option<u32>, SolveError> {
        let d = self.dtc_raw(self.index(s)?);
        Ok((d != UNSOLVED).then_some(d))
    }

    /// The winning placement with minimal worst-case dtc (lexicographically
    /// least among ties).
    pub fn best_initial_placement(&self) -> Result<CopConfig, SolveError> {
        self.best_placement
            .clone()
            .ok_or(SolveError::NoWinningPlacement)
    }

    /// Worst-case plies to capture from the best placement.
    pub fn capture_time(&self) -> Result<u32, SolveError> {
        self.minimax_plies.ok_or(SolveError::NoWinningPlacement)
    }

    /// The optimal successor of `s`: win-preserving with minimal (cops) or
    /// maximal (robber) dtc when the mover is winning, longest resistance
    /// when losing; ties always go to the lexicographically least state.
    pub fn optimal_move(&self, s: &GameState) -> Result<GameState, SolveError> {
        self.index(s)?;
        if s.is_capture() {
            return Err(SolveError::TerminalState);
        }
        let succ = match s.side {
            Side::Cops => {
                // Cops minimize dtc, with robber-win as infinity: that is
                // the winning rule when winning and degenerates to the
                // lexicographic least when losing (all successors infinite).
                let mut best: Option<(u32, GameState)> = None;
                for cfg in self.joint_moves(&s.cops) {
                    let t = GameState::new(cfg, s.robber, Side::Robber);
                    let d = self.dtc_raw(self.index(&t)?);
                    if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                        best = Some((d, t));
                    }
                }
                best
            }
            Side::Robber => {
                // The robber maximizes dtc with robber-win as infinity:
                // win-preserving when winning, longest resistance when
                // losing.
                let mut best: Option<(u32, GameState)> = None;
                for &rp in self.graph.neighbors(s.robber) {
                    let t = GameState::new(s.cops.clone(), rp, Side::Cops);
                    let d = self.dtc_raw(self.index(&t)?);
                    if best.as_ref().map_or(true, |(bd, _)| d > *bd) {
                        best = Some((d, t));
                    }
                }
                let stay = GameState::new(s.cops.clone(), s.robber, Side::Cops);
                let d = self.dtc_raw(self.index(&stay)?);
                // Insert the pass in its lexicographic position: it ties
                // against an equal-dtc smaller vertex and wins against a
                // larger one.
                let stay_better = match &best {
                    None => true,
                    Some((bd, bs)) => d > *bd || (d == *bd && stay < *bs),
                };
                if stay_better {
                    best = Some((d, stay));
                }
                best
            }
        };
        Ok(succ.expect("non-terminal states have successors").1)
    }

    /// All joint cop moves from `cfg`, deduplicated as multisets, in
    /// lexicographic order.
    pub fn joint_moves(&self, cfg: &CopConfig) -> Vec<CopConfig> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        let k = cfg.len();
        let mut odometer = vec![0usize; k];
        let closed: Vec<Vec<usize>> = cfg
            .positions()
            .iter()
            .map(|&c| {
                let mut cl: Vec<usize> = self.graph.neighbors(c).to_vec();
                let pos = cl.binary_search(&c).unwrap_err();
                cl.insert(pos, c);
                cl
            })
            .collect();
        loop {
            let mut tuple: Vec<usize> = (0..k).map(|i| closed[i][odometer[i]]).collect();
            tuple.sort_unstable();
            out.insert(tuple);
            let mut i = 0;
            while i < k {
                odometer[i] += 1;
                if odometer[i] < closed[i].len() {
                    break;
                }
                odometer[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        out.into_iter().map(CopConfig).collect()
    }

    fn dtc_raw(&self, idx: usize) -> u32 {
        self.dtc[idx]
    }

    fn index(&self, s: &GameState) -> Result<usize, SolveError> {
        let n = self.graph.n();
        if s.cops.len() != self.k {
            return Err(SolveError::StateMismatch {
                reason: format!("expected {} cops, got {}", self.k, s.cops.len()),
            });
        }
        if s.robber >= n {
            return Err(SolveError::StateMismatch {
                reason: format!("robber vertex {} out of range for n = {n}", s.robber),
            });
        }
        if s.cops.positions().iter().any(|&c| c >= n) {
            return Err(SolveError::StateMismatch {
                reason: format!("cop vertex out of range for n = {n}"),
            });
        }
        let tuple: Vec<u32> = s.cops.positions().iter().map(|&c| c as u32).collect();
        let rank = rank_config(&self.binom, &tuple);
        let side = match s.side {
            Side::Cops => 0,
            Side::Robber => 1,
        };
        Ok((rank * n + s.robber) * 2 + side)
    }
}

/// Least k ≤ `k_max` such that k cops win `g` from the best placement.
pub fn cop_number(g: &Graph, k_max: usize) -> Result<usize, SolveError> {
    cop_number_with_budget(g, k_max, DEFAULT_STATE_BUDGET)
}

pub fn cop_number_with_budget(
    g: &Graph,
    k_max: usize,
    budget: u64,
) -> Result<usize, SolveError> {
    if k_max == 0 {
        return Err(SolveError::ZeroCops);
    }
    for k in 1..=k_max {
        // State counts grow with k, so a budget failure here is final.
        if solve_with_budget(g, k, budget)?.is_cop_win() {
            return Ok(k);
        }
    }
    Err(SolveError::KMaxExhausted { k_max })
}

/// Minimax plies to capture with k cops under optimal play from the best
/// placement; errors when the robber wins.
pub fn capture_time(g: &Graph, k: usize) -> Result<u32, SolveError> {
    solve(g, k)?.capture_time()
}

/// Total size of the (configurations × robber × side) state space.
pub fn state_count(n: usize, k: usize) -> u128 {
    // C(n+k-1, k), checked: beyond u128 it is certainly beyond any budget.
    let mut c: u128 = 1;
    for i in 0..k {
        c = match c.checked_mul((n + i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c.saturating_mul(n as u128).saturating_mul(2)
}

/// Default simulation round cap: twice the state count, by which point any
/// uncaptured play has revisited a position.
pub fn default_round_cap(n: usize, k: usize) -> u64 {
    state_count(n, k).min(u64::MAX as u128) as u64
}

/// Adjudicates one play of the game between two strategies. Strategies see
/// the full history; every returned move is checked for legality.
pub fn simulate(
    g: &Graph,
    k: usize,
    cop_strategy: &mut dyn CopStrategy,
    robber_strategy: &mut dyn RobberStrategy,
    max_rounds: Option<u64>,
) -> Result<PlayRecord, SimulateError> {
    if k == 0 {
        return Err(SimulateError::ZeroCops);
    }
    let n = g.n();
    let cap = max_rounds.unwrap_or_else(|| default_round_cap(n, k));

    let placement = cop_strategy.place(g);
    if placement.len() != k {
        return Err(SimulateError::IllegalPlacement {
            reason: format!("expected {k} cops, got {}", placement.len()),
        });
    }
    if let Some(&v) = placement.positions().iter().find(|&&v| v >= n) {
        return Err(SimulateError::IllegalPlacement {
            reason: format!("vertex {v} out of range for n = {n}"),
        });
    }
    let r0 = robber_strategy.place(g, &placement);
    if r0 >= n {
        return Err(SimulateError::IllegalPlacement {
            reason: format!("robber vertex {r0} out of range for n = {n}"),
        });
    }

    let mut states = vec![GameState::new(placement, r0, Side::Cops)];
    if states[0].is_capture() {
        return Ok(PlayRecord {
            states,
            captured: true,
            rounds: 0,
        });
    }

    for round in 1..=cap {
        // Joint cop ply.
        let cur = states.last().unwrap().clone();
        let next_cfg = cop_strategy.select(g, &states);
        if next_cfg.len() != k
            || next_cfg.positions().iter().any(|&v| v >= n)
            || !joint_move_legal(g, cur.cops.positions(), next_cfg.positions())
        {
            return Err(SimulateError::IllegalMove {
                state: cur,
                reason: format!("cops cannot reach {next_cfg} in one joint move"),
            });
        }
        states.push(GameState::new(next_cfg, cur.robber, Side::Robber));
        if states.last().unwrap().is_capture() {
            return Ok(PlayRecord {
                states,
                captured: true,
                rounds: round,
            });
        }

        // Robber ply.
        let cur = states.last().unwrap().clone();
        let rp = robber_strategy.select(g, &states);
        if rp >= n || (rp != cur.robber && !g.has_edge(cur.robber, rp)) {
            return Err(SimulateError::IllegalMove {
                state: cur,
                reason: format!("robber cannot reach {rp} in one move"),
            });
        }
        states.push(GameState::new(cur.cops.clone(), rp, Side::Cops));
        if states.last().unwrap().is_capture() {
            return Ok(PlayRecord {
                states,
                captured: true,
                rounds: round,
            });
        }
    }

    Ok(PlayRecord {
        states,
        captured: false,
        rounds: cap,
    })
}

/// Whether the multiset `to` is reachable from `from` in one joint move:
/// some pairing sends every cop to a vertex in its closed neighborhood.
pub fn joint_move_legal(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    fn matching(g: &Graph, from: &[usize], to: &[usize], used: &mut [bool], i: usize) -> bool {
        if i == from.len() {
            return true;
        }
        for j in 0..to.len() {
            if used[j] {
                continue;
            }
            // Skip equal targets already tried at this level: pairing cop i
            // with either copy is the same assignment.
            if j > 0 && to[j] == to[j - 1] && !used[j - 1] {
                continue;
            }
            if to[j] == from[i] || g.has_edge(from[i], to[j]) {
                used[j] = true;
                if matching(g, from, to, used, i + 1) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    from.len() == to.len() && matching(g, from, to, &mut vec![false; to.len()], 0)
}

fn binom_table(max_n: usize, max_k: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; max_k + 1]; max_n + 1];
    for row in t.iter_mut() {
        row[0] = 1;
    }
    for i in 1..=max_n {
        for j in 1..=max_k {
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
    }
    t
}

/// Colex rank of a sorted multiset: map to the strictly increasing set
/// `c_i + i` and take the standard combinatorial number system rank.
fn rank_config(binom: &[Vec<u64>], cfg: &[u32]) -> usize {
    cfg.iter()
        .enumerate()
        .map(|(i, &c)| binom[c as usize + i][i + 1])
        .sum::<u64>() as usize
}

/// All k-multisets of {0..n-1} in colex rank order, flattened.
fn enumerate_configs(n: usize, k: usize, num: usize, binom: &[Vec<u64>]) -> Vec<u32> {
    let mut configs = Vec::with_capacity(num * k);
    let mut cur = vec![0u32; k];
    loop {
        debug_assert_eq!(rank_config(binom, &cur) * k, configs.len());
        configs.extend_from_slice(&cur);
        // Colex successor: bump the first entry with headroom, zero the
        // prefix.
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k {
                cur[i + 1]
            } else {
                (n - 1) as u32
            };
            if cur[i] < limit {
                break;
            }
            i += 1;
        }
        if i == k {
            break;
        }
        cur[i] += 1;
        cur[..i].iter_mut().for_each(|x| *x = 0);
    }
    debug_assert_eq!(configs.len(), num * k);
    configs
}

//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Self-loops are never stored: the game's reflexivity (players may pass) is
//! a rule of the engine, not data, so degrees and girth stay meaningful.
//! Labels for constructed graphs (point/line names) live in side tables, see
//! [`crate::geometry::LabeledGraph`].

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {v} out of range for n = {n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge endpoints must satisfy u < v")]
    UnorderedEdge { line: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: unexpected content after {expected} edges")]
    TrailingContent { line: usize, expected: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertices {u} and {v} are in different components")]
    DisconnectedPair { u: usize, v: usize },
    #[error("mapping is not total: expected {expected} entries, got {got}")]
    MappingNotTotal { expected: usize, got: usize },
    #[error("mapping sends {v} to {image}, which is outside the subgraph")]
    ImageOutsideSubgraph { v: usize, image: usize },
    #[error("the given vertex set does not induce a connected subgraph")]
    SubgraphNotConnected,
}

/// A finite simple undirected graph. Adjacency lists are kept sorted and
/// deduplicated; symmetry is maintained by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse to one
    /// (multigraphs make no difference to game play); self-loops are errors.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts edge `{u, v}`. Idempotent for existing edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Partition of the vertex set into maximal connected blocks, each block
    /// sorted ascending, blocks ordered by their least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut blocks = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut block = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        block.push(w);
                        queue.push_back(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// A shortest `u`-`v` path as a vertex sequence (inclusive of both ends).
    /// Any shortest path is isometric: its internal distances realize the
    /// distances of the host graph.
    pub fn isometric_path(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        // BFS from v so the parent chain walks u -> v; neighbors scan in
        // ascending order, making the returned path deterministic.
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![UNREACHABLE; n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &w in &self.adj[x] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        if dist[u] == UNREACHABLE {
            return Err(GraphError::DisconnectedPair { u, v });
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = parent[cur];
            path.push(cur);
        }
        Ok(path)
    }

    /// Subgraph induced by `vertices`; the second return value maps new
    /// indices back to the original vertex ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_to_new = vec![usize::MAX; self.n()];
        let mut order: Vec<usize> = vertices.to_vec();
        order.sort_unstable();
        order.dedup();
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut g = Graph::empty(order.len());
        for &old in &order {
            for &w in &self.adj[old] {
                if w > old && old_to_new[w] != usize::MAX {
                    g.add_edge(old_to_new[old], old_to_new[w]).unwrap();
                }
            }
        }
        (g, order)
    }

    pub fn metrics(&self) -> GraphMetrics {
        metrics(self)
    }

    /// Parses the edge-list text format: '#' comment lines, a header
    /// `n m`, then exactly `m` lines `u v` with `0 <= u < v < n`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut g = Graph::empty(0);
        let mut found = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 2 {
                        return Err(ParseError::MalformedHeader { line });
                    }
                    let n = fields[0]
                        .parse::<usize>()
                        .map_err(|_| ParseError::MalformedHeader { line })?;
                    let m = fields[1]
                        .parse::<usize>()
                        .map_err(|_| ParseError::MalformedHeader { line })?;
                    header = Some((n, m));
                    g = Graph::empty(n);
                }
                Some((n, m)) => {
                    if found == m {
                        return Err(ParseError::TrailingContent { line, expected: m });
                    }
                    if fields.len() != 2 {
                        return Err(ParseError::MalformedEdge { line });
                    }
                    let u = fields[0]
                        .parse::<usize>()
                        .map_err(|_| ParseError::MalformedEdge { line })?;
                    let v = fields[1]
                        .parse::<usize>()
                        .map_err(|_| ParseError::MalformedEdge { line })?;
                    for w in [u, v] {
                        if w >= n {
                            return Err(ParseError::VertexOutOfRange { line, v: w, n });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop { line, v: u });
                    }
                    if u > v {
                        return Err(ParseError::UnorderedEdge { line });
                    }
                    if g.has_edge(u, v) {
                        return Err(ParseError::DuplicateEdge { line, u, v });
                    }
                    g.add_edge(u, v).expect("validated edge");
                    found += 1;
                }
            }
        }
        let (_, m) = header.ok_or(ParseError::MalformedHeader { line: 0 })?;
        if found != m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found,
            });
        }
        Ok(g)
    }

    /// Serializes to the edge-list format with edges in lexicographic order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Exact whole-graph metrics, computed by BFS from every vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// Length of a shortest cycle; `None` is the infinity sentinel for
    /// acyclic graphs.
    pub girth: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_connected: bool,
    pub is_bipartite: bool,
}

impl GraphMetrics {
    /// True when the girth-at-least-5 premise of the minimum-degree lower
    /// bound holds (acyclic graphs satisfy it vacuously).
    pub fn girth_at_least(&self, bound: usize) -> bool {
        self.girth.map_or(true, |g| g >= bound)
    }
}

fn metrics(g: &Graph) -> GraphMetrics {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);

    let mut ecc_max = 0usize;
    let mut connected = n > 0;
    let mut girth: Option<usize> = None;

    for src in 0..n {
        // One BFS per source serves eccentricity and the shortest cycle
        // through `src` (via non-tree edges).
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    reached += 1;
                    queue.push_back(w);
                } else if w != parent[v] && v < w {
                    // Non-tree edge: closed walk through src of this length
                    // contains a cycle no longer than it; equality is attained
                    // when src lies on a shortest cycle.
                    let candidate = (dist[v] + dist[w] + 1) as usize;
                    if girth.map_or(true, |cur| candidate < cur) {
                        girth = Some(candidate);
                    }
                }
            }
        }
        if reached != n {
            connected = false;
        }
        let ecc = dist
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .map(|&d| d as usize)
            .max()
            .unwrap_or(0);
        ecc_max = ecc_max.max(ecc);
    }

    GraphMetrics {
        diameter: connected.then_some(ecc_max),
        girth,
        min_degree,
        max_degree,
        is_connected: connected,
        is_bipartite: is_bipartite(g),
    }
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// The Moore inequality `n <= 1 + D*((D-1)^diam - 1)/(D-2)` for maximum
/// degree `D > 2`; trivially true otherwise or on overflow.
pub fn moore_bound_holds(n: usize, max_degree: usize, diameter: usize) -> bool {
    if max_degree <= 2 {
        return true;
    }
    let delta = max_degree as u128;
    let mut power: u128 = 1;
    for _ in 0..diameter {
        power = match power.checked_mul(delta - 1) {
            Some(p) => p,
            None => return true,
        };
    }
    let rhs = match power
        .checked_sub(1)
        .and_then(|t| delta.checked_mul(t))
        .map(|t| 1 + t / (delta - 2))
    {
        Some(r) => r,
        None => return true,
    };
    (n as u128) <= rhs
}

/// The isometry predicate: every pair of path vertices is as close in the
/// path as in the host graph. Also requires `path` to be a path in `g`.
pub fn is_isometric_path(g: &Graph, path: &[usize]) -> bool {
    if path.is_empty() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return false;
        }
    }
    for (i, &a) in path.iter().enumerate() {
        let dist = g.bfs_distances(a);
        for (j, &b) in path.iter().enumerate().skip(i + 1) {
            if dist[b] as usize != j - i {
                return false;
            }
        }
    }
    true
}

/// Checks whether `f` is a retraction of the reflexive graph `g` onto the
/// subgraph induced by `h_vertices`: `f` fixes `h_vertices` pointwise and is
/// a homomorphism (an edge `uv` maps to an edge or a single vertex).
pub fn check_retraction(
    g: &Graph,
    h_vertices: &[usize],
    f: &[usize],
) -> Result<bool, GraphError> {
    let n = g.n();
    if f.len() != n {
        return Err(GraphError::MappingNotTotal {
            expected: n,
            got: f.len(),
        });
    }
    let mut in_h = vec![false; n];
    for &v in h_vertices {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        in_h[v] = true;
    }
    let (h, _) = g.induced_subgraph(h_vertices);
    if !h.is_connected() {
        return Err(GraphError::SubgraphNotConnected);
    }
    for (v, &image) in f.iter().enumerate() {
        if image >= n || !in_h[image] {
            return Err(GraphError::ImageOutsideSubgraph { v, image });
        }
    }
    for &v in h_vertices {
        if f[v] != v {
            return Ok(false);
        }
    }
    for (u, v) in g.edges() {
        if f[u] != f[v] && !g.has_edge(f[u], f[v]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Returns `g` with a path of `extra` fresh vertices hung from vertex 0.
/// Degree-one extensions leave the cop number unchanged.
pub fn attach_pendant_path(g: &Graph, extra: usize) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(n + extra);
    for (u, v) in g.edges() {
        out.add_edge(u, v).unwrap();
    }
    let mut prev = 0;
    for i in 0..extra {
        out.add_edge(prev, n + i).unwrap();
        prev = n + i;
    }
    out
}

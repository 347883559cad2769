//! Small named graphs used throughout the tests and the CLI.

use crate::graph::Graph;

/// The 5-cycle with an inner pentagram, the smallest graph of cop number 3.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer C5
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    normalize(10, edges)
}

/// The point-line incidence graph of the smallest projective plane:
/// 14 vertices, 21 edges, 3-regular, girth 6.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    normalize(14, edges)
}

/// The cycle `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    normalize(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `P_n` on `n >= 1` vertices.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "paths need at least one vertex");
    normalize(n, (1..n).map(|i| (i - 1, i)))
}

/// The `r x c` grid (Cartesian product of two paths), row-major indexing.
pub fn grid(r: usize, c: usize) -> Graph {
    assert!(r >= 1 && c >= 1, "grids need positive dimensions");
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..c {
            let v = i * c + j;
            if j + 1 < c {
                edges.push((v, v + 1));
            }
            if i + 1 < r {
                edges.push((v, v + c));
            }
        }
    }
    normalize(r * c, edges)
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    normalize(n, edges)
}

/// The star `K_{1,m}` with the center at vertex 0.
pub fn star(m: usize) -> Graph {
    normalize(m + 1, (1..=m).map(|v| (0, v)))
}

fn normalize(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(
        n,
        edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v))),
    )
    .expect("named graphs are well-formed")
}

/// Resolves the graph names accepted by the command line: `heawood`,
/// `petersen`, `cycle-N`, `path-N`, and `grid-RxC`.
pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "heawood" => return Some(heawood()),
        "petersen" => return Some(petersen()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("cycle-") {
        let n: usize = rest.parse().ok().filter(|&n| n >= 3)?;
        return Some(cycle(n));
    }
    if let Some(rest) = name.strip_prefix("path-") {
        let n: usize = rest.parse().ok().filter(|&n| n >= 1)?;
        return Some(path(n));
    }
    if let Some(rest) = name.strip_prefix("grid-") {
        let (a, b) = rest.split_once('x')?;
        let r: usize = a.parse().ok().filter(|&r| r >= 1)?;
        let c: usize = b.parse().ok().filter(|&c| c >= 1)?;
        return Some(grid(r, c));
    }
    None
}

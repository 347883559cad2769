//! Finite fields of small order, projective and affine planes over them,
//! truncated planes, and their bipartite incidence graphs.
//!
//! Everything here is deterministic: field tables come from fixed
//! irreducible polynomials, points and lines are numbered in construction
//! order, and truncation always deletes the parallel classes with the
//! largest labels.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("order {q} is not a prime power")]
    NotPrimePower { q: usize },
    #[error("order {q} is not supported: primes up to 255 work directly, and the non-prime orders 4, 8, 9, 16, 25, 27 ship polynomials")]
    UnsupportedOrder { q: usize },
    #[error("structure has no parallel-class labels")]
    MissingParallelLabels,
    #[error("cannot remove {k} parallel classes: need 1 <= k <= {max} so at least two classes survive")]
    TruncationOutOfRange { k: usize, max: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A finite field GF(q) as explicit operation tables over element indices
/// `0..q-1`, with 0 the additive and 1 the multiplicative identity.
///
/// Prime orders use arithmetic mod p. Prime powers p^e encode elements as
/// polynomials over GF(p) in base-p digits, reduced modulo a fixed
/// irreducible polynomial, one constant per supported order — shipping the
/// polynomials keeps every construction bit-for-bit reproducible.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// Irreducible polynomials for the supported non-prime orders, written as
/// coefficient lists c_0 + c_1 x + ... (monic term omitted). Verified
/// irreducible by the exhaustive axiom check every construction runs.
const IRREDUCIBLE: [(usize, &[usize]); 6] = [
    (4, &[1, 1]),     // x^2 + x + 1 over GF(2)
    (8, &[1, 1, 0]),  // x^3 + x + 1 over GF(2)
    (9, &[2, 2]),     // x^2 + 2x + 2 over GF(3)
    (16, &[1, 1, 0, 0]), // x^4 + x + 1 over GF(2)
    (25, &[2, 4]),    // x^2 + 4x + 2 over GF(5)
    (27, &[1, 2, 0]), // x^3 + 2x + 1 over GF(3)
];

/// True when [`finite_field`] can build GF(q): any prime up to 255 (the
/// element tables are byte-indexed) or a non-prime order with a shipped
/// polynomial.
pub fn field_order_supported(q: usize) -> bool {
    q >= 2
        && q <= 255
        && (is_prime(q) || IRREDUCIBLE.iter().any(|&(order, _)| order == q))
}

/// Builds GF(q). Any prime q is accepted (plain modular arithmetic); the
/// non-prime orders 4, 8, 9, 16, 25, 27 use the shipped polynomials.
pub fn finite_field(q: usize) -> Result<FiniteField, GeometryError> {
    if q < 2 {
        return Err(GeometryError::NotPrimePower { q });
    }
    if q > 255 {
        // Tables index elements as bytes; orders beyond that are far past
        // anything the toolkit constructs.
        return Err(GeometryError::UnsupportedOrder { q });
    }
    if is_prime(q) {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            let mut t = vec![0u8; q * q];
            for a in 0..q {
                for b in 0..q {
                    t[a * q + b] = f(a, b) as u8;
                }
            }
            t
        };
        let f = FiniteField {
            q,
            p: q,
            add: table(&|a, b| (a + b) % q),
            mul: table(&|a, b| (a * b) % q),
        };
        f.assert_axioms();
        return Ok(f);
    }
    let (p, e) = match prime_power_decomposition(q) {
        Some(pe) => pe,
        None => return Err(GeometryError::NotPrimePower { q }),
    };
    let modulus = IRREDUCIBLE
        .iter()
        .find(|&&(order, _)| order == q)
        .map(|&(_, m)| m)
        .ok_or(GeometryError::UnsupportedOrder { q })?;

    // Elements are base-p digit strings of length e (polynomial
    // coefficients, least significant first).
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; e];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    for a in 0..q {
        let da = digits(a);
        for b in 0..q {
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * q + b] = undigits(&sum) as u8;

            // Schoolbook product, then reduce by the monic modulus.
            let mut prod = vec![0usize; 2 * e - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for top in (e..2 * e - 1).rev() {
                let c = prod[top];
                if c != 0 {
                    prod[top] = 0;
                    // x^top = x^(top-e) * x^e = x^(top-e) * (-modulus)
                    for (i, &m) in modulus.iter().enumerate() {
                        let idx = top - e + i;
                        prod[idx] = (prod[idx] + c * (p - m % p)) % p;
                    }
                }
            }
            mul[a * q + b] = undigits(&prod[..e]) as u8;
        }
    }
    let f = FiniteField { q, p, add, mul };
    f.assert_axioms();
    Ok(f)
}

impl FiniteField {
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> usize {
        assert_ne!(a, 0, "zero has no multiplicative inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    /// Exhaustive field-axiom verification; runs at every construction
    /// (q ≤ 27 keeps the triple loops trivial).
    fn assert_axioms(&self) {
        let q = self.q;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a, "0 must be the additive identity");
            assert_eq!(self.mul(a, 1), a, "1 must be the multiplicative identity");
            assert!(
                (0..q).any(|b| self.add(a, b) == 0),
                "every element needs an additive inverse"
            );
            if a != 0 {
                assert!(
                    (1..q).any(|b| self.mul(a, b) == 1),
                    "every nonzero element needs a multiplicative inverse"
                );
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a), "addition must commute");
                assert_eq!(self.mul(a, b), self.mul(b, a), "multiplication must commute");
                for c in 0..q {
                    assert_eq!(
                        self.add(self.add(a, b), c),
                        self.add(a, self.add(b, c)),
                        "addition must associate"
                    );
                    assert_eq!(
                        self.mul(self.mul(a, b), c),
                        self.mul(a, self.mul(b, c)),
                        "multiplication must associate"
                    );
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c)),
                        "distributivity must hold"
                    );
                }
            }
        }
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_power_decomposition(q: usize) -> Option<(usize, usize)> {
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut x = q;
            let mut e = 0;
            while x % p == 0 {
                x /= p;
                e += 1;
            }
            return (x == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

/// A point-line incidence structure: `points` point indices `0..points`,
/// each line a sorted list of them, with optional per-line parallel-class
/// labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
    pub parallel_class: Option<Vec<usize>>,
}

/// The projective plane PG(2,q): points are the 1-dimensional subspaces of
/// GF(q)^3, lines the 2-dimensional ones, incidence is containment
/// (u·x + v·y + w·z = 0 on homogeneous representatives).
pub fn projective_plane(q: usize) -> Result<IncidenceStructure, GeometryError> {
    let f = finite_field(q)?;
    let reps = homogeneous_reps(q);
    let index: HashMap<[usize; 3], usize> = reps
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i))
        .collect();
    debug_assert_eq!(reps.len(), q * q + q + 1);

    // Scale so the first nonzero coordinate is 1, matching the enumeration.
    let normalize = |v: [usize; 3]| -> [usize; 3] {
        let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero triple");
        let s = f.inv(lead);
        [f.mul(s, v[0]), f.mul(s, v[1]), f.mul(s, v[2])]
    };

    // The line [u,v,w] is the 2-dimensional null space of u·x+v·y+w·z.
    // Its q+1 projective points are s1 and s2 + λ·s1 for a basis {s1, s2},
    // enumerated directly instead of scanning all points.
    let lines: Vec<Vec<usize>> = reps
        .iter()
        .map(|&[u, v, w]| {
            let (s1, s2): ([usize; 3], [usize; 3]) = if u == 0 && v == 0 {
                ([1, 0, 0], [0, 1, 0])
            } else if u == 0 {
                // y = -w·z (v = 1 by normalization)
                ([1, 0, 0], [0, f.neg(w), 1])
            } else {
                // x = -(v·y + w·z) (u = 1)
                ([f.neg(v), 1, 0], [f.neg(w), 0, 1])
            };
            let mut pts = vec![index[&normalize(s1)]];
            for lam in 0..q {
                let p = [
                    f.add(s2[0], f.mul(lam, s1[0])),
                    f.add(s2[1], f.mul(lam, s1[1])),
                    f.add(s2[2], f.mul(lam, s1[2])),
                ];
                pts.push(index[&normalize(p)]);
            }
            pts.sort_unstable();
            debug_assert!(pts.windows(2).all(|t| t[0] < t[1]));
            pts
        })
        .collect();

    Ok(IncidenceStructure {
        points: reps.len(),
        lines,
        parallel_class: None,
    })
}

/// Canonical representatives of the nonzero triples up to scaling: first
/// nonzero coordinate 1, enumerated lexicographically.
fn homogeneous_reps(q: usize) -> Vec<[usize; 3]> {
    let mut reps = vec![[0, 0, 1]];
    for c in 0..q {
        reps.push([0, 1, c]);
    }
    for b in 0..q {
        for c in 0..q {
            reps.push([1, b, c]);
        }
    }
    reps
}

/// The affine plane AG(2,q): points GF(q)^2 (index x·q + y), lines
/// y = m·x + b labeled with parallel class m, plus the vertical lines
/// x = c labeled with class q.
pub fn affine_plane(q: usize) -> Result<IncidenceStructure, GeometryError> {
    let f = finite_field(q)?;
    let mut lines = Vec::with_capacity(q * q + q);
    let mut labels = Vec::with_capacity(q * q + q);
    for m in 0..q {
        for b in 0..q {
            let mut pts: Vec<usize> = (0..q).map(|x| x * q + f.add(f.mul(m, x), b)).collect();
            pts.sort_unstable();
            lines.push(pts);
            labels.push(m);
        }
    }
    for c in 0..q {
        lines.push((0..q).map(|y| c * q + y).collect());
        labels.push(q);
    }
    Ok(IncidenceStructure {
        points: q * q,
        lines,
        parallel_class: Some(labels),
    })
}

/// Deletes the k parallel classes with the largest labels (the vertical
/// class first). At least two classes must survive — with one class the
/// incidence graph degenerates to disjoint stars.
pub fn remove_parallel_classes(
    a: &IncidenceStructure,
    k: usize,
) -> Result<IncidenceStructure, GeometryError> {
    let labels = a
        .parallel_class
        .as_ref()
        .ok_or(GeometryError::MissingParallelLabels)?;
    let classes = labels.iter().copied().max().map_or(0, |m| m + 1);
    let max_k = classes.saturating_sub(2);
    if k == 0 || k > max_k {
        return Err(GeometryError::TruncationOutOfRange { k, max: max_k });
    }
    let cutoff = classes - k;
    let mut lines = Vec::new();
    let mut kept_labels = Vec::new();
    for (line, &label) in a.lines.iter().zip(labels) {
        if label < cutoff {
            lines.push(line.clone());
            kept_labels.push(label);
        }
    }
    Ok(IncidenceStructure {
        points: a.points,
        lines,
        parallel_class: Some(kept_labels),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Point,
    Line,
}

/// The bipartite incidence graph of a structure, with the vertex→geometry
/// correspondence kept alongside. Points occupy vertices `0..points` in
/// point order; lines follow in line order.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub origin: Vec<usize>,
}

impl LabeledGraph {
    pub fn point_count(&self) -> usize {
        self.roles.iter().filter(|r| **r == Role::Point).count()
    }

    pub fn line_count(&self) -> usize {
        self.roles.len() - self.point_count()
    }

    pub fn point_vertex(&self, point: usize) -> usize {
        point
    }

    pub fn line_vertex(&self, line: usize) -> usize {
        self.point_count() + line
    }
}

pub fn incidence_graph(s: &IncidenceStructure) -> LabeledGraph {
    let p = s.points;
    let n = p + s.lines.len();
    let mut g = Graph::empty(n);
    for (j, line) in s.lines.iter().enumerate() {
        for &pt in line {
            g.add_edge(pt, p + j).expect("structure indices are in range");
        }
    }
    let mut roles = vec![Role::Point; p];
    roles.extend(std::iter::repeat(Role::Line).take(s.lines.len()));
    let mut origin: Vec<usize> = (0..p).collect();
    origin.extend(0..s.lines.len());
    LabeledGraph {
        graph: g,
        roles,
        origin,
    }
}

/// One axiom set's verdict; `counterexample` is human-readable and names
/// the offending points/lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(reason: String) -> Self {
        AxiomCheck {
            holds: false,
            counterexample: Some(reason),
        }
    }
}

/// Verdicts for the three axiom sets, plus the parallel-label consistency
/// check when labels are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub partial_linear: AxiomCheck,
    pub affine: AxiomCheck,
    pub projective: AxiomCheck,
    pub parallel_consistent: Option<AxiomCheck>,
}

/// Checks the structure against the partial-linear-space, affine-plane,
/// and projective-plane axiom sets, reporting a counterexample for each
/// failure.
pub fn validate_structure(s: &IncidenceStructure) -> StructureReport {
    let p = s.points;
    let bitsets: Vec<Vec<u64>> = s.lines.iter().map(|l| to_bitset(l, p)).collect();

    // Lines through each pair of points. u8 is plenty: a counterexample
    // needs only "more than one".
    let mut pair_count = vec![0u8; p * p];
    let mut pair_line = vec![usize::MAX; p * p];
    for (j, line) in s.lines.iter().enumerate() {
        for (i, &a) in line.iter().enumerate() {
            for &b in &line[i + 1..] {
                let idx = a * p + b;
                pair_count[idx] = pair_count[idx].saturating_add(1);
                if pair_line[idx] == usize::MAX {
                    pair_line[idx] = j;
                }
            }
        }
    }

    let mut not_linear: Option<(usize, usize)> = None;
    let mut uncovered: Option<(usize, usize)> = None;
    for a in 0..p {
        for b in a + 1..p {
            match pair_count[a * p + b] {
                0 => uncovered = uncovered.or(Some((a, b))),
                1 => {}
                _ => not_linear = not_linear.or(Some((a, b))),
            }
        }
    }

    let partial_linear = match not_linear {
        None => AxiomCheck::pass(),
        Some((a, b)) => AxiomCheck::fail(format!(
            "points {a} and {b} lie on more than one common line"
        )),
    };

    // Axiom P1/A1: every pair on exactly one line.
    let pairs_unique = match (not_linear, uncovered) {
        (Some((a, b)), _) => Err(format!("points {a} and {b} lie on multiple lines")),
        (_, Some((a, b))) => Err(format!("points {a} and {b} lie on no common line")),
        (None, None) => Ok(()),
    };

    // Projective axiom 2: every pair of distinct lines meets in exactly one
    // point.
    let mut lines_meet = Ok(());
    'outer: for i in 0..s.lines.len() {
        for j in i + 1..s.lines.len() {
            let common = intersection_size(&bitsets[i], &bitsets[j]);
            if common != 1 {
                let what = if common == 0 { "no" } else { "more than one" };
                lines_meet = Err(format!("lines {i} and {j} meet in {what} point"));
                break 'outer;
            }
        }
    }

    // Projective axiom 3: four points, no three on a common line.
    let quad = find_general_quadruple(s, &bitsets, &pair_line);

    let projective = match (&pairs_unique, &lines_meet, &quad) {
        (Err(e), _, _) => AxiomCheck::fail(e.clone()),
        (_, Err(e), _) => AxiomCheck::fail(e.clone()),
        (_, _, None) => {
            AxiomCheck::fail("no four points in general position exist".to_string())
        }
        _ => AxiomCheck::pass(),
    };

    // Affine axioms: pairs unique; Playfair (unique parallel through an
    // external point); three non-collinear points.
    let playfair = check_playfair(s, &bitsets);
    let triangle = find_noncollinear_triple(s, &pair_line);
    let affine = match (&pairs_unique, &playfair, &triangle) {
        (Err(e), _, _) => AxiomCheck::fail(e.clone()),
        (_, Err(e), _) => AxiomCheck::fail(e.clone()),
        (_, _, None) => AxiomCheck::fail("all points are collinear".to_string()),
        _ => AxiomCheck::pass(),
    };

    let parallel_consistent = s.parallel_class.as_ref().map(|labels| {
        for (i, (la, ba)) in labels.iter().zip(&bitsets).enumerate() {
            for (j, (lb, bb)) in labels.iter().zip(&bitsets).enumerate().skip(i + 1) {
                if la == lb && intersection_size(ba, bb) > 0 {
                    return AxiomCheck::fail(format!(
                        "lines {i} and {j} share class {la} but intersect"
                    ));
                }
            }
        }
        AxiomCheck::pass()
    });

    StructureReport {
        partial_linear,
        affine,
        projective,
        parallel_consistent,
    }
}

fn to_bitset(line: &[usize], points: usize) -> Vec<u64> {
    let mut bits = vec![0u64; points.div_ceil(64)];
    for &p in line {
        bits[p / 64] |= 1 << (p % 64);
    }
    bits
}

fn intersection_size(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn collinear(
    s: &IncidenceStructure,
    bitsets: &[Vec<u64>],
    pair_line: &[usize],
    a: usize,
    b: usize,
    c: usize,
) -> bool {
    // Any line through {a,b} also through c witnesses collinearity; with
    // multiple lines through the pair, fall back to scanning them all.
    let first = pair_line[a * s.points + b];
    if first == usize::MAX {
        return false;
    }
    if bitsets[first][c / 64] & (1 << (c % 64)) != 0 {
        return true;
    }
    s.lines.iter().enumerate().any(|(_, line)| {
        line.binary_search(&a).is_ok()
            && line.binary_search(&b).is_ok()
            && line.binary_search(&c).is_ok()
    })
}

/// Four points with no three collinear. Constructed from two intersecting
/// lines when possible (two off-crossing points from each always work in a
/// partial linear space); exhaustive search is the fallback so the answer
/// stays exact on degenerate inputs.
fn find_general_quadruple(
    s: &IncidenceStructure,
    bitsets: &[Vec<u64>],
    pair_line: &[usize],
) -> Option<[usize; 4]> {
    let ok = |quad: [usize; 4]| -> bool {
        for x in 0..4 {
            for y in x + 1..4 {
                for z in y + 1..4 {
                    if collinear(s, bitsets, pair_line, quad[x], quad[y], quad[z]) {
                        return false;
                    }
                }
            }
        }
        true
    };
    for i in 0..s.lines.len() {
        for j in i + 1..s.lines.len() {
            let a: Vec<usize> = s.lines[i]
                .iter()
                .copied()
                .filter(|p| !s.lines[j].contains(p))
                .take(2)
                .collect();
            let b: Vec<usize> = s.lines[j]
                .iter()
                .copied()
                .filter(|p| !s.lines[i].contains(p))
                .take(2)
                .collect();
            if a.len() == 2 && b.len() == 2 {
                let quad = [a[0], a[1], b[0], b[1]];
                if ok(quad) {
                    return Some(quad);
                }
            }
        }
    }
    let p = s.points;
    for a in 0..p {
        for b in a + 1..p {
            for c in b + 1..p {
                for d in c + 1..p {
                    if ok([a, b, c, d]) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

fn find_noncollinear_triple(
    s: &IncidenceStructure,
    pair_line: &[usize],
) -> Option<[usize; 3]> {
    let p = s.points;
    let bitsets: Vec<Vec<u64>> = s.lines.iter().map(|l| to_bitset(l, p)).collect();
    for a in 0..p {
        for b in a + 1..p {
            for c in b + 1..p {
                if !collinear(s, &bitsets, pair_line, a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Playfair's axiom: for every line L and point x off L there is exactly
/// one line through x disjoint from L.
fn check_playfair(s: &IncidenceStructure, bitsets: &[Vec<u64>]) -> Result<(), String> {
    let p = s.points;
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); p];
    for (j, line) in s.lines.iter().enumerate() {
        for &pt in line {
            through[pt].push(j);
        }
    }
    for (j, line) in s.lines.iter().enumerate() {
        for x in 0..p {
            if line.binary_search(&x).is_ok() {
                continue;
            }
            let parallels = through[x]
                .iter()
                .filter(|&&m| intersection_size(&bitsets[m], &bitsets[j]) == 0)
                .count();
            if parallels != 1 {
                return Err(format!(
                    "point {x} off line {j} has {parallels} parallels through it, not 1"
                ));
            }
        }
    }
    Ok(())
}

impl IncidenceStructure {
    /// Parses the incidence-structure text format: '#' comments, a header
    /// "P L", then L lines each listing its point indices, optionally
    /// ending in "class <c>". Labels must be used on all lines or none.
    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        let mut header: Option<(usize, usize)> = None;
        let mut lines: Vec<Vec<usize>> = Vec::new();
        let mut labels: Vec<usize> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let err = |reason: String| GeometryError::Parse {
                line: lineno,
                reason,
            };
            let fields: Vec<&str> = content.split_whitespace().collect();
            let Some((p, l)) = header else {
                if fields.len() != 2 {
                    return Err(err("expected header \"P L\"".into()));
                }
                let p = fields[0]
                    .parse()
                    .map_err(|_| err("expected header \"P L\"".into()))?;
                let l = fields[1]
                    .parse()
                    .map_err(|_| err("expected header \"P L\"".into()))?;
                header = Some((p, l));
                continue;
            };
            if lines.len() == l {
                return Err(err(format!("unexpected content after {l} lines")));
            }
            let (point_fields, label) = match fields.iter().position(|&f| f == "class") {
                Some(pos) => {
                    if pos != fields.len() - 2 {
                        return Err(err("\"class <c>\" must end the line".into()));
                    }
                    let c = fields[pos + 1]
                        .parse()
                        .map_err(|_| err("malformed class label".into()))?;
                    (&fields[..pos], Some(c))
                }
                None => (&fields[..], None),
            };
            if !lines.is_empty() && label.is_some() != (labels.len() == lines.len()) {
                return Err(err(
                    "class labels must appear on every line or on none".into(),
                ));
            }
            let mut pts = Vec::with_capacity(point_fields.len());
            for f in point_fields {
                let v: usize = f.parse().map_err(|_| err(format!("bad point index {f:?}")))?;
                if v >= p {
                    return Err(err(format!("point {v} out of range for P = {p}")));
                }
                pts.push(v);
            }
            pts.sort_unstable();
            if pts.windows(2).any(|w| w[0] == w[1]) {
                return Err(err("duplicate point on a line".into()));
            }
            lines.push(pts);
            if let Some(c) = label {
                labels.push(c);
            }
        }
        let (p, l) = header.ok_or(GeometryError::Parse {
            line: 0,
            reason: "missing header".into(),
        })?;
        if lines.len() != l {
            return Err(GeometryError::Parse {
                line: 0,
                reason: format!("expected {l} lines, found {}", lines.len()),
            });
        }
        Ok(IncidenceStructure {
            points: p,
            lines,
            parallel_class: (!labels.is_empty()).then_some(labels),
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.points, self.lines.len());
        for (j, line) in self.lines.iter().enumerate() {
            let pts: Vec<String> = line.iter().map(|p| p.to_string()).collect();
            out.push_str(&pts.join(" "));
            if let Some(labels) = &self.parallel_class {
                let _ = write!(out, " class {}", labels[j]);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::named;

    #[test]
    fn gf2_is_xor_and() {
        let f = finite_field(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.add(a, b), a ^ b);
                assert_eq!(f.mul(a, b), a & b);
            }
        }
    }

    #[test]
    fn gf3_is_mod3() {
        let f = finite_field(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.neg(1), 2);
    }

    #[test]
    fn gf4_characteristic_two_cyclic() {
        let f = finite_field(4).unwrap();
        for a in 0..4 {
            assert_eq!(f.add(a, a), 0);
        }
        // The three nonzero elements form a cyclic group of order 3: some
        // element has order 3.
        let cubes_to_one = (1..4)
            .filter(|&a| {
                let sq = f.mul(a, a);
                f.mul(sq, a) == 1 && sq != 1
            })
            .count();
        assert_eq!(cubes_to_one, 2);
    }

    #[test]
    fn all_supported_orders_construct() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let f = finite_field(q).unwrap();
            assert_eq!(f.order(), q);
        }
        // Primes beyond the listed set still work (witness cores need them).
        assert_eq!(finite_field(17).unwrap().characteristic(), 17);
        assert_eq!(finite_field(101).unwrap().order(), 101);
    }

    #[test]
    fn unsupported_orders_error() {
        assert_eq!(
            finite_field(6).unwrap_err(),
            GeometryError::NotPrimePower { q: 6 }
        );
        assert_eq!(
            finite_field(1).unwrap_err(),
            GeometryError::NotPrimePower { q: 1 }
        );
        assert_eq!(
            finite_field(49).unwrap_err(),
            GeometryError::UnsupportedOrder { q: 49 }
        );
        assert_eq!(
            finite_field(32).unwrap_err(),
            GeometryError::UnsupportedOrder { q: 32 }
        );
    }

    #[test]
    fn fano_plane_counts() {
        let s = projective_plane(2).unwrap();
        assert_eq!(s.points, 7);
        assert_eq!(s.lines.len(), 7);
        assert!(s.lines.iter().all(|l| l.len() == 3));
        let r = validate_structure(&s);
        assert!(r.partial_linear.holds);
        assert!(r.projective.holds, "{:?}", r.projective.counterexample);
        assert!(!r.affine.holds); // lines always meet: no parallels
    }

    #[test]
    fn pg3_counts_and_axioms() {
        let s = projective_plane(3).unwrap();
        assert_eq!(s.points, 13);
        assert_eq!(s.lines.len(), 13);
        assert!(s.lines.iter().all(|l| l.len() == 4));
        assert!(validate_structure(&s).projective.holds);
    }

    #[test]
    fn fano_incidence_graph_is_heawood() {
        let lg = incidence_graph(&projective_plane(2).unwrap());
        assert_eq!(lg.graph.n(), 14);
        let m = lg.graph.metrics();
        assert_eq!((m.min_degree, m.max_degree), (3, 3));
        assert_eq!(m.girth, Some(6));
        assert!(are_isomorphic(&lg.graph, &named::heawood()));
    }

    #[test]
    fn affine_plane_counts() {
        let s = affine_plane(2).unwrap();
        assert_eq!((s.points, s.lines.len()), (4, 6));
        let labels = s.parallel_class.as_ref().unwrap();
        assert_eq!(labels.iter().max(), Some(&2)); // 3 classes

        let s3 = affine_plane(3).unwrap();
        assert_eq!((s3.points, s3.lines.len()), (9, 12));
        let labels3 = s3.parallel_class.as_ref().unwrap();
        for class in 0..4 {
            assert_eq!(labels3.iter().filter(|&&c| c == class).count(), 3);
        }
        let r = validate_structure(&s3);
        assert!(r.affine.holds, "{:?}", r.affine.counterexample);
        assert!(!r.projective.holds); // parallel lines never meet
        assert!(r.parallel_consistent.unwrap().holds);
    }

    #[test]
    fn affine_pairs_covered_once() {
        for q in [2, 3, 4, 5] {
            let s = affine_plane(q).unwrap();
            let r = validate_structure(&s);
            assert!(r.partial_linear.holds);
            assert!(r.affine.holds, "q={q}: {:?}", r.affine.counterexample);
        }
    }

    #[test]
    fn truncated_ag22_is_c8() {
        let a = affine_plane(2).unwrap();
        let t = remove_parallel_classes(&a, 1).unwrap();
        assert_eq!((t.points, t.lines.len()), (4, 4));
        let lg = incidence_graph(&t);
        assert_eq!(lg.graph.n(), 8);
        assert!(are_isomorphic(&lg.graph, &named::cycle(8)));
    }

    #[test]
    fn truncated_ag23_regular_girth6() {
        let a = affine_plane(3).unwrap();
        let t = remove_parallel_classes(&a, 1).unwrap();
        assert_eq!((t.points, t.lines.len()), (9, 9));
        let lg = incidence_graph(&t);
        assert_eq!(lg.graph.n(), 18);
        let m = lg.graph.metrics();
        assert_eq!((m.min_degree, m.max_degree), (3, 3));
        assert!(m.girth.unwrap() >= 6);
        assert!(m.is_connected);
        assert!(m.is_bipartite);
    }

    #[test]
    fn truncation_range_errors() {
        let a = affine_plane(3).unwrap();
        assert_eq!(
            remove_parallel_classes(&a, 0).unwrap_err(),
            GeometryError::TruncationOutOfRange { k: 0, max: 2 }
        );
        assert_eq!(
            remove_parallel_classes(&a, 3).unwrap_err(),
            GeometryError::TruncationOutOfRange { k: 3, max: 2 }
        );
        let p = projective_plane(2).unwrap();
        assert_eq!(
            remove_parallel_classes(&p, 1).unwrap_err(),
            GeometryError::MissingParallelLabels
        );
    }

    #[test]
    fn truncation_removes_vertical_class_first() {
        let a = affine_plane(3).unwrap();
        let t = remove_parallel_classes(&a, 1).unwrap();
        let labels = t.parallel_class.unwrap();
        assert!(labels.iter().all(|&c| c < 3)); // class 3 (x=c) removed
        assert_eq!(labels.len(), 9);
    }

    #[test]
    fn incidence_graph_roles_and_origin() {
        let s = affine_plane(2).unwrap();
        let lg = incidence_graph(&s);
        assert_eq!(lg.point_count(), 4);
        assert_eq!(lg.line_count(), 6);
        assert_eq!(lg.roles[3], Role::Point);
        assert_eq!(lg.roles[4], Role::Line);
        assert_eq!(lg.origin[4], 0);
        assert_eq!(lg.line_vertex(2), 6);
        // Bipartite by construction: every edge joins a point to a line.
        for (u, v) in lg.graph.edges() {
            assert_ne!(lg.roles[u], lg.roles[v]);
        }
    }

    #[test]
    fn degenerate_structure_reported() {
        // Two lines sharing two points.
        let s = IncidenceStructure {
            points: 4,
            lines: vec![vec![0, 1, 2], vec![0, 1, 3]],
            parallel_class: None,
        };
        let r = validate_structure(&s);
        assert!(!r.partial_linear.holds);
        assert!(r.partial_linear.counterexample.unwrap().contains("0 and 1"));
        assert!(!r.projective.holds);
    }

    #[test]
    fn inconsistent_parallel_labels_reported() {
        let s = IncidenceStructure {
            points: 4,
            lines: vec![vec![0, 1], vec![1, 2]],
            parallel_class: Some(vec![0, 0]),
        };
        let r = validate_structure(&s);
        assert!(!r.parallel_consistent.unwrap().holds);
    }

    #[test]
    fn structure_text_round_trip() {
        for s in [
            projective_plane(2).unwrap(),
            affine_plane(3).unwrap(),
            remove_parallel_classes(&affine_plane(2).unwrap(), 1).unwrap(),
        ] {
            let text = s.serialize();
            assert_eq!(IncidenceStructure::parse(&text).unwrap(), s);
        }
    }

    #[test]
    fn structure_parse_errors() {
        let bad_header = IncidenceStructure::parse("x y\n").unwrap_err();
        assert!(matches!(bad_header, GeometryError::Parse { line: 1, .. }));

        let out_of_range = IncidenceStructure::parse("2 1\n0 5\n").unwrap_err();
        assert!(matches!(out_of_range, GeometryError::Parse { line: 2, .. }));

        let mixed = IncidenceStructure::parse("3 2\n0 1 class 0\n1 2\n").unwrap_err();
        assert!(matches!(mixed, GeometryError::Parse { line: 3, .. }));

        let dup = IncidenceStructure::parse("3 1\n0 0\n").unwrap_err();
        assert!(matches!(dup, GeometryError::Parse { line: 2, .. }));

        let count = IncidenceStructure::parse("3 2\n0 1\n").unwrap_err();
        assert!(matches!(count, GeometryError::Parse { line: 0, .. }));
    }

    #[test]
    fn projective_planes_validate_for_all_supported_q() {
        // Orders beyond ~9 grow quickly; stop where the validator stays
        // fast in debug builds. Larger orders are covered in release-mode
        // integration tests.
        for q in [2, 3, 4, 5, 7] {
            let s = projective_plane(q).unwrap();
            assert_eq!(s.points, q * q + q + 1);
            assert_eq!(s.lines.len(), q * q + q + 1);
            let r = validate_structure(&s);
            assert!(r.projective.holds, "q={q}: {:?}", r.projective.counterexample);
        }
    }
}

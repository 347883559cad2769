//! Exact Cops-and-Robbers solving and the finite-geometry constructions that
//! realize large cop numbers.
//!
//! The crate is organized around a small set of pieces:
//!
//! - [`graph`]: simple undirected graphs with an edge-list text format,
//!   metrics (diameter, girth, degrees), shortest/isometric paths,
//!   retraction checking, and pendant padding.
//! - [`game`]: the exact game engine. [`game::solve`] classifies every game
//!   state of the k-cop pursuit game by retrograde analysis and supports
//!   cop-number computation, optimal-move extraction, and adjudicated play.
//! - [`geometry`]: finite fields of small order, projective planes PG(2,q),
//!   affine planes AG(2,q) with labeled parallel classes, truncations, and
//!   bipartite incidence graphs.
//! - [`strategy`]: executable cop strategies (isometric-path guarding, the
//!   parallel-class strategy on truncated affine planes), the greedy
//!   decomposition upper bound, caterpillar extraction, and exhaustive guard
//!   verification.
//! - [`bounds`]: lower/upper bound computations, the order-n witness family
//!   with guaranteed cop number at least sqrt(n/8), and small-order
//!   exhaustive graph enumeration.
//! - [`random`]: seeded G(n,p) sampling and Monte-Carlo cop-number
//!   experiments.
//!
//! Game semantics: graphs are reflexive (every player may pass), the cops
//! move first, any subset of cops may move in a round, and the cops win by
//! occupying the robber's vertex. Reflexivity is a rule of the engine, not
//! stored data; all graphs here are simple.

pub mod bounds;
pub mod enumerate;
pub mod game;
pub mod geometry;
pub mod graph;
pub mod iso;
pub mod named;
pub mod random;
pub mod strategy;

pub use game::{cop_number, solve, CopConfig, GameState, Side, SolveResult};
pub use graph::{Graph, GraphMetrics};

//! Toolkit for k-vertex-connected orientations of multigraphs.
//!
//! A digraph is *k-connected* when it has more than k vertices and stays
//! strongly connected after deleting any fewer than k vertices. An undirected
//! multigraph is *weakly 2k-connected* when no removal of U vertices and F
//! edges with 2|U| + |F| < 2k disconnects it — the classical necessary
//! condition for having a k-connected orientation. This crate provides:
//!
//! - [`graph`]: multigraphs and multidigraphs with stable edge ids, partial
//!   orientations, Eulerian checks, and a line-based file format;
//! - [`connectivity`]: flow-based k-connectivity and weak 2k-connectivity
//!   with checkable witnesses (separators, mixed cuts, difans);
//! - [`counterexamples`]: generators for weakly 2k-connected graphs without
//!   k-connected orientations, and a verification pipeline;
//! - [`reduction`]: a NAE-3-SAT encoder whose output digraph has a
//!   k-connected consistent reorientation iff the instance is satisfiable;
//! - [`search`]: degree-based forcing plus complete branch-and-bound
//!   orientation search with separator-based refutation.
//!
//! # Example: orienting a triangle
//!
//! ```
//! use orientk::{Multigraph, search, SearchOutcome, connectivity::is_strongly_connected};
//!
//! let mut g = Multigraph::new(["a", "b", "c"]).unwrap();
//! g.add_edge("a", "b").unwrap();
//! g.add_edge("b", "c").unwrap();
//! g.add_edge("c", "a").unwrap();
//! match search(&g, 1, 10_000) {
//!     SearchOutcome::Found(o) => {
//!         let d = g.orient(&o).unwrap();
//!         assert!(is_strongly_connected(&d));
//!     }
//!     other => panic!("triangle must orient: {other:?}"),
//! }
//! ```
//!
//! # Example: a graph that cannot be oriented
//!
//! A single edge is a bridge; no orientation is strongly connected, and the
//! weak 2-connectivity precheck already refutes it.
//!
//! ```
//! use orientk::{Multigraph, search, SearchOutcome};
//!
//! let mut g = Multigraph::new(["a", "b"]).unwrap();
//! g.add_edge("a", "b").unwrap();
//! assert!(matches!(search(&g, 1, 10_000), SearchOutcome::RefutedExhaustive));
//! ```
//!
//! # Example: encoding a NAE-3-SAT instance
//!
//! ```
//! use orientk::reduction::{parse_nae, encode, natural_reorientation, decode};
//!
//! let pi = parse_nae("p nae\nclause x y !z\n").unwrap();
//! let (d, map) = encode(&pi, 3).unwrap();
//! let sigma = [true, false, false];
//! let d2 = natural_reorientation(&d, &map, &sigma).unwrap();
//! assert_eq!(decode(&d, &map, &d2).unwrap(), sigma);
//! ```

pub mod connectivity;
pub mod counterexamples;
pub mod flow;
pub mod graph;
pub mod reduction;
pub mod search;

pub use connectivity::{
    is_k_connected, is_weakly_2k_connected, min_mixed_cut, vertex_conn_pair,
};
pub use counterexamples::{
    build_g3_candidate, build_gk, build_h3_candidate, verify_counterexample, GkParams,
};
pub use graph::{
    parse_graph, EdgeState, GraphError, Multidigraph, Multigraph, ParsedGraph,
    PartialOrientation,
};
pub use reduction::{build_h3_prime, encode, parse_nae, NaeInstance};
pub use search::{
    check_reduction_equivalence, propagate_forcing, refute_with_separator, search,
    SearchOutcome,
};

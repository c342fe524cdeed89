//! Connectivity toolkit for twinless strong connectivity and cut-pair
//! counting.
//!
//! The centerpiece is a pair of linear-time counters on undirected graphs:
//! for a biconnected graph, `vertex_cutpairs` computes for every vertex v
//! the number of edges e such that removing {v, e} disconnects the graph;
//! for a 2-edge-connected graph, `edge_cutpairs` does the same for pairs of
//! edges. Both support constant-amortized-time enumeration queries after the
//! counting pass.
//!
//! On top of those, `twinless` analyses directed graphs: twinless strongly
//! connected components, twinless strong bridges and twinless strong
//! articulation points, together with the number of components each removal
//! would create. `digraph` supplies strongly connected components plus
//! dominator-tree based strong articulation points and strong bridges, and
//! `oracle`/`gen` hold the brute-force references and instance generators
//! the test suites are built on.

pub mod dfs;
pub mod digraph;
pub mod edge_cutpairs;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod twinless;
pub mod undirected;
pub mod vertex_cutpairs;

pub use graph::{Digraph, EdgeId, UnGraph, VertexId};

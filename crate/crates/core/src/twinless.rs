//! Twinless strong connectivity: TSCCs, twinless strong bridges, twinless
//! strong articulation points, and the number of TSCCs left by each removal.
//!
//! A strongly connected digraph is twinless strongly connected exactly when
//! its underlying undirected graph is 2-edge-connected. Everything here
//! rides on that characterization:
//!   * TSCCs = 2-edge-connected components of each SCC's underlying graph;
//!   * a twinless strong bridge is a strong bridge, or an edge without its
//!     twin whose underlying edge lies in an edge-edge cut-pair;
//!   * a twinless strong articulation point is a strong articulation point,
//!     or a non-cut vertex of the underlying graph that lies in a
//!     vertex-edge cut-pair of its biconnected block;
//!   * removing such a twinless-only vertex v leaves count(v) + 1 TSCCs,
//!     and removing a twinless-only edge e leaves count(e) + 1.

use serde::Serialize;
use thiserror::Error;

use crate::digraph;
use crate::edge_cutpairs;
use crate::graph::{Digraph, EdgeId, VertexId};
use crate::undirected;
use crate::vertex_cutpairs;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwinlessError {
    #[error("digraph is not strongly connected: witness vertex {witness}")]
    NotStronglyConnected { witness: VertexId },
    #[error("underlying graph is not 2-edge-connected: bridge ({u}, {v})")]
    UnderlyingNotTwoEdgeConnected { u: VertexId, v: VertexId },
    #[error("vertex {0} is a strong articulation point; the count formula only applies to twinless-only articulation points")]
    IsStrongArticulationPoint(VertexId),
    #[error("edge {0} is a strong bridge; the count formula only applies to twinless-only bridges")]
    IsStrongBridge(EdgeId),
    #[error("edge {0} has its twin present, so its removal leaves the underlying graph unchanged")]
    TwinPresent(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
}

/// Strongly connected and underlying graph 2-edge-connected.
pub fn is_twinless_strongly_connected(g: &Digraph) -> bool {
    digraph::is_strongly_connected(g)
        && undirected::is_two_edge_connected(&g.underlying().graph)
}

/// Twinless strongly connected components: the 2-edge-connected components
/// of each SCC's underlying undirected graph. Classes are sorted by their
/// smallest member, vertices ascending.
pub fn tsccs(g: &Digraph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for scc in digraph::sccs(g) {
        let (sub, map) = g.induced(&scc).expect("SCC vertices are valid");
        let und = sub.underlying().graph;
        for class in undirected::two_edge_connected_components(&und) {
            let mut back: Vec<VertexId> =
                class.into_iter().map(|v| map.vertex_from_sub[v]).collect();
            back.sort_unstable();
            out.push(back);
        }
    }
    out.sort_by_key(|c| c[0]);
    out
}

fn ensure_twinless_sc(g: &Digraph) -> Result<(), TwinlessError> {
    let parts = digraph::sccs(g);
    if parts.len() > 1 {
        let witness = if parts[0].contains(&0) {
            parts[1][0]
        } else {
            parts[0][0]
        };
        return Err(TwinlessError::NotStronglyConnected { witness });
    }
    let und = g.underlying().graph;
    let (bridges, _) = undirected::bridges_and_articulation_points(&und);
    if let Some(&b) = bridges.first() {
        let (u, v) = und.endpoints(b);
        return Err(TwinlessError::UnderlyingNotTwoEdgeConnected { u, v });
    }
    Ok(())
}

/// How a cut item relates to plain strong connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    /// Already a strong articulation point / strong bridge.
    Strong,
    /// Cuts twinless strong connectivity only.
    TwinlessOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinlessVertex {
    pub vertex: VertexId,
    pub kind: CutKind,
    /// TSCC count of the graph without this vertex; reported for
    /// twinless-only articulation points, where it equals count(v) + 1.
    pub tsccs_after_removal: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinlessEdge {
    pub edge: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    pub kind: CutKind,
    /// TSCC count of the graph without this edge; reported for
    /// twinless-only bridges, where it equals count(e) + 1.
    pub tsccs_after_removal: Option<usize>,
}

/// Full analysis of a twinless strongly connected digraph.
#[derive(Debug, Clone, Serialize)]
pub struct TwinlessReport {
    pub tsccs: Vec<Vec<VertexId>>,
    pub articulation_points: Vec<TwinlessVertex>,
    pub bridges: Vec<TwinlessEdge>,
}

/// All twinless strong bridges, flagged. Strong bridges are twinless strong
/// bridges; the twinless-only ones are the unpaired-twin edges whose
/// underlying edge lies in a cut-pair.
pub fn twinless_strong_bridges(g: &Digraph) -> Result<Vec<TwinlessEdge>, TwinlessError> {
    ensure_twinless_sc(g)?;
    let strong: std::collections::HashSet<EdgeId> = digraph::strong_bridges(g)
        .expect("strong connectivity verified")
        .into_iter()
        .collect();
    let und = g.underlying();
    let edge_report =
        edge_cutpairs::count_all_edges(&und.graph).expect("underlying graph verified 2EC");

    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        let (tail, head) = g.endpoints(e);
        if strong.contains(&e) {
            out.push(TwinlessEdge {
                edge: e,
                tail,
                head,
                kind: CutKind::Strong,
                tsccs_after_removal: None,
            });
        } else if !und.has_twin(e) {
            let count = edge_report.count(und.to_undirected[e]);
            if count >= 1 {
                out.push(TwinlessEdge {
                    edge: e,
                    tail,
                    head,
                    kind: CutKind::TwinlessOnly,
                    tsccs_after_removal: Some(count + 1),
                });
            }
        }
    }
    Ok(out)
}

/// All twinless strong articulation points, flagged. Strong articulation
/// points qualify outright; the twinless-only ones are non-cut vertices of
/// the underlying graph whose biconnected block gives them count(v) >= 1.
pub fn twinless_strong_articulation_points(
    g: &Digraph,
) -> Result<Vec<TwinlessVertex>, TwinlessError> {
    ensure_twinless_sc(g)?;
    let strong: std::collections::HashSet<VertexId> = digraph::strong_articulation_points(g)
        .expect("strong connectivity verified")
        .into_iter()
        .collect();
    let counts = block_counts(g)?;

    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        if strong.contains(&v) {
            out.push(TwinlessVertex {
                vertex: v,
                kind: CutKind::Strong,
                tsccs_after_removal: None,
            });
        } else if let Some(c) = counts[v] {
            if c >= 1 {
                out.push(TwinlessVertex {
                    vertex: v,
                    kind: CutKind::TwinlessOnly,
                    tsccs_after_removal: Some(c + 1),
                });
            }
        }
    }
    Ok(out)
}

/// count(v) within each vertex's own biconnected block of the underlying
/// graph, for the vertices that are not articulation points of it.
/// Underlying 2-edge-connectivity makes every block biconnected on >= 3
/// vertices, so the per-block counter applies.
fn block_counts(g: &Digraph) -> Result<Vec<Option<usize>>, TwinlessError> {
    let und = g.underlying().graph;
    let forest = undirected::block_forest(&und);
    let mut counts: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for block in &forest.blocks {
        debug_assert!(block.len() >= 3, "2EC underlying graph has no 2-vertex blocks");
        let (sub, map) = und.induced(block).expect("block vertices are valid");
        let report = vertex_cutpairs::count_all(&sub).expect("blocks are biconnected");
        for &v in block {
            if !forest.is_articulation_point(v) {
                let local = map.vertex_to_sub[v].expect("v is in the block");
                counts[v] = Some(report.count(local));
            }
        }
    }
    Ok(counts)
}

/// Number of TSCCs of g without vertex `v`, for twinless-only articulation
/// point candidates (equals count(v) + 1; strong articulation points are
/// rejected).
pub fn tscc_count_after_vertex(g: &Digraph, v: VertexId) -> Result<usize, TwinlessError> {
    if v >= g.vertex_count() {
        return Err(TwinlessError::UnknownVertex(v));
    }
    ensure_twinless_sc(g)?;
    let strong = digraph::strong_articulation_points(g).expect("verified");
    if strong.contains(&v) {
        return Err(TwinlessError::IsStrongArticulationPoint(v));
    }
    let counts = block_counts(g)?;
    let c = counts[v].expect("non-articulation vertices of the underlying graph get a count");
    Ok(c + 1)
}

/// Number of TSCCs of g without edge `e`, for twinless-only bridge
/// candidates (equals count of the underlying edge + 1; strong bridges and
/// twinned edges are rejected).
pub fn tscc_count_after_edge(g: &Digraph, e: EdgeId) -> Result<usize, TwinlessError> {
    if e >= g.edge_count() {
        return Err(TwinlessError::UnknownEdge(e));
    }
    ensure_twinless_sc(g)?;
    let strong = digraph::strong_bridges(g).expect("verified");
    if strong.contains(&e) {
        return Err(TwinlessError::IsStrongBridge(e));
    }
    let und = g.underlying();
    if und.has_twin(e) {
        return Err(TwinlessError::TwinPresent(e));
    }
    let report = edge_cutpairs::count_all_edges(&und.graph).expect("underlying verified 2EC");
    Ok(report.count(und.to_undirected[e]) + 1)
}

/// Runs the whole pipeline once and collects everything into one report.
pub fn analyze(g: &Digraph) -> Result<TwinlessReport, TwinlessError> {
    Ok(TwinlessReport {
        tsccs: tsccs(g),
        articulation_points: twinless_strong_articulation_points(g)?,
        bridges: twinless_strong_bridges(g)?,
    })
}

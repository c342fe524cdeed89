//! Edge-edge cut-pairs of a 2-edge-connected undirected graph.
//!
//! For every edge e this computes count(e), the number of edges e' such that
//! removing both e and e' disconnects the graph, in linear time, plus the
//! structures needed to enumerate the partners of any edge afterwards.
//!
//! Two back edges never form a cut-pair, so relative to a DFS tree there are
//! exactly two cases:
//!   * back edge + tree edge: the tree edge (u, p(u)) pairs with the unique
//!     back edge leaving T(u), when there is exactly one;
//!   * tree edge + tree edge: (u, p(u)) and (v, p(v)) pair iff one is a
//!     proper ancestor of the other with M(u) = M(v) and high(u) < v, which
//!     groups the tree edges into equivalence classes read off the
//!     decreasing M-preimage lists segment by segment.

use std::collections::HashMap;

use thiserror::Error;

use crate::dfs::{build_inverse_lists, run_dfs, DfsStructure, InverseLists};
use crate::graph::{EdgeId, UnGraph, VertexId};
use crate::undirected;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NotTwoEdgeConnected {
    #[error("graph is disconnected: vertex {unreached} unreachable")]
    Disconnected { unreached: VertexId },
    #[error("graph has a bridge: edge {edge} = ({u}, {v})")]
    Bridge { edge: EdgeId, u: VertexId, v: VertexId },
}

/// Verifies that `g` is connected and bridgeless, naming a witness otherwise.
pub fn ensure_two_edge_connected(g: &UnGraph) -> Result<(), NotTwoEdgeConnected> {
    let comps = undirected::components(g);
    if comps.len() > 1 {
        return Err(NotTwoEdgeConnected::Disconnected {
            unreached: comps[1][0],
        });
    }
    let (bridges, _) = undirected::bridges_and_articulation_points(g);
    if let Some(&e) = bridges.first() {
        let (u, v) = g.endpoints(e);
        return Err(NotTwoEdgeConnected::Bridge { edge: e, u, v });
    }
    Ok(())
}

struct BackTreeCase {
    /// Contributions per input edge id.
    per_edge: Vec<usize>,
    /// b_cut[x]: vertices u with a unique escaping back edge whose source is
    /// x = M(u), increasing.
    b_cut: Vec<Vec<usize>>,
}

/// Back-edge/tree-edge pairs: every u != root whose subtree sends exactly
/// one back edge above u pairs (u, p(u)) with that back edge, which is
/// necessarily (M(u), low(u)).
pub fn count_backedge_tree_pairs(d: &DfsStructure) -> Vec<usize> {
    back_tree_case(d, &back_edge_index(d), d.tree_edge.len()).per_edge
}

fn back_tree_case(
    d: &DfsStructure,
    edge_of: &HashMap<(usize, usize), EdgeId>,
    m_edges: usize,
) -> BackTreeCase {
    let n = d.n;
    let mut per_edge = vec![0usize; m_edges];
    let mut b_cut = vec![Vec::new(); n];
    for u in 1..n {
        if d.b_count_above[u] == 1 {
            per_edge[d.tree_edge[u].expect("u != root")] += 1;
            let src = d.m[u].expect("unique escaping back edge implies M");
            let tgt = d.low[u].expect("subtree escapes");
            per_edge[edge_of[&(src, tgt)]] += 1;
            b_cut[src].push(u);
        }
    }
    BackTreeCase { per_edge, b_cut }
}

struct TreeTreeCase {
    per_edge: Vec<usize>,
    /// Max[u]: the greatest member of u's cut-pair class, for every u != r.
    max_anchor: Vec<usize>,
}

/// Tree-edge/tree-edge pairs, counted per equivalence class: each maximal
/// run of M-preimages of a common vertex that stays above the run head's
/// high point forms one class, and every member's tree edge gains
/// class size - 1.
pub fn count_tree_tree_pairs(d: &DfsStructure, inv: &InverseLists) -> Vec<usize> {
    tree_tree_case(d, inv, d.tree_edge.len()).per_edge
}

fn tree_tree_case(d: &DfsStructure, inv: &InverseLists, m_edges: usize) -> TreeTreeCase {
    let mut per_edge = vec![0usize; m_edges];
    let mut max_anchor = vec![0usize; d.n];
    for m in 0..d.n {
        let list = &inv.m_inv[m];
        let mut i = 0;
        while i < list.len() {
            let u = list[i];
            let hu = d.high[u].expect("M-preimages have high");
            let mut j = i + 1;
            let mut n_edges = 0usize;
            while j < list.len() && hu < list[j] {
                n_edges += 1;
                j += 1;
            }
            for &v in &list[i..j] {
                max_anchor[v] = u;
                per_edge[d.tree_edge[v].expect("not root")] += n_edges;
            }
            i = j;
        }
    }
    TreeTreeCase {
        per_edge,
        max_anchor,
    }
}

fn back_edge_index(d: &DfsStructure) -> HashMap<(usize, usize), EdgeId> {
    d.back_edges
        .iter()
        .map(|be| ((be.source, be.target), be.edge))
        .collect()
}

#[derive(Debug, Clone, Copy)]
enum EdgeKind {
    /// Tree edge, identified by its deeper endpoint (preorder).
    Tree(usize),
    /// Back edge (source, target) in preorder space.
    Back(usize, usize),
}

/// count(e) for every edge of a 2-edge-connected graph, plus enumeration
/// state.
#[derive(Debug)]
pub struct EdgeCutPairReport {
    dfs: DfsStructure,
    inv: InverseLists,
    counts: Vec<usize>,
    kind: Vec<EdgeKind>,
    b_cut: Vec<Vec<usize>>,
    max_anchor: Vec<usize>,
    edge_of: HashMap<(usize, usize), EdgeId>,
    edges: Vec<(VertexId, VertexId)>,
}

pub fn count_all_edges(g: &UnGraph) -> Result<EdgeCutPairReport, NotTwoEdgeConnected> {
    ensure_two_edge_connected(g)?;
    let mut d = run_dfs(g, 0).expect("connectivity was just verified");
    d.compute_b_counts();
    d.compute_high();
    d.compute_m();
    let inv = build_inverse_lists(&d);
    let edge_of = back_edge_index(&d);

    let m_edges = g.edge_count();
    let back = back_tree_case(&d, &edge_of, m_edges);
    let tree = tree_tree_case(&d, &inv, m_edges);

    let counts: Vec<usize> = (0..m_edges)
        .map(|e| back.per_edge[e] + tree.per_edge[e])
        .collect();

    let mut kind = vec![EdgeKind::Tree(0); m_edges];
    for v in 1..d.n {
        kind[d.tree_edge[v].expect("not root")] = EdgeKind::Tree(v);
    }
    for be in &d.back_edges {
        kind[be.edge] = EdgeKind::Back(be.source, be.target);
    }

    Ok(EdgeCutPairReport {
        dfs: d,
        inv,
        counts,
        kind,
        b_cut: back.b_cut,
        max_anchor: tree.max_anchor,
        edge_of,
        edges: g.edges().to_vec(),
    })
}

impl EdgeCutPairReport {
    pub fn edge_count(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, e: EdgeId) -> usize {
        self.counts[e]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// All edges forming a cut-pair with `e`, in time proportional to the
    /// answer size.
    pub fn query_cut_edges_for_edge(&self, e: EdgeId) -> Result<Vec<EdgeId>, UnknownEdge> {
        if e >= self.counts.len() {
            return Err(UnknownEdge(e));
        }
        let d = &self.dfs;
        let mut out = Vec::with_capacity(self.counts[e]);
        match self.kind[e] {
            EdgeKind::Back(x, y) => {
                if d.low[x] == Some(y) {
                    for &u in &self.b_cut[x] {
                        out.push(d.tree_edge[u].expect("not root"));
                    }
                }
            }
            EdgeKind::Tree(u) => {
                if d.b_count_above[u] == 1 {
                    let src = d.m[u].expect("M defined");
                    let tgt = d.low[u].expect("low defined");
                    out.push(self.edge_of[&(src, tgt)]);
                }
                let mx = self.max_anchor[u];
                let hmx = d.high[mx].expect("high defined");
                let list = &self.inv.m_inv[d.m[u].expect("M defined")];
                let mut i = self.inv.pos_in_m_inv[mx];
                // the class is the run from its greatest member down to the
                // first list entry at or below that member's high point
                while i < list.len() && list[i] > hmx {
                    if list[i] != u {
                        out.push(d.tree_edge[list[i]].expect("not root"));
                    }
                    i += 1;
                }
            }
        }
        debug_assert_eq!(out.len(), self.counts[e]);
        Ok(out)
    }

    /// Lines `u<TAB>v<TAB>count` in input edge order.
    pub fn to_tsv(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(s, "{}\t{}\t{}", u, v, self.counts[e]);
        }
        s
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown edge id {0}")]
pub struct UnknownEdge(pub EdgeId);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn cycle_edge_counts_are_n_minus_1() {
        for n in 3..=12 {
            let rep = count_all_edges(&gen::gen_cycle(n)).unwrap();
            for e in 0..n {
                assert_eq!(rep.count(e), n - 1, "C_{} edge {}", n, e);
            }
        }
    }

    #[test]
    fn cycle_case_breakdown() {
        let g = gen::gen_cycle(5);
        let mut d = run_dfs(&g, 0).unwrap();
        d.compute_b_counts();
        d.compute_high();
        d.compute_m();
        let inv = build_inverse_lists(&d);

        let back = count_backedge_tree_pairs(&d);
        // each tree edge gains one pairing with the lone back edge, which
        // accumulates one per tree edge
        assert_eq!(back, vec![1, 1, 1, 1, 4]);

        let tree = count_tree_tree_pairs(&d, &inv);
        assert_eq!(tree, vec![3, 3, 3, 3, 0]);
    }

    #[test]
    fn clique_has_no_cut_pairs() {
        let rep = count_all_edges(&gen::gen_clique(4)).unwrap();
        assert!(rep.counts().iter().all(|&c| c == 0));
        for e in 0..6 {
            assert!(rep.query_cut_edges_for_edge(e).unwrap().is_empty());
        }
    }

    #[test]
    fn barbell_is_rejected() {
        let g = crate::graph::UnGraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        assert_eq!(
            count_all_edges(&g).unwrap_err(),
            NotTwoEdgeConnected::Bridge { edge: 3, u: 2, v: 3 }
        );
    }

    #[test]
    fn cycle_queries_return_all_other_edges() {
        let rep = count_all_edges(&gen::gen_cycle(5)).unwrap();
        for e in 0..5 {
            let mut got = rep.query_cut_edges_for_edge(e).unwrap();
            got.sort_unstable();
            let expect: Vec<usize> = (0..5).filter(|&x| x != e).collect();
            assert_eq!(got, expect);
        }
        assert_eq!(rep.query_cut_edges_for_edge(99).unwrap_err(), UnknownEdge(99));
    }

    #[test]
    fn query_symmetry_on_a_mixed_instance() {
        // two nested cycles sharing a path
        let g = crate::graph::UnGraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)],
        )
        .unwrap();
        let rep = count_all_edges(&g).unwrap();
        let m = g.edge_count();
        let answers: Vec<Vec<usize>> = (0..m)
            .map(|e| {
                let mut a = rep.query_cut_edges_for_edge(e).unwrap();
                a.sort_unstable();
                a
            })
            .collect();
        for e in 0..m {
            assert_eq!(answers[e].len(), rep.count(e));
            for &f in &answers[e] {
                assert!(answers[f].contains(&e), "asymmetry between {} and {}", e, f);
            }
        }
        let total: usize = rep.counts().iter().sum();
        assert_eq!(total % 2, 0);
    }
}

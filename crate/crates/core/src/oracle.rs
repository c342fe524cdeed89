//! Brute-force reference implementations. Everything here goes back to the
//! definitions: connectivity by breadth-first reachability, cut sets by
//! deleting items and re-testing, labels by walking tree paths. Nothing is
//! shared with the fast paths beyond the graph types, so these serve as
//! independent oracles for every property suite.

use std::collections::VecDeque;

use crate::dfs::DfsStructure;
use crate::graph::{Digraph, EdgeId, UnGraph, VertexId};

/// Connectivity of `g` with a vertex and/or an edge ignored, by BFS.
fn connected_without(g: &UnGraph, skip_vertex: Option<VertexId>, skip_edge: Option<EdgeId>) -> bool {
    let n = g.vertex_count();
    let mut alive = (0..n).filter(|&v| Some(v) != skip_vertex);
    let start = match alive.next() {
        Some(s) => s,
        None => return true,
    };
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    let mut reached = 1usize;
    while let Some(v) = queue.pop_front() {
        for &e in g.incident_edges(v) {
            if Some(e) == skip_edge {
                continue;
            }
            let w = g.other_endpoint(e, v);
            if Some(w) == skip_vertex || seen[w] {
                continue;
            }
            seen[w] = true;
            reached += 1;
            queue.push_back(w);
        }
    }
    let total = n - usize::from(skip_vertex.is_some());
    reached == total
}

/// Number of edges e (not incident to v) with {v, e} a cut-pair.
pub fn oracle_count_v(g: &UnGraph, v: VertexId) -> usize {
    oracle_cut_edges_v(g, v).len()
}

/// The set C(v) itself, by exhaustive deletion.
pub fn oracle_cut_edges_v(g: &UnGraph, v: VertexId) -> Vec<EdgeId> {
    (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            a != v && b != v && !connected_without(g, Some(v), Some(e))
        })
        .collect()
}

/// Number of edges e' != e with {e, e'} a cut-pair.
pub fn oracle_count_e(g: &UnGraph, e: EdgeId) -> usize {
    oracle_cut_edges_e(g, e).len()
}

pub fn oracle_cut_edges_e(g: &UnGraph, e: EdgeId) -> Vec<EdgeId> {
    (0..g.edge_count())
        .filter(|&f| f != e && !connected_with_two_edges_removed(g, e, f))
        .collect()
}

fn connected_with_two_edges_removed(g: &UnGraph, e: EdgeId, f: EdgeId) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut reached = 1usize;
    while let Some(v) = queue.pop_front() {
        for &x in g.incident_edges(v) {
            if x == e || x == f {
                continue;
            }
            let w = g.other_endpoint(x, v);
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == n
}

/// Which of the five counting cases a cut-pair {v, partner} falls into,
/// relative to a labelled DFS structure. Arguments are preorder ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairCase {
    BackEdge,
    MEqV,
    MDesc,
    HighEqV,
    HighLtV,
}

/// Classifies an oracle-found pair by the DFS labels; used to check that the
/// per-case subtotals of the fast path partition the oracle's pairs.
pub fn classify_pair(d: &DfsStructure, v_pre: usize, partner: EdgeId) -> PairCase {
    if d.back_edges.iter().any(|be| be.edge == partner) {
        return PairCase::BackEdge;
    }
    let u = (1..d.n)
        .find(|&u| d.tree_edge[u] == Some(partner))
        .expect("partner is a tree edge");
    if u < v_pre {
        // on the root path
        if d.m[u] == Some(v_pre) {
            PairCase::MEqV
        } else {
            PairCase::MDesc
        }
    } else if d.high[u] == Some(v_pre) {
        PairCase::HighEqV
    } else {
        PairCase::HighLtV
    }
}

/// Definitional high labels: ascend the tree path of every back edge in
/// decreasing target order and stamp unlabelled vertices.
pub fn naive_high(d: &DfsStructure) -> Vec<Option<usize>> {
    let mut order: Vec<(usize, usize)> = d
        .back_edges
        .iter()
        .map(|be| (be.source, be.target))
        .collect();
    order.sort_by(|a, b| b.1.cmp(&a.1));
    let mut high = vec![None; d.n];
    for (u0, v) in order {
        let mut u = u0;
        while u > v {
            if high[u].is_none() {
                high[u] = Some(v);
            }
            u = d.parent[u];
        }
    }
    high
}

/// Definitional high_p labels (the parent must stay above the target).
pub fn naive_high_p(d: &DfsStructure) -> Vec<Option<usize>> {
    let mut order: Vec<(usize, usize)> = d
        .back_edges
        .iter()
        .map(|be| (be.source, be.target))
        .collect();
    order.sort_by(|a, b| b.1.cmp(&a.1));
    let mut high_p = vec![None; d.n];
    for (u0, v) in order {
        let mut u = u0;
        while u != 0 && d.parent[u] > v {
            if high_p[u].is_none() {
                high_p[u] = Some(v);
            }
            u = d.parent[u];
        }
    }
    high_p
}

fn naive_nca(d: &DfsStructure, mut a: usize, mut b: usize) -> usize {
    while a != b {
        if d.depth[a] >= d.depth[b] {
            a = d.parent[a];
        } else {
            b = d.parent[b];
        }
    }
    a
}

/// Definitional M labels: the nearest common ancestor of every back-edge
/// source in T(v) whose target lies below v.
pub fn naive_m(d: &DfsStructure) -> Vec<Option<usize>> {
    naive_m_with_threshold(d, |v| v)
}

/// Definitional M_p labels (targets below the parent of v).
pub fn naive_m_p(d: &DfsStructure) -> Vec<Option<usize>> {
    naive_m_with_threshold(d, |v| d.parent[v])
}

fn naive_m_with_threshold(d: &DfsStructure, threshold: impl Fn(usize) -> usize) -> Vec<Option<usize>> {
    let mut out = vec![None; d.n];
    for v in 1..d.n {
        let t = threshold(v);
        let mut nca: Option<usize> = None;
        for be in &d.back_edges {
            if d.is_ancestor(v, be.source) && be.target < t {
                nca = Some(match nca {
                    None => be.source,
                    Some(x) => naive_nca(d, x, be.source),
                });
            }
        }
        out[v] = nca;
    }
    out
}

// ---- directed oracles ----

fn reachable_from(g: &Digraph, start: VertexId, dead: &[bool]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if dead[start] {
        return seen;
    }
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for w in g.out_neighbors(v) {
            if !dead[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn reaching_to(g: &Digraph, target: VertexId, dead: &[bool]) -> Vec<bool> {
    reachable_from(&g.reversed(), target, dead)
}

/// SCC partition by repeated forward/backward reachability, skipping dead
/// vertices. Quadratic, definitional.
fn scc_partition_reach(g: &Digraph, dead: &[bool]) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut assigned = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if dead[s] || assigned[s] {
            continue;
        }
        let fwd = reachable_from(g, s, dead);
        let bwd = reaching_to(g, s, dead);
        let mut part = Vec::new();
        for v in 0..n {
            if fwd[v] && bwd[v] && !assigned[v] {
                assigned[v] = true;
                part.push(v);
            }
        }
        parts.push(part);
    }
    parts
}

fn is_strongly_connected_reach(g: &Digraph, dead: &[bool]) -> bool {
    scc_partition_reach(g, dead).len() <= 1
}

/// Strong articulation points by deletion and SCC recount.
pub fn oracle_strong_articulation_points(g: &Digraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut dead = vec![false; n];
    (0..n)
        .filter(|&v| {
            dead[v] = true;
            let split = scc_partition_reach(g, &dead).len() > 1;
            dead[v] = false;
            split
        })
        .collect()
}

/// Strong bridges by deletion and SCC recount.
pub fn oracle_strong_bridges(g: &Digraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let dead = vec![false; n];
    (0..g.edge_count())
        .filter(|&e| {
            let edges: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != e)
                .map(|(_, &p)| p)
                .collect();
            let h = Digraph::new(n, edges).expect("subgraph of a valid graph");
            !is_strongly_connected_reach(&h, &dead)
        })
        .collect()
}

/// TSCC partition by the definitions: SCCs by reachability, then bridgeless
/// components of each SCC's underlying graph, found by per-edge removal.
pub fn oracle_tsccs(g: &Digraph) -> Vec<Vec<VertexId>> {
    oracle_tsccs_without(g, None, None)
}

fn oracle_tsccs_without(
    g: &Digraph,
    skip_vertex: Option<VertexId>,
    skip_edge: Option<EdgeId>,
) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut dead = vec![false; n];
    if let Some(v) = skip_vertex {
        dead[v] = true;
    }
    let work = match skip_edge {
        None => g.clone(),
        Some(e) => {
            let edges: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != e)
                .map(|(_, &p)| p)
                .collect();
            Digraph::new(n, edges).expect("subgraph of a valid graph")
        }
    };
    let mut out = Vec::new();
    for scc in scc_partition_reach(&work, &dead) {
        let (sub, map) = work.induced(&scc).expect("valid subset");
        let und = sub.underlying().graph;
        for class in bridgeless_components(&und) {
            let mut back: Vec<_> = class.into_iter().map(|v| map.vertex_from_sub[v]).collect();
            back.sort_unstable();
            out.push(back);
        }
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// Components after removing every single-edge cut, found by removal tests.
fn bridgeless_components(g: &UnGraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let bridges: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| !connected_within_component(g, e))
        .collect();
    let mut class = vec![usize::MAX; n];
    let mut next = 0usize;
    for s in 0..n {
        if class[s] != usize::MAX {
            continue;
        }
        class[s] = next;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident_edges(v) {
                if bridges.contains(&e) {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if class[w] == usize::MAX {
                    class[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    let mut groups = vec![Vec::new(); next];
    for (v, &c) in class.iter().enumerate() {
        groups[c].push(v);
    }
    groups
}

// an edge is a bridge iff its endpoints fall apart without it
fn connected_within_component(g: &UnGraph, e: EdgeId) -> bool {
    let (a, b) = g.endpoints(e);
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[a] = true;
    queue.push_back(a);
    while let Some(v) = queue.pop_front() {
        for &x in g.incident_edges(v) {
            if x == e {
                continue;
            }
            let w = g.other_endpoint(x, v);
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen[b]
}

/// Twinless strong articulation points by deletion: v qualifies when some
/// TSCC of g splits among the surviving vertices.
pub fn oracle_tsap(g: &Digraph) -> Vec<VertexId> {
    let before = oracle_tsccs(g);
    (0..g.vertex_count())
        .filter(|&v| {
            let after = oracle_tsccs_without(g, Some(v), None);
            tscc_partition_splits(&before, &after, Some(v))
        })
        .collect()
}

/// Twinless strong bridges by deletion and TSCC recount.
pub fn oracle_tsb(g: &Digraph) -> Vec<EdgeId> {
    let before = oracle_tsccs(g);
    (0..g.edge_count())
        .filter(|&e| {
            let after = oracle_tsccs_without(g, None, Some(e));
            tscc_partition_splits(&before, &after, None)
        })
        .collect()
}

/// Number of TSCCs after deleting vertex `v` (survivors only).
pub fn oracle_tscc_count_after_vertex(g: &Digraph, v: VertexId) -> usize {
    oracle_tsccs_without(g, Some(v), None).len()
}

/// Number of TSCCs after deleting edge `e`.
pub fn oracle_tscc_count_after_edge(g: &Digraph, e: EdgeId) -> usize {
    oracle_tsccs_without(g, None, Some(e)).len()
}

/// True if some class of `before`, restricted to survivors, meets two or
/// more classes of `after`.
fn tscc_partition_splits(
    before: &[Vec<VertexId>],
    after: &[Vec<VertexId>],
    removed: Option<VertexId>,
) -> bool {
    let size = before.iter().flatten().count();
    let mut class_after = vec![usize::MAX; size + 1];
    for (i, c) in after.iter().enumerate() {
        for &v in c {
            class_after[v] = i;
        }
    }
    for c in before {
        let mut found: Option<usize> = None;
        for &v in c {
            if Some(v) == removed {
                continue;
            }
            match found {
                None => found = Some(class_after[v]),
                Some(f) => {
                    if class_after[v] != f {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfs::run_dfs;
    use crate::gen;

    #[test]
    fn cycle_oracle_counts() {
        let c5 = gen::gen_cycle(5);
        for v in 0..5 {
            assert_eq!(oracle_count_v(&c5, v), 3);
        }
        for e in 0..5 {
            assert_eq!(oracle_count_e(&c5, e), 4);
        }
    }

    #[test]
    fn clique_oracle_counts() {
        let k4 = gen::gen_clique(4);
        for v in 0..4 {
            assert_eq!(oracle_count_v(&k4, v), 0);
        }
        for e in 0..6 {
            assert_eq!(oracle_count_e(&k4, e), 0);
        }
    }

    #[test]
    fn theta_oracle_counts() {
        let g = gen::gen_theta(3, &[2, 2, 2]).unwrap();
        assert_eq!(oracle_count_v(&g, 0), 3);
        assert_eq!(oracle_count_v(&g, 1), 3);
        for mid in 2..5 {
            assert_eq!(oracle_count_v(&g, mid), 0);
        }
    }

    #[test]
    fn naive_high_on_small_graphs() {
        let d = run_dfs(&gen::gen_cycle(5), 0).unwrap();
        assert_eq!(naive_high(&d)[1..], [Some(0); 4]);
        // K4 DFS path 0-1-2-3 with back edges (2,0), (3,0), (3,1): the
        // deepest vertex tops out at target 1, the others at their parent
        let d = run_dfs(&gen::gen_clique(4), 0).unwrap();
        assert_eq!(naive_high(&d), vec![None, Some(0), Some(1), Some(1)]);
    }

    #[test]
    fn tscc_oracles_on_fixed_digraphs() {
        // twin pair: two singleton TSCCs
        let twins = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(oracle_tsccs(&twins), vec![vec![0], vec![1]]);

        let tri = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(oracle_tsccs(&tri), vec![vec![0, 1, 2]]);
        assert_eq!(oracle_tsap(&tri), vec![0, 1, 2]);
        assert_eq!(oracle_tsb(&tri), vec![0, 1, 2]);

        let bc4 = gen::bidirect(&gen::gen_cycle(4));
        assert_eq!(oracle_tsccs(&bc4).len(), 1);
        assert_eq!(oracle_tsap(&bc4), vec![0, 1, 2, 3]);
        assert!(oracle_tsb(&bc4).is_empty());
        for v in 0..4 {
            assert_eq!(oracle_tscc_count_after_vertex(&bc4, v), 3);
        }

        let bk4 = gen::bidirect(&gen::gen_clique(4));
        assert!(oracle_tsap(&bk4).is_empty());
        assert!(oracle_tsb(&bk4).is_empty());
    }
}

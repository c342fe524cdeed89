//! Vertex-edge cut-pairs of a biconnected undirected graph.
//!
//! For every vertex v this computes count(v), the number of edges e such
//! that removing both v and e disconnects the graph, in linear time. An edge
//! incident to v never forms a pair with v (deleting v already deletes it).
//!
//! Relative to a DFS tree the partner edge e falls into exactly one of five
//! cases, counted by one pass each:
//!   * e is a back edge leaving the subtree of a child of v,
//!   * e = (u, p(u)) lies on the root path with M(u) = v,
//!   * e lies on the root path with M(u) a proper descendant of v,
//!   * e = (u, p(u)) lies inside T(v) with high(u) = v,
//!   * e lies inside T(v) with high(u) < v.
//! The first, second and fourth cases are enumerated explicitly (their total
//! size is at most n); the other two store one anchor vertex per child from
//! which queries re-walk the inverse M lists.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::dfs::{build_inverse_lists, run_dfs, DfsStructure, InverseLists};
use crate::graph::{EdgeId, UnGraph, VertexId};
use crate::undirected;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NotBiconnected {
    #[error("graph has {0} vertices; at least 3 are required")]
    TooSmall(usize),
    #[error("graph is disconnected: vertex {unreached} unreachable")]
    Disconnected { unreached: VertexId },
    #[error("graph has an articulation point: vertex {0}")]
    ArticulationPoint(VertexId),
}

/// Verifies that `g` is 2-vertex-connected, naming a witness otherwise.
pub fn ensure_biconnected(g: &UnGraph) -> Result<(), NotBiconnected> {
    if g.vertex_count() < 3 {
        return Err(NotBiconnected::TooSmall(g.vertex_count()));
    }
    let comps = undirected::components(g);
    if comps.len() > 1 {
        return Err(NotBiconnected::Disconnected {
            unreached: comps[1][0],
        });
    }
    let (_, aps) = undirected::bridges_and_articulation_points(g);
    if let Some(&v) = aps.first() {
        return Err(NotBiconnected::ArticulationPoint(v));
    }
    Ok(())
}

/// Per-vertex breakdown of count(v) over the five cases.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CaseSubtotals {
    pub back_edge: usize,
    pub m_eq_v: usize,
    pub m_desc: usize,
    pub high_eq_v: usize,
    pub high_lt_v: usize,
}

impl CaseSubtotals {
    pub fn total(&self) -> usize {
        self.back_edge + self.m_eq_v + self.m_desc + self.high_eq_v + self.high_lt_v
    }
}

struct BackEdgeCase {
    subtotal: Vec<usize>,
    /// Partner back-edge ids, recorded per vertex.
    partners: Vec<Vec<EdgeId>>,
}

struct MEqCase {
    subtotal: Vec<usize>,
    /// Partner vertices u (tree edge (u, p(u))), recorded per vertex.
    partners: Vec<Vec<usize>>,
}

struct MDescCase {
    subtotal: Vec<usize>,
    /// Per child c: the lowest ancestor u for which {p(c), (u, p(u))} is a
    /// pair of this type.
    last_anchor: Vec<Option<usize>>,
}

struct HighEqCase {
    subtotal: Vec<usize>,
    partners: Vec<Vec<usize>>,
}

struct HighLtCase {
    subtotal: Vec<usize>,
    /// Per child c: the greatest proper descendant u of c for which
    /// {p(c), (u, p(u))} is a pair of this type.
    max_anchor: Vec<Option<usize>>,
}

/// Case 1: the partner edge is a back edge. For each child c of v whose
/// subtree sends exactly one back edge above v, that back edge is the
/// partner.
pub fn count_backedge_pairs(d: &DfsStructure) -> Vec<usize> {
    backedge_case(d, &back_edge_index(d)).subtotal
}

fn backedge_case(d: &DfsStructure, edge_of: &HashMap<(usize, usize), EdgeId>) -> BackEdgeCase {
    let n = d.n;
    let mut subtotal = vec![0usize; n];
    let mut partners = vec![Vec::new(); n];
    for c in 1..n {
        if d.b_count_above_parent[c] == 1 {
            let v = d.parent[c];
            subtotal[v] += 1;
            let src = d.m_p[c].expect("one escaping back edge implies M_p is defined");
            let tgt = d.low[c].expect("subtree escapes, so low is defined");
            let id = edge_of[&(src, tgt)];
            partners[v].push(id);
        }
    }
    BackEdgeCase { subtotal, partners }
}

/// Case 2: partner (u, p(u)) on the root path with M(u) = v. A proper
/// ancestor u of v with M(u) = v qualifies unless it falls in a window
/// T[high_p(c), low(c)) of some child c of v; the windows are merged by
/// scanning the children in decreasing high_p order.
pub fn count_m_eq_v(d: &DfsStructure, inv: &InverseLists) -> Vec<usize> {
    m_eq_case(d, inv).subtotal
}

fn m_eq_case(d: &DfsStructure, inv: &InverseLists) -> MEqCase {
    let n = d.n;
    let mut subtotal = vec![0usize; n];
    let mut partners = vec![Vec::new(); n];
    for v in 0..n {
        let list = &inv.m_inv[v];
        if list.is_empty() {
            continue;
        }
        debug_assert_eq!(list[0], v, "the first element of an M-inverse list is its key");
        let kids = &inv.children_by_high_p_desc[v];
        debug_assert!(v == 0 || kids.len() == d.children[v].len());
        let mut ui = 1;
        let mut ci = 0;
        let mut min = v;
        while ui < list.len() && ci < kids.len() {
            min = d.high_p[kids[ci]].expect("scanned children have high_p");
            while ui < list.len() && list[ui] > min {
                subtotal[v] += 1;
                partners[v].push(list[ui]);
                ui += 1;
            }
            min = d.low[kids[ci]].expect("children of a biconnected DFS have low");
            ci += 1;
            while ci < kids.len() && d.high_p[kids[ci]].expect("high_p") >= min {
                let lo = d.low[kids[ci]].expect("low");
                if lo < min {
                    min = lo;
                }
                ci += 1;
            }
            while ui < list.len() && list[ui] > min {
                ui += 1;
            }
        }
        while ui < list.len() {
            if list[ui] <= min {
                subtotal[v] += 1;
                partners[v].push(list[ui]);
            }
            ui += 1;
        }
    }
    MEqCase { subtotal, partners }
}

/// Case 3: partner (u, p(u)) on the root path with M(u) a proper descendant
/// of v, i.e. M(u) = M_p(c) for the child c of v that holds it. Counted by
/// merging the decreasing lists of M and M_p preimages of each vertex.
pub fn count_m_desc(d: &DfsStructure, inv: &InverseLists) -> Vec<usize> {
    m_desc_case(d, inv).subtotal
}

fn m_desc_case(d: &DfsStructure, inv: &InverseLists) -> MDescCase {
    let n = d.n;
    let mut subtotal = vec![0usize; n];
    let mut last_anchor = vec![None; n];
    for m in 0..n {
        let ulist = &inv.m_inv[m];
        let clist = &inv.m_p_inv[m];
        let mut ui = 0;
        let mut ci = 0;
        while ci < clist.len() && ui < ulist.len() {
            let c = clist[ci];
            while ui < ulist.len() && ulist[ui] >= d.parent[c] {
                ui += 1;
            }
            if ui == ulist.len() {
                break;
            }
            let hp = d.high_p[c].expect("M_p defined implies high_p defined");
            if hp < ulist[ui] {
                let mut n_edges = 0usize;
                let mut first = ui;
                while ui < ulist.len() && hp < ulist[ui] {
                    n_edges += 1;
                    ui += 1;
                }
                let last = ulist[ui - 1];
                subtotal[d.parent[c]] += n_edges;
                last_anchor[c] = Some(last);
                ci += 1;
                while ci < clist.len() && d.parent[clist[ci]] > last {
                    let c2 = clist[ci];
                    while first < ulist.len() && ulist[first] >= d.parent[c2] {
                        n_edges -= 1;
                        first += 1;
                    }
                    subtotal[d.parent[c2]] += n_edges;
                    last_anchor[c2] = Some(last);
                    ci += 1;
                }
            } else {
                ci += 1;
            }
        }
    }
    MDescCase {
        subtotal,
        last_anchor,
    }
}

/// Case 4: partner (u, p(u)) inside T(v) with high(u) = v. The partner
/// qualifies iff low(u) = v, or u is at most M_p(c) for the child c of v
/// above u; u = c itself never qualifies (the edge would be incident to v).
pub fn count_high_eq_v(d: &DfsStructure, inv: &InverseLists) -> Vec<usize> {
    high_eq_case(d, inv).subtotal
}

fn high_eq_case(d: &DfsStructure, inv: &InverseLists) -> HighEqCase {
    let n = d.n;
    let mut subtotal = vec![0usize; n];
    let mut partners = vec![Vec::new(); n];
    for v in 0..n {
        let ulist = &inv.high_inv[v];
        if ulist.is_empty() {
            continue;
        }
        let kids = &d.children[v];
        let mut ci = 0;
        for &u in ulist {
            while !d.is_ancestor(kids[ci], u) {
                ci += 1;
            }
            let c = kids[ci];
            if u == c {
                continue;
            }
            let ok = d.low[u] == Some(v) || d.m_p[c].is_some_and(|mp| u <= mp);
            if ok {
                subtotal[v] += 1;
                partners[v].push(u);
            }
        }
    }
    HighEqCase { subtotal, partners }
}

/// Case 5: partner (u, p(u)) inside T(v) with high(u) < v; then
/// M(u) = M_p(c). Counted with a sliding window over the two decreasing
/// preimage lists, with the window head reused across consecutive children.
pub fn count_high_lt_v(d: &DfsStructure, inv: &InverseLists) -> Vec<usize> {
    high_lt_case(d, inv).subtotal
}

fn high_lt_case(d: &DfsStructure, inv: &InverseLists) -> HighLtCase {
    let n = d.n;
    let mut subtotal = vec![0usize; n];
    let mut max_anchor = vec![None; n];
    for m in 0..n {
        let ulist = &inv.m_inv[m];
        let clist = &inv.m_p_inv[m];
        let mut ui = 0;
        let mut ci = 0;
        while ui < ulist.len() && ci < clist.len() {
            let u = ulist[ui];
            while ci < clist.len() && clist[ci] >= u {
                ci += 1;
            }
            if ci == clist.len() {
                break;
            }
            let h = d.high[u].expect("vertices in M-inverse lists have high");
            if h < d.parent[clist[ci]] {
                let temp = u;
                let mut n_edges = 0usize;
                while ci < clist.len() && h < d.parent[clist[ci]] {
                    let c2 = clist[ci];
                    max_anchor[c2] = Some(temp);
                    while ui < ulist.len() && c2 < ulist[ui] {
                        n_edges += 1;
                        ui += 1;
                    }
                    subtotal[d.parent[c2]] += n_edges;
                    ci += 1;
                }
            } else {
                ui += 1;
            }
        }
    }
    HighLtCase {
        subtotal,
        max_anchor,
    }
}

fn back_edge_index(d: &DfsStructure) -> HashMap<(usize, usize), EdgeId> {
    d.back_edges
        .iter()
        .map(|be| ((be.source, be.target), be.edge))
        .collect()
}

/// count(v) for every vertex of a biconnected graph, with per-case
/// subtotals and the anchors needed to enumerate C(v) afterwards.
#[derive(Debug)]
pub struct VertexCutPairReport {
    dfs: DfsStructure,
    inv: InverseLists,
    /// Indexed by input vertex id.
    counts: Vec<usize>,
    subtotals: Vec<CaseSubtotals>,
    backedge_partners: Vec<Vec<EdgeId>>,
    m_eq_partners: Vec<Vec<usize>>,
    high_eq_partners: Vec<Vec<usize>>,
    last_anchor: Vec<Option<usize>>,
    max_anchor: Vec<Option<usize>>,
}

/// Runs the whole pipeline: biconnectivity check, DFS, label passes, and the
/// five counting passes.
pub fn count_all(g: &UnGraph) -> Result<VertexCutPairReport, NotBiconnected> {
    ensure_biconnected(g)?;
    let mut d = run_dfs(g, 0).expect("connectivity was just verified");
    d.compute_b_counts();
    d.compute_high();
    d.compute_high_p();
    d.compute_m();
    d.compute_m_p();
    let inv = build_inverse_lists(&d);

    let edge_of = back_edge_index(&d);
    let back = backedge_case(&d, &edge_of);
    let m_eq = m_eq_case(&d, &inv);
    let m_desc = m_desc_case(&d, &inv);
    let high_eq = high_eq_case(&d, &inv);
    let high_lt = high_lt_case(&d, &inv);

    let n = d.n;
    let mut counts = vec![0usize; n];
    let mut subtotals = vec![CaseSubtotals::default(); n];
    for pre in 0..n {
        let s = CaseSubtotals {
            back_edge: back.subtotal[pre],
            m_eq_v: m_eq.subtotal[pre],
            m_desc: m_desc.subtotal[pre],
            high_eq_v: high_eq.subtotal[pre],
            high_lt_v: high_lt.subtotal[pre],
        };
        let v = d.to_input[pre];
        counts[v] = s.total();
        subtotals[v] = s;
    }

    Ok(VertexCutPairReport {
        dfs: d,
        inv,
        counts,
        subtotals,
        backedge_partners: back.partners,
        m_eq_partners: m_eq.partners,
        high_eq_partners: high_eq.partners,
        last_anchor: m_desc.last_anchor,
        max_anchor: high_lt.max_anchor,
    })
}

impl VertexCutPairReport {
    pub fn vertex_count(&self) -> usize {
        self.counts.len()
    }

    /// count(v), keyed by input vertex id.
    pub fn count(&self, v: VertexId) -> usize {
        self.counts[v]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn subtotals(&self, v: VertexId) -> CaseSubtotals {
        self.subtotals[v]
    }

    /// All edges e with {v, e} a cut-pair, i.e. the set C(v). Runs in time
    /// proportional to deg(v) plus the answer size.
    pub fn query_cut_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let d = &self.dfs;
        let pre = d.from_input[v];
        let mut out: Vec<EdgeId> = Vec::with_capacity(self.counts[v]);

        out.extend_from_slice(&self.backedge_partners[pre]);
        for &u in &self.m_eq_partners[pre] {
            out.push(d.tree_edge[u].expect("u is not the root"));
        }
        for &u in &self.high_eq_partners[pre] {
            out.push(d.tree_edge[u].expect("u is not the root"));
        }
        for &c in &d.children[pre] {
            if let Some(last) = self.last_anchor[c] {
                // walk the decreasing list backwards (towards greater
                // vertices) while still strictly below v
                let m = d.m_p[c].expect("anchored children have M_p");
                let list = &self.inv.m_inv[m];
                let mut i = self.inv.pos_in_m_inv[last] as isize;
                while i >= 0 && list[i as usize] < pre {
                    out.push(d.tree_edge[list[i as usize]].expect("not root"));
                    i -= 1;
                }
            }
            if let Some(mx) = self.max_anchor[c] {
                // walk forwards (towards smaller vertices) while still a
                // proper descendant of c
                let m = d.m_p[c].expect("anchored children have M_p");
                let list = &self.inv.m_inv[m];
                let mut i = self.inv.pos_in_m_inv[mx];
                while i < list.len() && list[i] > c {
                    out.push(d.tree_edge[list[i]].expect("not root"));
                    i += 1;
                }
            }
        }
        debug_assert_eq!(out.len(), self.counts[v]);
        out
    }

    /// Lines `v<TAB>count` (optionally with the five case subtotals), keyed
    /// by input vertex ids.
    pub fn to_tsv(&self, with_cases: bool) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        for v in 0..self.counts.len() {
            if with_cases {
                let c = self.subtotals[v];
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    v, self.counts[v], c.back_edge, c.m_eq_v, c.m_desc, c.high_eq_v, c.high_lt_v
                );
            } else {
                let _ = writeln!(s, "{}\t{}", v, self.counts[v]);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn subtotal_by_input(d: &DfsStructure, arr: &[usize]) -> Vec<usize> {
        let mut out = vec![0; arr.len()];
        for pre in 0..arr.len() {
            out[d.to_input[pre]] = arr[pre];
        }
        out
    }

    fn labelled_cycle(n: usize) -> (crate::graph::UnGraph, DfsStructure, InverseLists) {
        let g = gen::gen_cycle(n);
        let mut d = run_dfs(&g, 0).unwrap();
        d.compute_b_counts();
        d.compute_high();
        d.compute_high_p();
        d.compute_m();
        d.compute_m_p();
        let inv = build_inverse_lists(&d);
        (g, d, inv)
    }

    #[test]
    fn cycle_back_edge_case() {
        let (_, d, _) = labelled_cycle(5);
        let sub = count_backedge_pairs(&d);
        assert_eq!(subtotal_by_input(&d, &sub), vec![0, 1, 1, 1, 0]);
    }

    #[test]
    fn cycle_m_eq_case() {
        let (_, d, inv) = labelled_cycle(5);
        let sub = count_m_eq_v(&d, &inv);
        assert_eq!(subtotal_by_input(&d, &sub), vec![0, 0, 0, 0, 3]);
    }

    #[test]
    fn cycle_m_desc_case() {
        let (_, d, inv) = labelled_cycle(5);
        let sub = count_m_desc(&d, &inv);
        assert_eq!(subtotal_by_input(&d, &sub), vec![0, 0, 1, 2, 0]);
    }

    #[test]
    fn cycle_high_eq_case() {
        let (_, d, inv) = labelled_cycle(5);
        let sub = count_high_eq_v(&d, &inv);
        // u = 1 is the root's child and is excluded by the incidence guard
        assert_eq!(subtotal_by_input(&d, &sub), vec![3, 0, 0, 0, 0]);
    }

    #[test]
    fn cycle_high_lt_case() {
        let (_, d, inv) = labelled_cycle(5);
        let sub = count_high_lt_v(&d, &inv);
        assert_eq!(subtotal_by_input(&d, &sub), vec![0, 2, 1, 0, 0]);
    }

    #[test]
    fn cycle_counts_are_n_minus_2() {
        for n in 3..=12 {
            let rep = count_all(&gen::gen_cycle(n)).unwrap();
            for v in 0..n {
                assert_eq!(rep.count(v), n - 2, "C_{} vertex {}", n, v);
            }
        }
    }

    #[test]
    fn clique_counts_are_zero() {
        let rep = count_all(&gen::gen_clique(4)).unwrap();
        assert_eq!(rep.counts(), &[0, 0, 0, 0]);
        for v in 0..4 {
            assert!(rep.query_cut_edges(v).is_empty());
        }
    }

    #[test]
    fn theta_counts() {
        // hubs 0 and 1 joined by three paths of two edges each
        let g = gen::gen_theta(3, &[2, 2, 2]).unwrap();
        let rep = count_all(&g).unwrap();
        assert_eq!(rep.count(0), 3);
        assert_eq!(rep.count(1), 3);
        for mid in 2..5 {
            assert_eq!(rep.count(mid), 0);
            assert!(rep.query_cut_edges(mid).is_empty());
        }
    }

    #[test]
    fn cycle_query_returns_non_incident_edges() {
        let (g, _, _) = labelled_cycle(5);
        let rep = count_all(&g).unwrap();
        let mut got = rep.query_cut_edges(2);
        got.sort_unstable();
        let expect: Vec<usize> = (0..5)
            .filter(|&e| {
                let (a, b) = g.endpoints(e);
                a != 2 && b != 2
            })
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn rejects_non_biconnected_input() {
        let path = crate::graph::UnGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            count_all(&path).unwrap_err(),
            NotBiconnected::ArticulationPoint(1)
        );
        let tiny = crate::graph::UnGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(count_all(&tiny).unwrap_err(), NotBiconnected::TooSmall(2));
    }

    #[test]
    fn subtotals_sum_to_count() {
        let g = gen::gen_random_2vc(24, 40, 11).unwrap();
        let rep = count_all(&g).unwrap();
        for v in 0..24 {
            assert_eq!(rep.subtotals(v).total(), rep.count(v));
        }
    }
}

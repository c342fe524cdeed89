//! Directed connectivity: strongly connected components, strong bridges and
//! strong articulation points.
//!
//! The strong articulation points of a strongly connected digraph are the
//! start vertex (when its removal breaks strong connectivity) plus the
//! internal vertices of the dominator trees of the graph and of its
//! reverse. Strong bridges come from the same construction with every edge
//! split through an auxiliary node, so an edge is a bridge of the flow graph
//! exactly when its split node immediately dominates the edge's head.

use thiserror::Error;

use crate::graph::{Digraph, EdgeId, VertexId};

const UNSET: usize = usize::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("digraph is not strongly connected: vertices 0 and {witness} lie in different components")]
pub struct NotStronglyConnected {
    pub witness: VertexId,
}

/// Implementation selector for the strong articulation point / strong bridge
/// computations. `BruteForce` is the definitional oracle and stays available
/// behind the same interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Dominators,
    BruteForce,
}

/// Strongly connected components via iterative Tarjan, returned as a
/// partition ordered by smallest member, vertices ascending.
pub fn sccs(g: &Digraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new(); // (vertex, out-edge cursor)
    let mut next_index = 0usize;
    let mut n_comps = 0usize;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut cursor)) = call.last_mut() {
            if *cursor < g.out_edges(v).len() {
                let e = g.out_edges(v)[*cursor];
                *cursor += 1;
                let w = g.endpoints(e).1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if low[v] == index[v] {
                    let c = n_comps;
                    n_comps += 1;
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = c;
                        if w == v {
                            break;
                        }
                    }
                }
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }

    let mut groups = vec![Vec::new(); n_comps];
    for (v, &c) in comp.iter().enumerate() {
        groups[c].push(v);
    }
    groups.sort_by_key(|g| g.first().copied().unwrap_or(usize::MAX));
    groups
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    g.vertex_count() == 0 || sccs(g).len() == 1
}

fn ensure_strongly_connected(g: &Digraph) -> Result<(), NotStronglyConnected> {
    let parts = sccs(g);
    if parts.len() <= 1 {
        return Ok(());
    }
    let witness = if parts[0].contains(&0) {
        parts[1][0]
    } else {
        parts[0][0]
    };
    Err(NotStronglyConnected { witness })
}

/// Immediate dominators of the flow graph `(adj, root)`; `idom[root] = root`
/// and unreachable vertices get `None`. Lengauer-Tarjan with the simple
/// path-compression eval.
pub fn immediate_dominators(adj: &[Vec<usize>], root: usize) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut pre = vec![UNSET; n];
    let mut verts = Vec::with_capacity(n);
    let mut parent = vec![0usize; n]; // preorder space

    // iterative DFS with explicit cursors
    let mut cursor = vec![0usize; n];
    let mut stack = vec![root];
    pre[root] = 0;
    verts.push(root);
    while let Some(&v) = stack.last() {
        if cursor[v] < adj[v].len() {
            let w = adj[v][cursor[v]];
            cursor[v] += 1;
            if pre[w] == UNSET {
                pre[w] = verts.len();
                parent[pre[w]] = pre[v];
                verts.push(w);
                stack.push(w);
            }
        } else {
            stack.pop();
        }
    }

    let np = verts.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); np];
    for v in 0..n {
        if pre[v] == UNSET {
            continue;
        }
        for &w in &adj[v] {
            if pre[w] != UNSET {
                preds[pre[w]].push(pre[v]);
            }
        }
    }

    let mut semi: Vec<usize> = (0..np).collect();
    let mut idom = vec![0usize; np];
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); np];
    let mut dsu_parent = vec![UNSET; np];
    let mut label: Vec<usize> = (0..np).collect();

    // eval(v): label of minimum semi on the compressed path to the root of
    // v's link tree
    fn compress(
        v: usize,
        dsu_parent: &mut [usize],
        label: &mut [usize],
        semi: &[usize],
    ) {
        // collect the path bottom-up, then fold labels top-down
        let mut path = Vec::new();
        let mut x = v;
        while dsu_parent[dsu_parent[x]] != UNSET {
            path.push(x);
            x = dsu_parent[x];
        }
        while let Some(y) = path.pop() {
            let a = dsu_parent[y];
            if semi[label[a]] < semi[label[y]] {
                label[y] = label[a];
            }
            dsu_parent[y] = dsu_parent[a];
        }
    }
    let eval = |v: usize,
                dsu_parent: &mut [usize],
                label: &mut [usize],
                semi: &[usize]|
     -> usize {
        if dsu_parent[v] == UNSET {
            v
        } else {
            compress(v, dsu_parent, label, semi);
            label[v]
        }
    };

    for w in (1..np).rev() {
        for i in 0..preds[w].len() {
            let v = preds[w][i];
            let u = eval(v, &mut dsu_parent, &mut label, &semi);
            if semi[u] < semi[w] {
                semi[w] = semi[u];
            }
        }
        bucket[semi[w]].push(w);
        let p = parent[w];
        dsu_parent[w] = p; // link(p, w)
        for i in 0..bucket[p].len() {
            let v = bucket[p][i];
            let u = eval(v, &mut dsu_parent, &mut label, &semi);
            idom[v] = if semi[u] < semi[v] { u } else { p };
        }
        bucket[p].clear();
    }
    for w in 1..np {
        if idom[w] != semi[w] {
            idom[w] = idom[idom[w]];
        }
    }

    let mut out = vec![None; n];
    out[root] = Some(root);
    for w in 1..np {
        out[verts[w]] = Some(verts[idom[w]]);
    }
    out
}

fn out_adjacency(g: &Digraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.out_neighbors(v).collect())
        .collect()
}

/// Vertices other than `root` that immediately dominate something.
fn internal_dominator_vertices(adj: &[Vec<usize>], root: usize) -> Vec<bool> {
    let idom = immediate_dominators(adj, root);
    let mut internal = vec![false; adj.len()];
    for (v, d) in idom.iter().enumerate() {
        if let Some(d) = *d {
            if v != root && d != root {
                internal[d] = true;
            }
        }
    }
    internal
}

/// Strong articulation points of a strongly connected digraph, ascending.
pub fn strong_articulation_points(g: &Digraph) -> Result<Vec<VertexId>, NotStronglyConnected> {
    strong_articulation_points_with(g, Engine::Dominators)
}

pub fn strong_articulation_points_with(
    g: &Digraph,
    engine: Engine,
) -> Result<Vec<VertexId>, NotStronglyConnected> {
    ensure_strongly_connected(g)?;
    let n = g.vertex_count();
    if engine == Engine::BruteForce {
        return Ok(crate::oracle::oracle_strong_articulation_points(g));
    }
    if n <= 2 {
        return Ok(Vec::new());
    }
    let fwd = out_adjacency(g);
    let rev = out_adjacency(&g.reversed());
    let mut is_sap = internal_dominator_vertices(&fwd, 0);
    for (v, flag) in internal_dominator_vertices(&rev, 0).into_iter().enumerate() {
        is_sap[v] = is_sap[v] || flag;
    }
    // the start vertex needs its own check
    let survivors: Vec<usize> = (1..n).collect();
    let (without_start, _) = g.induced(&survivors).expect("valid subset");
    if !is_strongly_connected(&without_start) {
        is_sap[0] = true;
    }
    Ok((0..n).filter(|&v| is_sap[v]).collect())
}

/// Strong bridges of a strongly connected digraph, by edge id, ascending.
pub fn strong_bridges(g: &Digraph) -> Result<Vec<EdgeId>, NotStronglyConnected> {
    strong_bridges_with(g, Engine::Dominators)
}

pub fn strong_bridges_with(
    g: &Digraph,
    engine: Engine,
) -> Result<Vec<EdgeId>, NotStronglyConnected> {
    ensure_strongly_connected(g)?;
    if engine == Engine::BruteForce {
        return Ok(crate::oracle::oracle_strong_bridges(g));
    }
    let mut is_bridge = flowgraph_edge_bridges(g, false);
    for (e, flag) in flowgraph_edge_bridges(g, true).into_iter().enumerate() {
        is_bridge[e] = is_bridge[e] || flag;
    }
    Ok((0..g.edge_count()).filter(|&e| is_bridge[e]).collect())
}

/// Edges of `g` (or of its reverse) that every path from vertex 0 must use.
/// Each edge is split through a synthetic midpoint; the edge is a bridge of
/// the flow graph iff its midpoint immediately dominates the edge head.
fn flowgraph_edge_bridges(g: &Digraph, reverse: bool) -> Vec<bool> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for e in 0..m {
        let (mut u, mut v) = g.endpoints(e);
        if reverse {
            std::mem::swap(&mut u, &mut v);
        }
        adj[u].push(n + e);
        adj[n + e].push(v);
    }
    let idom = immediate_dominators(&adj, 0);
    let mut out = vec![false; m];
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        let head = if reverse { u } else { v };
        if head != 0 && idom[head] == Some(n + e) {
            out[e] = true;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Digraph;

    fn dg(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, edges.to_vec()).unwrap()
    }

    fn dicycle(n: usize) -> Digraph {
        dg(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn bidirected_cycle(n: usize) -> Digraph {
        let mut e = Vec::new();
        for i in 0..n {
            e.push((i, (i + 1) % n));
            e.push(((i + 1) % n, i));
        }
        dg(n, &e)
    }

    #[test]
    fn scc_examples() {
        assert_eq!(sccs(&dicycle(3)).len(), 1);
        assert_eq!(sccs(&dg(2, &[(0, 1)])), vec![vec![0], vec![1]]);
        // two directed triangles joined by one edge each way form one SCC
        let g = dg(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (2, 3),
                (4, 1),
            ],
        );
        assert_eq!(sccs(&g).len(), 1);
    }

    #[test]
    fn directed_cycle_everything_is_critical() {
        for n in 3..7 {
            let g = dicycle(n);
            assert_eq!(strong_articulation_points(&g).unwrap(), (0..n).collect::<Vec<_>>());
            assert_eq!(strong_bridges(&g).unwrap(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bidirected_cycle_has_no_cuts() {
        let g = bidirected_cycle(4);
        assert!(strong_articulation_points(&g).unwrap().is_empty());
        assert!(strong_bridges(&g).unwrap().is_empty());
    }

    #[test]
    fn shared_vertex_of_two_directed_triangles() {
        // one-way triangles 0->1->2->0 and 2->3->4->2 share vertex 2; every
        // vertex of a one-way cycle is critical, so all five qualify
        let g = dg(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let brute = crate::oracle::oracle_strong_articulation_points(&g);
        assert_eq!(strong_articulation_points(&g).unwrap(), brute);
        assert_eq!(brute, vec![0, 1, 2, 3, 4]);

        // with both directions on every edge, only the shared vertex cuts
        let mut edges = Vec::new();
        for &(a, b) in &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)] {
            edges.push((a, b));
            edges.push((b, a));
        }
        let g = dg(5, &edges);
        assert_eq!(strong_articulation_points(&g).unwrap(), vec![2]);
    }

    #[test]
    fn not_strongly_connected_is_reported() {
        let g = dg(3, &[(0, 1), (1, 2)]);
        assert!(strong_articulation_points(&g).is_err());
        assert!(strong_bridges(&g).is_err());
    }

    #[test]
    fn engines_agree_on_small_graphs() {
        let g = dg(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 2),
                (1, 4),
            ],
        );
        assert_eq!(
            strong_articulation_points_with(&g, Engine::Dominators).unwrap(),
            strong_articulation_points_with(&g, Engine::BruteForce).unwrap()
        );
        assert_eq!(
            strong_bridges_with(&g, Engine::Dominators).unwrap(),
            strong_bridges_with(&g, Engine::BruteForce).unwrap()
        );
    }

    #[test]
    fn dominators_of_a_diamond() {
        // 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3: idom(3) = 0
        let adj = vec![vec![1, 2], vec![3], vec![3], vec![]];
        let idom = immediate_dominators(&adj, 0);
        assert_eq!(idom, vec![Some(0), Some(0), Some(0), Some(0)]);
    }
}

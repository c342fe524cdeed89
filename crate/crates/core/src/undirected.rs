//! Classical linear-time undirected connectivity: connected components,
//! bridges, articulation points, 2-edge-connected components and the
//! block forest (bipartite tree of biconnected blocks and cut vertices).
//!
//! One iterative lowpoint DFS feeds all of it.

use crate::graph::{EdgeId, UnGraph, VertexId};

const UNSET: usize = usize::MAX;

/// Output of the shared lowpoint search.
struct LowpointDfs {
    bridges: Vec<EdgeId>,
    articulation_points: Vec<VertexId>,
    /// Blocks in the order the search closed them, vertices sorted ascending.
    blocks: Vec<Vec<VertexId>>,
    block_of_edge: Vec<usize>,
    component_of: Vec<usize>,
    component_count: usize,
}

fn lowpoint_dfs(g: &UnGraph) -> LowpointDfs {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent_edge = vec![UNSET; n];
    let mut cursor = vec![0usize; n];
    let mut component_of = vec![UNSET; n];
    let mut timer = 0usize;

    let mut is_ap = vec![false; n];
    let mut is_bridge = vec![false; m];
    let mut edge_seen = vec![false; m];
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    let mut block_of_edge = vec![UNSET; m];
    let mut component_count = 0usize;

    let mut stack: Vec<VertexId> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        let comp = component_count;
        component_count += 1;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        component_of[root] = comp;
        let mut root_children = 0usize;
        stack.push(root);

        while let Some(&v) = stack.last() {
            if cursor[v] < g.incident_edges(v).len() {
                let e = g.incident_edges(v)[cursor[v]];
                cursor[v] += 1;
                if e == parent_edge[v] {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if disc[w] == UNSET {
                    // tree edge
                    edge_seen[e] = true;
                    edge_stack.push(e);
                    parent_edge[w] = e;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    component_of[w] = comp;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(w);
                } else if !edge_seen[e] {
                    // back edge, seen from its deeper endpoint
                    edge_seen[e] = true;
                    if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    let e = parent_edge[v];
                    if low[v] >= disc[p] {
                        // v's subtree closes a block rooted at p
                        if p != root {
                            is_ap[p] = true;
                        }
                        let block_id = blocks.len();
                        let mut verts = vec![p];
                        while let Some(&top) = edge_stack.last() {
                            edge_stack.pop();
                            block_of_edge[top] = block_id;
                            let (a, b) = g.endpoints(top);
                            verts.push(a);
                            verts.push(b);
                            if top == e {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        blocks.push(verts);
                    }
                    if low[v] > disc[p] {
                        is_bridge[e] = true;
                    }
                    low[p] = low[p].min(low[v]);
                }
            }
        }
        if root_children >= 2 {
            is_ap[root] = true;
        }
    }

    LowpointDfs {
        bridges: (0..m).filter(|&e| is_bridge[e]).collect(),
        articulation_points: (0..n).filter(|&v| is_ap[v]).collect(),
        blocks,
        block_of_edge,
        component_of,
        component_count,
    }
}

/// Partition of the vertices into connected components, ordered by smallest
/// member, vertices ascending.
pub fn components(g: &UnGraph) -> Vec<Vec<VertexId>> {
    let d = lowpoint_dfs(g);
    group_by_class(&d.component_of, d.component_count)
}

/// All bridges and all articulation points, each sorted ascending.
pub fn bridges_and_articulation_points(g: &UnGraph) -> (Vec<EdgeId>, Vec<VertexId>) {
    let d = lowpoint_dfs(g);
    (d.bridges, d.articulation_points)
}

/// True iff `g` is connected and has no bridges.
pub fn is_two_edge_connected(g: &UnGraph) -> bool {
    let d = lowpoint_dfs(g);
    d.component_count <= 1 && d.bridges.is_empty()
}

/// Partition of the vertices into 2-edge-connected components: the connected
/// components left after removing every bridge.
pub fn two_edge_connected_components(g: &UnGraph) -> Vec<Vec<VertexId>> {
    let d = lowpoint_dfs(g);
    let mut is_bridge = vec![false; g.edge_count()];
    for &e in &d.bridges {
        is_bridge[e] = true;
    }
    let n = g.vertex_count();
    let mut class = vec![UNSET; n];
    let mut classes = 0usize;
    let mut queue = Vec::new();
    for s in 0..n {
        if class[s] != UNSET {
            continue;
        }
        let c = classes;
        classes += 1;
        class[s] = c;
        queue.push(s);
        while let Some(v) = queue.pop() {
            for &e in g.incident_edges(v) {
                if is_bridge[e] {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if class[w] == UNSET {
                    class[w] = c;
                    queue.push(w);
                }
            }
        }
    }
    group_by_class(&class, classes)
}

/// Bipartite forest of biconnected blocks and articulation points.
///
/// Every edge of the graph lies in exactly one block; a vertex lies in two
/// or more blocks exactly when it is an articulation point. Isolated
/// vertices belong to no block.
#[derive(Debug, Clone)]
pub struct BlockForest {
    /// Block vertex sets, sorted ascending, in DFS order.
    pub blocks: Vec<Vec<VertexId>>,
    /// Articulation points, sorted ascending.
    pub articulation_points: Vec<VertexId>,
    /// For each edge, the block that owns it.
    pub block_of_edge: Vec<usize>,
    /// For each vertex, the blocks containing it (ascending block ids).
    pub blocks_of_vertex: Vec<Vec<usize>>,
}

impl BlockForest {
    pub fn is_articulation_point(&self, v: VertexId) -> bool {
        self.articulation_points.binary_search(&v).is_ok()
    }

    /// Tree adjacency of the bipartite block forest: for each articulation
    /// point (aligned with `articulation_points`), the block nodes it joins.
    pub fn forest_edges(&self) -> Vec<(VertexId, Vec<usize>)> {
        self.articulation_points
            .iter()
            .map(|&a| (a, self.blocks_of_vertex[a].clone()))
            .collect()
    }
}

pub fn block_forest(g: &UnGraph) -> BlockForest {
    let d = lowpoint_dfs(g);
    let mut blocks_of_vertex = vec![Vec::new(); g.vertex_count()];
    for (id, block) in d.blocks.iter().enumerate() {
        for &v in block {
            blocks_of_vertex[v].push(id);
        }
    }
    BlockForest {
        blocks: d.blocks,
        articulation_points: d.articulation_points,
        block_of_edge: d.block_of_edge,
        blocks_of_vertex,
    }
}

fn group_by_class(class: &[usize], count: usize) -> Vec<Vec<VertexId>> {
    let mut groups = vec![Vec::new(); count];
    for (v, &c) in class.iter().enumerate() {
        groups[c].push(v);
    }
    groups.sort_by_key(|g| g.first().copied().unwrap_or(usize::MAX));
    groups
}

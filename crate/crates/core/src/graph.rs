//! Graph representations shared by every analysis: a simple directed graph
//! (`Digraph`), a simple undirected graph (`UnGraph`), derived views
//! (underlying graph, induced subgraphs, deletions) and a small text format.
//!
//! Vertices are dense 0-based indices. Graphs are immutable once built;
//! every derived view returns a fresh graph plus an id remapping table.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

/// Dense 0-based vertex index.
pub type VertexId = usize;
/// Index into a graph's edge sequence.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1}) rejected")]
    DuplicateEdge(VertexId, VertexId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header (expected \"p <d|u> <n> <m>\")")]
    Header { line: usize },
    #[error("line {line}: malformed edge (expected \"u v\")")]
    EdgeLine { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected extra line")]
    ExtraLine { line: usize },
}

/// Remapping tables produced by `induced` and `delete`.
///
/// `vertex_to_sub[old]` / `edge_to_sub[old]` give the new id or `None` if the
/// item was dropped; the `*_from_sub` vectors are the inverse maps.
#[derive(Debug, Clone, Default)]
pub struct SubgraphMap {
    pub vertex_to_sub: Vec<Option<VertexId>>,
    pub vertex_from_sub: Vec<VertexId>,
    pub edge_to_sub: Vec<Option<EdgeId>>,
    pub edge_from_sub: Vec<EdgeId>,
}

/// Simple directed graph. No self-loops, no duplicate directed edges;
/// antiparallel (twin) pairs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    out: Vec<Vec<EdgeId>>,
}

impl Digraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            check_endpoint(u, n)?;
            check_endpoint(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            out[u].push(id);
        }
        Ok(Digraph { n, edges, out })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Out-edge ids of `v`, in edge insertion order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v]
    }

    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out[v].iter().map(move |&e| self.edges[e].1)
    }

    /// The same graph with every edge reversed; edge ids are preserved.
    pub fn reversed(&self) -> Digraph {
        let edges = self.edges.iter().map(|&(u, v)| (v, u)).collect();
        Digraph::new(self.n, edges).expect("reversal preserves validity")
    }

    /// Collapses twin pairs into single undirected edges.
    ///
    /// Returns the underlying graph together with, for each undirected edge,
    /// the 1 or 2 directed edges it came from, and the forward map from each
    /// directed edge to its undirected image.
    pub fn underlying(&self) -> Underlying {
        let mut first: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(self.edges.len());
        let mut und_edges = Vec::new();
        let mut sources: Vec<Vec<EdgeId>> = Vec::new();
        let mut to_undirected = vec![0; self.edges.len()];
        let mut index: std::collections::HashMap<(VertexId, VertexId), EdgeId> =
            std::collections::HashMap::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            let key = (u.min(v), u.max(v));
            if first.insert(key) {
                let ue = und_edges.len();
                und_edges.push(key);
                sources.push(vec![id]);
                index.insert(key, ue);
                to_undirected[id] = ue;
            } else {
                let ue = index[&key];
                sources[ue].push(id);
                to_undirected[id] = ue;
            }
        }
        let graph = UnGraph::new(self.n, und_edges).expect("collapsed edges are simple");
        Underlying {
            graph,
            sources,
            to_undirected,
        }
    }

    /// Subgraph induced by `keep`: exactly the edges with both endpoints kept.
    pub fn induced(&self, keep: &[VertexId]) -> Result<(Digraph, SubgraphMap), GraphError> {
        let map = make_vertex_map(self.n, keep)?;
        let mut edges = Vec::new();
        let mut edge_to_sub = vec![None; self.edges.len()];
        let mut edge_from_sub = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if let (Some(nu), Some(nv)) = (map.0[u], map.0[v]) {
                edge_to_sub[id] = Some(edges.len());
                edge_from_sub.push(id);
                edges.push((nu, nv));
            }
        }
        let g = Digraph::new(map.1.len(), edges)?;
        Ok((
            g,
            SubgraphMap {
                vertex_to_sub: map.0,
                vertex_from_sub: map.1,
                edge_to_sub,
                edge_from_sub,
            },
        ))
    }

    /// Removes the given vertices (with their incident edges) and edges.
    pub fn delete(
        &self,
        vertices: &[VertexId],
        edges: &[EdgeId],
    ) -> Result<(Digraph, SubgraphMap), GraphError> {
        let (keep, dropped) = deletion_survivors(self.n, self.edges.len(), vertices, edges)?;
        let (g, mut map) = self.induced(&keep)?;
        let (g, map2) = drop_edges_digraph(&g, &dropped, &map)?;
        map.edge_to_sub = map2.edge_to_sub;
        map.edge_from_sub = map2.edge_from_sub;
        Ok((g, map))
    }

    pub fn serialize(&self) -> String {
        serialize_edges('d', self.n, &self.edges)
    }
}

/// Result of [`Digraph::underlying`].
#[derive(Debug, Clone)]
pub struct Underlying {
    pub graph: UnGraph,
    /// For each undirected edge, the directed edge(s) it collapses.
    pub sources: Vec<Vec<EdgeId>>,
    /// For each directed edge, its undirected image.
    pub to_undirected: Vec<EdgeId>,
}

impl Underlying {
    /// True if the directed edge `e` has its antiparallel twin in the graph.
    pub fn has_twin(&self, e: EdgeId) -> bool {
        self.sources[self.to_undirected[e]].len() == 2
    }
}

/// Simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    inc: Vec<Vec<EdgeId>>,
}

impl UnGraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut inc = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            check_endpoint(u, n)?;
            check_endpoint(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            inc[u].push(id);
            inc[v].push(id);
        }
        Ok(UnGraph { n, edges, inc })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident edge ids of `v`, in edge insertion order.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.inc[v].iter().map(move |&e| self.other_endpoint(e, v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.inc[v].len()
    }

    pub fn induced(&self, keep: &[VertexId]) -> Result<(UnGraph, SubgraphMap), GraphError> {
        let map = make_vertex_map(self.n, keep)?;
        let mut edges = Vec::new();
        let mut edge_to_sub = vec![None; self.edges.len()];
        let mut edge_from_sub = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if let (Some(nu), Some(nv)) = (map.0[u], map.0[v]) {
                edge_to_sub[id] = Some(edges.len());
                edge_from_sub.push(id);
                edges.push((nu, nv));
            }
        }
        let g = UnGraph::new(map.1.len(), edges)?;
        Ok((
            g,
            SubgraphMap {
                vertex_to_sub: map.0,
                vertex_from_sub: map.1,
                edge_to_sub,
                edge_from_sub,
            },
        ))
    }

    pub fn delete(
        &self,
        vertices: &[VertexId],
        edges: &[EdgeId],
    ) -> Result<(UnGraph, SubgraphMap), GraphError> {
        let (keep, dropped) = deletion_survivors(self.n, self.edges.len(), vertices, edges)?;
        let (g, mut map) = self.induced(&keep)?;
        let (g, map2) = drop_edges_ungraph(&g, &dropped, &map)?;
        map.edge_to_sub = map2.edge_to_sub;
        map.edge_from_sub = map2.edge_from_sub;
        Ok((g, map))
    }

    pub fn serialize(&self) -> String {
        serialize_edges('u', self.n, &self.edges)
    }
}

/// A parsed graph file: directed or undirected.
#[derive(Debug, Clone)]
pub enum ParsedGraph {
    Directed(Digraph),
    Undirected(UnGraph),
}

/// Parses the text format: header `p <d|u> <n> <m>`, then `m` lines `u v`
/// (0-based). Lines starting with `#` and blank lines are ignored.
pub fn parse(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut directed = None;
    let mut n = 0usize;
    let mut m = 0usize;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut header_seen = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !header_seen {
            let mut it = trimmed.split_whitespace();
            let ok = it.next() == Some("p");
            let kind = it.next();
            let pn = it.next().and_then(|s| s.parse::<usize>().ok());
            let pm = it.next().and_then(|s| s.parse::<usize>().ok());
            match (ok, kind, pn, pm, it.next()) {
                (true, Some("d"), Some(a), Some(b), None) => {
                    directed = Some(true);
                    n = a;
                    m = b;
                }
                (true, Some("u"), Some(a), Some(b), None) => {
                    directed = Some(false);
                    n = a;
                    m = b;
                }
                _ => return Err(ParseError::Header { line }),
            }
            header_seen = true;
            continue;
        }
        if edges.len() == m {
            return Err(ParseError::ExtraLine { line });
        }
        let mut it = trimmed.split_whitespace();
        let u = it.next().and_then(|s| s.parse::<usize>().ok());
        let v = it.next().and_then(|s| s.parse::<usize>().ok());
        let (u, v) = match (u, v, it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::EdgeLine { line }),
        };
        validate_edge(&edges, n, u, v, directed == Some(true))
            .map_err(|source| ParseError::Graph { line, source })?;
        edges.push((u, v));
    }

    if !header_seen {
        return Err(ParseError::Header { line: last_line + 1 });
    }
    if edges.len() != m {
        return Err(ParseError::MissingEdges {
            expected: m,
            found: edges.len(),
        });
    }
    if directed == Some(true) {
        Ok(ParsedGraph::Directed(
            Digraph::new(n, edges).expect("validated during parse"),
        ))
    } else {
        Ok(ParsedGraph::Undirected(
            UnGraph::new(n, edges).expect("validated during parse"),
        ))
    }
}

fn validate_edge(
    edges: &[(VertexId, VertexId)],
    n: usize,
    u: VertexId,
    v: VertexId,
    directed: bool,
) -> Result<(), GraphError> {
    check_endpoint(u, n)?;
    check_endpoint(v, n)?;
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    let dup = if directed {
        edges.contains(&(u, v))
    } else {
        edges
            .iter()
            .any(|&(a, b)| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
    };
    if dup {
        return Err(GraphError::DuplicateEdge(u, v));
    }
    Ok(())
}

fn serialize_edges(kind: char, n: usize, edges: &[(VertexId, VertexId)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {} {}", kind, n, edges.len());
    for &(u, v) in edges {
        let _ = writeln!(out, "{} {}", u, v);
    }
    out
}

fn check_endpoint(v: VertexId, n: usize) -> Result<(), GraphError> {
    if v >= n {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn make_vertex_map(
    n: usize,
    keep: &[VertexId],
) -> Result<(Vec<Option<VertexId>>, Vec<VertexId>), GraphError> {
    let mut to_sub = vec![None; n];
    let mut from_sub = Vec::with_capacity(keep.len());
    for &v in keep {
        check_endpoint(v, n)?;
        if to_sub[v].is_none() {
            to_sub[v] = Some(from_sub.len());
            from_sub.push(v);
        }
    }
    Ok((to_sub, from_sub))
}

fn deletion_survivors(
    n: usize,
    m: usize,
    vertices: &[VertexId],
    edges: &[EdgeId],
) -> Result<(Vec<VertexId>, Vec<bool>), GraphError> {
    let mut gone = vec![false; n];
    for &v in vertices {
        check_endpoint(v, n)?;
        gone[v] = true;
    }
    let mut dropped = vec![false; m];
    for &e in edges {
        if e >= m {
            return Err(GraphError::UnknownEdge(e));
        }
        dropped[e] = true;
    }
    let keep = (0..n).filter(|&v| !gone[v]).collect();
    Ok((keep, dropped))
}

// Second stage of delete(): the induced step renumbered edges, so translate
// the dropped-original-edge flags through the first map before filtering.
fn drop_edges_digraph(
    g: &Digraph,
    dropped_original: &[bool],
    map: &SubgraphMap,
) -> Result<(Digraph, SubgraphMap), GraphError> {
    let mut edges = Vec::new();
    let mut edge_to_sub = vec![None; dropped_original.len()];
    let mut edge_from_sub = Vec::new();
    for (sub_id, &orig) in map.edge_from_sub.iter().enumerate() {
        if !dropped_original[orig] {
            edge_to_sub[orig] = Some(edges.len());
            edge_from_sub.push(orig);
            edges.push(g.edges[sub_id]);
        }
    }
    let g = Digraph::new(g.n, edges)?;
    Ok((
        g,
        SubgraphMap {
            vertex_to_sub: Vec::new(),
            vertex_from_sub: Vec::new(),
            edge_to_sub,
            edge_from_sub,
        },
    ))
}

fn drop_edges_ungraph(
    g: &UnGraph,
    dropped_original: &[bool],
    map: &SubgraphMap,
) -> Result<(UnGraph, SubgraphMap), GraphError> {
    let mut edges = Vec::new();
    let mut edge_to_sub = vec![None; dropped_original.len()];
    let mut edge_from_sub = Vec::new();
    for (sub_id, &orig) in map.edge_from_sub.iter().enumerate() {
        if !dropped_original[orig] {
            edge_to_sub[orig] = Some(edges.len());
            edge_from_sub.push(orig);
            edges.push(g.edges[sub_id]);
        }
    }
    let g = UnGraph::new(g.n, edges)?;
    Ok((
        g,
        SubgraphMap {
            vertex_to_sub: Vec::new(),
            vertex_from_sub: Vec::new(),
            edge_to_sub,
            edge_from_sub,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn un(n: usize, edges: &[(usize, usize)]) -> UnGraph {
        UnGraph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn underlying_collapses_twins() {
        let g = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        let u = g.underlying();
        assert_eq!(u.graph.edge_count(), 1);
        assert_eq!(u.sources[0], vec![0, 1]);
        assert!(u.has_twin(0) && u.has_twin(1));
    }

    #[test]
    fn underlying_directed_cycle_is_triangle() {
        let g = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let u = g.underlying();
        assert_eq!(u.graph.edge_count(), 3);
        assert!((0..3).all(|e| !u.has_twin(e)));
    }

    #[test]
    fn underlying_mixed_triangle() {
        // {(a,b),(b,c),(c,a),(a,c)}: triangle, {a,c} has two sources
        let g = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        let u = g.underlying();
        assert_eq!(u.graph.edge_count(), 3);
        let ac = u.to_undirected[2];
        assert_eq!(u.to_undirected[3], ac);
        assert_eq!(u.sources[ac].len(), 2);
        assert!(!u.has_twin(0) && !u.has_twin(1));
        assert!(u.has_twin(2) && u.has_twin(3));
    }

    #[test]
    fn induced_examples() {
        let tri = un(3, &[(0, 1), (1, 2), (2, 0)]);
        let (sub, map) = tri.induced(&[0, 1]).unwrap();
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(sub.endpoints(0), (0, 1));
        assert_eq!(map.edge_from_sub, vec![0]);

        // full vertex set: isomorphic copy with identity remap
        let (copy, map) = tri.induced(&[0, 1, 2]).unwrap();
        assert_eq!(copy, tri);
        assert!(map.vertex_to_sub.iter().enumerate().all(|(i, &x)| x == Some(i)));

        // C_5 induced on {0,1,3}: single edge {0,1}
        let c5 = un(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let (sub, _) = c5.induced(&[0, 1, 3]).unwrap();
        assert_eq!(sub.edges(), &[(0, 1)]);
    }

    #[test]
    fn delete_examples() {
        let c4 = un(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let (path, _) = c4.delete(&[], &[3]).unwrap();
        assert_eq!(path.edge_count(), 3);
        let (path3, _) = c4.delete(&[0], &[]).unwrap();
        assert_eq!(path3.vertex_count(), 3);
        assert_eq!(path3.edge_count(), 2);

        assert_eq!(c4.delete(&[], &[9]).unwrap_err(), GraphError::UnknownEdge(9));
        assert!(matches!(
            c4.delete(&[7], &[]),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn delete_vertex_and_edge_splits_cycle() {
        // C_5 minus {vertex 2, edge {4,0}} leaves components {0,1} and {3,4}
        let c5 = un(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let (g, map) = c5.delete(&[2], &[4]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let back: Vec<_> = g
            .edges()
            .iter()
            .map(|&(a, b)| (map.vertex_from_sub[a], map.vertex_from_sub[b]))
            .collect();
        assert_eq!(back, vec![(0, 1), (3, 4)]);
        let comps: Vec<Vec<usize>> = crate::undirected::components(&g)
            .into_iter()
            .map(|c| c.into_iter().map(|v| map.vertex_from_sub[v]).collect())
            .collect();
        assert_eq!(comps, vec![vec![0, 1], vec![3, 4]]);
    }

    #[test]
    fn parse_examples() {
        let tri = parse("p u 3 3\n0 1\n1 2\n2 0\n").unwrap();
        match tri {
            ParsedGraph::Undirected(g) => assert_eq!(g.edge_count(), 3),
            _ => panic!("expected undirected"),
        }
        let twins = parse("p d 2 2\n0 1\n1 0\n").unwrap();
        match twins {
            ParsedGraph::Directed(g) => assert_eq!(g.edge_count(), 2),
            _ => panic!("expected directed"),
        }
        assert_eq!(
            parse("p u 3 3\n0 1\n0 1\n1 2\n").unwrap_err(),
            ParseError::Graph {
                line: 3,
                source: GraphError::DuplicateEdge(0, 1)
            }
        );
        assert_eq!(
            parse("q u 3 0\n").unwrap_err(),
            ParseError::Header { line: 1 }
        );
        assert_eq!(
            parse("p u 3 2\n0 1\n").unwrap_err(),
            ParseError::MissingEdges {
                expected: 2,
                found: 1
            }
        );
        assert!(parse("# comment\np d 2 1\n0 1\n# trailing comment\n").is_ok());
    }

    #[test]
    fn parse_rejects_out_of_range_and_self_loop() {
        assert_eq!(
            parse("p u 2 1\n0 5\n").unwrap_err(),
            ParseError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { vertex: 5, n: 2 }
            }
        );
        assert_eq!(
            parse("p d 2 1\n1 1\n").unwrap_err(),
            ParseError::Graph {
                line: 2,
                source: GraphError::SelfLoop(1)
            }
        );
    }

    #[test]
    fn twin_pair_is_not_duplicate() {
        assert!(Digraph::new(2, vec![(0, 1), (1, 0)]).is_ok());
        assert_eq!(
            Digraph::new(2, vec![(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            UnGraph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
    }
}

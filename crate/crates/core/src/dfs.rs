//! The rooted DFS framework the cut-pair counters run on: preorder-numbered
//! tree, back-edge list, and the per-vertex labels low, l, high, high_p,
//! M, M_p, up, down and the two b_count variants.
//!
//! Inside this module (and everything downstream of it) vertices are
//! identified with their preorder numbers, so ancestor comparisons are plain
//! integer comparisons; `to_input`/`from_input` translate at the boundary.

use thiserror::Error;

use crate::graph::{EdgeId, UnGraph, VertexId};

const UNSET: usize = usize::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DfsError {
    #[error("root {root} out of range (graph has {n} vertices)")]
    RootOutOfRange { root: VertexId, n: usize },
    #[error("graph is disconnected: vertex {unreached} not reached from the root")]
    Disconnected { unreached: VertexId },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot link the root of the DFS tree")]
pub struct LinkRootError;

/// A back edge, oriented from its deeper endpoint to its ancestor.
/// Both endpoints are preorder numbers; `target <= source` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BackEdge {
    pub source: usize,
    pub target: usize,
    pub edge: EdgeId,
}

/// Counters reported by the fast high-point passes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HighPassStats {
    pub links: usize,
    pub finds: usize,
}

/// Counters reported by the M-label passes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FindMStats {
    /// Vertices examined while descending towards each label.
    pub visits: usize,
    /// Child-pointer advances, summed over both pointers.
    pub pointer_moves: usize,
}

/// DFS tree of a connected undirected graph plus all derived labels.
///
/// `run_dfs` fills the tree, `low`, `l`, `up` and `down`; the remaining
/// labels are produced by the dedicated passes below. Undefined labels
/// (e.g. `high` at the root, `high_p` at the root's children) are `None`.
#[derive(Debug, Clone)]
pub struct DfsStructure {
    pub n: usize,
    /// Preorder number -> input vertex id.
    pub to_input: Vec<VertexId>,
    /// Input vertex id -> preorder number.
    pub from_input: Vec<usize>,
    /// Parent in preorder space; `parent[0] == 0`.
    pub parent: Vec<usize>,
    /// Children in discovery order (equivalently, increasing preorder).
    pub children: Vec<Vec<usize>>,
    /// Index of each non-root vertex in its parent's child list.
    pub child_slot: Vec<usize>,
    /// Subtree size; `v` is an ancestor of `u` iff `v <= u < v + size[v]`.
    pub size: Vec<usize>,
    pub depth: Vec<usize>,
    /// Input edge id of the tree edge (v, parent(v)); `None` for the root.
    pub tree_edge: Vec<Option<EdgeId>>,
    pub back_edges: Vec<BackEdge>,
    /// Minimum back-edge target out of the subtree of v.
    pub low: Vec<Option<usize>>,
    /// min({v} U {targets of back-edges starting at v}).
    pub l: Vec<usize>,
    /// Number of back-edges starting at v.
    pub up: Vec<usize>,
    /// Per child slot of v: back-edges from that child's subtree ending at v.
    pub down: Vec<Vec<usize>>,
    pub high: Vec<Option<usize>>,
    pub high_p: Vec<Option<usize>>,
    pub m: Vec<Option<usize>>,
    pub m_p: Vec<Option<usize>>,
    /// Back-edges leaving T(v) above v itself (defined for v != root).
    pub b_count_above: Vec<usize>,
    /// Back-edges leaving T(v) above parent(v) (zero at the root's children).
    pub b_count_above_parent: Vec<usize>,
}

/// Runs a DFS from `root` and builds the tree together with the labels that
/// fall out of the single pass (`low`, `l`, `up`, `down`).
///
/// Adjacency is scanned in edge insertion order, so the tree is fully
/// determined by the input. Fails if the graph is disconnected.
pub fn run_dfs(g: &UnGraph, root: VertexId) -> Result<DfsStructure, DfsError> {
    let n = g.vertex_count();
    if root >= n {
        return Err(DfsError::RootOutOfRange { root, n });
    }
    let m = g.edge_count();

    let mut from_input = vec![UNSET; n];
    let mut to_input = Vec::with_capacity(n);
    let mut parent = vec![0usize; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut child_slot = vec![0usize; n];
    let mut depth = vec![0usize; n];
    let mut tree_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut back_edges = Vec::with_capacity(m.saturating_sub(n.saturating_sub(1)));
    let mut l: Vec<usize> = (0..n).collect();
    let mut low_raw = vec![UNSET; n];
    let mut up = vec![0usize; n];
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut size = vec![1usize; n];

    let mut cursor = vec![0usize; n];
    let mut edge_seen = vec![false; m];
    // stack holds preorder numbers
    let mut stack: Vec<usize> = Vec::new();

    from_input[root] = 0;
    to_input.push(root);
    stack.push(0);

    while let Some(&v) = stack.last() {
        let vin = to_input[v];
        if cursor[vin] < g.incident_edges(vin).len() {
            let e = g.incident_edges(vin)[cursor[vin]];
            cursor[vin] += 1;
            if tree_edge[v] == Some(e) {
                continue;
            }
            let win = g.other_endpoint(e, vin);
            if from_input[win] == UNSET {
                // tree edge
                let w = to_input.len();
                from_input[win] = w;
                to_input.push(win);
                edge_seen[e] = true;
                parent[w] = v;
                child_slot[w] = children[v].len();
                children[v].push(w);
                down[v].push(0);
                depth[w] = depth[v] + 1;
                tree_edge[w] = Some(e);
                stack.push(w);
            } else if !edge_seen[e] {
                edge_seen[e] = true;
                let w = from_input[win];
                if w < v {
                    // back edge (v, w): w is a proper ancestor of v
                    back_edges.push(BackEdge {
                        source: v,
                        target: w,
                        edge: e,
                    });
                    up[v] += 1;
                    l[v] = l[v].min(w);
                    if low_raw[v] == UNSET || w < low_raw[v] {
                        low_raw[v] = w;
                    }
                    // the child of w whose subtree the edge leaves is the
                    // one w is currently exploring
                    let slot = down[w].len() - 1;
                    down[w][slot] += 1;
                }
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                size[p] += size[v];
                if low_raw[v] != UNSET && (low_raw[p] == UNSET || low_raw[v] < low_raw[p]) {
                    low_raw[p] = low_raw[v];
                }
            }
        }
    }

    if to_input.len() != n {
        let unreached = (0..n).find(|&v| from_input[v] == UNSET).unwrap();
        return Err(DfsError::Disconnected { unreached });
    }

    let low = low_raw
        .iter()
        .enumerate()
        .map(|(v, &x)| if v == 0 || x == UNSET { None } else { Some(x) })
        .collect();

    Ok(DfsStructure {
        n,
        to_input,
        from_input,
        parent,
        children,
        child_slot,
        size,
        depth,
        tree_edge,
        back_edges,
        low,
        l,
        up,
        down,
        high: vec![None; n],
        high_p: vec![None; n],
        m: vec![None; n],
        m_p: vec![None; n],
        b_count_above: vec![0; n],
        b_count_above_parent: vec![0; n],
    })
}

impl DfsStructure {
    /// Ancestor test in preorder space (a vertex is its own ancestor).
    pub fn is_ancestor(&self, a: usize, v: usize) -> bool {
        a <= v && v < a + self.size[a]
    }

    /// Back-edges bucketed by target, visited from target n-1 down to 0.
    fn back_edges_by_target_desc(&self) -> Vec<(usize, usize)> {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for be in &self.back_edges {
            buckets[be.target].push(be.source);
        }
        let mut out = Vec::with_capacity(self.back_edges.len());
        for t in (0..self.n).rev() {
            for &s in &buckets[t] {
                out.push((s, t));
            }
        }
        out
    }

    /// Fills `high` by ascending tree paths from each back edge, skipping
    /// already-labelled vertices through a link/find forest.
    pub fn compute_high(&mut self) -> HighPassStats {
        let mut forest = LinkFindForest::new(&self.parent);
        for (u0, v) in self.back_edges_by_target_desc() {
            let mut u = forest.find(u0);
            while u > v {
                self.high[u] = Some(v);
                let next = forest.find(self.parent[u]);
                forest.link(u).expect("u > v >= 0, so u is not the root");
                u = next;
            }
        }
        forest.stats()
    }

    /// Same ascent as `compute_high`, but a vertex is labelled while its
    /// parent still lies strictly below the back-edge target.
    pub fn compute_high_p(&mut self) -> HighPassStats {
        let mut forest = LinkFindForest::new(&self.parent);
        for (u0, v) in self.back_edges_by_target_desc() {
            let mut u = forest.find(u0);
            while u != 0 && self.parent[u] > v {
                self.high_p[u] = Some(v);
                let next = forest.find(self.parent[u]);
                forest.link(u).expect("u != 0");
                u = next;
            }
        }
        forest.stats()
    }

    /// Accumulates both b_count variants from `up` and `down`.
    pub fn compute_b_counts(&mut self) {
        let down_total: Vec<usize> = self.down.iter().map(|d| d.iter().sum()).collect();
        // children have larger preorder numbers, so reverse order is bottom-up
        for v in (1..self.n).rev() {
            let mut b = self.up[v];
            for &c in &self.children[v] {
                b += self.b_count_above[c];
            }
            b -= down_total[v];
            self.b_count_above[v] = b;
        }
        for v in 1..self.n {
            let p = self.parent[v];
            self.b_count_above_parent[v] = self.b_count_above[v] - self.down[p][self.child_slot[v]];
        }
    }

    /// Computes all M labels: M(v) is the nearest common ancestor of the
    /// sources of back-edges leaving T(v) for a proper ancestor of v.
    ///
    /// Requires `compute_b_counts` (definedness is exactly `b_count_above > 0`).
    pub fn compute_m(&mut self) -> FindMStats {
        let thresholds: Vec<usize> = (0..self.n).collect();
        let eligible: Vec<bool> = (0..self.n)
            .map(|v| v != 0 && self.b_count_above[v] > 0)
            .collect();
        let (labels, stats) = self.m_label_pass(&thresholds, &eligible);
        self.m = labels;
        stats
    }

    /// Computes all M_p labels (targets strictly above the parent instead of
    /// the vertex itself). Requires `compute_b_counts`.
    pub fn compute_m_p(&mut self) -> FindMStats {
        let thresholds: Vec<usize> = (0..self.n).map(|v| self.parent[v]).collect();
        let eligible: Vec<bool> = (0..self.n)
            .map(|v| v != 0 && self.b_count_above_parent[v] > 0)
            .collect();
        let (labels, stats) = self.m_label_pass(&thresholds, &eligible);
        self.m_p = labels;
        stats
    }

    // One bottom-up pass of the pointered descent. For each eligible v it
    // finds the nearest common ancestor of the back-edge sources in T(v)
    // whose targets lie below thresholds[v]. The L/R pointers persist across
    // calls and only ever move inward; that is what keeps the total work
    // linear.
    fn m_label_pass(
        &self,
        thresholds: &[usize],
        eligible: &[bool],
    ) -> (Vec<Option<usize>>, FindMStats) {
        let n = self.n;
        let mut labels: Vec<Option<usize>> = vec![None; n];
        let mut stats = FindMStats::default();

        // L/R pointers, initialised per vertex to the first/last child whose
        // subtree escapes below that vertex's own threshold.
        let mut lp = vec![0usize; n];
        let mut rp = vec![0usize; n];
        for x in 0..n {
            let t = thresholds[x];
            let kids = &self.children[x];
            lp[x] = kids
                .iter()
                .position(|&c| self.low[c].is_some_and(|lo| lo < t))
                .unwrap_or(usize::MAX);
            rp[x] = kids
                .iter()
                .rposition(|&c| self.low[c].is_some_and(|lo| lo < t))
                .unwrap_or(usize::MAX);
        }

        for v in (1..n).rev() {
            if !eligible[v] {
                continue;
            }
            let t = thresholds[v];
            labels[v] = Some(self.find_m(v, t, &mut lp, &mut rp, &labels, &mut stats));
        }
        (labels, stats)
    }

    fn find_m(
        &self,
        v: usize,
        t: usize,
        lp: &mut [usize],
        rp: &mut [usize],
        labels: &[Option<usize>],
        stats: &mut FindMStats,
    ) -> usize {
        if self.l[v] < t {
            return v;
        }
        debug_assert!(lp[v] != usize::MAX, "an escaping child must exist");
        if lp[v] != rp[v] {
            return v;
        }
        let mut m = labels[self.children[v][lp[v]]].expect("children are processed first");
        loop {
            stats.visits += 1;
            if self.l[m] < t {
                return m;
            }
            let kids = &self.children[m];
            while self.low[kids[lp[m]]].is_none_or(|lo| lo >= t) {
                lp[m] += 1;
                stats.pointer_moves += 1;
            }
            while self.low[kids[rp[m]]].is_none_or(|lo| lo >= t) {
                rp[m] -= 1;
                stats.pointer_moves += 1;
            }
            if lp[m] != rp[m] {
                return m;
            }
            m = labels[kids[lp[m]]].expect("children are processed first");
        }
    }

    /// One line per vertex: `v p low l high high_p M M_p`, `-` for undefined.
    /// All columns are preorder numbers.
    pub fn dump_labels(&self) -> String {
        use std::fmt::Write as _;
        fn opt(x: Option<usize>) -> String {
            x.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        let mut out = String::new();
        for v in 0..self.n {
            let p = if v == 0 { None } else { Some(self.parent[v]) };
            let _ = writeln!(
                out,
                "{} {} {} {} {} {} {} {}",
                v,
                opt(p),
                opt(self.low[v]),
                self.l[v],
                opt(self.high[v]),
                opt(self.high_p[v]),
                opt(self.m[v]),
                opt(self.m_p[v]),
            );
        }
        out
    }
}

/// Builds the DFS structure and runs every label pass, for callers that want
/// the whole thing.
pub fn run_dfs_with_labels(g: &UnGraph, root: VertexId) -> Result<DfsStructure, DfsError> {
    let mut d = run_dfs(g, root)?;
    d.compute_b_counts();
    d.compute_high();
    d.compute_high_p();
    d.compute_m();
    d.compute_m_p();
    Ok(d)
}

/// Bucket-sorted inverse label lists and re-sorted children lists, built in
/// one linear sweep each. The counting passes walk these with forward-only
/// cursors.
#[derive(Debug, Clone)]
pub struct InverseLists {
    /// For each x: all v with M(v) = x, decreasing.
    pub m_inv: Vec<Vec<usize>>,
    /// For each x: all v with M_p(v) = x, decreasing.
    pub m_p_inv: Vec<Vec<usize>>,
    /// For each x: all v with high(v) = x, increasing.
    pub high_inv: Vec<Vec<usize>>,
    /// Children of each vertex sorted by decreasing high_p. Children without
    /// a high_p label (only the root's children qualify) are omitted; the
    /// counting pass that reads these never visits the root.
    pub children_by_high_p_desc: Vec<Vec<usize>>,
    /// Position of each v inside m_inv[M(v)]; used to resume enumeration
    /// walks from stored anchor vertices.
    pub pos_in_m_inv: Vec<usize>,
}

/// Builds every inverse list from whatever labels are present.
pub fn build_inverse_lists(d: &DfsStructure) -> InverseLists {
    let n = d.n;
    let mut m_inv = vec![Vec::new(); n];
    let mut m_p_inv = vec![Vec::new(); n];
    let mut high_inv = vec![Vec::new(); n];
    for v in (0..n).rev() {
        if let Some(x) = d.m[v] {
            m_inv[x].push(v);
        }
        if let Some(x) = d.m_p[v] {
            m_p_inv[x].push(v);
        }
    }
    for v in 0..n {
        if let Some(x) = d.high[v] {
            high_inv[x].push(v);
        }
    }

    let mut high_p_buckets = vec![Vec::new(); n];
    for c in 0..n {
        if let Some(x) = d.high_p[c] {
            high_p_buckets[x].push(c);
        }
    }
    let mut children_by_high_p_desc = vec![Vec::new(); n];
    for x in (0..n).rev() {
        for &c in &high_p_buckets[x] {
            children_by_high_p_desc[d.parent[c]].push(c);
        }
    }

    let mut pos_in_m_inv = vec![0usize; n];
    for list in &m_inv {
        for (i, &v) in list.iter().enumerate() {
            pos_in_m_inv[v] = i;
        }
    }

    InverseLists {
        m_inv,
        m_p_inv,
        high_inv,
        children_by_high_p_desc,
        pos_in_m_inv,
    }
}

/// Disjoint-set forest over a fixed tree supporting `link(u)` (merge u into
/// its parent's set) and `find(x)` (the designated root of x's set, i.e. the
/// shallowest member). Union by size with path halving.
pub struct LinkFindForest {
    tree_parent: Vec<usize>,
    parent: Vec<usize>,
    size: Vec<usize>,
    /// Designated tree root per set representative.
    root_of: Vec<usize>,
    links: usize,
    finds: usize,
}

impl LinkFindForest {
    /// `tree_parent[v]` is v's parent in the static tree; the root points at
    /// itself (index 0 by convention of the DFS numbering).
    pub fn new(tree_parent: &[usize]) -> Self {
        let n = tree_parent.len();
        LinkFindForest {
            tree_parent: tree_parent.to_vec(),
            parent: (0..n).collect(),
            size: vec![1; n],
            root_of: (0..n).collect(),
            links: 0,
            finds: 0,
        }
    }

    fn rep(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// The shallowest vertex of the component containing `x`.
    pub fn find(&mut self, x: usize) -> usize {
        self.finds += 1;
        let r = self.rep(x);
        self.root_of[r]
    }

    /// Adds the tree edge (u, parent(u)) to the forest.
    pub fn link(&mut self, u: usize) -> Result<(), LinkRootError> {
        if self.tree_parent[u] == u {
            return Err(LinkRootError);
        }
        self.links += 1;
        let ru = self.rep(u);
        let rp = self.rep(self.tree_parent[u]);
        debug_assert_ne!(ru, rp, "edge already linked");
        let root = self.root_of[rp];
        let (big, small) = if self.size[ru] >= self.size[rp] {
            (ru, rp)
        } else {
            (rp, ru)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.root_of[big] = root;
        Ok(())
    }

    pub fn stats(&self) -> HighPassStats {
        HighPassStats {
            links: self.links,
            finds: self.finds,
        }
    }
}

//! Deterministic instance generators and the corpora the property suites
//! run on. Every generator is seeded, every produced instance is checked
//! against its family's defining property, and the corpora can print a
//! manifest line per instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Digraph, GraphError, UnGraph};
use crate::{digraph, undirected};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("generator gave up after {0} attempts")]
    GaveUp(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The cycle C_n with edges (i, i+1 mod n) in cycle order, so a DFS from 0
/// walks the cycle as a path.
pub fn gen_cycle(n: usize) -> UnGraph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    UnGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("cycle is simple")
}

/// The complete graph K_n.
pub fn gen_clique(n: usize) -> UnGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    UnGraph::new(n, edges).expect("clique is simple")
}

/// Two hub vertices 0 and 1 joined by `k` internally disjoint paths;
/// `lengths[i]` is the edge count of path i. At most one path may have
/// length 1 (a second would be a parallel edge).
pub fn gen_theta(k: usize, lengths: &[usize]) -> Result<UnGraph, GenError> {
    if lengths.len() != k || k < 2 {
        return Err(GenError::Infeasible(format!(
            "need k >= 2 path lengths, got k={} with {} lengths",
            k,
            lengths.len()
        )));
    }
    if lengths.contains(&0) {
        return Err(GenError::Infeasible("zero-length path".into()));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(GenError::Infeasible(
            "more than one direct hub-hub edge".into(),
        ));
    }
    let n = 2 + lengths.iter().map(|&l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(UnGraph::new(n, edges)?)
}

const RETRIES: usize = 32;

/// Random biconnected graph: a random Hamiltonian cycle plus random chords,
/// verified and re-drawn on failure.
pub fn gen_random_2vc(n: usize, m: usize, seed: u64) -> Result<UnGraph, GenError> {
    if n < 3 || m < n || m > n * (n - 1) / 2 {
        return Err(GenError::Infeasible(format!("n={}, m={}", n, m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let g = hamiltonian_cycle_plus_chords(n, m, &mut rng);
        let (bridges, aps) = undirected::bridges_and_articulation_points(&g);
        if bridges.is_empty() && aps.is_empty() && undirected::components(&g).len() == 1 {
            return Ok(g);
        }
    }
    Err(GenError::GaveUp(RETRIES))
}

fn hamiltonian_cycle_plus_chords(n: usize, m: usize, rng: &mut ChaCha8Rng) -> UnGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![false; n * n];
    let mut edges = Vec::with_capacity(m);
    for i in 0..n {
        let (a, b) = (order[i], order[(i + 1) % n]);
        present[a * n + b] = true;
        present[b * n + a] = true;
        edges.push((a, b));
    }
    while edges.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b || present[a * n + b] {
            continue;
        }
        present[a * n + b] = true;
        present[b * n + a] = true;
        edges.push((a, b));
    }
    UnGraph::new(n, edges).expect("simple by construction")
}

/// Random 2-edge-connected graph grown by ear decomposition: an initial
/// cycle, then open or closed ears until every vertex is placed, then extra
/// chords up to `m`. Closed ears create cut vertices, so the family is not
/// all biconnected.
///
/// Every ear beyond the initial cycle costs one edge over the vertex count,
/// so with ears of at most 3 internal vertices the initial cycle must cover
/// at least n - 3*(m - n) vertices.
pub fn gen_random_2ec(n: usize, m: usize, seed: u64) -> Result<UnGraph, GenError> {
    if n < 3 || m < n || m > n * (n - 1) / 2 {
        return Err(GenError::Infeasible(format!("n={}, m={}", n, m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..RETRIES {
        let slack = m - n;
        let min_start = n.saturating_sub(3 * slack).max(3);
        let start = rng.gen_range(min_start..=n.min(min_start + 4));
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut present = vec![false; n * n];
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
        let add = |edges: &mut Vec<(usize, usize)>, present: &mut Vec<bool>, a: usize, b: usize| {
            present[a * n + b] = true;
            present[b * n + a] = true;
            edges.push((a, b));
        };
        for i in 0..start {
            add(&mut edges, &mut present, order[i], order[(i + 1) % start]);
        }
        let mut placed = start;
        let mut ears_left = slack;
        while placed < n {
            // the remaining vertices must fit in the remaining ear budget
            let hi = 3.min(n - placed);
            let lo = (n - placed).saturating_sub(3 * (ears_left - 1)).max(1);
            let internal = rng.gen_range(lo..=hi.max(lo));
            let a = order[rng.gen_range(0..placed)];
            let b = if internal >= 2 && rng.gen_bool(0.25) {
                a // closed ear: glues a cycle onto a single vertex
            } else {
                order[rng.gen_range(0..placed)]
            };
            if a == b && internal < 2 {
                continue;
            }
            let mut prev = a;
            for k in 0..internal {
                let x = order[placed + k];
                add(&mut edges, &mut present, prev, x);
                prev = x;
            }
            add(&mut edges, &mut present, prev, b);
            placed += internal;
            ears_left -= 1;
        }
        let mut guard = 0;
        while edges.len() < m {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            guard += 1;
            if guard > 64 * m + 64 {
                continue 'attempt;
            }
            if a == b || present[a * n + b] {
                continue;
            }
            add(&mut edges, &mut present, a, b);
        }
        let g = UnGraph::new(n, edges)?;
        if undirected::is_two_edge_connected(&g) {
            return Ok(g);
        }
    }
    Err(GenError::GaveUp(RETRIES))
}

/// Every edge of `g` in both directions.
pub fn bidirect(g: &UnGraph) -> Digraph {
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for &(u, v) in g.edges() {
        edges.push((u, v));
        edges.push((v, u));
    }
    Digraph::new(g.vertex_count(), edges).expect("bidirection of a simple graph")
}

/// Strongly connected orientation of a 2-edge-connected graph: tree edges
/// away from the root, back edges towards it.
fn orient_strongly(g: &UnGraph) -> Digraph {
    let d = crate::dfs::run_dfs(g, 0).expect("generator produced a connected graph");
    let mut edges = Vec::with_capacity(g.edge_count());
    for v in 1..d.n {
        edges.push((d.to_input[d.parent[v]], d.to_input[v]));
    }
    for be in &d.back_edges {
        edges.push((d.to_input[be.source], d.to_input[be.target]));
    }
    Digraph::new(g.vertex_count(), edges).expect("orientation of a simple graph")
}

/// Random twinless strongly connected digraph with `m` edges: a strongly
/// connected orientation of a random 2-edge-connected graph, then a mix of
/// twin edges and fresh arcs up to `m`.
pub fn gen_random_twinless_sc(n: usize, m: usize, seed: u64) -> Result<Digraph, GenError> {
    if n < 3 || m < n || m > n * (n - 1) {
        return Err(GenError::Infeasible(format!("n={}, m={}", n, m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let base_m = n.max(m.saturating_sub(m / 3)).min(n * (n - 1) / 2);
    let base = gen_random_2ec(n, base_m, seed)?;
    let mut g = orient_strongly(&base);
    for _ in 0..RETRIES {
        let mut edges = g.edges().to_vec();
        let mut seen: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
        let mut guard = 0;
        while edges.len() < m && guard < 64 * m + 64 {
            guard += 1;
            if rng.gen_bool(0.5) {
                // twin of an existing edge
                let &(u, v) = edges.choose(&mut rng).expect("nonempty");
                if seen.insert((v, u)) {
                    edges.push((v, u));
                }
            } else {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b && seen.insert((a, b)) {
                    edges.push((a, b));
                }
            }
        }
        let candidate = Digraph::new(n, edges)?;
        if is_twinless_sc(&candidate) {
            g = candidate;
            if g.edge_count() >= m {
                return Ok(g);
            }
        }
    }
    // adding edges preserves the property, so reaching here means the edge
    // budget was unattainable (e.g. m > n(n-1))
    Err(GenError::GaveUp(RETRIES))
}

fn is_twinless_sc(g: &Digraph) -> bool {
    digraph::is_strongly_connected(g) && undirected::is_two_edge_connected(&g.underlying().graph)
}

/// Random strongly connected digraph: a random directed Hamiltonian cycle
/// plus random extra arcs.
pub fn gen_random_sc(n: usize, m: usize, seed: u64) -> Result<Digraph, GenError> {
    if n < 2 || m < n || m > n * (n - 1) {
        return Err(GenError::Infeasible(format!("n={}, m={}", n, m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5851_f42d_4c95_7f2d);
    for _ in 0..RETRIES {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(m);
        for i in 0..n {
            let e = (order[i], order[(i + 1) % n]);
            seen.insert(e);
            edges.push(e);
        }
        let mut guard = 0;
        while edges.len() < m && guard < 64 * m + 64 {
            guard += 1;
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && seen.insert((a, b)) {
                edges.push((a, b));
            }
        }
        let g = Digraph::new(n, edges)?;
        if digraph::is_strongly_connected(&g) && g.edge_count() == m {
            return Ok(g);
        }
    }
    Err(GenError::GaveUp(RETRIES))
}

/// One corpus instance with its provenance.
#[derive(Debug, Clone)]
pub struct CorpusEntry<G> {
    pub family: String,
    pub seed: u64,
    pub graph: G,
}

/// A deterministic set of instances, all satisfying one family property.
#[derive(Debug, Clone)]
pub struct Corpus<G> {
    pub entries: Vec<CorpusEntry<G>>,
}

pub trait GraphStats {
    fn n(&self) -> usize;
    fn m(&self) -> usize;
}

impl GraphStats for UnGraph {
    fn n(&self) -> usize {
        self.vertex_count()
    }
    fn m(&self) -> usize {
        self.edge_count()
    }
}

impl GraphStats for Digraph {
    fn n(&self) -> usize {
        self.vertex_count()
    }
    fn m(&self) -> usize {
        self.edge_count()
    }
}

impl<G: GraphStats> Corpus<G> {
    /// One line per instance: `family seed n m`.
    pub fn manifest(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        for e in &self.entries {
            let _ = writeln!(s, "{} {} {} {}", e.family, e.seed, e.graph.n(), e.graph.m());
        }
        s
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Exhaustively enumerated small biconnected instances (n <= max_n):
/// cycles with every chord subset for n <= 6 and with chord pairs above
/// that, cliques, wheels, complete bipartite graphs, and thetas over all
/// length splits.
pub fn small_2vc_corpus(max_n: usize) -> Corpus<UnGraph> {
    let mut entries = Vec::new();
    let mut push = |family: String, graph: UnGraph| {
        debug_assert!(is_biconnected(&graph), "{} not biconnected", family);
        entries.push(CorpusEntry {
            family,
            seed: 0,
            graph,
        });
    };

    for n in 3..=max_n {
        let chords = all_chords(n);
        if n <= 6 {
            // every subset of chords over the n-cycle
            for mask in 0..(1u32 << chords.len()) {
                push(
                    format!("cycle{}+mask{}", n, mask),
                    cycle_with_chords(n, &chords, |i| mask & (1 << i) != 0),
                );
            }
        } else {
            push(format!("cycle{}", n), gen_cycle(n));
            for i in 0..chords.len() {
                push(
                    format!("cycle{}+c{}", n, i),
                    cycle_with_chords(n, &chords, |k| k == i),
                );
                for j in i + 1..chords.len() {
                    push(
                        format!("cycle{}+c{}+c{}", n, i, j),
                        cycle_with_chords(n, &chords, |k| k == i || k == j),
                    );
                }
            }
        }
        if n >= 4 {
            push(format!("wheel{}", n), wheel(n));
        }
        push(format!("clique{}", n), gen_clique(n));
    }
    for a in 2..=3usize {
        for b in a..=4usize {
            if a + b <= max_n {
                push(format!("k{}x{}", a, b), complete_bipartite(a, b));
            }
        }
    }
    for lens in theta_length_splits(max_n) {
        let g = gen_theta(lens.len(), &lens).expect("feasible split");
        push(format!("theta{:?}", lens), g);
    }
    Corpus { entries }
}

/// Small 2-edge-connected corpus: everything biconnected from
/// `small_2vc_corpus` plus figure-eights and cycles glued at a vertex or
/// along a path, which are 2-edge-connected without being biconnected.
pub fn small_2ec_corpus(max_n: usize) -> Corpus<UnGraph> {
    let mut c = small_2vc_corpus(max_n);
    let mut push = |family: String, graph: UnGraph| {
        debug_assert!(
            undirected::is_two_edge_connected(&graph),
            "{} not 2-edge-connected",
            family
        );
        c.entries.push(CorpusEntry {
            family,
            seed: 0,
            graph,
        });
    };
    for a in 3..=5usize {
        for b in 3..=5usize {
            if a + b - 1 <= max_n {
                push(format!("eight{}x{}", a, b), figure_eight(a, b));
            }
        }
    }
    // three cycles in a chain sharing single vertices
    push("chain3x3x3".into(), cycle_chain(&[3, 3, 3]));
    push("chain4x3x4".into(), cycle_chain(&[4, 3, 4]));
    c
}

/// Small strongly connected digraph corpus: directed cycles with arc
/// subsets, bidirected small graphs, and orientations with twins.
pub fn small_sc_corpus(max_n: usize) -> Corpus<Digraph> {
    let mut entries = Vec::new();
    let mut push = |family: String, graph: Digraph| {
        debug_assert!(digraph::is_strongly_connected(&graph));
        entries.push(CorpusEntry {
            family,
            seed: 0,
            graph,
        });
    };
    for n in 2..=max_n.min(5) {
        let extra = all_arcs_not_on_cycle(n);
        for mask in 0..(1u32 << extra.len().min(10)) {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            for (i, &arc) in extra.iter().enumerate() {
                if i < 10 && mask & (1 << i) != 0 {
                    edges.push(arc);
                }
            }
            push(
                format!("dicycle{}+mask{}", n, mask),
                Digraph::new(n, edges).expect("simple"),
            );
        }
    }
    for n in 3..=max_n {
        push(format!("dicycle{}", n), directed_cycle(n));
        push(format!("bicycle{}", n), bidirect(&gen_cycle(n)));
    }
    push("biclique4".into(), bidirect(&gen_clique(4)));
    Corpus { entries }
}

fn directed_cycle(n: usize) -> Digraph {
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("simple")
}

fn all_chords(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) {
                out.push((i, j));
            }
        }
    }
    out
}

fn cycle_with_chords(
    n: usize,
    chords: &[(usize, usize)],
    include: impl Fn(usize) -> bool,
) -> UnGraph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for (i, &c) in chords.iter().enumerate() {
        if include(i) {
            edges.push(c);
        }
    }
    UnGraph::new(n, edges).expect("simple")
}

fn wheel(n: usize) -> UnGraph {
    // hub n-1 joined to a rim cycle of n-1 vertices
    let rim = n - 1;
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    for i in 0..rim {
        edges.push((i, rim));
    }
    UnGraph::new(n, edges).expect("simple")
}

fn complete_bipartite(a: usize, b: usize) -> UnGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    UnGraph::new(a + b, edges).expect("simple")
}

fn figure_eight(a: usize, b: usize) -> UnGraph {
    // two cycles of sizes a and b sharing vertex 0
    let mut edges: Vec<(usize, usize)> = (0..a).map(|i| (i, (i + 1) % a)).collect();
    let off = a - 1;
    for i in 0..b {
        let x = if i == 0 { 0 } else { off + i };
        let y = if i == b - 1 { 0 } else { off + i + 1 };
        edges.push((x, y));
    }
    UnGraph::new(a + b - 1, edges).expect("simple")
}

fn cycle_chain(sizes: &[usize]) -> UnGraph {
    let mut edges = Vec::new();
    let mut shared = 0usize;
    let mut next = 1usize;
    for &s in sizes {
        let mut prev = shared;
        for _ in 0..s - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, shared));
        shared = prev;
    }
    UnGraph::new(next, edges).expect("simple")
}

fn theta_length_splits(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 2..=4usize {
        for base in 1..=3usize {
            let lens: Vec<usize> = (0..k).map(|i| base + usize::from(i > 0)).collect();
            let n = 2 + lens.iter().map(|&l| l - 1).sum::<usize>();
            if n <= max_n && lens.iter().filter(|&&l| l == 1).count() <= 1 {
                out.push(lens);
            }
        }
    }
    out.push(vec![2, 2, 2]);
    out.dedup();
    out
}

fn all_arcs_not_on_cycle(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && (i + 1) % n != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn is_biconnected(g: &UnGraph) -> bool {
    if g.vertex_count() < 3 {
        return false;
    }
    let (_, aps) = undirected::bridges_and_articulation_points(g);
    aps.is_empty() && undirected::components(g).len() == 1
}

/// 200 seeded random biconnected graphs with n <= 60, m <= 240, plus the
/// exhaustive small corpus.
pub fn vertex_cutpair_corpus() -> Corpus<UnGraph> {
    let mut c = small_2vc_corpus(8);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for seed in 0..200u64 {
        let n = rng.gen_range(4..=60);
        let max_m = (n * (n - 1) / 2).min(240);
        let m = rng.gen_range(n..=max_m);
        let graph = gen_random_2vc(n, m, seed).expect("feasible parameters");
        c.entries.push(CorpusEntry {
            family: "random2vc".into(),
            seed,
            graph,
        });
    }
    c
}

/// Same shape as `vertex_cutpair_corpus` with 2-edge-connected instances.
pub fn edge_cutpair_corpus() -> Corpus<UnGraph> {
    let mut c = small_2ec_corpus(8);
    let mut rng = ChaCha8Rng::seed_from_u64(4048);
    for seed in 0..200u64 {
        let n = rng.gen_range(4..=60);
        let max_m = (n * (n - 1) / 2).min(240);
        let m = rng.gen_range(n..=max_m);
        let graph = gen_random_2ec(n, m, seed).expect("feasible parameters");
        c.entries.push(CorpusEntry {
            family: "random2ec".into(),
            seed,
            graph,
        });
    }
    c
}

/// 200 random twinless strongly connected digraphs with n <= 40.
pub fn twinless_corpus() -> Corpus<Digraph> {
    let mut entries = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7177);
    for seed in 0..200u64 {
        let n = rng.gen_range(3..=40);
        let max_m = (n * (n - 1)).min(3 * n);
        let m = rng.gen_range(n..=max_m);
        let graph = gen_random_twinless_sc(n, m, seed).expect("feasible parameters");
        entries.push(CorpusEntry {
            family: "randomtsc".into(),
            seed,
            graph,
        });
    }
    Corpus { entries }
}

/// Small exhaustive strongly connected corpus (n <= 9) plus 200 random
/// strongly connected digraphs with n <= 40.
pub fn strong_connectivity_corpus() -> Corpus<Digraph> {
    let mut c = small_sc_corpus(9);
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    for seed in 0..200u64 {
        let n = rng.gen_range(2..=40);
        let max_m = (n * (n - 1)).min(4 * n);
        let m = rng.gen_range(n..=max_m);
        let graph = gen_random_sc(n, m, seed).expect("feasible parameters");
        c.entries.push(CorpusEntry {
            family: "randomsc".into(),
            seed,
            graph,
        });
    }
    c
}

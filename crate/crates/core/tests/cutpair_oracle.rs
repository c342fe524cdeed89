//! The linear-time cut-pair counters against exhaustive deletion oracles,
//! including per-case classification, query soundness and invariance of the
//! totals under relabelling.

use twincut_core::dfs::run_dfs;
use twincut_core::edge_cutpairs;
use twincut_core::gen;
use twincut_core::graph::UnGraph;
use twincut_core::oracle::{self, PairCase};
use twincut_core::vertex_cutpairs;

fn vertex_corpus() -> Vec<(String, UnGraph)> {
    gen::small_2vc_corpus(7)
        .entries
        .into_iter()
        .map(|e| (e.family, e.graph))
        .chain((0..60u64).map(|seed| {
            let n = 4 + (seed as usize * 7) % 40;
            let m = (n + (seed as usize * 13) % (2 * n)).min(n * (n - 1) / 2);
            (
                format!("rand/{seed}"),
                gen::gen_random_2vc(n, m, seed).unwrap(),
            )
        }))
        .collect()
}

fn edge_corpus() -> Vec<(String, UnGraph)> {
    gen::small_2ec_corpus(7)
        .entries
        .into_iter()
        .map(|e| (e.family, e.graph))
        .chain((0..60u64).map(|seed| {
            let n = 4 + (seed as usize * 5) % 40;
            let m = (n + (seed as usize * 11) % (2 * n)).min(n * (n - 1) / 2);
            (
                format!("rand/{seed}"),
                gen::gen_random_2ec(n, m, seed).unwrap(),
            )
        }))
        .collect()
}

#[test]
fn vertex_counts_match_oracle() {
    for (name, g) in vertex_corpus() {
        let rep = vertex_cutpairs::count_all(&g).unwrap();
        for v in 0..g.vertex_count() {
            assert_eq!(
                rep.count(v),
                oracle::oracle_count_v(&g, v),
                "count({v}) mismatch on {name}"
            );
        }
    }
}

#[test]
fn vertex_case_subtotals_match_oracle_classification() {
    for (name, g) in vertex_corpus() {
        let rep = vertex_cutpairs::count_all(&g).unwrap();
        let mut d = run_dfs(&g, 0).unwrap();
        d.compute_b_counts();
        d.compute_high();
        d.compute_high_p();
        d.compute_m();
        d.compute_m_p();
        for v in 0..g.vertex_count() {
            let mut by_case = [0usize; 5];
            for e in oracle::oracle_cut_edges_v(&g, v) {
                let idx = match oracle::classify_pair(&d, d.from_input[v], e) {
                    PairCase::BackEdge => 0,
                    PairCase::MEqV => 1,
                    PairCase::MDesc => 2,
                    PairCase::HighEqV => 3,
                    PairCase::HighLtV => 4,
                };
                by_case[idx] += 1;
            }
            let s = rep.subtotals(v);
            assert_eq!(
                [s.back_edge, s.m_eq_v, s.m_desc, s.high_eq_v, s.high_lt_v],
                by_case,
                "case split mismatch for vertex {v} on {name}"
            );
        }
    }
}

#[test]
fn vertex_queries_match_oracle_sets() {
    for (name, g) in vertex_corpus() {
        let rep = vertex_cutpairs::count_all(&g).unwrap();
        for v in 0..g.vertex_count() {
            let mut got = rep.query_cut_edges(v);
            got.sort_unstable();
            got.dedup();
            let expect = oracle::oracle_cut_edges_v(&g, v);
            assert_eq!(got, expect, "C({v}) mismatch on {name}");
            assert_eq!(got.len(), rep.count(v), "|C({v})| != count on {name}");
        }
    }
}

#[test]
fn edge_counts_match_oracle() {
    for (name, g) in edge_corpus() {
        let rep = edge_cutpairs::count_all_edges(&g).unwrap();
        for e in 0..g.edge_count() {
            assert_eq!(
                rep.count(e),
                oracle::oracle_count_e(&g, e),
                "count(edge {e}) mismatch on {name}"
            );
        }
    }
}

#[test]
fn edge_queries_match_oracle_sets() {
    for (name, g) in edge_corpus() {
        let rep = edge_cutpairs::count_all_edges(&g).unwrap();
        for e in 0..g.edge_count() {
            let mut got = rep.query_cut_edges_for_edge(e).unwrap();
            got.sort_unstable();
            got.dedup();
            let expect = oracle::oracle_cut_edges_e(&g, e);
            assert_eq!(got, expect, "partners of edge {e} mismatch on {name}");
        }
    }
}

#[test]
fn tree_tree_pairs_share_high_and_m() {
    // every oracle-found tree-tree pair has equal high and M labels
    for (name, g) in edge_corpus().into_iter().take(250) {
        let mut d = run_dfs(&g, 0).unwrap();
        d.compute_b_counts();
        d.compute_high();
        d.compute_m();
        let tree_vertex: std::collections::HashMap<usize, usize> = (1..d.n)
            .map(|v| (d.tree_edge[v].unwrap(), v))
            .collect();
        for e in 0..g.edge_count() {
            let Some(&u) = tree_vertex.get(&e) else { continue };
            for f in oracle::oracle_cut_edges_e(&g, e) {
                let Some(&w) = tree_vertex.get(&f) else { continue };
                assert_eq!(d.high[u], d.high[w], "high differs in a pair on {name}");
                assert_eq!(d.m[u], d.m[w], "M differs in a pair on {name}");
            }
        }
    }
}

#[test]
fn unique_escape_is_m_low() {
    // when exactly one back edge leaves T(u), it is (M(u), low(u))
    for (name, g) in edge_corpus().into_iter().take(250) {
        let mut d = run_dfs(&g, 0).unwrap();
        d.compute_b_counts();
        d.compute_m();
        for u in 1..d.n {
            if d.b_count_above[u] != 1 {
                continue;
            }
            let escapes: Vec<_> = d
                .back_edges
                .iter()
                .filter(|be| d.is_ancestor(u, be.source) && be.target < u)
                .collect();
            assert_eq!(escapes.len(), 1, "b_count lied on {name}");
            assert_eq!(Some(escapes[0].source), d.m[u], "source != M on {name}");
            assert_eq!(Some(escapes[0].target), d.low[u], "target != low on {name}");
        }
    }
}

#[test]
fn tree_pair_relation_is_transitive() {
    // the cut-pair relation restricted to tree edges, with each edge's own
    // class, forms equivalence classes
    for (name, g) in edge_corpus().into_iter().take(150) {
        let rep = edge_cutpairs::count_all_edges(&g).unwrap();
        let d = run_dfs(&g, 0).unwrap();
        let is_tree: Vec<bool> = {
            let mut t = vec![false; g.edge_count()];
            for v in 1..d.n {
                t[d.tree_edge[v].unwrap()] = true;
            }
            t
        };
        let partners: Vec<Vec<usize>> = (0..g.edge_count())
            .map(|e| {
                rep.query_cut_edges_for_edge(e)
                    .unwrap()
                    .into_iter()
                    .filter(|&f| is_tree[f])
                    .collect()
            })
            .collect();
        for e in 0..g.edge_count() {
            if !is_tree[e] {
                continue;
            }
            for &f in &partners[e] {
                for &h in &partners[f] {
                    if h != e {
                        assert!(
                            partners[e].contains(&h),
                            "transitivity broken on {name}: {e} ~ {f} ~ {h}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn totals_are_invariant_under_relabelling() {
    // permuting the vertex ids moves the DFS root and tree, which moves the
    // per-case subtotals, but count(v) follows the permutation exactly
    for seed in 0..24u64 {
        let n = 6 + (seed as usize) % 20;
        let m = (n + (seed as usize) % n).min(n * (n - 1) / 2);
        let g = gen::gen_random_2vc(n, m, seed).unwrap();
        let base = vertex_cutpairs::count_all(&g).unwrap();

        let perm: Vec<usize> = (0..n).map(|v| (v + 1 + seed as usize) % n).collect();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        let h = UnGraph::new(n, edges).unwrap();
        let moved = vertex_cutpairs::count_all(&h).unwrap();
        for v in 0..n {
            assert_eq!(base.count(v), moved.count(perm[v]), "seed {seed} vertex {v}");
        }
    }
}

//! Structural invariants checked over randomized inputs.

use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;

use twincut_core::graph::{parse, ParsedGraph, UnGraph};
use twincut_core::undirected;

use helpers::{random_connected, random_digraph, random_subset, random_ungraph};

// rand's traits clash with the proptest prelude, so the seeded builders live
// in their own scope
mod helpers {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;
    use twincut_core::graph::{Digraph, UnGraph};

    /// Random simple undirected graph, not necessarily connected.
    pub fn random_ungraph(n: usize, m_target: usize, seed: u64) -> UnGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for _ in 0..4 * m_target + 16 {
            if edges.len() >= m_target {
                break;
            }
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && seen.insert((a.min(b), a.max(b))) {
                edges.push((a, b));
            }
        }
        UnGraph::new(n, edges).unwrap()
    }

    pub fn random_digraph(n: usize, m_target: usize, seed: u64) -> Digraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for _ in 0..4 * m_target + 16 {
            if edges.len() >= m_target {
                break;
            }
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && seen.insert((a, b)) {
                edges.push((a, b));
            }
        }
        Digraph::new(n, edges).unwrap()
    }

    pub fn random_subset(n: usize, p: f64, seed: u64) -> Vec<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).filter(|_| rng.gen_bool(p)).collect()
    }

    /// Connected random graph: a random tree plus extra edges.
    pub fn random_connected(seed: u64) -> UnGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..24usize);
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for v in 1..n {
            let p = rng.gen_range(0..v);
            seen.insert((p, v));
            edges.push((p, v));
        }
        for _ in 0..rng.gen_range(0..2 * n) {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && seen.insert((a.min(b), a.max(b))) {
                edges.push((a, b));
            }
        }
        UnGraph::new(n, edges).unwrap()
    }
}

// independent component counter for the brute-force connectivity checks
fn component_count(g: &UnGraph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    count
}

proptest! {
    #[test]
    fn parse_serialize_roundtrip_undirected(n in 1usize..24, m in 0usize..40, seed: u64) {
        let g = random_ungraph(n, m, seed);
        match parse(&g.serialize()) {
            Ok(ParsedGraph::Undirected(h)) => prop_assert_eq!(g, h),
            other => prop_assert!(false, "unexpected parse result: {:?}", other),
        }
    }

    #[test]
    fn parse_serialize_roundtrip_directed(n in 1usize..24, m in 0usize..60, seed: u64) {
        let g = random_digraph(n, m, seed);
        match parse(&g.serialize()) {
            Ok(ParsedGraph::Directed(h)) => prop_assert_eq!(g, h),
            other => prop_assert!(false, "unexpected parse result: {:?}", other),
        }
    }

    #[test]
    fn underlying_edge_count_is_distinct_pairs(n in 2usize..20, m in 0usize..60, seed: u64) {
        let g = random_digraph(n, m, seed);
        let pairs: HashSet<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        prop_assert_eq!(g.underlying().graph.edge_count(), pairs.len());
    }

    #[test]
    fn delete_agrees_with_complement_induced(n in 2usize..20, m in 0usize..40, seed: u64, k in 0usize..6) {
        let g = random_ungraph(n, m, seed);
        let drop = random_subset(n, k as f64 / 8.0 + 0.05, seed ^ 0xabc);
        let keep: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
        let (a, _) = g.delete(&drop, &[]).unwrap();
        let (b, _) = g.induced(&keep).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn two_ecc_classes_count_is_bridges_plus_one(seed: u64) {
        let g = random_connected(seed);
        let (bridges, _) = undirected::bridges_and_articulation_points(&g);
        let classes = undirected::two_edge_connected_components(&g);
        prop_assert_eq!(classes.len(), bridges.len() + 1);
    }

    #[test]
    fn bridges_and_aps_match_deletion_counts(n in 2usize..13, m in 1usize..26, seed: u64) {
        let g = random_ungraph(n, m, seed);
        let base = component_count(&g);
        let (bridges, aps) = undirected::bridges_and_articulation_points(&g);
        for e in 0..g.edge_count() {
            let (h, _) = g.delete(&[], &[e]).unwrap();
            prop_assert_eq!(component_count(&h) > base, bridges.contains(&e));
        }
        for v in 0..n {
            let (h, _) = g.delete(&[v], &[]).unwrap();
            prop_assert_eq!(component_count(&h) > base, aps.contains(&v));
        }
    }

    #[test]
    fn block_structure_invariants(n in 3usize..14, m in 2usize..30, seed: u64) {
        let g = random_ungraph(n, m, seed);
        let f = undirected::block_forest(&g);
        // each edge in exactly one block, endpoints inside
        for e in 0..g.edge_count() {
            let b = f.block_of_edge[e];
            let (x, y) = g.endpoints(e);
            prop_assert!(f.blocks[b].contains(&x) && f.blocks[b].contains(&y));
        }
        // a vertex sits in >= 2 blocks iff it is an articulation point
        for v in 0..n {
            prop_assert_eq!(
                f.blocks_of_vertex[v].len() >= 2,
                f.articulation_points.contains(&v)
            );
        }
        // a block with >= 3 vertices contains no bridge of g
        let (bridges, _) = undirected::bridges_and_articulation_points(&g);
        for &e in &bridges {
            prop_assert_eq!(f.blocks[f.block_of_edge[e]].len(), 2);
        }
    }
}

#[test]
fn ap_deletion_check_handles_cut_leaves() {
    // a path: deleting the middle splits, deleting an end does not
    let g = UnGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    let (_, aps) = undirected::bridges_and_articulation_points(&g);
    assert_eq!(aps, vec![1]);
}

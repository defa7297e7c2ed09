//! Seeded randomized properties tying the tree-side theory to matrix oracles
//! and to directly built plane graphs.

mod common;

use graph_core::{
    build_outerplane, cycle_intersection_matrix, trees_isomorphic_weighted, weak_dual, Tree,
};
use int_linalg::{cokernel_torsion, determinant, minor_gcd};
use num_traits::Signed;
use outerplanar_groups::{
    build_flower_graph, delta_sequence, enumerate_2matchings, flower_group, flower_tau,
    group_of_outerplane, minimal_2matchings, polygon_matrix, tau_polygon_chain,
    tau_polygon_chain_by_matchings, Attachment, PolygonChainSpec, PolygonFlowerSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Decodes a uniformly random labeled tree from a random sequence.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
    if n == 1 {
        return Tree::from_edges(1, &[]).unwrap();
    }
    if n == 2 {
        return Tree::from_edges(2, &[(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut remaining: Vec<usize> = vec![0; n];
    for &s in &seq {
        remaining[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in &seq {
        let leaf = (0..n).find(|&v| !used[v] && remaining[v] == 0).unwrap();
        used[leaf] = true;
        edges.push((leaf, s));
        remaining[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && remaining[v] == 0).collect();
    assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).unwrap()
}

fn random_lengths(rng: &mut ChaCha8Rng, t: &Tree) -> Vec<usize> {
    (0..t.vertex_count())
        .map(|v| rng.gen_range(t.degree(v).max(2)..=7))
        .collect()
}

#[test]
fn delta_sequences_match_minor_gcds_of_both_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_3001);
    for round in 0..35 {
        let n = rng.gen_range(1..=8);
        let t = random_tree(&mut rng, n);
        let c = random_lengths(&mut rng, &t);
        let d = delta_sequence(&t, &c).unwrap();
        let a = polygon_matrix(&t, &c);
        let pg = build_outerplane(&t, &c).unwrap();
        let cm = cycle_intersection_matrix(&pg).unwrap();
        for k in 1..=n {
            assert_eq!(
                d.deltas()[k - 1],
                minor_gcd(&a, k),
                "round {round} k={k} tree {:?} lengths {c:?}",
                t.edges()
            );
            assert_eq!(
                d.deltas()[k - 1],
                minor_gcd(&cm, k),
                "built-graph minors, round {round} k={k}"
            );
        }
        assert_eq!(group_of_outerplane(&t, &c).unwrap(), cokernel_torsion(&cm));
        assert_eq!(d.tau(), &pg.graph().spanning_tree_count());
        assert_eq!(d.tau(), &determinant(&a).abs());
    }
}

#[test]
fn minimal_sets_agree_with_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_3002);
    for _ in 0..25 {
        let n = rng.gen_range(1..=7);
        let t = random_tree(&mut rng, n);
        for k in 0..=n {
            let all = enumerate_2matchings(&t, k).unwrap();
            // Every enumerated selection respects the incidence budget.
            for m in &all {
                let mut incidences = vec![0usize; n];
                for &v in &m.loops {
                    incidences[v] += 2;
                }
                for &e in &m.tree_edges {
                    let (u, v) = t.edges()[e];
                    incidences[u] += 1;
                    incidences[v] += 1;
                }
                assert!(incidences.iter().all(|&x| x <= 2));
                assert_eq!(m.loops.len() + m.tree_edges.len(), k);
            }
            // Inclusion-minimal loop sets from the raw enumeration must match
            // the direct computation.
            let mut achieved: Vec<Vec<usize>> =
                all.iter().map(|m| m.loops.clone()).collect();
            achieved.sort();
            achieved.dedup();
            let mut expected: Vec<Vec<usize>> = achieved
                .iter()
                .filter(|s| {
                    !achieved.iter().any(|other| {
                        other.len() < s.len()
                            && other.iter().all(|v| s.contains(v))
                    })
                })
                .cloned()
                .collect();
            expected.sort();
            let got: Vec<Vec<usize>> = minimal_2matchings(&t, k)
                .unwrap()
                .iter()
                .map(|m| m.loops.clone())
                .collect();
            assert_eq!(got, expected, "n={n} k={k} tree {:?}", t.edges());
        }
    }
}

#[test]
fn chain_routes_agree_on_random_specs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_3003);
    for _ in 0..40 {
        let n = rng.gen_range(1..=10);
        let lengths: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=9)).collect();
        let spec = PolygonChainSpec::new(lengths.clone()).unwrap();
        let tau = tau_polygon_chain(&spec);
        assert_eq!(tau, tau_polygon_chain_by_matchings(&spec).unwrap());

        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        let path = Tree::from_edges(n, &edges).unwrap();
        assert_eq!(tau, determinant(&polygon_matrix(&path, &lengths)).abs());
        let g = group_of_outerplane(&path, &lengths).unwrap();
        assert!(g.is_cyclic(), "lengths {lengths:?}");
        assert_eq!(g.order(), &tau);
    }
}

#[test]
fn random_flowers_match_their_built_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_3004);
    for round in 0..30 {
        let l = rng.gen_range(3..=5);
        let chains: Vec<(PolygonChainSpec, Attachment)> = (0..l)
            .map(|_| {
                let len = rng.gen_range(1..=3);
                let mut ks: Vec<usize> =
                    (0..len).map(|_| rng.gen_range(2..=6)).collect();
                let attach = if rng.gen_bool(0.5) {
                    Attachment::First
                } else {
                    Attachment::Last
                };
                let end = match attach {
                    Attachment::First => 0,
                    Attachment::Last => len - 1,
                };
                ks[end] = ks[end].max(3);
                (PolygonChainSpec::new(ks).unwrap(), attach)
            })
            .collect();
        let spec = PolygonFlowerSpec::new(l, chains).unwrap();

        let pg = build_flower_graph(&spec);
        let tau = flower_tau(&spec);
        assert_eq!(
            tau,
            pg.graph().spanning_tree_count(),
            "round {round}: {spec:?}"
        );
        let cm = cycle_intersection_matrix(&pg).unwrap();
        let g = flower_group(&spec);
        assert_eq!(g, cokernel_torsion(&cm), "round {round}: {spec:?}");
        assert_eq!(g.order(), &tau);

        // The faces of the built graph hang together like the intended
        // star-of-paths, lengths included.
        let wd = weak_dual(&pg).unwrap();
        let wd_tree = Tree::from_edges(
            wd.graph.vertex_count(),
            &wd.graph.edges().to_vec(),
        )
        .unwrap();
        let wd_weights: Vec<usize> = (0..wd_tree.vertex_count())
            .map(|v| pg.faces()[wd.face_of_vertex[v]].len())
            .collect();
        let spider = spec.spider_tree();
        let spider_weights = spec.spider_lengths();
        assert!(
            trees_isomorphic_weighted(&wd_tree, &wd_weights, &spider, &spider_weights),
            "round {round}: {spec:?}"
        );
    }
}

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use duality_core::chains::GeometricDualPair;
use duality_core::embed::{enumerate_spherical_embeddings, geometric_dual, trace_faces};
use duality_core::graph::{rank, Signs};
use duality_core::knot::{checkerboard, diagram_from_signed_gdp, goeritz, LinkDiagram};
use duality_core::matroid::{find_2_isomorphism, is_2_isomorphism, is_abstract_duality, is_graph_isomorphism};
use duality_core::{EdgeBijection, EdgeId, GraphIso, MultiGraph, Sign, SignedGraph, VertexId};

/// Random connected multigraph: a random tree plus extra edges (loops and
/// parallels allowed).
fn connected(seed: u64, n: u32, extra: u32) -> MultiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((edges.len() as u32, rng.gen_range(0..v), v));
    }
    for _ in 0..extra {
        edges.push((edges.len() as u32, rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    let mut g = MultiGraph::from_edges(&edges).unwrap();
    g.add_vertex(VertexId(0));
    g
}

fn graph_strategy() -> impl Strategy<Value = MultiGraph> {
    (any::<u64>(), 1u32..=5, 0u32..=4).prop_map(|(s, n, x)| connected(s, n, x))
}

fn subset(g: &MultiGraph, bits: u32) -> BTreeSet<EdgeId> {
    g.edge_ids().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, e)| e).collect()
}

/// Random renaming of a graph's vertices and edges.
fn renamed(g: &MultiGraph, seed: u64) -> (MultiGraph, GraphIso) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vs: Vec<u32> = (0..g.vertex_count() as u32).map(|v| 2 * v + 1).collect();
    let mut es: Vec<u32> = (0..g.edge_count() as u32).map(|e| 3 * e + 2).collect();
    vs.shuffle(&mut rng);
    es.shuffle(&mut rng);
    let vertex_map: BTreeMap<_, _> = g.vertices().zip(vs.into_iter().map(VertexId)).collect();
    let edge_map: BTreeMap<_, _> = g.edge_ids().zip(es.into_iter().map(EdgeId)).collect();
    let h = g.relabel(&vertex_map, &edge_map).unwrap();
    (h, GraphIso { vertex_map, edge_map: EdgeBijection::new(edge_map) })
}

fn random_signs(g: &MultiGraph, seed: u64) -> Signs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    g.edge_ids().map(|e| (e, if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_is_a_matroid_rank(g in graph_strategy(), a in any::<u32>(), b in any::<u32>()) {
        let (x, y) = (subset(&g, a), subset(&g, b));
        let r = |s: &BTreeSet<EdgeId>| rank(&g, s).unwrap();
        prop_assert!(r(&x) <= x.len());
        let union: BTreeSet<_> = &x | &y;
        let inter: BTreeSet<_> = &x & &y;
        prop_assert!(r(&inter) <= r(&x) && r(&x) <= r(&union));
        prop_assert!(r(&union) + r(&inter) <= r(&x) + r(&y));
    }

    #[test]
    fn bijections_compose(g in graph_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (h, f) = renamed(&g, s1);
        let (k, u) = renamed(&h, s2);
        let fu = f.then(&u).unwrap();
        prop_assert!(fu.is_valid(&g, &k));
        prop_assert_eq!(fu.edge_map.inverse(), u.edge_map.inverse().then(&f.edge_map.inverse()).unwrap());
        prop_assert!(f.edge_map.then(&f.edge_map.inverse()).unwrap().is_identity());
    }

    #[test]
    fn renaming_preserves_matroid_maps(g in graph_strategy(), seed in any::<u64>()) {
        let (h, iso) = renamed(&g, seed);
        prop_assert!(is_2_isomorphism(&g, &h, &iso.edge_map).unwrap());
        prop_assert!(is_graph_isomorphism(&g, &h, None).unwrap().is_some());
        let found = find_2_isomorphism(&g, &h, None).unwrap().expect("isomorphic graphs are 2-isomorphic");
        prop_assert!(is_2_isomorphism(&g, &h, &found).unwrap());
    }

    #[test]
    fn embeddings_satisfy_euler(g in graph_strategy(), pick in 0usize..8) {
        let emb = enumerate_spherical_embeddings(&g).unwrap().nth(pick);
        if let Some(emb) = emb {
            let faces = trace_faces(&emb).len();
            prop_assert_eq!(g.vertex_count() + faces, g.edge_count() + 2);
            let d = geometric_dual(&emb);
            prop_assert_eq!(d.graph.vertex_count(), faces);
            prop_assert_eq!(d.graph.edge_count(), g.edge_count());
            prop_assert!(is_abstract_duality(&g, &d.graph, &d.map).unwrap());
            let dd = geometric_dual(&d.embedding);
            prop_assert!(dd.graph.vertex_count() == g.vertex_count());
        }
    }

    #[test]
    fn diagrams_survive_pd_text(g in graph_strategy(), seed in any::<u64>()) {
        let signs = random_signs(&g, seed);
        let pair = GeometricDualPair::first(&g).unwrap();
        let d = diagram_from_signed_gdp(&pair, &signs).unwrap();
        prop_assert_eq!(LinkDiagram::parse_pd(&d.to_pd()).unwrap(), d.clone());
        let cb = checkerboard(&d).unwrap();
        prop_assert_eq!(cb.shaded.graph.edge_count(), g.edge_count());
        for e in cb.shaded.graph.edge_ids() {
            prop_assert_eq!(cb.shaded.signs[&e], -cb.unshaded.signs[&e]);
        }
    }

    #[test]
    fn goeritz_is_a_symmetric_laplacian(g in graph_strategy(), seed in any::<u64>()) {
        let sg = SignedGraph::new(g.clone(), random_signs(&g, seed)).unwrap();
        let m = goeritz(&sg, VertexId(0)).unwrap();
        let n = m.unreduced.len();
        for i in 0..n {
            prop_assert_eq!(m.unreduced[i].iter().sum::<i64>(), 0);
            for j in 0..n {
                prop_assert_eq!(m.unreduced[i][j], m.unreduced[j][i]);
            }
        }
        // on a connected graph the reduced determinant does not depend on
        // the dropped vertex
        let other = goeritz(&sg, VertexId(g.vertex_count() as u32 - 1)).unwrap();
        prop_assert_eq!(m.determinant(), other.determinant());
    }
}

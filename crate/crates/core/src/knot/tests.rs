use super::*;
use crate::chains::GeometricDualPair;
use crate::graph::{one_point_union, SignedGraph, Signs};
use crate::maps::EdgeBijection;
use crate::matroid::is_graph_isomorphism;

fn trefoil() -> LinkDiagram {
    LinkDiagram::parse_pd("X 1 4 2 5 -1\nX 3 6 4 1 -1\nX 5 2 6 3 -1\n").unwrap()
}

fn g(edges: &[(u32, u32, u32)]) -> MultiGraph {
    MultiGraph::from_edges(edges).unwrap()
}

fn signed_iso(a: &SignedGraph, b: &SignedGraph) -> bool {
    is_graph_isomorphism(&a.graph, &b.graph, Some((&a.signs, &b.signs))).unwrap().is_some()
}

fn uniform(sg: &SignedGraph) -> Option<Sign> {
    let first = *sg.signs.values().next()?;
    sg.signs.values().all(|s| *s == first).then_some(first)
}

#[test]
fn parse_and_print() {
    let t = trefoil();
    assert_eq!(t.crossing_count(), 3);
    assert_eq!(LinkDiagram::parse_pd(&t.to_pd()).unwrap(), t);
    assert!(matches!(LinkDiagram::parse_pd("X 1 2 3\n"), Err(Error::BadPdCode(_))));
    assert!(matches!(LinkDiagram::parse_pd("X 1 1 1 2 +1\n"), Err(Error::BadPdCode(_))));
    assert!(matches!(LinkDiagram::parse_pd("X 1 2 3 4 +2\n"), Err(Error::BadPdCode(_))));
    // interleaved kink orders cannot be drawn on the sphere
    assert!(matches!(LinkDiagram::parse_pd("X 1 2 1 2 +1\n"), Err(Error::BadPdCode(_))));
}

#[test]
fn trefoil_checkerboard() {
    let cb = checkerboard(&trefoil()).unwrap();
    let tri = g(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]);
    let theta = g(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)]);
    let (small, big) = if cb.shaded.graph.vertex_count() == 2 { (&cb.shaded, &cb.unshaded) } else { (&cb.unshaded, &cb.shaded) };
    assert!(is_graph_isomorphism(&big.graph, &tri, None).unwrap().is_some());
    assert!(is_graph_isomorphism(&small.graph, &theta, None).unwrap().is_some());
    let (s1, s2) = (uniform(big).unwrap(), uniform(small).unwrap());
    assert_eq!(s1, -s2);
}

#[test]
fn recoloring_swaps_graphs() {
    let t = trefoil();
    let a = checkerboard_with(&t, Coloring::Standard).unwrap();
    let b = checkerboard_with(&t, Coloring::Reversed).unwrap();
    assert_eq!(a.shaded, b.unshaded);
    assert_eq!(a.unshaded, b.shaded);
}

#[test]
fn kinks_and_empty_diagram() {
    let empty = checkerboard(&LinkDiagram::default()).unwrap();
    for sg in [&empty.shaded, &empty.unshaded] {
        assert_eq!((sg.graph.vertex_count(), sg.graph.edge_count()), (1, 0));
    }
    let lp = SignedGraph::uniform(g(&[(0, 0, 0)]), Sign::Plus);
    let d = diagram_from_signed_gdp(&GeometricDualPair::first(&lp.graph).unwrap(), &lp.signs).unwrap();
    assert_eq!(d.crossing_count(), 1);
    let cb = checkerboard(&d).unwrap();
    let loops = [&cb.shaded, &cb.unshaded].into_iter().filter(|s| s.graph.is_loop(EdgeId(0))).count();
    assert_eq!(loops, 1);
    assert_eq!(cb.shaded.signs[&EdgeId(0)], -cb.unshaded.signs[&EdgeId(0)]);
    let br = SignedGraph::uniform(g(&[(0, 0, 1)]), Sign::Minus);
    let d = diagram_from_signed_gdp(&GeometricDualPair::first(&br.graph).unwrap(), &br.signs).unwrap();
    let cb = checkerboard(&d).unwrap();
    assert!(signed_iso(&cb.shaded, &br) || signed_iso(&cb.unshaded, &br));
}

#[test]
fn round_trip_triangle() {
    let tri = SignedGraph::uniform(g(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]), Sign::Minus);
    let pair = GeometricDualPair::first(&tri.graph).unwrap();
    let d = diagram_from_signed_gdp(&pair, &tri.signs).unwrap();
    assert_eq!(d.crossing_count(), 3);
    let cb = checkerboard(&d).unwrap();
    let dual = SignedGraph::uniform(pair.dual.clone(), Sign::Plus);
    let straight = signed_iso(&cb.unshaded, &tri) && signed_iso(&cb.shaded, &dual);
    let swapped = signed_iso(&cb.shaded, &tri) && signed_iso(&cb.unshaded, &dual);
    assert!(straight || swapped);
}

#[test]
fn split_diagram_has_disconnected_graph() {
    // two separate one-crossing kinks
    let lp = SignedGraph::uniform(g(&[(0, 0, 0)]), Sign::Plus);
    let kink = diagram_from_signed_gdp(&GeometricDualPair::first(&lp.graph).unwrap(), &lp.signs).unwrap();
    let mut second = kink.crossings[0];
    second.arcs = second.arcs.map(|a| a + 2);
    let split = LinkDiagram::new(vec![kink.crossings[0], second]).unwrap();
    let cb = checkerboard(&split).unwrap();
    let connected = [&cb.shaded, &cb.unshaded].iter().filter(|s| crate::graph::is_connected(&s.graph)).count();
    assert_eq!(connected, 1);
    let a = checkerboard_with(&split, Coloring::Reversed).unwrap();
    assert_eq!(a.shaded, cb.unshaded);
}

#[test]
fn goeritz_examples() {
    let tri = g(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]);
    let minus = goeritz(&SignedGraph::uniform(tri.clone(), Sign::Minus), VertexId(0)).unwrap();
    assert_eq!(minus.reduced, vec![vec![-2, 1], vec![1, -2]]);
    assert_eq!(minus.determinant(), 3);
    let plus = goeritz(&SignedGraph::uniform(tri, Sign::Plus), VertexId(2)).unwrap();
    assert_eq!(plus.reduced, vec![vec![2, -1], vec![-1, 2]]);
    let lp = goeritz(&SignedGraph::uniform(g(&[(0, 0, 0)]), Sign::Plus), VertexId(0)).unwrap();
    assert_eq!(lp.unreduced, vec![vec![0]]);
    let two = SignedGraph::uniform(MultiGraph::from_parts([0, 1], []).unwrap(), Sign::Plus);
    assert_eq!(goeritz(&two, VertexId(0)).unwrap().unreduced, vec![vec![0, 0], vec![0, 0]]);
    assert_eq!(goeritz(&two, VertexId(9)), Err(Error::UnknownVertex(VertexId(9))));
}

fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

#[test]
fn determinant_matches_cofactor_expansion() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(0..6);
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..4)).collect()).collect();
        assert_eq!(determinant(&m), cofactor_det(&m), "{m:?}");
    }
}

#[test]
fn trefoil_determinant() {
    let cb = checkerboard(&trefoil()).unwrap();
    for sg in [&cb.shaded, &cb.unshaded] {
        let v = sg.graph.vertices().next().unwrap();
        assert_eq!(goeritz(sg, v).unwrap().determinant().abs(), 3);
    }
}

fn diagram_of(sg: &SignedGraph) -> LinkDiagram {
    diagram_from_signed_gdp(&GeometricDualPair::first(&sg.graph).unwrap(), &sg.signs).unwrap()
}

/// The side of the diagram's checkerboard pair carrying `sg` (edge ids are
/// crossing indices, which follow `sg`'s edge order).
fn side_of(d: &LinkDiagram, sg: &SignedGraph) -> Shade {
    let cb = checkerboard(d).unwrap();
    if cb.shaded.graph.vertex_count() == sg.graph.vertex_count() && signed_iso(&cb.shaded, sg) {
        Shade::Shaded
    } else {
        Shade::Unshaded
    }
}

#[test]
fn diagram_chain_examples() {
    let t = trefoil();
    let cb = checkerboard(&t).unwrap();
    let id = EdgeBijection::identity(&cb.shaded.graph);
    assert!(diagram_chain(&t, Shade::Shaded, &t, Shade::Shaded, &id).unwrap().is_empty());

    // signed bowties glued at different vertices
    let t1 = g(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]);
    let t2 = g(&[(3, 0, 1), (4, 1, 2), (5, 2, 0)]);
    let a = one_point_union(&[t1.clone(), t2.clone()], &[VertexId(0), VertexId(0)]).unwrap().graph;
    let b = one_point_union(&[t1, t2], &[VertexId(0), VertexId(1)]).unwrap().graph;
    let signs: Signs = (0..6).map(|i| (EdgeId(i), if i == 4 { Sign::Minus } else { Sign::Plus })).collect();
    let (sa, sb) = (SignedGraph::new(a, signs.clone()).unwrap(), SignedGraph::new(b, signs).unwrap());
    let (da, db) = (diagram_of(&sa), diagram_of(&sb));
    let id = EdgeBijection::identity(&sa.graph);
    let chain = diagram_chain(&da, side_of(&da, &sa), &db, side_of(&db, &sb), &id).unwrap();
    assert!(!chain.is_empty());
    assert_eq!(chain.len() % 2, 0);

    let flipped: Signs = sa.signs.iter().map(|(e, s)| (*e, if e.0 == 0 { -*s } else { *s })).collect();
    let sc = SignedGraph::new(sb.graph.clone(), flipped).unwrap();
    let dc = diagram_of(&sc);
    assert_eq!(
        diagram_chain(&da, side_of(&da, &sa), &dc, side_of(&dc, &sc), &id),
        Err(Error::NotA2Isomorphism)
    );
}

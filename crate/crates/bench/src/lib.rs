//! Fixtures shared by the benchmarks.

use duality_core::graph::one_point_union;
use duality_core::{EdgeBijection, EdgeId, MultiGraph, VertexId};

/// Wheel with `n` spokes: hub 0, rim 1..=n.
pub fn wheel(n: u32) -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((2 * i, 0, i + 1));
        edges.push((2 * i + 1, i + 1, (i + 1) % n + 1));
    }
    MultiGraph::from_edges(&edges).unwrap()
}

/// `k` triangles in a row, consecutive ones glued at a vertex, and the
/// same triangles all glued at one vertex; the identity is a 2-isomorphism.
pub fn triangle_path(k: u32) -> (MultiGraph, MultiGraph, EdgeBijection) {
    let tri = |i: u32| MultiGraph::from_edges(&[(3 * i, 0, 1), (3 * i + 1, 1, 2), (3 * i + 2, 2, 0)]).unwrap();
    let mut path = tri(0);
    for i in 1..k {
        let t = tri(i);
        // glue vertex 0 of the new triangle to the last vertex of the path
        let last = path.max_vertex().unwrap();
        let base = last.0;
        let vmap = t.vertices().map(|v| (v, VertexId(if v.0 == 0 { base } else { base + v.0 }))).collect();
        let emap = t.edge_ids().map(|e| (e, e)).collect();
        let moved = t.relabel(&vmap, &emap).unwrap();
        for v in moved.vertices() {
            path.add_vertex(v);
        }
        for (e, a, b) in moved.edges() {
            path.add_edge(e, a, b).unwrap();
        }
    }
    let parts: Vec<MultiGraph> = (0..k).map(tri).collect();
    let star = one_point_union(&parts, &vec![VertexId(0); k as usize]).unwrap().graph;
    let f = EdgeBijection::new(path.edge_ids().map(|e| (e, EdgeId(e.0))).collect());
    (path, star, f)
}

pub const TREFOIL: &str = "X 1 4 2 5 -1\nX 3 6 4 1 -1\nX 5 2 6 3 -1\n";

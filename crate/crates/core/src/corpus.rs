//! Exhaustive lists of small connected multigraphs (loops and parallel edges
//! allowed), one per isomorphism class.

use std::collections::BTreeMap;

use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::matroid::is_graph_isomorphism;

type Invariant = (usize, Vec<(usize, usize)>, Vec<usize>);

fn invariant(g: &MultiGraph) -> Invariant {
    let mut per_vertex: Vec<(usize, usize)> =
        g.vertices().map(|v| (g.degree(v), g.edges().filter(|&(_, a, b)| a == v && b == v).count())).collect();
    per_vertex.sort();
    let mut mult: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for (_, a, b) in g.edges() {
        *mult.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    let mut mult: Vec<usize> = mult.into_values().collect();
    mult.sort();
    (g.vertex_count(), per_vertex, mult)
}

/// Graphs with one more edge, built by adding a loop, an edge between two
/// existing vertices, or a pendant edge to a new vertex.
fn extensions(g: &MultiGraph) -> Vec<MultiGraph> {
    let n = g.vertex_count() as u32;
    let id = EdgeId(g.edge_count() as u32);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut h = g.clone();
            h.add_edge(id, VertexId(a), VertexId(b)).unwrap();
            out.push(h);
        }
        let mut h = g.clone();
        h.add_vertex(VertexId(n));
        h.add_edge(id, VertexId(a), VertexId(n)).unwrap();
        out.push(h);
    }
    out
}

/// All connected multigraphs with exactly `k` edges for every `k ≤ max_edges`,
/// indexed by `k`. Vertices are `0..n` and edges `0..k`; the order within a
/// level is deterministic.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Vec<MultiGraph>> {
    let mut single = MultiGraph::new();
    single.add_vertex(VertexId(0));
    let mut levels = vec![vec![single]];
    for _ in 0..max_edges {
        let mut buckets: BTreeMap<Invariant, Vec<MultiGraph>> = BTreeMap::new();
        let mut level = Vec::new();
        for g in levels.last().unwrap() {
            for h in extensions(g) {
                let bucket = buckets.entry(invariant(&h)).or_default();
                let known = bucket.iter().any(|k| is_graph_isomorphism(k, &h, None).ok().flatten().is_some());
                if !known {
                    bucket.push(h.clone());
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Flattened [`connected_multigraphs`], smallest first.
pub fn corpus(max_edges: usize) -> Vec<MultiGraph> {
    connected_multigraphs(max_edges).into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_level_counts() {
        let levels = connected_multigraphs(3);
        // one edge: loop, bridge
        assert_eq!(levels[1].len(), 2);
        // two edges: two loops, loop on a bridge, digon, path
        assert_eq!(levels[2].len(), 4);
        assert!(levels.iter().flatten().all(|g| crate::graph::is_connected(g)));
    }
}

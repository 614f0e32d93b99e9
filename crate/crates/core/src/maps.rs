//! Edge bijections and graph isomorphism witnesses.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

/// A bijection between the edge sets of two graphs. The graphs themselves are
/// passed alongside wherever the bijection is checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeBijection {
    pub map: BTreeMap<EdgeId, EdgeId>,
}

impl EdgeBijection {
    pub fn new(map: BTreeMap<EdgeId, EdgeId>) -> Self {
        Self { map }
    }

    pub fn identity(g: &MultiGraph) -> Self {
        Self { map: g.edge_ids().map(|e| (e, e)).collect() }
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        Self { map: pairs.iter().map(|&(a, b)| (EdgeId(a), EdgeId(b))).collect() }
    }

    pub fn get(&self, e: EdgeId) -> Option<EdgeId> {
        self.map.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }

    pub fn inverse(&self) -> Self {
        Self { map: self.map.iter().map(|(&a, &b)| (b, a)).collect() }
    }

    /// `next ∘ self`: apply `self` first.
    pub fn then(&self, next: &EdgeBijection) -> Result<Self> {
        let map = self
            .map
            .iter()
            .map(|(&a, &b)| {
                next.get(b)
                    .map(|c| (a, c))
                    .ok_or_else(|| Error::BadBijection(format!("composition undefined at {b}")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { map })
    }

    pub fn restrict(&self, edges: &BTreeSet<EdgeId>) -> Self {
        Self { map: self.map.iter().filter(|(a, _)| edges.contains(a)).map(|(&a, &b)| (a, b)).collect() }
    }

    pub fn image(&self, edges: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
        edges.iter().filter_map(|e| self.get(*e)).collect()
    }

    /// Checks that this is a bijection `E(source) → E(target)`.
    pub fn check(&self, source: &MultiGraph, target: &MultiGraph) -> Result<()> {
        if self.map.len() != source.edge_count() || source.edge_count() != target.edge_count() {
            return Err(Error::BadBijection(format!(
                "{} pairs for {} source and {} target edges",
                self.map.len(),
                source.edge_count(),
                target.edge_count()
            )));
        }
        let mut hit = BTreeSet::new();
        for (&a, &b) in &self.map {
            if !source.has_edge(a) {
                return Err(Error::BadBijection(format!("{a} is not a source edge")));
            }
            if !target.has_edge(b) {
                return Err(Error::BadBijection(format!("{b} is not a target edge")));
            }
            if !hit.insert(b) {
                return Err(Error::BadBijection(format!("{b} is hit twice")));
            }
        }
        Ok(())
    }
}

/// A graph isomorphism: vertex bijection plus the induced edge bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphIso {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: EdgeBijection,
}

impl GraphIso {
    pub fn identity(g: &MultiGraph) -> Self {
        Self { vertex_map: g.vertices().map(|v| (v, v)).collect(), edge_map: EdgeBijection::identity(g) }
    }

    pub fn inverse(&self) -> Self {
        Self {
            vertex_map: self.vertex_map.iter().map(|(&a, &b)| (b, a)).collect(),
            edge_map: self.edge_map.inverse(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GraphIso) -> Result<Self> {
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(&a, &b)| {
                next.vertex_map
                    .get(&b)
                    .map(|&c| (a, c))
                    .ok_or_else(|| Error::BadBijection(format!("composition undefined at {b}")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { vertex_map, edge_map: self.edge_map.then(&next.edge_map)? })
    }

    /// True iff this is an isomorphism `g → h`.
    pub fn is_valid(&self, g: &MultiGraph, h: &MultiGraph) -> bool {
        if self.edge_map.check(g, h).is_err() || self.vertex_map.len() != g.vertex_count() {
            return false;
        }
        let image: BTreeSet<_> = self.vertex_map.values().collect();
        if image.len() != h.vertex_count()
            || self.vertex_map.keys().any(|v| !g.has_vertex(*v))
            || image.iter().any(|v| !h.has_vertex(**v))
        {
            return false;
        }
        g.edges().all(|(e, a, b)| {
            let (x, y) = h.endpoints(self.edge_map.get(e).unwrap()).unwrap();
            same_ends((self.vertex_map[&a], self.vertex_map[&b]), (x, y))
        })
    }
}

fn same_ends(p: (VertexId, VertexId), q: (VertexId, VertexId)) -> bool {
    p == q || (p.0 == q.1 && p.1 == q.0)
}

/// Finds a vertex bijection under which `edge_map` becomes a graph
/// isomorphism `g → h`, if one exists.
pub fn vertex_map_for_edge_map(g: &MultiGraph, h: &MultiGraph, edge_map: &EdgeBijection) -> Option<GraphIso> {
    if g.vertex_count() != h.vertex_count() || edge_map.check(g, h).is_err() {
        return None;
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    // Candidate images from each vertex's first incident edge.
    let mut candidates: Vec<Vec<VertexId>> = Vec::with_capacity(verts.len());
    let h_isolated: Vec<VertexId> = h.vertices().filter(|v| h.degree(*v) == 0).collect();
    let mut incident: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for (e, a, b) in g.edges() {
        incident.entry(a).or_default().push(e);
        if b != a {
            incident.entry(b).or_default().push(e);
        }
    }
    for v in &verts {
        match incident.get(v).and_then(|es| es.first()) {
            Some(&e) => {
                let (x, y) = h.endpoints(edge_map.get(e).unwrap()).unwrap();
                let mut c = vec![x, y];
                c.dedup();
                candidates.push(c);
            }
            None => candidates.push(h_isolated.clone()),
        }
    }
    let mut assign: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut used: BTreeSet<VertexId> = BTreeSet::new();
    fn consistent(
        g: &MultiGraph,
        h: &MultiGraph,
        f: &EdgeBijection,
        incident: &BTreeMap<VertexId, Vec<EdgeId>>,
        assign: &BTreeMap<VertexId, VertexId>,
        v: VertexId,
    ) -> bool {
        incident.get(&v).map_or(true, |es| {
            es.iter().all(|&e| {
                let (a, b) = g.endpoints(e).unwrap();
                match (assign.get(&a), assign.get(&b)) {
                    (Some(&x), Some(&y)) => same_ends((x, y), h.endpoints(f.get(e).unwrap()).unwrap()),
                    _ => {
                        let (x, y) = h.endpoints(f.get(e).unwrap()).unwrap();
                        let w = assign[&v];
                        w == x || w == y
                    }
                }
            })
        })
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        verts: &[VertexId],
        candidates: &[Vec<VertexId>],
        g: &MultiGraph,
        h: &MultiGraph,
        f: &EdgeBijection,
        incident: &BTreeMap<VertexId, Vec<EdgeId>>,
        assign: &mut BTreeMap<VertexId, VertexId>,
        used: &mut BTreeSet<VertexId>,
    ) -> bool {
        if i == verts.len() {
            return true;
        }
        let v = verts[i];
        for &w in &candidates[i] {
            if used.contains(&w) {
                continue;
            }
            assign.insert(v, w);
            used.insert(w);
            if consistent(g, h, f, incident, assign, v)
                && go(i + 1, verts, candidates, g, h, f, incident, assign, used)
            {
                return true;
            }
            used.remove(&w);
            assign.remove(&v);
        }
        false
    }
    if go(0, &verts, &candidates, g, h, edge_map, &incident, &mut assign, &mut used) {
        let iso = GraphIso { vertex_map: assign, edge_map: edge_map.clone() };
        debug_assert!(iso.is_valid(g, h));
        Some(iso)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let f = EdgeBijection::from_pairs(&[(0, 5), (1, 6)]);
        let g = EdgeBijection::from_pairs(&[(5, 1), (6, 0)]);
        let h = f.then(&g).unwrap();
        assert_eq!(h, EdgeBijection::from_pairs(&[(0, 1), (1, 0)]));
        assert!(f.then(&f.inverse()).unwrap().is_identity());
        assert!(f.then(&f).is_err());
    }

    #[test]
    fn vertex_map_recovery() {
        let g = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2)]).unwrap();
        let h = MultiGraph::from_edges(&[(0, 7, 8), (1, 9, 8)]).unwrap();
        let iso = vertex_map_for_edge_map(&g, &h, &EdgeBijection::identity(&g)).unwrap();
        assert_eq!(iso.vertex_map[&VertexId(1)], VertexId(8));
        let swapped = EdgeBijection::from_pairs(&[(0, 1), (1, 0)]);
        let iso = vertex_map_for_edge_map(&g, &h, &swapped).unwrap();
        assert!(iso.is_valid(&g, &h));
        // a path cannot map onto a triangle-edge pattern that breaks incidence
        let k = MultiGraph::from_edges(&[(0, 0, 1), (1, 2, 3)]).unwrap();
        assert!(vertex_map_for_edge_map(&g, &k, &EdgeBijection::identity(&g)).is_none());
    }

    #[test]
    fn bad_bijections() {
        let g = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2)]).unwrap();
        assert!(EdgeBijection::from_pairs(&[(0, 0), (1, 0)]).check(&g, &g).is_err());
        assert!(EdgeBijection::from_pairs(&[(0, 0)]).check(&g, &g).is_err());
        assert!(EdgeBijection::identity(&g).check(&g, &g).is_ok());
    }
}

//! Sphere embeddings as rotation systems.
//!
//! Each edge contributes two darts, one per end slot. A rotation lists the
//! darts around each vertex in counterclockwise order. Faces are the orbits
//! of "go to the twin dart, then take its successor in the rotation". The
//! corner between a dart's predecessor and the dart itself lies in that
//! dart's face.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeId, MultiGraph, VertexId};
use crate::maps::{vertex_map_for_edge_map, EdgeBijection, GraphIso};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum End {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: End,
}

impl Dart {
    pub fn new(edge: EdgeId, end: End) -> Self {
        Self { edge, end }
    }

    pub fn a(edge: u32) -> Self {
        Self::new(EdgeId(edge), End::A)
    }

    pub fn b(edge: u32) -> Self {
        Self::new(EdgeId(edge), End::B)
    }

    pub fn twin(self) -> Self {
        let end = match self.end {
            End::A => End::B,
            End::B => End::A,
        };
        Self { edge: self.edge, end }
    }

    /// Vertex the dart sits at.
    pub fn vertex(self, g: &MultiGraph) -> Option<VertexId> {
        let (a, b) = g.endpoints(self.edge)?;
        Some(match self.end {
            End::A => a,
            End::B => b,
        })
    }
}

pub type Rotation = BTreeMap<VertexId, Vec<Dart>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts in traversal order, starting at the least dart.
    pub boundary: Vec<Dart>,
}

/// Dense dart indexing: edges in ascending id order, dart index `2*i + end`.
#[derive(Clone, Debug)]
struct DartIndex {
    edges: Vec<EdgeId>,
    pos: BTreeMap<EdgeId, usize>,
}

impl DartIndex {
    fn new(g: &MultiGraph) -> Self {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        let pos = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Self { edges, pos }
    }

    fn index(&self, d: Dart) -> Option<usize> {
        self.pos.get(&d.edge).map(|&i| 2 * i + usize::from(d.end == End::B))
    }

    fn dart(&self, i: usize) -> Dart {
        Dart::new(self.edges[i / 2], if i % 2 == 0 { End::A } else { End::B })
    }
}

/// Successor permutation on dense dart indices; `usize::MAX` marks darts not
/// present.
fn successor_table(lists: impl Iterator<Item = impl AsRef<[usize]>>, dart_count: usize) -> Vec<usize> {
    let mut sigma = vec![usize::MAX; dart_count];
    for list in lists {
        let list = list.as_ref();
        for (i, &d) in list.iter().enumerate() {
            sigma[d] = list[(i + 1) % list.len()];
        }
    }
    sigma
}

/// Face orbits on the darts present in `sigma`.
fn face_orbits(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut faces = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] || sigma[start] == usize::MAX {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = sigma[d ^ 1];
        }
        faces.push(face);
    }
    faces
}

fn face_count(sigma: &[usize], seen: &mut Vec<bool>) -> usize {
    seen.clear();
    seen.resize(sigma.len(), false);
    let mut count = 0;
    for start in 0..sigma.len() {
        if seen[start] || sigma[start] == usize::MAX {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = sigma[d ^ 1];
        }
    }
    count
}

/// Checks that `rotation` lists exactly the darts at each vertex and returns
/// the dense successor table.
fn check_rotation(graph: &MultiGraph, rotation: &Rotation, idx: &DartIndex) -> Result<Vec<usize>> {
    let mut seen = vec![false; 2 * idx.edges.len()];
    let mut lists = Vec::new();
    for (&v, darts) in rotation {
        if !graph.has_vertex(v) {
            return Err(Error::BadRotation(format!("{v} is not a vertex")));
        }
        let mut list = Vec::with_capacity(darts.len());
        for &d in darts {
            let i = idx
                .index(d)
                .ok_or_else(|| Error::BadRotation(format!("dart on unknown edge {}", d.edge)))?;
            if d.vertex(graph) != Some(v) {
                return Err(Error::BadRotation(format!("dart {:?} listed at {v}", d)));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::BadRotation(format!("dart {:?} listed twice", d)));
            }
            list.push(i);
        }
        lists.push(list);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::BadRotation(format!("dart {:?} missing", idx.dart(i))));
    }
    Ok(successor_table(lists.iter(), seen.len()))
}

/// True iff every component of the map is a sphere. For a connected graph
/// this is Euler's `V - E + F = 2`.
pub fn is_spherical(graph: &MultiGraph, rotation: &Rotation) -> Result<bool> {
    let idx = DartIndex::new(graph);
    let sigma = check_rotation(graph, rotation, &idx)?;
    let isolated = graph.vertices().filter(|v| graph.degree(*v) == 0).count();
    let faces = face_orbits(&sigma).len() + isolated;
    let euler = graph.vertex_count() as i64 - graph.edge_count() as i64 + faces as i64;
    Ok(euler == 2 * graph.component_count() as i64)
}

/// A spherical rotation system on a connected multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: MultiGraph,
    rotation: Rotation,
}

impl Embedding {
    pub fn new(graph: MultiGraph, mut rotation: Rotation) -> Result<Self> {
        for v in graph.vertices() {
            rotation.entry(v).or_default();
        }
        if !is_connected(&graph) {
            return Err(Error::DisconnectedPrimal);
        }
        if !is_spherical(&graph, &rotation)? {
            return Err(Error::NotSpherical);
        }
        Ok(Self { graph, rotation })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn new_unchecked(graph: MultiGraph, mut rotation: Rotation) -> Self {
        for v in graph.vertices() {
            rotation.entry(v).or_default();
        }
        debug_assert!(is_connected(&graph) && is_spherical(&graph, &rotation) == Ok(true));
        Self { graph, rotation }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &Rotation {
        &self.rotation
    }

    pub fn darts_at(&self, v: VertexId) -> &[Dart] {
        self.rotation.get(&v).map_or(&[], |d| d.as_slice())
    }

    pub fn into_parts(self) -> (MultiGraph, Rotation) {
        (self.graph, self.rotation)
    }

    /// Next dart counterclockwise around the dart's vertex.
    pub fn succ(&self, d: Dart) -> Dart {
        let v = d.vertex(&self.graph).expect("dart of this graph");
        let list = &self.rotation[&v];
        let i = list.iter().position(|x| *x == d).expect("dart in rotation");
        list[(i + 1) % list.len()]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        let v = d.vertex(&self.graph).expect("dart of this graph");
        let list = &self.rotation[&v];
        let i = list.iter().position(|x| *x == d).expect("dart in rotation");
        list[(i + list.len() - 1) % list.len()]
    }

    /// Face index (into [`trace_faces`]) of every dart.
    pub fn face_of_darts(&self) -> BTreeMap<Dart, usize> {
        trace_faces(self)
            .iter()
            .enumerate()
            .flat_map(|(i, f)| f.boundary.iter().map(move |&d| (d, i)))
            .collect()
    }

    /// Carries the embedding along an isomorphism `self.graph() → target`.
    /// Where the isomorphism reverses an edge, the dart ends are swapped so
    /// that the result embeds `target` exactly.
    pub fn transport(&self, iso: &GraphIso, target: &MultiGraph) -> Result<Embedding> {
        if !iso.is_valid(&self.graph, target) {
            return Err(Error::BadBijection("not an isomorphism onto the target".into()));
        }
        let rotation = self
            .rotation
            .iter()
            .map(|(v, darts)| {
                let w = iso.vertex_map[v];
                let darts = darts
                    .iter()
                    .map(|d| {
                        let e = iso.edge_map.get(d.edge).unwrap();
                        let (a, b) = target.endpoints(e).unwrap();
                        let end = if a == b {
                            d.end
                        } else if a == w {
                            End::A
                        } else {
                            End::B
                        };
                        Dart::new(e, end)
                    })
                    .collect();
                (w, darts)
            })
            .collect();
        Embedding::new(target.clone(), rotation)
    }

    /// The induced embedding of the subgraph spanned by `edges`.
    pub fn restrict(&self, edges: &BTreeSet<EdgeId>) -> Result<Embedding> {
        let graph = self.graph.edge_subgraph(edges)?;
        let rotation = graph
            .vertices()
            .map(|v| (v, self.darts_at(v).iter().copied().filter(|d| edges.contains(&d.edge)).collect()))
            .collect();
        Embedding::new(graph, rotation)
    }
}

/// Faces of the embedding ordered by least dart. A graph without edges has a
/// single face with empty boundary.
pub fn trace_faces(emb: &Embedding) -> Vec<Face> {
    let idx = DartIndex::new(&emb.graph);
    if idx.edges.is_empty() {
        return vec![Face { boundary: Vec::new() }];
    }
    let lists: Vec<Vec<usize>> = emb
        .rotation
        .values()
        .map(|darts| darts.iter().map(|d| idx.index(*d).unwrap()).collect())
        .collect();
    let sigma = successor_table(lists.iter(), 2 * idx.edges.len());
    face_orbits(&sigma)
        .into_iter()
        .map(|f| Face { boundary: f.into_iter().map(|i| idx.dart(i)).collect() })
        .collect()
}

/// Output of [`geometric_dual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricDual {
    /// Vertex `i` is face `i` of the primal; edges keep their primal ids.
    pub graph: MultiGraph,
    /// The geometric duality map (identity on edge ids).
    pub map: EdgeBijection,
    /// Dual rotation: each face-vertex lists its boundary darts in traversal
    /// order, so the dual of this embedding is the primal again.
    pub embedding: Embedding,
}

pub fn geometric_dual(emb: &Embedding) -> GeometricDual {
    let faces = trace_faces(emb);
    let mut graph = MultiGraph::new();
    for i in 0..faces.len() {
        graph.add_vertex(VertexId(i as u32));
    }
    let mut face_of = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &d in &f.boundary {
            face_of.insert(d, VertexId(i as u32));
        }
    }
    for e in emb.graph.edge_ids() {
        graph
            .add_edge(e, face_of[&Dart::new(e, End::A)], face_of[&Dart::new(e, End::B)])
            .expect("fresh graph");
    }
    let rotation = faces
        .into_iter()
        .enumerate()
        .map(|(i, f)| (VertexId(i as u32), f.boundary))
        .collect();
    let map = EdgeBijection::identity(&emb.graph);
    let embedding = Embedding::new_unchecked(graph.clone(), rotation);
    GeometricDual { graph, map, embedding }
}

/// Lazily enumerates every spherical rotation system of a connected graph.
///
/// Edges are inserted one at a time so that the inserted part stays
/// connected; a partial map that is not spherical cannot extend to a
/// spherical one, so such branches are cut. Each rotation system is produced
/// exactly once (mirror images are distinct).
pub struct SphericalEmbeddings {
    graph: MultiGraph,
    idx: DartIndex,
    vertex_pos: BTreeMap<VertexId, usize>,
    /// Insertion order as (edge position, whether end B is the end already
    /// present when the edge is inserted).
    order: Vec<(usize, bool)>,
    stack: Vec<(usize, Vec<Vec<usize>>)>,
    scratch: Vec<bool>,
}

impl SphericalEmbeddings {
    fn new(g: &MultiGraph) -> Result<Self> {
        if !is_connected(g) {
            return Err(Error::DisconnectedPrimal);
        }
        let idx = DartIndex::new(g);
        let vertex_pos: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let n = vertex_pos.len();
        let mut reached = vec![false; n];
        let mut done = vec![false; idx.edges.len()];
        let mut order = Vec::new();
        if let Some(&first) = idx.edges.first() {
            reached[vertex_pos[&g.endpoints(first).unwrap().0]] = true;
        }
        while order.len() < idx.edges.len() {
            let i = (0..idx.edges.len())
                .find(|&i| {
                    let (a, b) = g.endpoints(idx.edges[i]).unwrap();
                    !done[i] && (reached[vertex_pos[&a]] || reached[vertex_pos[&b]])
                })
                .expect("connected graph");
            done[i] = true;
            let (a, b) = g.endpoints(idx.edges[i]).unwrap();
            let (pa, pb) = (vertex_pos[&a], vertex_pos[&b]);
            order.push((i, !reached[pa]));
            reached[pa] = true;
            reached[pb] = true;
        }
        Ok(Self {
            graph: g.clone(),
            idx,
            vertex_pos,
            order,
            stack: vec![(0, vec![Vec::new(); n])],
            scratch: Vec::new(),
        })
    }

    fn to_embedding(&self, lists: &[Vec<usize>]) -> Embedding {
        let rotation = self
            .vertex_pos
            .iter()
            .map(|(&v, &p)| (v, lists[p].iter().map(|&d| self.idx.dart(d)).collect()))
            .collect();
        Embedding::new_unchecked(self.graph.clone(), rotation)
    }
}

/// Slots at which a dart can be inserted into a rotation list: after each
/// existing element (the first element stays first), or the single slot of
/// an empty list.
fn insertion_slots(len: usize) -> std::ops::RangeInclusive<usize> {
    if len == 0 {
        0..=0
    } else {
        1..=len
    }
}

impl Iterator for SphericalEmbeddings {
    type Item = Embedding;

    fn next(&mut self) -> Option<Embedding> {
        let m = self.idx.edges.len();
        while let Some((depth, lists)) = self.stack.pop() {
            if depth == m {
                return Some(self.to_embedding(&lists));
            }
            let (ei, first_is_b) = self.order[depth];
            let (a, b) = self.graph.endpoints(self.idx.edges[ei]).unwrap();
            let (pa, pb) = (self.vertex_pos[&a], self.vertex_pos[&b]);
            // dart indices, first the one at the already-present vertex
            let (d_from, d_to, p_from, p_to) = if first_is_b {
                (2 * ei + 1, 2 * ei, pb, pa)
            } else {
                (2 * ei, 2 * ei + 1, pa, pb)
            };
            let mut children = Vec::new();
            let to_is_new = p_from != p_to && lists[p_to].is_empty();
            for s1 in insertion_slots(lists[p_from].len()) {
                let mut l1 = lists.clone();
                l1[p_from].insert(s1, d_from);
                for s2 in insertion_slots(l1[p_to].len()) {
                    let mut l2 = l1.clone();
                    l2[p_to].insert(s2, d_to);
                    if to_is_new {
                        children.push(l2);
                        continue;
                    }
                    // inserted part: vertices with darts, edges so far
                    let verts = l2.iter().filter(|l| !l.is_empty()).count();
                    let sigma = successor_table(l2.iter(), 2 * m);
                    let faces = face_count(&sigma, &mut self.scratch);
                    if verts as i64 - (depth as i64 + 1) + faces as i64 == 2 {
                        children.push(l2);
                    }
                }
            }
            for child in children.into_iter().rev() {
                self.stack.push((depth + 1, child));
            }
        }
        None
    }
}

pub fn enumerate_spherical_embeddings(g: &MultiGraph) -> Result<SphericalEmbeddings> {
    SphericalEmbeddings::new(g)
}

/// Searches for an embedding of `h` whose geometric dual is isomorphic to
/// `target` through an isomorphism with edge map `f`.
pub fn find_dual_embedding(h: &MultiGraph, f: &EdgeBijection, target: &MultiGraph) -> Result<Option<Embedding>> {
    f.check(h, target)?;
    let faces_needed = target.vertex_count();
    for emb in enumerate_spherical_embeddings(h)? {
        let faces = trace_faces(&emb);
        if faces.len() != faces_needed {
            continue;
        }
        let dual = geometric_dual(&emb);
        if vertex_map_for_edge_map(&dual.graph, target, f).is_some() {
            return Ok(Some(emb));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(entries: &[(u32, &[Dart])]) -> Rotation {
        entries.iter().map(|(v, d)| (VertexId(*v), d.to_vec())).collect()
    }

    fn triangle() -> Embedding {
        let g = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap();
        Embedding::new(
            g,
            rot(&[(0, &[Dart::a(0), Dart::b(2)]), (1, &[Dart::a(1), Dart::b(0)]), (2, &[Dart::a(2), Dart::b(1)])]),
        )
        .unwrap()
    }

    fn bouquet2() -> MultiGraph {
        MultiGraph::from_edges(&[(0, 0, 0), (1, 0, 0)]).unwrap()
    }

    #[test]
    fn triangle_faces() {
        let faces = trace_faces(&triangle());
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.boundary.len() == 3));
    }

    #[test]
    fn single_loop_has_two_faces() {
        let g = MultiGraph::from_edges(&[(0, 0, 0)]).unwrap();
        let e = Embedding::new(g, rot(&[(0, &[Dart::a(0), Dart::b(0)])])).unwrap();
        assert_eq!(trace_faces(&e).len(), 2);
    }

    #[test]
    fn bouquet_nested_vs_interleaved() {
        let nested = rot(&[(0, &[Dart::a(0), Dart::b(0), Dart::a(1), Dart::b(1)])]);
        let crossed = rot(&[(0, &[Dart::a(0), Dart::a(1), Dart::b(0), Dart::b(1)])]);
        assert_eq!(is_spherical(&bouquet2(), &nested), Ok(true));
        assert_eq!(is_spherical(&bouquet2(), &crossed), Ok(false));
        let e = Embedding::new(bouquet2(), nested).unwrap();
        assert_eq!(trace_faces(&e).len(), 3);
        assert_eq!(Embedding::new(bouquet2(), crossed), Err(Error::NotSpherical));
    }

    #[test]
    fn bad_rotations() {
        let g = bouquet2();
        let missing = rot(&[(0, &[Dart::a(0), Dart::b(0), Dart::a(1)])]);
        assert!(matches!(is_spherical(&g, &missing), Err(Error::BadRotation(_))));
        let twice = rot(&[(0, &[Dart::a(0), Dart::b(0), Dart::a(1), Dart::a(1)])]);
        assert!(matches!(is_spherical(&g, &twice), Err(Error::BadRotation(_))));
        let path = MultiGraph::from_edges(&[(0, 0, 1)]).unwrap();
        let wrong_vertex = rot(&[(0, &[Dart::b(0)]), (1, &[Dart::a(0)])]);
        assert!(matches!(is_spherical(&path, &wrong_vertex), Err(Error::BadRotation(_))));
    }

    #[test]
    fn duals_of_small_graphs() {
        let edge = MultiGraph::from_edges(&[(0, 0, 1)]).unwrap();
        let e = enumerate_spherical_embeddings(&edge).unwrap().next().unwrap();
        let d = geometric_dual(&e);
        assert_eq!(d.graph.vertex_count(), 1);
        assert!(d.graph.is_loop(EdgeId(0)));

        let d = geometric_dual(&triangle());
        assert_eq!(d.graph.vertex_count(), 2);
        assert!(d.graph.edges().all(|(_, a, b)| a != b));

        let tree = MultiGraph::from_edges(&[(0, 0, 1), (1, 0, 2), (2, 2, 3)]).unwrap();
        for e in enumerate_spherical_embeddings(&tree).unwrap() {
            let d = geometric_dual(&e);
            assert_eq!(d.graph.vertex_count(), 1);
            assert_eq!(d.graph.edge_count(), 3);
        }
    }

    #[test]
    fn edgeless_graph_dual_is_a_point() {
        let g = MultiGraph::from_parts([4], []).unwrap();
        let e = enumerate_spherical_embeddings(&g).unwrap().next().unwrap();
        let d = geometric_dual(&e);
        assert_eq!(d.graph.vertex_count(), 1);
        assert_eq!(d.graph.edge_count(), 0);
    }

    #[test]
    fn enumeration_counts() {
        // bouquet of two loops: 6 cyclic orders with a+ fixed, 4 non-interleaved
        let all: Vec<_> = enumerate_spherical_embeddings(&bouquet2()).unwrap().collect();
        assert_eq!(all.len(), 4);
        for e in &all {
            let l = e.darts_at(VertexId(0));
            let p = |d: Dart| l.iter().position(|x| *x == d).unwrap();
            let (a0, b0) = (p(Dart::a(0)).min(p(Dart::b(0))), p(Dart::a(0)).max(p(Dart::b(0))));
            let inside = |i: usize| a0 < i && i < b0;
            assert_eq!(inside(p(Dart::a(1))), inside(p(Dart::b(1))));
        }
        // cycle: each vertex has one cyclic order
        let c4 = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 0)]).unwrap();
        assert_eq!(enumerate_spherical_embeddings(&c4).unwrap().count(), 1);
        // K4: (2!)^4 = 16 rotation systems, 2 of them planar
        let k4 = MultiGraph::from_edges(&[(0, 0, 1), (1, 0, 2), (2, 0, 3), (3, 1, 2), (4, 1, 3), (5, 2, 3)]).unwrap();
        assert_eq!(enumerate_spherical_embeddings(&k4).unwrap().count(), 2);
    }

    #[test]
    fn k5_is_not_planar() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((edges.len() as u32, a, b));
            }
        }
        let k5 = MultiGraph::from_edges(&edges).unwrap();
        assert_eq!(enumerate_spherical_embeddings(&k5).unwrap().count(), 0);
    }

    #[test]
    fn dual_embedding_search() {
        let d3 = MultiGraph::from_edges(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)]).unwrap();
        let c3 = MultiGraph::from_edges(&[(10, 0, 1), (11, 1, 2), (12, 2, 0)]).unwrap();
        let f = EdgeBijection::from_pairs(&[(0, 11), (1, 12), (2, 10)]);
        assert!(find_dual_embedding(&d3, &f, &c3).unwrap().is_some());

        let c3b = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap();
        let g = EdgeBijection::from_pairs(&[(0, 10), (1, 11), (2, 12)]);
        assert!(find_dual_embedding(&c3b, &g, &c3).unwrap().is_none());

        let p3 = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2)]).unwrap();
        let found = find_dual_embedding(&bouquet2(), &EdgeBijection::identity(&p3), &p3).unwrap().unwrap();
        assert_eq!(trace_faces(&found).len(), 3);
    }

    #[test]
    fn relabel_keeps_sphericity() {
        let t = triangle();
        let g = t.graph().clone();
        // reverse vertex order, which flips edge orientation for some edges
        let iso = GraphIso {
            vertex_map: [(0, 2), (1, 1), (2, 0)].iter().map(|&(a, b)| (VertexId(a), VertexId(b))).collect(),
            edge_map: EdgeBijection::identity(&g),
        };
        let target = MultiGraph::from_edges(&[(0, 2, 1), (1, 1, 0), (2, 0, 2)]).unwrap();
        let r = t.transport(&iso, &target).unwrap();
        assert_eq!(r.graph(), &target);
        assert_eq!(trace_faces(&r).len(), 2);
    }
}

//! Surgery on rotation systems: moving a part of the primal that hangs from
//! one vertex over to another vertex, one shared face at a time.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{GeometricDualPair, Link, SimilarityChain};
use crate::embed::{Dart, Embedding, Rotation};
use crate::error::{Error, Result};
use crate::graph::{blocks, EdgeId, MultiGraph, VertexId};
use crate::maps::{vertex_map_for_edge_map, GraphIso};

/// A one-point union split: two edge sets sharing exactly `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinSplit {
    pub center: VertexId,
    pub parts: [BTreeSet<EdgeId>; 2],
}

impl JoinSplit {
    pub fn new(center: VertexId, first: BTreeSet<EdgeId>, second: BTreeSet<EdgeId>) -> Self {
        Self { center, parts: [first, second] }
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        let bad = |m: String| Err(Error::NotAJoin(m));
        let [p, q] = &self.parts;
        if p.is_empty() || q.is_empty() {
            return bad("empty part".into());
        }
        if !p.is_disjoint(q) {
            return bad("parts overlap".into());
        }
        if p.len() + q.len() != g.edge_count() || p.iter().chain(q).any(|e| !g.has_edge(*e)) {
            return bad("parts do not cover the edge set".into());
        }
        let mut shared = None;
        for part in &self.parts {
            let sub = g.edge_subgraph(part)?;
            if !sub.has_vertex(self.center) {
                return bad(format!("part misses the center {}", self.center));
            }
            if sub.component_count() != 1 {
                return bad("part is disconnected".into());
            }
            shared = Some(match shared {
                None => sub.vertex_set().clone(),
                Some(s) => sub.vertex_set().intersection(&s).copied().collect::<BTreeSet<_>>(),
            });
        }
        if shared.unwrap() != BTreeSet::from([self.center]) {
            return bad("parts share more than the center".into());
        }
        Ok(())
    }
}

/// The fixed rest of the primal (everything but the moving part) with its
/// faces, plus the moving part cut loose from its attachment vertex.
struct Frame {
    m_rot: Rotation,
    face_of: BTreeMap<Dart, usize>,
    /// Rotations at vertices that only carry edges of the moving part.
    s_rot: Rotation,
    /// The moving part's darts at its attachment vertex, cut open at the
    /// least dart.
    block: Vec<Dart>,
}

impl Frame {
    fn new(emb: &Embedding, s: &BTreeSet<EdgeId>, att: VertexId) -> Result<Self> {
        let g = emb.graph();
        let m_edges: BTreeSet<EdgeId> = g.edge_ids().filter(|e| !s.contains(e)).collect();
        let mut m_graph = g.edge_subgraph(&m_edges)?;
        m_graph.add_vertex(att);
        let keep = |v: VertexId, inside: bool| -> Vec<Dart> {
            emb.darts_at(v).iter().copied().filter(|d| s.contains(&d.edge) == inside).collect()
        };
        let m_rot: Rotation = m_graph.vertices().map(|v| (v, keep(v, false))).collect();
        let m_emb = Embedding::new(m_graph, m_rot.clone())?;
        let face_of = m_emb.face_of_darts();
        let s_graph = g.edge_subgraph(s)?;
        let s_rot = s_graph.vertices().filter(|&v| v != att).map(|v| (v, keep(v, true))).collect();
        let mut block = keep(att, true);
        if let Some(i) = (0..block.len()).min_by_key(|&i| block[i]) {
            block.rotate_left(i);
        }
        Ok(Self { m_rot, face_of, s_rot, block })
    }

    /// Least face shared by `x` and `y`, with the first dart of that face
    /// in each vertex's rotation.
    fn shared_corner(&self, x: VertexId, y: VertexId) -> Option<(Dart, Dart)> {
        let faces = |v: VertexId| -> Vec<(usize, Dart)> {
            self.m_rot.get(&v).map_or(Vec::new(), |ds| ds.iter().map(|d| (self.face_of[d], *d)).collect())
        };
        let (fx, fy) = (faces(x), faces(y));
        let f = fx.iter().map(|p| p.0).filter(|f| fy.iter().any(|q| q.0 == *f)).min()?;
        let pick = |l: &[(usize, Dart)]| l.iter().find(|p| p.0 == f).unwrap().1;
        Some((pick(&fx), pick(&fy)))
    }

    /// Rotation with the part's block placed just before `before` at `at`.
    fn rotation_with_block(&self, at: VertexId, before: Dart) -> Rotation {
        let mut rot = self.m_rot.clone();
        let list = rot.get_mut(&at).expect("vertex of the fixed part");
        let i = list.iter().position(|d| *d == before).expect("dart at the vertex");
        list.splice(i..i, self.block.iter().copied());
        rot.extend(self.s_rot.iter().map(|(v, d)| (*v, d.clone())));
        rot
    }
}

/// Extends `chain` by moving part `s`, attached at `path[0]`, along `path`.
/// Consecutive vertices of the path must share a face of the fixed part.
/// Each step adds at most one primal link (re-embedding the same graph so
/// the part sits in the shared face) and exactly one dual link.
pub(crate) fn move_part(chain: &mut SimilarityChain, s: &BTreeSet<EdgeId>, path: &[VertexId]) -> Result<()> {
    if path.len() < 2 {
        return Ok(());
    }
    let frame = Frame::new(&chain.last().embedding, s, path[0])?;
    for w in path.windows(2) {
        let (x, y) = (w[0], w[1]);
        let (dx, dy) = frame
            .shared_corner(x, y)
            .ok_or_else(|| Error::Internal(format!("{x} and {y} share no face")))?;
        let cur = chain.last().clone();
        let left_rot = frame.rotation_with_block(x, dx);
        if &left_rot != cur.embedding.rotation() {
            let left = GeometricDualPair::from_embedding(Embedding::new(cur.primal.clone(), left_rot)?);
            chain.push(Link::primal(GraphIso::identity(&cur.primal)), left)?;
        }
        let left = chain.last().clone();
        let moved = left.primal.reattach(s, x, y)?;
        let right = GeometricDualPair::from_embedding(Embedding::new(moved, frame.rotation_with_block(y, dy))?);
        let edges = left.duality_map.inverse().then(&right.duality_map)?;
        let iso = vertex_map_for_edge_map(&left.dual, &right.dual, &edges)
            .ok_or_else(|| Error::Internal(format!("moving the part from {x} to {y} changed the dual")))?;
        chain.push(Link::dual(iso), right)?;
    }
    Ok(())
}

/// Path for moving `s` from `from` to `to`: a single step when the two
/// vertices share a face of the rest, otherwise a shortest path in the rest.
fn route(emb: &Embedding, s: &BTreeSet<EdgeId>, from: VertexId, to: VertexId) -> Result<Vec<VertexId>> {
    let frame = Frame::new(emb, s, from)?;
    if frame.shared_corner(from, to).is_some() {
        return Ok(vec![from, to]);
    }
    let rest: BTreeSet<EdgeId> = emb.graph().edge_ids().filter(|e| !s.contains(e)).collect();
    emb.graph()
        .shortest_path(from, to, &rest)
        .ok_or_else(|| Error::Internal(format!("no path from {from} to {to}")))
}

/// Vertices reachable from `start` without passing through `avoid`.
fn reach_avoiding(g: &MultiGraph, start: VertexId, avoid: VertexId) -> BTreeSet<VertexId> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (_, a, b) in g.edges() {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(&v).into_iter().flatten() {
            if w != avoid && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// One cut-vertex reduction on the last pair of `chain`. Returns the moved
/// edges with their old and new attachment vertex.
fn reduce_step(chain: &mut SimilarityChain) -> Result<(BTreeSet<EdgeId>, VertexId, VertexId)> {
    let g = chain.last().primal.clone();
    let dec = blocks(&g);
    let cuts: Vec<VertexId> = dec.cut_vertices.iter().copied().collect();
    if cuts.len() < 2 {
        return Err(Error::NothingToReduce);
    }
    let mut best = (0, cuts[0], cuts[1]);
    for (i, &c) in cuts.iter().enumerate() {
        for &c2 in &cuts[i + 1..] {
            let d = dec.tree_distance(c, c2).unwrap_or(0);
            if d > best.0 {
                best = (d, c, c2);
            }
        }
    }
    let (_, keep, from) = best;
    let near = reach_avoiding(&g, keep, from);
    let moving: BTreeSet<EdgeId> = g
        .edges()
        .filter(|&(_, a, b)| (a == from && b == from) || [a, b].iter().any(|v| *v != from && !near.contains(v)))
        .map(|(e, _, _)| e)
        .collect();
    let path = route(&chain.last().embedding, &moving, from, keep)?;
    move_part(chain, &moving, &path)?;
    Ok((moving, from, keep))
}

/// Similarity chain from `pair` to a pair whose primal has exactly one
/// cut-vertex fewer.
pub fn reduce_cut_vertices(pair: &GeometricDualPair) -> Result<SimilarityChain> {
    let mut chain = SimilarityChain::single(pair.clone());
    reduce_step(&mut chain)?;
    Ok(chain)
}

/// Moves the part other than `parts[part_index]` from the center to
/// `new_vertex`, stepping along a shortest path inside the designated part.
pub fn rebase_join(
    pair: &GeometricDualPair,
    split: &JoinSplit,
    part_index: usize,
    new_vertex: VertexId,
) -> Result<SimilarityChain> {
    split.validate(&pair.primal)?;
    if part_index > 1 {
        return Err(Error::NotAJoin(format!("part index {part_index} out of range")));
    }
    let mut chain = SimilarityChain::single(pair.clone());
    rebase(&mut chain, split.center, &split.parts[part_index], &split.parts[1 - part_index], new_vertex)?;
    Ok(chain)
}

fn rebase(
    chain: &mut SimilarityChain,
    center: VertexId,
    part: &BTreeSet<EdgeId>,
    other: &BTreeSet<EdgeId>,
    new_vertex: VertexId,
) -> Result<()> {
    let g = chain.last().primal.clone();
    if !g.edge_subgraph(part)?.has_vertex(new_vertex) {
        return Err(Error::BadAttachment(format!("{new_vertex} is not a vertex of the designated part")));
    }
    let path = g
        .shortest_path(center, new_vertex, part)
        .ok_or_else(|| Error::Internal("designated part is disconnected".into()))?;
    move_part(chain, other, &path)
}

/// Chain from `pair` to a pair whose primal is the one-point union of its
/// blocks with block `i` (in [`blocks`] order) glued at `attach[i]`. The
/// associated 2-isomorphism is the identity on edge ids.
pub fn normalize_to_star(pair: &GeometricDualPair, attach: &[VertexId]) -> Result<SimilarityChain> {
    let dec = blocks(&pair.primal);
    if attach.len() != dec.blocks.len() {
        return Err(Error::BadAttachment(format!(
            "{} attachment vertices for {} blocks",
            attach.len(),
            dec.blocks.len()
        )));
    }
    for (i, (b, v)) in dec.blocks.iter().zip(attach).enumerate() {
        if !b.vertices.contains(v) {
            return Err(Error::BadAttachment(format!("{v} is not in block {i}")));
        }
    }
    let block_edges: Vec<BTreeSet<EdgeId>> = dec.blocks.iter().map(|b| b.edges.clone()).collect();
    let mut tracked = attach.to_vec();
    let mut chain = SimilarityChain::single(pair.clone());
    while blocks(&chain.last().primal).cut_vertices.len() >= 2 {
        let (moved, from, to) = reduce_step(&mut chain)?;
        for (edges, t) in block_edges.iter().zip(tracked.iter_mut()) {
            if *t == from && edges.is_subset(&moved) {
                *t = to;
            }
        }
    }
    if block_edges.len() <= 1 {
        return Ok(chain);
    }
    let mut center = *blocks(&chain.last().primal)
        .cut_vertices
        .iter()
        .next()
        .ok_or_else(|| Error::Internal("several blocks but no cut-vertex".into()))?;
    let all = pair.primal.edge_set();
    for i in 0..block_edges.len() {
        let target = tracked[i];
        if target == center {
            continue;
        }
        let rest: BTreeSet<EdgeId> = all.difference(&block_edges[i]).copied().collect();
        rebase(&mut chain, center, &block_edges[i], &rest, target)?;
        for (j, t) in tracked.iter_mut().enumerate() {
            if j != i && *t == center {
                *t = target;
            }
        }
        center = target;
    }
    let g = &chain.last().primal;
    for (edges, t) in block_edges.iter().zip(&tracked) {
        let sub = g.edge_subgraph(edges)?;
        if *t != center || !sub.has_vertex(center) {
            return Err(Error::Internal("normalized primal is not the requested star".into()));
        }
    }
    Ok(chain)
}

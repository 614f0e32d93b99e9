//! Finite multigraphs with loops and parallel edges.
//!
//! Edges carry stable [`EdgeId`]s. Every map between graphs elsewhere in the
//! crate is expressed on these ids, so they are never renumbered implicitly.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An undirected multigraph. Loops have equal endpoints.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from raw integer ids, checking endpoints and id uniqueness.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32, u32)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(VertexId(v));
        }
        for (id, a, b) in edges {
            g.add_edge(EdgeId(id), VertexId(a), VertexId(b))?;
        }
        Ok(g)
    }

    /// Convenience constructor: vertices are inferred from the edge list.
    pub fn from_edges(edges: &[(u32, u32, u32)]) -> Result<Self> {
        let vertices: BTreeSet<u32> = edges.iter().flat_map(|&(_, a, b)| [a, b]).collect();
        Self::from_parts(vertices, edges.iter().copied())
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.insert(v)
    }

    pub fn add_edge(&mut self, id: EdgeId, a: VertexId, b: VertexId) -> Result<()> {
        if !self.vertices.contains(&a) {
            return Err(Error::UnknownVertex(a));
        }
        if !self.vertices.contains(&b) {
            return Err(Error::UnknownVertex(b));
        }
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        self.edges.insert(id, (a, b));
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(a, b))| (e, a, b))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.keys().copied().collect()
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&e).copied()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(&e), Some((a, b)) if a == b)
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .values()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.vertices.iter().next_back().copied()
    }

    pub fn max_edge(&self) -> Option<EdgeId> {
        self.edges.keys().next_back().copied()
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let index: BTreeMap<VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(index.len());
        for &(a, b) in self.edges.values() {
            uf.union(index[&a], index[&b]);
        }
        let mut by_root: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (&v, &i) in &index {
            by_root.entry(uf.find(i)).or_default().insert(v);
        }
        let mut comps: Vec<_> = by_root.into_values().collect();
        comps.sort_by_key(|c| *c.iter().next().unwrap());
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Subgraph consisting of the given edges and their endpoints.
    pub fn edge_subgraph(&self, edges: &BTreeSet<EdgeId>) -> Result<MultiGraph> {
        let mut sub = MultiGraph::new();
        for &e in edges {
            let (a, b) = self.endpoints(e).ok_or(Error::UnknownEdge(e))?;
            sub.add_vertex(a);
            sub.add_vertex(b);
            sub.edges.insert(e, (a, b));
        }
        Ok(sub)
    }

    /// Copy with every vertex and edge renamed. Both maps must be injective
    /// and cover the graph.
    pub fn relabel(
        &self,
        vertex_map: &BTreeMap<VertexId, VertexId>,
        edge_map: &BTreeMap<EdgeId, EdgeId>,
    ) -> Result<MultiGraph> {
        let mut out = MultiGraph::new();
        for v in self.vertices() {
            let w = *vertex_map.get(&v).ok_or(Error::UnknownVertex(v))?;
            if !out.add_vertex(w) {
                return Err(Error::BadAttachment(format!("vertex map not injective at {w}")));
            }
        }
        for (e, a, b) in self.edges() {
            let f = *edge_map.get(&e).ok_or(Error::UnknownEdge(e))?;
            out.add_edge(f, vertex_map[&a], vertex_map[&b])?;
        }
        Ok(out)
    }

    pub fn relabel_edges(&self, edge_map: &BTreeMap<EdgeId, EdgeId>) -> Result<MultiGraph> {
        let ident: BTreeMap<_, _> = self.vertices().map(|v| (v, v)).collect();
        self.relabel(&ident, edge_map)
    }

    /// Moves every end of the given edges that sits at `from` over to `to`.
    pub fn reattach(&self, edges: &BTreeSet<EdgeId>, from: VertexId, to: VertexId) -> Result<MultiGraph> {
        if !self.has_vertex(to) {
            return Err(Error::UnknownVertex(to));
        }
        let mut out = self.clone();
        for &e in edges {
            let ends = out.edges.get_mut(&e).ok_or(Error::UnknownEdge(e))?;
            if ends.0 == from {
                ends.0 = to;
            }
            if ends.1 == from {
                ends.1 = to;
            }
        }
        Ok(out)
    }

    /// Shortest path from `from` to `to` using only `allowed` edges; neighbours
    /// are explored in ascending id order.
    pub fn shortest_path(
        &self,
        from: VertexId,
        to: VertexId,
        allowed: &BTreeSet<EdgeId>,
    ) -> Option<Vec<VertexId>> {
        let mut prev: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while let Some(&p) = prev.get(&cur) {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            let mut nbrs: Vec<VertexId> = allowed
                .iter()
                .filter_map(|e| self.endpoints(*e))
                .filter_map(|(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            nbrs.sort();
            for w in nbrs {
                if seen.insert(w) {
                    prev.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

pub fn is_connected(g: &MultiGraph) -> bool {
    g.component_count() == 1
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Edge sign used for checkerboard graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.to_i64() as i8
    }
}

pub type Signs = BTreeMap<EdgeId, Sign>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    pub graph: MultiGraph,
    pub signs: Signs,
}

impl SignedGraph {
    /// Fails unless every edge carries exactly one sign.
    pub fn new(graph: MultiGraph, signs: Signs) -> Result<Self> {
        for e in graph.edge_ids() {
            if !signs.contains_key(&e) {
                return Err(Error::Parse(format!("edge {e} has no sign")));
            }
        }
        if let Some(e) = signs.keys().find(|e| !graph.has_edge(**e)) {
            return Err(Error::UnknownEdge(*e));
        }
        Ok(Self { graph, signs })
    }

    pub fn uniform(graph: MultiGraph, sign: Sign) -> Self {
        let signs = graph.edge_ids().map(|e| (e, sign)).collect();
        Self { graph, signs }
    }

    pub fn negated(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            signs: self.signs.iter().map(|(&e, &s)| (e, -s)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub edges: BTreeSet<EdgeId>,
    pub vertices: BTreeSet<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Ordered by least edge id; edgeless blocks (isolated vertices) last.
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<VertexId>,
    /// Block-cut tree edges as (block index, cut-vertex).
    pub block_cut_tree: Vec<(usize, VertexId)>,
}

impl BlockDecomposition {
    pub fn block_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.blocks.iter().position(|b| b.edges.contains(&e))
    }

    /// Distance between two cut-vertices in the block-cut tree, counted in
    /// tree edges.
    pub fn tree_distance(&self, from: VertexId, to: VertexId) -> Option<usize> {
        // nodes: Ok(block) / Err(cut vertex)
        let mut seen: BTreeSet<Result<usize, VertexId>> = BTreeSet::from([Err(from)]);
        let mut queue = VecDeque::from([(Err(from), 0usize)]);
        while let Some((node, d)) = queue.pop_front() {
            if node == Err(to) {
                return Some(d);
            }
            for &(b, c) in &self.block_cut_tree {
                let next = match node {
                    Ok(x) if x == b => Err(c),
                    Err(x) if x == c => Ok(b),
                    _ => continue,
                };
                if seen.insert(next) {
                    queue.push_back((next, d + 1));
                }
            }
        }
        None
    }
}

/// Block decomposition; loops form their own blocks and isolated vertices
/// are edgeless blocks.
pub fn blocks(g: &MultiGraph) -> BlockDecomposition {
    let mut found: Vec<BTreeSet<EdgeId>> = Vec::new();
    for (e, a, b) in g.edges() {
        if a == b {
            found.push(BTreeSet::from([e]));
        }
    }

    // Tarjan biconnected components on the loopless part, keyed by edge id so
    // that parallel edges are handled.
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for (e, a, b) in g.edges() {
        if a != b {
            adj[index[&a]].push((index[&b], e));
            adj[index[&b]].push((index[&a], e));
        }
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent edge, next adjacency index)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, pe, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let (w, e) = adj[v][*next];
                *next += 1;
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(&(u, _, _)), Some(pe)) = (stack.last(), pe) {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut comp = BTreeSet::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.insert(e);
                            if e == pe {
                                break;
                            }
                        }
                        found.push(comp);
                    }
                }
            }
        }
    }

    found.sort_by_key(|b| *b.iter().next().unwrap());
    let mut blocks: Vec<Block> = found
        .into_iter()
        .map(|edges| {
            let vertices = edges
                .iter()
                .flat_map(|e| {
                    let (a, b) = g.endpoints(*e).unwrap();
                    [a, b]
                })
                .collect();
            Block { edges, vertices }
        })
        .collect();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            blocks.push(Block { edges: BTreeSet::new(), vertices: BTreeSet::from([v]) });
        }
    }

    let mut membership: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            membership.entry(v).or_default().push(i);
        }
    }
    let mut cut_vertices = BTreeSet::new();
    let mut block_cut_tree = Vec::new();
    for (v, bs) in membership {
        if bs.len() >= 2 {
            cut_vertices.insert(v);
            block_cut_tree.extend(bs.into_iter().map(|b| (b, v)));
        }
    }
    block_cut_tree.sort();
    BlockDecomposition { blocks, cut_vertices, block_cut_tree }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    pub edges: BTreeSet<EdgeId>,
}

/// Greedy maximal forest over ascending edge ids.
pub fn maximal_forest(g: &MultiGraph) -> SpanningForest {
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut uf = UnionFind::new(index.len());
    let edges = g
        .edges()
        .filter(|&(_, a, b)| uf.union(index[&a], index[&b]))
        .map(|(e, _, _)| e)
        .collect();
    SpanningForest { edges }
}

/// Cycle-matroid rank of an edge subset.
pub fn rank(g: &MultiGraph, subset: &BTreeSet<EdgeId>) -> Result<usize> {
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut uf = UnionFind::new(index.len());
    let mut r = 0;
    for &e in subset {
        let (a, b) = g.endpoints(e).ok_or(Error::UnknownEdge(e))?;
        if uf.union(index[&a], index[&b]) {
            r += 1;
        }
    }
    Ok(r)
}

pub fn full_rank(g: &MultiGraph) -> usize {
    g.vertex_count() - g.component_count()
}

/// Result of [`one_point_union`]: the glued graph plus where each vertex
/// came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Join {
    pub graph: MultiGraph,
    /// Fresh id of the identified vertex.
    pub center: VertexId,
    /// Original (part index, vertex) for every non-center vertex.
    pub origin: BTreeMap<VertexId, (usize, VertexId)>,
}

/// Glues the parts by identifying `attach[i]` of each part to one vertex.
/// Vertices are renumbered (center first); edge ids are kept and must be
/// disjoint across parts.
pub fn one_point_union(parts: &[MultiGraph], attach: &[VertexId]) -> Result<Join> {
    if parts.is_empty() || parts.len() != attach.len() {
        return Err(Error::BadAttachment(format!(
            "{} parts but {} attachment vertices",
            parts.len(),
            attach.len()
        )));
    }
    let center = VertexId(0);
    let mut next = 1u32;
    let mut graph = MultiGraph::new();
    graph.add_vertex(center);
    let mut origin = BTreeMap::new();
    for (i, (part, &v)) in parts.iter().zip(attach).enumerate() {
        if !part.has_vertex(v) {
            return Err(Error::BadAttachment(format!("{v} is not a vertex of part {i}")));
        }
        let mut local = BTreeMap::new();
        for w in part.vertices() {
            if w == v {
                local.insert(w, center);
            } else {
                let fresh = VertexId(next);
                next += 1;
                graph.add_vertex(fresh);
                origin.insert(fresh, (i, w));
                local.insert(w, fresh);
            }
        }
        for (e, a, b) in part.edges() {
            graph.add_edge(e, local[&a], local[&b])?;
        }
    }
    Ok(Join { graph, center, origin })
}

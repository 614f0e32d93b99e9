//! Cycle-matroid maps between multigraphs: abstract duality maps,
//! 2-isomorphisms, and plain (optionally signed) graph isomorphism.
//!
//! Checks use subset rank tables: a bijection `f: E(G) → E(H)` is a
//! 2-isomorphism iff `r_H(f(S)) = r_G(S)` for every `S ⊆ E(G)`, and an
//! abstract duality iff `r_H(f(S)) = |S| - r_G(E) + r_G(E \ S)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{blocks, full_rank, EdgeId, MultiGraph, Sign, Signs, UnionFind, VertexId};
use crate::maps::{EdgeBijection, GraphIso};

/// Size budgets. The defaults keep every operation exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Up to this many edges, checks run over every edge subset.
    pub exhaustive_edges: usize,
    /// Above `exhaustive_edges` and up to this many, checks only walk the
    /// maximal forests of the source (one-sided).
    pub check_edges: usize,
    /// Largest edge count accepted by the bijection searches.
    pub search_edges: usize,
    /// Largest edge count accepted by graph isomorphism.
    pub iso_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { exhaustive_edges: 16, check_edges: 24, search_edges: 12, iso_edges: 64 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    TwoIsomorphism,
    AbstractDuality,
}

/// Rank of every edge subset, indexed by bitmask over ascending edge ids.
pub(crate) struct RankTable {
    pub(crate) edges: Vec<EdgeId>,
    pub(crate) pos: BTreeMap<EdgeId, usize>,
    pub(crate) ranks: Vec<u8>,
}

impl RankTable {
    pub(crate) fn new(g: &MultiGraph) -> Self {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        let pos = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let vindex: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let ends: Vec<(usize, usize)> = g.edges().map(|(_, a, b)| (vindex[&a], vindex[&b])).collect();
        let m = edges.len();
        let mut ranks = vec![0u8; 1 << m];
        for (mask, slot) in ranks.iter_mut().enumerate().skip(1) {
            let mut uf = UnionFind::new(vindex.len());
            let mut r = 0u8;
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if uf.union(ends[i].0, ends[i].1) {
                    r += 1;
                }
            }
            *slot = r;
        }
        Self { edges, pos, ranks }
    }

    fn full(&self) -> usize {
        (1 << self.edges.len()) - 1
    }
}

fn check_size(m: usize, limit: usize) -> Result<()> {
    if m > limit {
        Err(Error::TooLarge { edges: m, limit })
    } else {
        Ok(())
    }
}

/// Target bit position of each source bit position.
fn bit_images(f: &EdgeBijection, src: &RankTable, dst: &RankTable) -> Vec<usize> {
    src.edges.iter().map(|e| dst.pos[&f.get(*e).unwrap()]).collect()
}

fn exhaustive_check(kind: MapKind, g: &MultiGraph, h: &MultiGraph, f: &EdgeBijection) -> bool {
    let (tg, th) = (RankTable::new(g), RankTable::new(h));
    let img_bit = bit_images(f, &tg, &th);
    let full = tg.full();
    let rg_full = tg.ranks[full] as i64;
    let mut img = vec![0usize; full + 1];
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        img[s] = img[s & (s - 1)] | (1 << img_bit[low]);
        let lhs = th.ranks[img[s]] as i64;
        let rhs = match kind {
            MapKind::TwoIsomorphism => tg.ranks[s] as i64,
            MapKind::AbstractDuality => s.count_ones() as i64 - rg_full + tg.ranks[full ^ s] as i64,
        };
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Calls `visit` on every maximal forest of `g` (as a sorted edge list).
fn for_each_maximal_forest(g: &MultiGraph, mut visit: impl FnMut(&[EdgeId]) -> bool) -> bool {
    let edges: Vec<(EdgeId, VertexId, VertexId)> = g.edges().collect();
    let target = full_rank(g);
    let vindex: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    fn go(
        i: usize,
        chosen: &mut Vec<EdgeId>,
        edges: &[(EdgeId, VertexId, VertexId)],
        vindex: &BTreeMap<VertexId, usize>,
        target: usize,
        visit: &mut dyn FnMut(&[EdgeId]) -> bool,
    ) -> bool {
        if chosen.len() == target {
            return visit(chosen);
        }
        if edges.len() - i < target - chosen.len() {
            return true;
        }
        let e = edges[i].0;
        chosen.push(e);
        let mut uf = UnionFind::new(vindex.len());
        let acyclic = chosen.iter().all(|c| {
            let (x, y) = edges.iter().find(|t| t.0 == *c).map(|t| (t.1, t.2)).unwrap();
            uf.union(vindex[&x], vindex[&y])
        });
        if acyclic && !go(i + 1, chosen, edges, vindex, target, visit) {
            return false;
        }
        chosen.pop();
        go(i + 1, chosen, edges, vindex, target, visit)
    }
    go(0, &mut Vec::new(), &edges, &vindex, target, &mut visit)
}

fn basis_check(kind: MapKind, g: &MultiGraph, h: &MultiGraph, f: &EdgeBijection) -> bool {
    let rh = full_rank(h);
    let expected = match kind {
        MapKind::TwoIsomorphism => full_rank(g),
        MapKind::AbstractDuality => g.edge_count() - full_rank(g),
    };
    if rh != expected {
        return false;
    }
    let all_h = h.edge_set();
    for_each_maximal_forest(g, |forest| {
        let img: BTreeSet<EdgeId> = forest.iter().map(|e| f.get(*e).unwrap()).collect();
        let candidate: BTreeSet<EdgeId> = match kind {
            MapKind::TwoIsomorphism => img,
            MapKind::AbstractDuality => all_h.difference(&img).copied().collect(),
        };
        crate::graph::rank(h, &candidate).unwrap() == candidate.len() && candidate.len() == rh
    })
}

fn check_map(kind: MapKind, g: &MultiGraph, h: &MultiGraph, f: &EdgeBijection, limits: &Limits) -> Result<bool> {
    f.check(g, h)?;
    let m = g.edge_count();
    check_size(m, limits.check_edges)?;
    Ok(if m <= limits.exhaustive_edges {
        exhaustive_check(kind, g, h, f)
    } else {
        basis_check(kind, g, h, f)
    })
}

pub fn is_2_isomorphism(g: &MultiGraph, h: &MultiGraph, f: &EdgeBijection) -> Result<bool> {
    check_map(MapKind::TwoIsomorphism, g, h, f, &Limits::default())
}

pub fn is_abstract_duality(g: &MultiGraph, h: &MultiGraph, f: &EdgeBijection) -> Result<bool> {
    check_map(MapKind::AbstractDuality, g, h, f, &Limits::default())
}

pub fn is_map_of_kind(kind: MapKind, g: &MultiGraph, h: &MultiGraph, f: &EdgeBijection, limits: &Limits) -> Result<bool> {
    check_map(kind, g, h, f, limits)
}

/// Sign condition: equal signs for 2-isomorphisms, opposite signs for
/// abstract dualities.
pub fn signs_compatible(kind: MapKind, gs: &Signs, hs: &Signs, f: &EdgeBijection) -> bool {
    f.map.iter().all(|(a, b)| match (gs.get(a), hs.get(b)) {
        (Some(&x), Some(&y)) => match kind {
            MapKind::TwoIsomorphism => x == y,
            MapKind::AbstractDuality => x == -y,
        },
        _ => false,
    })
}

pub fn is_signed_2_isomorphism(
    g: &crate::graph::SignedGraph,
    h: &crate::graph::SignedGraph,
    f: &EdgeBijection,
) -> Result<bool> {
    Ok(is_2_isomorphism(&g.graph, &h.graph, f)? && signs_compatible(MapKind::TwoIsomorphism, &g.signs, &h.signs, f))
}

/// 2-isomorphism invariant of one edge: (loop, coloop, parallel class size,
/// series class size, block size, block rank).
type EdgeProfile = (bool, bool, usize, usize, usize, usize);

fn edge_profiles(g: &MultiGraph, t: &RankTable) -> Vec<EdgeProfile> {
    let m = t.edges.len();
    let full = t.full();
    let r = t.ranks[full];
    let is_loop: Vec<bool> = (0..m).map(|i| t.ranks[1 << i] == 0).collect();
    let is_coloop: Vec<bool> = (0..m).map(|i| t.ranks[full ^ (1 << i)] < r).collect();
    let dec = blocks(g);
    (0..m)
        .map(|i| {
            let parallel = if is_loop[i] {
                0
            } else {
                (0..m).filter(|&j| !is_loop[j] && t.ranks[(1 << i) | (1 << j)] == 1).count()
            };
            let series = if is_coloop[i] {
                0
            } else {
                (0..m).filter(|&j| j == i || (!is_coloop[j] && t.ranks[full ^ ((1 << i) | (1 << j))] < r)).count()
            };
            let b = &dec.blocks[dec.block_of_edge(t.edges[i]).unwrap()];
            let brank = b.vertices.len() - 1;
            (is_loop[i], is_coloop[i], parallel, series, b.edges.len(), brank)
        })
        .collect()
}

fn dual_profile(p: EdgeProfile) -> EdgeProfile {
    let (lp, cl, par, ser, size, rank) = p;
    (cl, lp, ser, par, size, size - rank)
}

/// Backtracking search for the lexicographically least map of `kind`
/// (ordered by images of ascending source edges).
pub fn find_map(
    kind: MapKind,
    g: &MultiGraph,
    h: &MultiGraph,
    signs: Option<(&Signs, &Signs)>,
    limits: &Limits,
) -> Result<Option<EdgeBijection>> {
    let m = g.edge_count();
    check_size(m.max(h.edge_count()), limits.search_edges)?;
    if m != h.edge_count() {
        return Ok(None);
    }
    let (tg, th) = (RankTable::new(g), RankTable::new(h));
    let full = tg.full();
    let rg_full = tg.ranks[full] as i64;
    let rh_full = th.ranks[th.full()] as i64;
    let rank_ok = match kind {
        MapKind::TwoIsomorphism => rg_full == rh_full,
        MapKind::AbstractDuality => rh_full == m as i64 - rg_full,
    };
    if !rank_ok {
        return Ok(None);
    }
    let pg: Vec<EdgeProfile> = edge_profiles(g, &tg)
        .into_iter()
        .map(|p| if kind == MapKind::AbstractDuality { dual_profile(p) } else { p })
        .collect();
    let ph = edge_profiles(h, &th);
    let sign_of = |s: Option<&Signs>, e: EdgeId| -> Option<Sign> { s.map(|s| s[&e]) };
    let want_sign = |i: usize| -> Option<Sign> {
        signs.map(|(gs, _)| {
            let s = gs[&tg.edges[i]];
            if kind == MapKind::AbstractDuality {
                -s
            } else {
                s
            }
        })
    };
    if let Some((gs, hs)) = signs {
        if tg.edges.iter().any(|e| !gs.contains_key(e)) || th.edges.iter().any(|e| !hs.contains_key(e)) {
            return Err(Error::Parse("signed search needs a sign on every edge".into()));
        }
    }
    let candidates: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| pg[i] == ph[j] && want_sign(i) == sign_of(signs.map(|s| s.1), th.edges[j]))
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }

    struct State<'a> {
        kind: MapKind,
        tg: &'a RankTable,
        th: &'a RankTable,
        full: usize,
        rg_full: i64,
        candidates: &'a [Vec<usize>],
        assigned: Vec<usize>,
        used: Vec<bool>,
        img: Vec<usize>,
    }
    impl State<'_> {
        fn ok(&self, s: usize, image: usize) -> bool {
            let lhs = self.th.ranks[image] as i64;
            let rhs = match self.kind {
                MapKind::TwoIsomorphism => self.tg.ranks[s] as i64,
                MapKind::AbstractDuality => {
                    s.count_ones() as i64 - self.rg_full + self.tg.ranks[self.full ^ s] as i64
                }
            };
            lhs == rhs
        }

        fn go(&mut self, k: usize) -> bool {
            if k == self.candidates.len() {
                return true;
            }
            for idx in 0..self.candidates[k].len() {
                let j = self.candidates[k][idx];
                if self.used[j] {
                    continue;
                }
                let bit = 1usize << k;
                let tb = 1usize << j;
                let mut good = true;
                for low in 0..bit {
                    let s = low | bit;
                    self.img[s] = self.img[low] | tb;
                    if !self.ok(s, self.img[s]) {
                        good = false;
                        break;
                    }
                }
                if !good {
                    continue;
                }
                self.used[j] = true;
                self.assigned.push(j);
                if self.go(k + 1) {
                    return true;
                }
                self.assigned.pop();
                self.used[j] = false;
            }
            false
        }
    }
    let mut st = State {
        kind,
        tg: &tg,
        th: &th,
        full,
        rg_full,
        candidates: &candidates,
        assigned: Vec::with_capacity(m),
        used: vec![false; m],
        img: vec![0; full + 1],
    };
    if !st.go(0) {
        return Ok(None);
    }
    let map = st.assigned.iter().enumerate().map(|(i, &j)| (tg.edges[i], th.edges[j])).collect();
    Ok(Some(EdgeBijection::new(map)))
}

pub fn find_2_isomorphism(g: &MultiGraph, h: &MultiGraph, signs: Option<(&Signs, &Signs)>) -> Result<Option<EdgeBijection>> {
    find_map(MapKind::TwoIsomorphism, g, h, signs, &Limits::default())
}

pub fn find_abstract_duality(
    g: &MultiGraph,
    h: &MultiGraph,
    signs: Option<(&Signs, &Signs)>,
) -> Result<Option<EdgeBijection>> {
    find_map(MapKind::AbstractDuality, g, h, signs, &Limits::default())
}

type Bundle = Vec<(Option<Sign>, EdgeId)>;

fn bundles(g: &MultiGraph, signs: Option<&Signs>) -> BTreeMap<(VertexId, VertexId), Bundle> {
    let mut out: BTreeMap<(VertexId, VertexId), Bundle> = BTreeMap::new();
    for (e, a, b) in g.edges() {
        let key = (a.min(b), a.max(b));
        out.entry(key).or_default().push((signs.map(|s| s[&e]), e));
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

fn bundle_signature(b: Option<&Bundle>) -> Vec<Option<Sign>> {
    b.map(|b| b.iter().map(|x| x.0).collect()).unwrap_or_default()
}

/// Multigraph isomorphism by vertex backtracking. With signs, edges must map
/// to equally signed edges. Returns a witness on success.
pub fn is_graph_isomorphism(
    g: &MultiGraph,
    h: &MultiGraph,
    signs: Option<(&Signs, &Signs)>,
) -> Result<Option<GraphIso>> {
    let limit = Limits::default().iso_edges;
    check_size(g.edge_count().max(h.edge_count()), limit)?;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let bg = bundles(g, signs.map(|s| s.0));
    let bh = bundles(h, signs.map(|s| s.1));
    let profile = |g: &MultiGraph, b: &BTreeMap<(VertexId, VertexId), Bundle>, v: VertexId| {
        let loops = bundle_signature(b.get(&(v, v)));
        let mut nbr: Vec<Vec<Option<Sign>>> = b
            .iter()
            .filter(|((x, y), _)| (*x == v) != (*y == v))
            .map(|(_, bun)| bun.iter().map(|t| t.0).collect())
            .collect();
        nbr.sort();
        (g.degree(v), loops, nbr)
    };
    let mut gv: Vec<VertexId> = g.vertices().collect();
    let hv: Vec<VertexId> = h.vertices().collect();
    let pg: BTreeMap<VertexId, _> = gv.iter().map(|&v| (v, profile(g, &bg, v))).collect();
    let ph: BTreeMap<VertexId, _> = hv.iter().map(|&v| (v, profile(h, &bh, v))).collect();
    {
        let mut a: Vec<_> = pg.values().cloned().collect();
        let mut b: Vec<_> = ph.values().cloned().collect();
        a.sort();
        b.sort();
        if a != b {
            return Ok(None);
        }
    }
    // Visit vertices so that each one (after the first of its component) has
    // an already-placed neighbour, which keeps pruning effective.
    let mut order = Vec::with_capacity(gv.len());
    let mut placed = BTreeSet::new();
    gv.sort_by_key(|v| std::cmp::Reverse(g.degree(*v)));
    while order.len() < gv.len() {
        let next = gv
            .iter()
            .copied()
            .filter(|v| !placed.contains(v))
            .find(|v| bg.keys().any(|&(x, y)| (x == *v && placed.contains(&y)) || (y == *v && placed.contains(&x))))
            .or_else(|| gv.iter().copied().find(|v| !placed.contains(v)))
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    let cands: Vec<Vec<VertexId>> = order.iter().map(|v| hv.iter().copied().filter(|w| ph[w] == pg[v]).collect()).collect();

    fn go(
        k: usize,
        order: &[VertexId],
        cands: &[Vec<VertexId>],
        bg: &BTreeMap<(VertexId, VertexId), Bundle>,
        bh: &BTreeMap<(VertexId, VertexId), Bundle>,
        assign: &mut Vec<VertexId>,
        used: &mut BTreeSet<VertexId>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for &w in &cands[k] {
            if used.contains(&w) {
                continue;
            }
            let fits = (0..=k).all(|i| {
                let (u, x) = if i == k { (v, w) } else { (order[i], assign[i]) };
                bundle_signature(bg.get(&(u.min(v), u.max(v)))) == bundle_signature(bh.get(&(x.min(w), x.max(w))))
            });
            if !fits {
                continue;
            }
            assign.push(w);
            used.insert(w);
            if go(k + 1, order, cands, bg, bh, assign, used) {
                return true;
            }
            used.remove(&w);
            assign.pop();
        }
        false
    }
    let mut assign = Vec::new();
    if !go(0, &order, &cands, &bg, &bh, &mut assign, &mut BTreeSet::new()) {
        return Ok(None);
    }
    let vertex_map: BTreeMap<VertexId, VertexId> = order.iter().copied().zip(assign).collect();
    let mut emap = BTreeMap::new();
    for (&(a, b), bun) in &bg {
        let (x, y) = (vertex_map[&a], vertex_map[&b]);
        let other = &bh[&(x.min(y), x.max(y))];
        for (s, t) in bun.iter().zip(other) {
            emap.insert(s.1, t.1);
        }
    }
    let iso = GraphIso { vertex_map, edge_map: EdgeBijection::new(emap) };
    debug_assert!(iso.is_valid(g, h));
    Ok(Some(iso))
}

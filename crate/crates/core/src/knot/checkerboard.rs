use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::LinkDiagram;
use crate::embed::{Dart, Embedding, End};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Sign, SignedGraph, Signs, VertexId};

/// Which 2-coloring of the regions to use. `Standard` leaves unshaded the
/// region containing the corner before end A of the lowest arc (of each
/// split component); `Reversed` swaps the colors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coloring {
    #[default]
    Standard,
    Reversed,
}

/// Picks one of the two checkerboard graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    Shaded,
    Unshaded,
}

/// Both signed checkerboard graphs. Crossing `i` is edge `i` in each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckerboardPair {
    pub shaded: SignedGraph,
    pub unshaded: SignedGraph,
    /// Crossing index → (shaded edge, unshaded edge).
    pub crossing_map: BTreeMap<usize, (EdgeId, EdgeId)>,
}

impl CheckerboardPair {
    pub fn get(&self, shade: Shade) -> &SignedGraph {
        match shade {
            Shade::Shaded => &self.shaded,
            Shade::Unshaded => &self.unshaded,
        }
    }
}

pub fn checkerboard(d: &LinkDiagram) -> Result<CheckerboardPair> {
    checkerboard_with(d, Coloring::Standard)
}

/// Region ids and colors (`true` = shaded) for every dart's face.
///
/// A PD code does not say how split components sit relative to each other;
/// every further component is placed in the unshaded seed region of the
/// first one, so the seed regions of all components are one region.
fn regions(d: &LinkDiagram) -> Result<(BTreeMap<Dart, usize>, Vec<bool>)> {
    let (g, rot) = d.four_valent_map()?;
    let mut comps: Vec<(EdgeId, BTreeSet<VertexId>)> = g
        .components()
        .into_iter()
        .map(|c| {
            let least = c.iter().flat_map(|v| rot[v].iter().map(|d| d.edge)).min().unwrap();
            (least, c)
        })
        .collect();
    comps.sort();
    let mut region_of: BTreeMap<Dart, usize> = BTreeMap::new();
    let mut shaded: Vec<bool> = Vec::new();
    let mut shared_seed: Option<usize> = None;
    for (least, verts) in &comps {
        let edges: BTreeSet<EdgeId> = verts.iter().flat_map(|v| rot[v].iter().map(|d| d.edge)).collect();
        let sub = g.edge_subgraph(&edges)?;
        let sub_rot = verts.iter().map(|v| (*v, rot[v].clone())).collect();
        let emb = Embedding::new(sub, sub_rot).map_err(|_| Error::BadPdCode("non-planar component".into()))?;
        let face_of = emb.face_of_darts();
        let nfaces = face_of.values().max().map_or(0, |m| m + 1);
        // 2-color the faces: the two sides of every arc differ
        let mut color: Vec<Option<bool>> = vec![None; nfaces];
        let seed = face_of[&Dart::new(*least, End::A)];
        color[seed] = Some(false);
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nfaces];
        for &e in &edges {
            let (x, y) = (face_of[&Dart::new(e, End::A)], face_of[&Dart::new(e, End::B)]);
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut queue = VecDeque::from([seed]);
        while let Some(f) = queue.pop_front() {
            let c = color[f].unwrap();
            for &h in &adj[f] {
                match color[h] {
                    None => {
                        color[h] = Some(!c);
                        queue.push_back(h);
                    }
                    Some(x) if x == c => return Err(Error::BadPdCode("regions are not 2-colorable".into())),
                    _ => {}
                }
            }
        }
        let mut ids = vec![0; nfaces];
        for (f, id) in ids.iter_mut().enumerate() {
            match shared_seed {
                Some(r) if f == seed => *id = r,
                _ => {
                    *id = shaded.len();
                    shaded.push(color[f].unwrap());
                }
            }
        }
        shared_seed.get_or_insert(ids[seed]);
        for (dart, f) in face_of {
            region_of.insert(dart, ids[f]);
        }
    }
    Ok((region_of, shaded))
}

pub fn checkerboard_with(d: &LinkDiagram, coloring: Coloring) -> Result<CheckerboardPair> {
    // no crossings: one circle bounding an unshaded and a shaded disc
    let (region_of, mut shaded_region) =
        if d.crossings.is_empty() { (BTreeMap::new(), vec![false, true]) } else { regions(d)? };
    if coloring == Coloring::Reversed {
        shaded_region.iter_mut().for_each(|s| *s = !*s);
    }
    // vertex ids per color, in region order
    let mut vid: Vec<VertexId> = Vec::with_capacity(shaded_region.len());
    let (mut ns, mut nu) = (0u32, 0u32);
    for &s in &shaded_region {
        let counter = if s { &mut ns } else { &mut nu };
        vid.push(VertexId(*counter));
        *counter += 1;
    }
    let mut gs = MultiGraph::new();
    let mut gu = MultiGraph::new();
    for (r, &s) in shaded_region.iter().enumerate() {
        if s {
            gs.add_vertex(vid[r]);
        } else {
            gu.add_vertex(vid[r]);
        }
    }
    let (_, rot) = d.four_valent_map()?;
    let mut ss = Signs::new();
    let mut su = Signs::new();
    let mut crossing_map = BTreeMap::new();
    for i in 0..d.crossings.len() {
        let darts = &rot[&VertexId(i as u32)];
        // region of the corner just before position p
        let corner = |p: usize| region_of[&darts[p]];
        let (r0, r1, r2, r3) = (corner(0), corner(1), corner(2), corner(3));
        if shaded_region[r0] != shaded_region[r2] || shaded_region[r1] != shaded_region[r3] || shaded_region[r0] == shaded_region[r1] {
            return Err(Error::BadPdCode(format!("crossing {i} is not checkerboard colored")));
        }
        let e = EdgeId(i as u32);
        let (u_pair, s_pair) = if shaded_region[r0] { ((r1, r3), (r0, r2)) } else { ((r0, r2), (r1, r3)) };
        gu.add_edge(e, vid[u_pair.0], vid[u_pair.1])?;
        gs.add_edge(e, vid[s_pair.0], vid[s_pair.1])?;
        // the corner before the incoming under-strand decides the sign
        let sign_u = if shaded_region[r0] { Sign::Plus } else { Sign::Minus };
        su.insert(e, sign_u);
        ss.insert(e, -sign_u);
        crossing_map.insert(i, (e, e));
    }
    Ok(CheckerboardPair {
        shaded: SignedGraph::new(gs, ss)?,
        unshaded: SignedGraph::new(gu, su)?,
        crossing_map,
    })
}

use std::collections::BTreeMap;

use super::{Crossing, LinkDiagram};
use crate::chains::GeometricDualPair;
use crate::embed::End;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, Signs};

/// Link diagram whose checkerboard graphs are the primal of `pair` with
/// `signs` and its dual with the opposite signs.
///
/// One crossing sits on each primal edge (crossing `k` on the `k`-th edge in
/// id order) and one arc runs through each corner of the embedding. With the
/// edge drawn from end A (west) to end B (east), the crossing's four slots
/// counterclockwise are NE, NW, SW, SE; the strand NE–SW goes over exactly
/// when the edge sign is positive. Arcs are numbered from 1 along each
/// component in traversal order.
pub fn diagram_from_signed_gdp(pair: &GeometricDualPair, signs: &Signs) -> Result<LinkDiagram> {
    let emb = &pair.embedding;
    let g = &pair.primal;
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    if edges.is_empty() {
        return Ok(LinkDiagram::default());
    }
    let pos: BTreeMap<EdgeId, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    for e in &edges {
        if !signs.contains_key(e) {
            return Err(Error::Parse(format!("no sign for edge {e}")));
        }
    }
    // Corner (d, succ d) is an arc from slot NW/SE of edge(d) to slot SW/NE
    // of edge(succ d). Slots: 0 = NE, 1 = NW, 2 = SW, 3 = SE.
    let mut corners: Vec<[(usize, usize); 2]> = Vec::new();
    for v in g.vertices() {
        for &d in emb.darts_at(v) {
            let n = emb.succ(d);
            let from = (pos[&d.edge], if d.end == End::A { 1 } else { 3 });
            let to = (pos[&n.edge], if n.end == End::A { 2 } else { 0 });
            corners.push([from, to]);
        }
    }
    let mut at_slot: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (c, ends) in corners.iter().enumerate() {
        for (k, &slot) in ends.iter().enumerate() {
            at_slot.insert(slot, (c, k));
        }
    }
    // Walk the strands straight through every crossing.
    let mut label = vec![0u32; corners.len()];
    let mut incoming: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut next_label = 1;
    for start in 0..corners.len() {
        if label[start] != 0 {
            continue;
        }
        let (mut c, mut k) = (start, 0);
        while label[c] == 0 {
            label[c] = next_label;
            next_label += 1;
            incoming.insert(corners[c][k], false);
            let arrive = corners[c][1 - k];
            incoming.insert(arrive, true);
            let leave = (arrive.0, (arrive.1 + 2) % 4);
            (c, k) = at_slot[&leave];
        }
    }
    let crossings = edges
        .iter()
        .enumerate()
        .map(|(x, e)| {
            let over_ne_sw = signs[e] == Sign::Plus;
            let under = if over_ne_sw { [1, 3] } else { [0, 2] };
            let u0 = *under.iter().find(|&&s| incoming[&(x, s)]).unwrap();
            let arcs = [0, 1, 2, 3].map(|p| label[at_slot[&(x, (u0 + p) % 4)].0]);
            let over_in = [(u0 + 1) % 4, (u0 + 3) % 4].into_iter().find(|s| incoming[&(x, *s)]).unwrap();
            let sign = if (over_in + 4 - u0) % 4 == 3 { Sign::Plus } else { Sign::Minus };
            Crossing { arcs, sign }
        })
        .collect();
    LinkDiagram::new(crossings)
}

use std::collections::BTreeSet;

use super::{normalize_to_star, transport_pair, GeometricDualPair, Link, SimilarityChain};
use crate::embed::{find_dual_embedding, geometric_dual, Embedding, Rotation};
use crate::error::{Error, Result};
use crate::graph::{blocks, is_connected, EdgeId, MultiGraph, VertexId};
use crate::maps::{vertex_map_for_edge_map, EdgeBijection, GraphIso};
use crate::matroid::is_2_isomorphism;

/// Least vertex of every block, in block order.
fn lowest_attachments(g: &MultiGraph) -> Vec<VertexId> {
    blocks(g).blocks.iter().map(|b| *b.vertices.iter().next().unwrap()).collect()
}

/// Re-embeds the dual of `pair` block by block so that its new geometric
/// dual is 2-isomorphic to `target` through `f`, with every block of the new
/// dual isomorphic to the matching block of `target` under `f`.
fn reembed_dual(pair: &GeometricDualPair, f: &EdgeBijection, target: &MultiGraph) -> Result<Embedding> {
    let h = &pair.dual;
    let to_primal = pair.duality_map.inverse();
    let dec = blocks(h);
    let mut block_embs = Vec::with_capacity(dec.blocks.len());
    for b in &dec.blocks {
        let hb = h.edge_subgraph(&b.edges)?;
        if hb.edge_count() == 0 {
            block_embs.push(Embedding::new(hb, Rotation::new())?);
            continue;
        }
        let fb = to_primal.restrict(&b.edges).then(f)?;
        let image: BTreeSet<EdgeId> = fb.map.values().copied().collect();
        let tb = target.edge_subgraph(&image)?;
        let emb = find_dual_embedding(&hb, &fb, &tb)?
            .ok_or_else(|| Error::NonPlanar(format!("no embedding of a dual block with {} edges", hb.edge_count())))?;
        block_embs.push(emb);
    }
    // Glue: at each vertex, the block rotations one after another.
    let rotation: Rotation = h
        .vertices()
        .map(|v| (v, block_embs.iter().flat_map(|e| e.darts_at(v).iter().copied()).collect()))
        .collect();
    Embedding::new(h.clone(), rotation)
}

/// Similarity chain from a pair on `g` to a pair on `g2` whose associated
/// primal 2-isomorphism is exactly `f`.
pub fn realize_2iso(g: &MultiGraph, g2: &MultiGraph, f: &EdgeBijection) -> Result<SimilarityChain> {
    f.check(g, g2)?;
    if !is_connected(g) || !is_connected(g2) {
        return Err(Error::DisconnectedPrimal);
    }
    if !is_2_isomorphism(g, g2, f)? {
        return Err(Error::NotA2Isomorphism);
    }
    let start = GeometricDualPair::first(g)?;
    if g == g2 && f.is_identity() {
        return Ok(SimilarityChain::single(start));
    }
    if let Some(iso) = vertex_map_for_edge_map(g, g2, f) {
        let (end, _) = transport_pair(&start, &iso, g2)?;
        return SimilarityChain::new(vec![start, end], vec![Link::primal(iso)]);
    }
    let end = GeometricDualPair::first(g2)?;

    let mut chain = normalize_to_star(&start, &lowest_attachments(g))?;

    // Swap the dual's embedding for one whose dual matches the target blockwise.
    let star = chain.last().clone();
    let h_emb = reembed_dual(&star, f, g2)?;
    let d = geometric_dual(&h_emb);
    // d.graph carries the primal's edge ids; rename them into the target's.
    let rename = d.map.inverse().then(&star.duality_map.inverse())?.then(f)?;
    let ident: std::collections::BTreeMap<VertexId, VertexId> = d.graph.vertices().map(|v| (v, v)).collect();
    let renamed_graph = d.graph.relabel(&ident, &rename.map)?;
    let iso = GraphIso { vertex_map: ident, edge_map: rename };
    let middle = GeometricDualPair::from_embedding(d.embedding.transport(&iso, &renamed_graph)?);
    let w = star.duality_map.inverse().then(f)?.then(&middle.duality_map)?;
    let w_iso = vertex_map_for_edge_map(&star.dual, &middle.dual, &w)
        .ok_or_else(|| Error::Internal("re-embedded dual does not match".into()))?;
    chain.push(Link::dual(w_iso), middle.clone())?;

    let target_attach = lowest_attachments(g2);
    let target_blocks = blocks(g2).blocks;
    let mut middle_attach = Vec::with_capacity(target_blocks.len());
    let middle_blocks = blocks(&middle.primal).blocks;
    for mb in &middle_blocks {
        let j = target_blocks
            .iter()
            .position(|tb| tb.edges == mb.edges)
            .ok_or_else(|| Error::Internal("block edge sets differ".into()))?;
        let ms = middle.primal.edge_subgraph(&mb.edges)?;
        let ts = g2.edge_subgraph(&target_blocks[j].edges)?;
        let biso = vertex_map_for_edge_map(&ms, &ts, &EdgeBijection::identity(&ms))
            .ok_or_else(|| Error::Internal("re-embedded block is not isomorphic to the target block".into()))?;
        let back = biso.inverse();
        middle_attach.push(back.vertex_map[&target_attach[j]]);
    }
    let middle_chain = normalize_to_star(&middle, &middle_attach)?;
    chain.append(middle_chain)?;

    let target_chain = normalize_to_star(&end, &target_attach)?;
    let meet = vertex_map_for_edge_map(&chain.last().primal, &target_chain.last().primal, &EdgeBijection::identity(g2))
        .ok_or_else(|| Error::Internal("normalized stars differ".into()))?;
    chain.push(Link::primal(meet), target_chain.last().clone())?;
    chain.append(target_chain.reversed()?)?;

    if &chain.associated_2iso_primal != f {
        return Err(Error::Internal("associated 2-isomorphism differs from the input".into()));
    }
    Ok(chain)
}

use super::{checkerboard, diagram_from_signed_gdp, CheckerboardPair, LinkDiagram, Shade};
use crate::chains::{duality_chain_2iso, GeometricDualPair};
use crate::error::{Error, Result};
use crate::graph::{is_connected, SignedGraph, Signs};
use crate::maps::EdgeBijection;
use crate::matroid::{is_graph_isomorphism, is_signed_2_isomorphism};

fn shares_signed_graph(a: &CheckerboardPair, b: &CheckerboardPair) -> Result<bool> {
    for x in [&a.shaded, &a.unshaded] {
        for y in [&b.shaded, &b.unshaded] {
            if is_graph_isomorphism(&x.graph, &y.graph, Some((&x.signs, &y.signs)))?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Intermediate diagrams `D_1, …, D_{2k-2}` linking `d` to `d2` so that each
/// consecutive pair (endpoints included) shares a signed checkerboard graph.
/// `f` is a signed 2-isomorphism from the `side` graph of `d` to the `side2`
/// graph of `d2`.
pub fn diagram_chain(
    d: &LinkDiagram,
    side: Shade,
    d2: &LinkDiagram,
    side2: Shade,
    f: &EdgeBijection,
) -> Result<Vec<LinkDiagram>> {
    let (cb, cb2) = (checkerboard(d)?, checkerboard(d2)?);
    for pair in [&cb, &cb2] {
        if !is_connected(&pair.shaded.graph) || !is_connected(&pair.unshaded.graph) {
            return Err(Error::DisconnectedCheckerboard);
        }
    }
    let (g, g2): (&SignedGraph, &SignedGraph) = (cb.get(side), cb2.get(side2));
    f.check(&g.graph, &g2.graph)?;
    if !is_signed_2_isomorphism(g, g2, f)? {
        return Err(Error::NotA2Isomorphism);
    }
    if g == g2 && f.is_identity() {
        return Ok(Vec::new());
    }
    let chain = duality_chain_2iso(&g.graph, &g2.graph, f)?;
    let mut signs: Signs = g.signs.clone();
    let mut diagrams = Vec::with_capacity(chain.maps.len());
    for (emb, map) in chain.embeddings.iter().zip(&chain.maps) {
        let pair = GeometricDualPair::from_embedding(emb.clone());
        diagrams.push(diagram_from_signed_gdp(&pair, &signs)?);
        signs = signs.iter().map(|(e, s)| (map.get(*e).unwrap(), -*s)).collect();
    }
    if signs != g2.signs {
        return Err(Error::Internal("propagated signs differ from the target's".into()));
    }
    let mut boards = vec![cb];
    for dd in &diagrams {
        boards.push(checkerboard(dd)?);
    }
    boards.push(cb2);
    for w in boards.windows(2) {
        if !shares_signed_graph(&w[0], &w[1])? {
            return Err(Error::Internal("consecutive diagrams share no signed checkerboard graph".into()));
        }
    }
    Ok(diagrams)
}

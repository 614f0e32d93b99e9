use serde::{Deserialize, Serialize};

use super::{compress_chain, realize_2iso, GeometricDualPair, Side, SimilarityChain};
use crate::embed::{enumerate_spherical_embeddings, geometric_dual, Embedding};
use crate::error::{Error, Result};
use crate::graph::{is_connected, MultiGraph};
use crate::maps::{vertex_map_for_edge_map, EdgeBijection};
use crate::matroid::{is_2_isomorphism, is_abstract_duality};

/// How many embeddings of the source are tried when looking for a single
/// geometric duality that realizes an abstract duality directly.
const DIRECT_SEARCH_BUDGET: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    TwoIso,
    AbstractDual,
}

/// Graphs joined by geometric duality maps. `embeddings[i]` embeds
/// `graphs[i]` and its geometric dual is isomorphic to `graphs[i + 1]`
/// through `maps[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityChain {
    pub graphs: Vec<MultiGraph>,
    pub maps: Vec<EdgeBijection>,
    pub embeddings: Vec<Embedding>,
}

impl DualityChain {
    pub fn trivial(g: &MultiGraph) -> Self {
        Self { graphs: vec![g.clone()], maps: Vec::new(), embeddings: Vec::new() }
    }

    /// Composition of all maps, first to last.
    pub fn composition(&self) -> Result<EdgeBijection> {
        self.maps.iter().try_fold(EdgeBijection::identity(&self.graphs[0]), |acc, m| acc.then(m))
    }
}

/// Reads the duality chain off a compressed similarity chain:
/// `G_0, H_1, G_1, H_3, G_3, …, H_{n-1}, G_{n-1}`.
fn extract(chain: &SimilarityChain) -> Result<DualityChain> {
    let n = chain.len();
    let p = &chain.pairs;
    let mut out = DualityChain::trivial(&p[0].primal);
    if n == 1 {
        return Ok(out);
    }
    let sides = chain.sides();
    let alternates = sides.iter().enumerate().all(|(i, s)| *s == if i % 2 == 0 { Side::Dual } else { Side::Primal });
    if n % 2 != 0 || !alternates {
        return Err(Error::Internal("chain is not compressed".into()));
    }
    // G_0 → H_1
    out.embeddings.push(p[0].embedding.clone());
    out.maps.push(p[0].duality_map.then(&chain.links[0].iso.edge_map)?);
    out.graphs.push(p[1].dual.clone());
    let mut j = 1;
    loop {
        // H_j → G_j
        out.embeddings.push(p[j].dual_embedding()?);
        out.maps.push(p[j].duality_map.inverse());
        out.graphs.push(p[j].primal.clone());
        if j + 1 == n {
            break;
        }
        // G_j ≅ G_{j+1}, dual to H_{j+1} ≅ H_{j+2}
        let u = &chain.links[j].iso;
        let w = &chain.links[j + 1].iso;
        out.embeddings.push(p[j + 1].embedding.transport(&u.inverse(), &p[j].primal)?);
        out.maps.push(u.edge_map.then(&p[j + 1].duality_map)?.then(&w.edge_map)?);
        out.graphs.push(p[j + 2].dual.clone());
        j += 2;
    }
    Ok(out)
}

fn require_connected(g: &MultiGraph, g2: &MultiGraph) -> Result<()> {
    if is_connected(g) && is_connected(g2) {
        Ok(())
    } else {
        Err(Error::DisconnectedPrimal)
    }
}

/// Even-length duality chain from `g` to `g2` composing to the
/// 2-isomorphism `f`.
pub fn duality_chain_2iso(g: &MultiGraph, g2: &MultiGraph, f: &EdgeBijection) -> Result<DualityChain> {
    f.check(g, g2)?;
    require_connected(g, g2)?;
    if !is_2_isomorphism(g, g2, f)? {
        return Err(Error::NotA2Isomorphism);
    }
    let out = if g == g2 && f.is_identity() {
        // there and back through the first embedding's dual
        let pair = GeometricDualPair::first(g)?;
        DualityChain {
            graphs: vec![g.clone(), pair.dual.clone(), g.clone()],
            maps: vec![pair.duality_map.clone(), pair.duality_map.inverse()],
            embeddings: vec![pair.embedding.clone(), pair.dual_embedding()?],
        }
    } else {
        extract(&compress_chain(&realize_2iso(g, g2, f)?)?)?
    };
    check_built(&out, f, ChainKind::TwoIso)?;
    Ok(out)
}

/// Odd-length duality chain from `g` to `g2` composing to the abstract
/// duality `f`.
pub fn duality_chain_adual(g: &MultiGraph, g2: &MultiGraph, f: &EdgeBijection) -> Result<DualityChain> {
    f.check(g, g2)?;
    require_connected(g, g2)?;
    if !is_abstract_duality(g, g2, f)? {
        return Err(Error::NotAnAbstractDuality);
    }
    let mut first = None;
    for emb in enumerate_spherical_embeddings(g)?.take(DIRECT_SEARCH_BUDGET) {
        let d = geometric_dual(&emb);
        if d.graph.vertex_count() == g2.vertex_count() {
            let m = d.map.inverse().then(f)?;
            if vertex_map_for_edge_map(&d.graph, g2, &m).is_some() {
                let out = DualityChain { graphs: vec![g.clone(), g2.clone()], maps: vec![f.clone()], embeddings: vec![emb] };
                return Ok(out);
            }
        }
        if first.is_none() {
            first = Some(emb);
        }
    }
    let emb = first.ok_or_else(|| Error::NonPlanar(format!("graph with {} edges", g.edge_count())))?;
    let pair = GeometricDualPair::from_embedding(emb);
    // f read as a map out of the dual is a 2-isomorphism onto g2
    let rest_map = pair.duality_map.inverse().then(f)?;
    let rest = duality_chain_2iso(&pair.dual, g2, &rest_map)?;
    let mut out = DualityChain {
        graphs: vec![g.clone()],
        maps: vec![pair.duality_map.clone()],
        embeddings: vec![pair.embedding.clone()],
    };
    out.graphs.extend(rest.graphs);
    out.maps.extend(rest.maps);
    out.embeddings.extend(rest.embeddings);
    check_built(&out, f, ChainKind::AbstractDual)?;
    Ok(out)
}

fn check_built(chain: &DualityChain, f: &EdgeBijection, kind: ChainKind) -> Result<()> {
    if verify_chain(chain, f, kind) {
        Ok(())
    } else {
        Err(Error::Internal("constructed duality chain failed verification".into()))
    }
}

/// Re-derives every duality map from its stored embedding, composes them,
/// and compares with `expected`; the map count must be even for
/// 2-isomorphisms and odd for abstract dualities.
pub fn verify_chain(chain: &DualityChain, expected: &EdgeBijection, kind: ChainKind) -> bool {
    let k = chain.maps.len();
    if chain.graphs.len() != k + 1 || chain.embeddings.len() != k {
        return false;
    }
    let parity_ok = match kind {
        ChainKind::TwoIso => k % 2 == 0,
        ChainKind::AbstractDual => k % 2 == 1,
    };
    if !parity_ok {
        return false;
    }
    for i in 0..k {
        let emb = &chain.embeddings[i];
        if emb.graph() != &chain.graphs[i] || Embedding::new(emb.graph().clone(), emb.rotation().clone()).is_err() {
            return false;
        }
        let d = geometric_dual(emb);
        let m = match d.map.inverse().then(&chain.maps[i]) {
            Ok(m) => m,
            Err(_) => return false,
        };
        if vertex_map_for_edge_map(&d.graph, &chain.graphs[i + 1], &m).is_none() {
            return false;
        }
    }
    matches!(chain.composition(), Ok(c) if &c == expected)
}

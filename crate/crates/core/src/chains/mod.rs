//! Similarity chains of geometric dual pairs and the duality chains built
//! from them.
//!
//! Two geometric dual pairs are similar when their primals or their duals are
//! isomorphic. A chain of similar pairs carries an associated 2-isomorphism
//! between its end primals; compressing the chain so that the sides alternate
//! turns it into a sequence of graphs joined by geometric duality maps.

mod compress;
mod duality;
mod moves;
mod realize;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed::{enumerate_spherical_embeddings, geometric_dual, Embedding};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::maps::{vertex_map_for_edge_map, EdgeBijection, GraphIso};

pub use compress::compress_chain;
pub use duality::{duality_chain_2iso, duality_chain_adual, verify_chain, ChainKind, DualityChain};
pub use moves::{normalize_to_star, rebase_join, reduce_cut_vertices, JoinSplit};
pub use realize::realize_2iso;

/// A connected plane graph together with its geometric dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricDualPair {
    pub primal: MultiGraph,
    pub dual: MultiGraph,
    pub embedding: Embedding,
    /// Geometric duality map `E(primal) → E(dual)`.
    pub duality_map: EdgeBijection,
}

impl GeometricDualPair {
    pub fn from_embedding(embedding: Embedding) -> Self {
        let d = geometric_dual(&embedding);
        Self { primal: embedding.graph().clone(), dual: d.graph, embedding, duality_map: d.map }
    }

    /// Pair from the first spherical embedding of `g`.
    pub fn first(g: &MultiGraph) -> Result<Self> {
        let emb = enumerate_spherical_embeddings(g)?
            .next()
            .ok_or_else(|| Error::NonPlanar(format!("graph with {} edges", g.edge_count())))?;
        Ok(Self::from_embedding(emb))
    }

    /// Recomputes the dual and checks that the stored one matches it.
    pub fn is_consistent(&self) -> bool {
        if self.embedding.graph() != &self.primal {
            return false;
        }
        let d = geometric_dual(&self.embedding);
        match d.map.inverse().then(&self.duality_map) {
            Ok(m) => vertex_map_for_edge_map(&d.graph, &self.dual, &m).is_some(),
            Err(_) => false,
        }
    }

    /// The embedding of the dual whose own dual is the primal again.
    pub fn dual_embedding(&self) -> Result<Embedding> {
        let d = geometric_dual(&self.embedding);
        let to_stored = d.map.inverse().then(&self.duality_map)?;
        let iso = vertex_map_for_edge_map(&d.graph, &self.dual, &to_stored)
            .ok_or_else(|| Error::Internal("stored dual does not match the embedding".into()))?;
        d.embedding.transport(&iso, &self.dual)
    }

    fn side(&self, side: Side) -> &MultiGraph {
        match side {
            Side::Primal => &self.primal,
            Side::Dual => &self.dual,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Primal,
    Dual,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Primal => "primal",
            Side::Dual => "dual",
        })
    }
}

/// Isomorphism between the `side` graphs of two consecutive pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub side: Side,
    pub iso: GraphIso,
}

impl Link {
    pub fn primal(iso: GraphIso) -> Self {
        Self { side: Side::Primal, iso }
    }

    pub fn dual(iso: GraphIso) -> Self {
        Self { side: Side::Dual, iso }
    }

    fn inverse(&self) -> Self {
        Self { side: self.side, iso: self.iso.inverse() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityChain {
    pub pairs: Vec<GeometricDualPair>,
    pub links: Vec<Link>,
    /// 2-isomorphism from the first primal to the last one.
    pub associated_2iso_primal: EdgeBijection,
    /// 2-isomorphism from the first dual to the last one.
    pub associated_2iso_dual: EdgeBijection,
}

impl SimilarityChain {
    pub fn single(pair: GeometricDualPair) -> Self {
        let p = EdgeBijection::identity(&pair.primal);
        let d = EdgeBijection::identity(&pair.dual);
        Self { pairs: vec![pair], links: Vec::new(), associated_2iso_primal: p, associated_2iso_dual: d }
    }

    /// Builds a chain, checking every link witness.
    pub fn new(pairs: Vec<GeometricDualPair>, links: Vec<Link>) -> Result<Self> {
        if pairs.is_empty() || links.len() + 1 != pairs.len() {
            return Err(Error::Internal(format!("{} pairs with {} links", pairs.len(), links.len())));
        }
        let mut chain = Self::single(pairs[0].clone());
        for (pair, link) in pairs.into_iter().skip(1).zip(links) {
            chain.push(link, pair)?;
        }
        Ok(chain)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn first(&self) -> &GeometricDualPair {
        &self.pairs[0]
    }

    pub fn last(&self) -> &GeometricDualPair {
        self.pairs.last().unwrap()
    }

    pub fn sides(&self) -> Vec<Side> {
        self.links.iter().map(|l| l.side).collect()
    }

    pub fn push(&mut self, link: Link, pair: GeometricDualPair) -> Result<()> {
        let prev = self.last();
        if !link.iso.is_valid(prev.side(link.side), pair.side(link.side)) {
            return Err(Error::Internal(format!("{} link witness is not an isomorphism", link.side)));
        }
        let (step_primal, step_dual) = match link.side {
            // u on primals; duals follow through the duality maps
            Side::Primal => {
                let u = &link.iso.edge_map;
                (u.clone(), prev.duality_map.inverse().then(u)?.then(&pair.duality_map)?)
            }
            Side::Dual => {
                let w = &link.iso.edge_map;
                (prev.duality_map.then(w)?.then(&pair.duality_map.inverse())?, w.clone())
            }
        };
        self.associated_2iso_primal = self.associated_2iso_primal.then(&step_primal)?;
        self.associated_2iso_dual = self.associated_2iso_dual.then(&step_dual)?;
        self.pairs.push(pair);
        self.links.push(link);
        Ok(())
    }

    /// Appends `other`, whose first pair must equal this chain's last pair.
    pub fn append(&mut self, other: SimilarityChain) -> Result<()> {
        if other.first() != self.last() {
            return Err(Error::Internal("chains do not meet".into()));
        }
        for (pair, link) in other.pairs.into_iter().skip(1).zip(other.links) {
            self.push(link, pair)?;
        }
        Ok(())
    }

    pub fn reversed(&self) -> Result<Self> {
        let pairs = self.pairs.iter().rev().cloned().collect();
        let links = self.links.iter().rev().map(Link::inverse).collect();
        Self::new(pairs, links)
    }

    /// Re-checks every link and both associated maps from scratch.
    pub fn is_valid(&self) -> bool {
        match Self::new(self.pairs.clone(), self.links.clone()) {
            Ok(c) => {
                c.associated_2iso_primal == self.associated_2iso_primal
                    && c.associated_2iso_dual == self.associated_2iso_dual
                    && self.pairs.iter().all(GeometricDualPair::is_consistent)
            }
            Err(_) => false,
        }
    }
}

/// Pair obtained by carrying `pair` along a primal isomorphism onto `target`,
/// plus the induced isomorphism between the old and the new dual.
pub(crate) fn transport_pair(
    pair: &GeometricDualPair,
    iso: &GraphIso,
    target: &MultiGraph,
) -> Result<(GeometricDualPair, GraphIso)> {
    let moved = GeometricDualPair::from_embedding(pair.embedding.transport(iso, target)?);
    let edges = pair.duality_map.inverse().then(&iso.edge_map)?.then(&moved.duality_map)?;
    let dual_iso = vertex_map_for_edge_map(&pair.dual, &moved.dual, &edges)
        .ok_or_else(|| Error::Internal("transported embedding changed the dual".into()))?;
    Ok((moved, dual_iso))
}

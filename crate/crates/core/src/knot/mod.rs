//! Link diagrams as PD codes, their signed checkerboard graphs, the medial
//! construction going back, Goeritz matrices, and diagram chains.

mod chain;
mod checkerboard;
mod goeritz;
mod medial;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::embed::{is_spherical, Dart, End, Rotation};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Sign, VertexId};

pub use chain::diagram_chain;
pub use checkerboard::{checkerboard, checkerboard_with, CheckerboardPair, Coloring, Shade};
pub use goeritz::{determinant, goeritz, GoeritzMatrix};
pub use medial::diagram_from_signed_gdp;

/// One crossing: arc labels counterclockwise starting at the incoming
/// under-strand, and the crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: Sign,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub crossings: Vec<Crossing>,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>) -> Result<Self> {
        let d = Self { crossings };
        d.validate()?;
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Parses the text form: one `X a b c d s` line per crossing, with
    /// `s` one of `+1`, `1`, `-1`. Blank lines and `#` comments are skipped.
    pub fn parse_pd(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::BadPdCode(format!("line {}: {what}", n + 1));
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 6 || tokens[0] != "X" {
                return Err(bad("expected `X a b c d s`"));
            }
            let mut arcs = [0u32; 4];
            for (slot, t) in arcs.iter_mut().zip(&tokens[1..5]) {
                *slot = t.parse().map_err(|_| bad(&format!("arc label `{t}`")))?;
            }
            let sign = match tokens[5] {
                "+1" | "1" => Sign::Plus,
                "-1" => Sign::Minus,
                t => return Err(bad(&format!("sign `{t}`"))),
            };
            crossings.push(Crossing { arcs, sign });
        }
        Self::new(crossings)
    }

    pub fn to_pd(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let s = if c.sign == Sign::Plus { "+1" } else { "-1" };
            writeln!(out, "X {} {} {} {} {s}", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]).unwrap();
        }
        out
    }

    /// The underlying 4-valent map: vertex `i` is crossing `i`, edge `a` is
    /// arc `a` (end A at its first occurrence), and the rotation at each
    /// crossing is the PD order.
    pub fn four_valent_map(&self) -> Result<(MultiGraph, Rotation)> {
        let mut seen: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for (p, &a) in c.arcs.iter().enumerate() {
                seen.entry(a).or_default().push((i, p));
            }
        }
        let mut g = MultiGraph::new();
        for i in 0..self.crossings.len() {
            g.add_vertex(VertexId(i as u32));
        }
        let mut dart_at: BTreeMap<(usize, usize), Dart> = BTreeMap::new();
        for (&a, occ) in &seen {
            if occ.len() != 2 {
                return Err(Error::BadPdCode(format!("arc {a} occurs {} times", occ.len())));
            }
            g.add_edge(EdgeId(a), VertexId(occ[0].0 as u32), VertexId(occ[1].0 as u32))?;
            dart_at.insert(occ[0], Dart::new(EdgeId(a), End::A));
            dart_at.insert(occ[1], Dart::new(EdgeId(a), End::B));
        }
        let rotation = (0..self.crossings.len())
            .map(|i| (VertexId(i as u32), (0..4).map(|p| dart_at[&(i, p)]).collect()))
            .collect();
        Ok((g, rotation))
    }

    /// Checks arc multiplicities and that every component of the diagram
    /// sits on a sphere.
    pub fn validate(&self) -> Result<()> {
        let (g, rot) = self.four_valent_map()?;
        if !is_spherical(&g, &rot)? {
            return Err(Error::BadPdCode("crossing orders do not describe a planar diagram".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;

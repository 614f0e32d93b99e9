//! JSON file formats. Parse failures name the offending field by its path,
//! e.g. `edges[2].sign`.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::chains::{ChainKind, DualityChain};
use crate::embed::{Dart, Embedding, End};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Sign, Signs, VertexId};
use crate::knot::LinkDiagram;
use crate::maps::EdgeBijection;

/// Deserializes `text`, reporting the JSON path of the first bad field.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse(format!("{path}: {}", e.into_inner()))
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: u32,
    pub a: u32,
    pub b: u32,
    #[serde(default)]
    pub sign: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<u32>,
    pub edges: Vec<EdgeRecord>,
}

impl GraphFile {
    pub fn new(g: &MultiGraph, signs: Option<&Signs>) -> Self {
        Self {
            vertices: g.vertices().map(|v| v.0).collect(),
            edges: g
                .edges()
                .map(|(e, a, b)| EdgeRecord { id: e.0, a: a.0, b: b.0, sign: signs.and_then(|s| s.get(&e).copied()) })
                .collect(),
        }
    }

    /// The graph, plus its signs when every edge carries one.
    pub fn to_graph(&self) -> Result<(MultiGraph, Option<Signs>)> {
        let mut g = MultiGraph::new();
        for &v in &self.vertices {
            if !g.add_vertex(VertexId(v)) {
                return Err(Error::Parse(format!("vertices: duplicate vertex {v}")));
            }
        }
        let mut signs = Signs::new();
        for (i, r) in self.edges.iter().enumerate() {
            for (field, v) in [("a", r.a), ("b", r.b)] {
                if !g.has_vertex(VertexId(v)) {
                    return Err(Error::Parse(format!("edges[{i}].{field}: unknown vertex {v}")));
                }
            }
            g.add_edge(EdgeId(r.id), VertexId(r.a), VertexId(r.b))
                .map_err(|e| Error::Parse(format!("edges[{i}].id: {e}")))?;
            if let Some(s) = r.sign {
                signs.insert(EdgeId(r.id), s);
            }
        }
        match signs.len() {
            0 if !self.edges.is_empty() => Ok((g, None)),
            n if n == self.edges.len() => Ok((g, Some(signs))),
            _ => {
                let i = self.edges.iter().position(|r| r.sign.is_none()).unwrap();
                Err(Error::Parse(format!("edges[{i}].sign: signs must be given on all edges or none")))
            }
        }
    }
}

/// A dart written as `[["edge", 3], ["end", "A"]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartRecord(pub (String, u32), pub (String, End));

impl From<Dart> for DartRecord {
    fn from(d: Dart) -> Self {
        DartRecord(("edge".into(), d.edge.0), ("end".into(), d.end))
    }
}

impl DartRecord {
    fn to_dart(&self, at: &str) -> Result<Dart> {
        if self.0 .0 != "edge" {
            return Err(Error::Parse(format!("{at}[0]: expected tag \"edge\", got {:?}", self.0 .0)));
        }
        if self.1 .0 != "end" {
            return Err(Error::Parse(format!("{at}[1]: expected tag \"end\", got {:?}", self.1 .0)));
        }
        Ok(Dart::new(EdgeId(self.0 .1), self.1 .1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingFile {
    pub graph: GraphFile,
    pub rotation: BTreeMap<u32, Vec<DartRecord>>,
}

impl EmbeddingFile {
    pub fn new(emb: &Embedding) -> Self {
        Self {
            graph: GraphFile::new(emb.graph(), None),
            rotation: emb
                .rotation()
                .iter()
                .map(|(v, darts)| (v.0, darts.iter().map(|&d| d.into()).collect()))
                .collect(),
        }
    }

    pub fn to_embedding(&self) -> Result<Embedding> {
        let (g, _) = self.graph.to_graph().map_err(|e| prefix("graph", e))?;
        let mut rot = BTreeMap::new();
        for (v, darts) in &self.rotation {
            let at = format!("rotation.{v}");
            if !g.has_vertex(VertexId(*v)) {
                return Err(Error::Parse(format!("{at}: unknown vertex {v}")));
            }
            let ds = darts.iter().enumerate().map(|(i, d)| d.to_dart(&format!("{at}[{i}]"))).collect::<Result<_>>()?;
            rot.insert(VertexId(*v), ds);
        }
        Embedding::new(g, rot).map_err(|e| prefix("rotation", e))
    }
}

fn prefix(field: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{field}.{m}")),
        other => Error::Parse(format!("{field}: {other}")),
    }
}

/// A duality chain with the map it is claimed to realize.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub kind: ChainKind,
    pub graphs: Vec<GraphFile>,
    pub embeddings: Vec<EmbeddingFile>,
    pub maps: Vec<EdgeBijection>,
    pub expected: EdgeBijection,
}

impl ChainFile {
    pub fn new(kind: ChainKind, chain: &DualityChain, expected: &EdgeBijection) -> Self {
        Self {
            kind,
            graphs: chain.graphs.iter().map(|g| GraphFile::new(g, None)).collect(),
            embeddings: chain.embeddings.iter().map(EmbeddingFile::new).collect(),
            maps: chain.maps.clone(),
            expected: expected.clone(),
        }
    }

    pub fn to_chain(&self) -> Result<DualityChain> {
        let graphs = self
            .graphs
            .iter()
            .enumerate()
            .map(|(i, g)| g.to_graph().map(|x| x.0).map_err(|e| prefix(&format!("graphs[{i}]"), e)))
            .collect::<Result<_>>()?;
        let embeddings = self
            .embeddings
            .iter()
            .enumerate()
            .map(|(i, e)| e.to_embedding().map_err(|e| prefix(&format!("embeddings[{i}]"), e)))
            .collect::<Result<_>>()?;
        Ok(DualityChain { graphs, maps: self.maps.clone(), embeddings })
    }
}

/// Reads a diagram from PD text or its JSON form, chosen by the first
/// non-blank character.
pub fn read_diagram(text: &str) -> Result<LinkDiagram> {
    if text.trim_start().starts_with('{') {
        let d: LinkDiagram = from_json(text)?;
        d.validate()?;
        Ok(d)
    } else {
        LinkDiagram::parse_pd(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 1), (2, 1, 0)]).unwrap();
        let text = to_json(&GraphFile::new(&g, None));
        let back: GraphFile = from_json(&text).unwrap();
        assert_eq!(back.to_graph().unwrap(), (g.clone(), None));
        let signs: Signs = g.edge_ids().map(|e| (e, Sign::Minus)).collect();
        let back: GraphFile = from_json(&to_json(&GraphFile::new(&g, Some(&signs)))).unwrap();
        assert_eq!(back.to_graph().unwrap(), (g, Some(signs)));
    }

    #[test]
    fn errors_name_the_field() {
        let bad_sign = r#"{"vertices":[0,1],"edges":[{"id":0,"a":0,"b":1,"sign":2}]}"#;
        let e = from_json::<GraphFile>(bad_sign).unwrap_err().to_string();
        assert!(e.contains("edges[0].sign"), "{e}");
        let missing = r#"{"vertices":[0,1],"edges":[{"id":0,"b":1}]}"#;
        let e = from_json::<GraphFile>(missing).unwrap_err().to_string();
        assert!(e.contains("edges[0]") && e.contains("`a`"), "{e}");
        let dangling = r#"{"vertices":[0],"edges":[{"id":0,"a":0,"b":5}]}"#;
        let e = from_json::<GraphFile>(dangling).unwrap().to_graph().unwrap_err().to_string();
        assert!(e.contains("edges[0].b"), "{e}");
        let mixed = r#"{"vertices":[0],"edges":[{"id":0,"a":0,"b":0,"sign":1},{"id":1,"a":0,"b":0}]}"#;
        let e = from_json::<GraphFile>(mixed).unwrap().to_graph().unwrap_err().to_string();
        assert!(e.contains("edges[1].sign"), "{e}");
    }

    #[test]
    fn embedding_round_trip() {
        let g = MultiGraph::from_edges(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap();
        let emb = crate::embed::enumerate_spherical_embeddings(&g).unwrap().next().unwrap();
        let text = to_json(&EmbeddingFile::new(&emb));
        assert!(text.contains("\"edge\"") && text.contains("\"end\""));
        let back: EmbeddingFile = from_json(&text).unwrap();
        assert_eq!(back.to_embedding().unwrap(), emb);
        let broken = text.replacen("\"end\"", "\"side\"", 1);
        let e = from_json::<EmbeddingFile>(&broken).unwrap().to_embedding().unwrap_err().to_string();
        assert!(e.contains("rotation.0[0][1]"), "{e}");
    }

    #[test]
    fn bijection_format() {
        let f: EdgeBijection = from_json(r#"{"map":{"0":2,"1":0,"2":1}}"#).unwrap();
        assert_eq!(f, EdgeBijection::from_pairs(&[(0, 2), (1, 0), (2, 1)]));
        assert_eq!(from_json::<EdgeBijection>(&to_json(&f)).unwrap(), f);
    }

    #[test]
    fn diagram_both_forms() {
        let pd = "X 1 4 2 5 -1\nX 3 6 4 1 -1\nX 5 2 6 3 -1\n";
        let d = read_diagram(pd).unwrap();
        assert_eq!(read_diagram(&to_json(&d)).unwrap(), d);
    }
}

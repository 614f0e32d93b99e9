use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use duality_core::chains::{duality_chain_2iso, duality_chain_adual, verify_chain, ChainKind, GeometricDualPair};
use duality_core::embed::{enumerate_spherical_embeddings, geometric_dual};
use duality_core::graph::{blocks, Signs, SignedGraph};
use duality_core::io::{from_json, read_diagram, to_json, ChainFile, DartRecord, EmbeddingFile, GraphFile};
use duality_core::knot::{checkerboard_with, diagram_chain, diagram_from_signed_gdp, goeritz, Coloring, GoeritzMatrix, Shade};
use duality_core::matroid::{find_map, is_map_of_kind, signs_compatible, Limits, MapKind};
use duality_core::{EdgeBijection, Error, MultiGraph, VertexId};

use crate::{Cli, Command, Mode, ShadeArg};

const CORPUS_CAP: usize = 8;

/// Runs one subcommand and returns its exit status.
pub fn run(cli: &Cli) -> Result<u8> {
    match run_inner(cli) {
        Err(e) => match e.downcast_ref::<Error>() {
            // a claim that turned out false, or a search that found nothing
            Some(Error::NotA2Isomorphism | Error::NotAnAbstractDuality | Error::NonPlanar(_)) => {
                eprintln!("{e:#}");
                Ok(1)
            }
            _ => Err(e),
        },
        ok => ok,
    }
}

fn run_inner(cli: &Cli) -> Result<u8> {
    let max_edges = cli.max_edges.unwrap_or(12);
    let limits = Limits { search_edges: max_edges, ..Limits::default() };
    match &cli.command {
        Command::Dual { embedding, graph } => {
            let emb = match (embedding, graph) {
                (Some(p), _) => load::<EmbeddingFile>(p)?.to_embedding().with_context(|| p.display().to_string())?,
                (None, Some(p)) => {
                    let (g, _) = load_graph(p, false)?;
                    enumerate_spherical_embeddings(&g)?
                        .next()
                        .ok_or_else(|| Error::NonPlanar(format!("{} has no spherical embedding", p.display())))?
                }
                (None, None) => bail!("dual needs a graph or --embedding"),
            };
            let d = geometric_dual(&emb);
            emit(cli, &DualOut { dual: GraphFile::new(&d.graph, None), embedding: EmbeddingFile::new(&d.embedding), duality_map: d.map })?;
            Ok(0)
        }
        Command::Blocks { graph } => {
            let (g, _) = load_graph(graph, false)?;
            let b = blocks(&g);
            let out = BlocksOut {
                cut_vertices: b.cut_vertices.iter().map(|v| v.0).collect(),
                blocks: b
                    .blocks
                    .iter()
                    .map(|bl| BlockOut { edges: bl.edges.iter().map(|e| e.0).collect(), vertices: bl.vertices.iter().map(|v| v.0).collect() })
                    .collect(),
            };
            emit(cli, &out)?;
            Ok(0)
        }
        Command::Check2Iso { g, h, map } => check(cli, MapKind::TwoIsomorphism, g, h, map, &limits),
        Command::CheckAdual { g, h, map } => check(cli, MapKind::AbstractDuality, g, h, map, &limits),
        Command::FindMap { mode, g, h } => {
            let ((g, gs), (h, hs)) = (load_graph(g, cli.signed)?, load_graph(h, cli.signed)?);
            let signs = gs.as_ref().zip(hs.as_ref());
            let found = find_map(kind_of(*mode), &g, &h, signs, &limits)?;
            emit(cli, &found)?;
            Ok(if found.is_some() { 0 } else { 1 })
        }
        Command::Chain { mode, g, h, map } => {
            let ((g, _), (h, _)) = (load_graph(g, false)?, load_graph(h, false)?);
            let f: EdgeBijection = load(map)?;
            let edges = g.edge_count().max(h.edge_count());
            if edges > max_edges {
                return Err(Error::TooLarge { edges, limit: max_edges }.into());
            }
            let (kind, chain) = match mode {
                Mode::TwoIso => (ChainKind::TwoIso, duality_chain_2iso(&g, &h, &f)?),
                Mode::Adual => (ChainKind::AbstractDual, duality_chain_adual(&g, &h, &f)?),
            };
            emit(cli, &ChainFile::new(kind, &chain, &f))?;
            Ok(0)
        }
        Command::Verify { chain } => {
            let file: ChainFile = load(chain)?;
            let c = file.to_chain().with_context(|| chain.display().to_string())?;
            let ok = verify_chain(&c, &file.expected, file.kind);
            emit(cli, &Verdict { result: ok })?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Checkerboard { diagram, reversed } => {
            let d = read_diagram(&read(diagram)?).with_context(|| diagram.display().to_string())?;
            let cb = checkerboard_with(&d, if *reversed { Coloring::Reversed } else { Coloring::Standard })?;
            emit(
                cli,
                &BoardOut {
                    shaded: GraphFile::new(&cb.shaded.graph, Some(&cb.shaded.signs)),
                    unshaded: GraphFile::new(&cb.unshaded.graph, Some(&cb.unshaded.signs)),
                },
            )?;
            Ok(0)
        }
        Command::Medial { graph, embedding, pd } => {
            let sg = load_signed(graph)?;
            let pair = match embedding {
                Some(p) => {
                    let emb = load::<EmbeddingFile>(p)?.to_embedding().with_context(|| p.display().to_string())?;
                    if emb.graph() != &sg.graph {
                        bail!("{}: graph differs from {}", p.display(), graph.display());
                    }
                    GeometricDualPair::from_embedding(emb)
                }
                None => GeometricDualPair::first(&sg.graph)?,
            };
            let d = diagram_from_signed_gdp(&pair, &sg.signs)?;
            if *pd {
                write_out(cli, &d.to_pd())?;
            } else {
                emit(cli, &d)?;
            }
            Ok(0)
        }
        Command::Goeritz { graph, drop } => {
            let sg = load_signed(graph)?;
            let v = match drop {
                Some(v) => VertexId(*v),
                None => sg.graph.vertices().next().ok_or_else(|| anyhow!("{}: graph has no vertices", graph.display()))?,
            };
            let m = goeritz(&sg, v)?;
            let determinant = m.determinant();
            emit(cli, &GoeritzOut { matrix: m, determinant })?;
            Ok(0)
        }
        Command::DiagramChain { d1, side1, d2, side2, map } => {
            let a = read_diagram(&read(d1)?).with_context(|| d1.display().to_string())?;
            let b = read_diagram(&read(d2)?).with_context(|| d2.display().to_string())?;
            let f: EdgeBijection = load(map)?;
            let diagrams = diagram_chain(&a, shade(*side1), &b, shade(*side2), &f)?;
            emit(cli, &DiagramsOut { diagrams })?;
            Ok(0)
        }
        Command::GenCorpus { planar_only } => {
            let max = cli.max_edges.unwrap_or(6);
            if max > CORPUS_CAP {
                return Err(Error::TooLarge { edges: max, limit: CORPUS_CAP }.into());
            }
            let graphs = duality_core::corpus::corpus(max);
            let entries = with_jobs(cli.jobs, || {
                graphs
                    .par_iter()
                    .map(|g| -> Result<CorpusEntry> {
                        let embeddings = enumerate_spherical_embeddings(g)?.map(|e| EmbeddingFile::new(&e).rotation).collect();
                        Ok(CorpusEntry { graph: GraphFile::new(g, None), embeddings })
                    })
                    .collect::<Result<Vec<_>>>()
            })??;
            let entries: Vec<_> = entries.into_iter().filter(|e| !*planar_only || !e.embeddings.is_empty()).collect();
            emit(cli, &entries)?;
            Ok(0)
        }
    }
}

fn check(cli: &Cli, kind: MapKind, g: &Path, h: &Path, map: &Path, limits: &Limits) -> Result<u8> {
    let ((g, gs), (h, hs)) = (load_graph(g, cli.signed)?, load_graph(h, cli.signed)?);
    let f: EdgeBijection = load(map)?;
    f.check(&g, &h)?;
    let signs_ok = match (&gs, &hs) {
        (Some(a), Some(b)) => signs_compatible(kind, a, b, &f),
        _ => true,
    };
    let ok = signs_ok && is_map_of_kind(kind, &g, &h, &f, limits)?;
    emit(cli, &Verdict { result: ok })?;
    Ok(if ok { 0 } else { 1 })
}

fn kind_of(mode: Mode) -> MapKind {
    match mode {
        Mode::TwoIso => MapKind::TwoIsomorphism,
        Mode::Adual => MapKind::AbstractDuality,
    }
}

fn shade(s: ShadeArg) -> Shade {
    match s {
        ShadeArg::Shaded => Shade::Shaded,
        ShadeArg::Unshaded => Shade::Unshaded,
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
        None => Ok(f()),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(from_json(&read(path)?).with_context(|| path.display().to_string())?)
}

/// With `signed`, every edge must carry a sign.
fn load_graph(path: &Path, signed: bool) -> Result<(MultiGraph, Option<Signs>)> {
    let file: GraphFile = load(path)?;
    let (g, signs) = file.to_graph().with_context(|| path.display().to_string())?;
    if signed && signs.is_none() && g.edge_count() > 0 {
        bail!("{}: edges[0].sign: --signed needs a sign on every edge", path.display());
    }
    Ok((g, if signed { Some(signs.unwrap_or_default()) } else { None }))
}

fn load_signed(path: &Path) -> Result<SignedGraph> {
    let (g, s) = load_graph(path, true)?;
    Ok(SignedGraph::new(g, s.unwrap_or_default())?)
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<()> {
    write_out(cli, &to_json(value))
}

fn write_out(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Verdict {
    result: bool,
}

#[derive(Serialize)]
struct DualOut {
    dual: GraphFile,
    embedding: EmbeddingFile,
    duality_map: EdgeBijection,
}

#[derive(Serialize)]
struct BlockOut {
    edges: Vec<u32>,
    vertices: Vec<u32>,
}

#[derive(Serialize)]
struct BlocksOut {
    cut_vertices: Vec<u32>,
    blocks: Vec<BlockOut>,
}

#[derive(Serialize)]
struct BoardOut {
    shaded: GraphFile,
    unshaded: GraphFile,
}

#[derive(Serialize)]
struct GoeritzOut {
    #[serde(flatten)]
    matrix: GoeritzMatrix,
    determinant: i128,
}

#[derive(Serialize)]
struct DiagramsOut {
    diagrams: Vec<duality_core::knot::LinkDiagram>,
}

#[derive(Serialize)]
struct CorpusEntry {
    graph: GraphFile,
    embeddings: Vec<BTreeMap<u32, Vec<DartRecord>>>,
}

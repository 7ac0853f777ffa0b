//! Normality witnesses for line graphs built from good vertex covers, and
//! independent verifiers for both the covers and the witnesses.
//!
//! A good cover `C` with one matching `S_e ∋ e` per edge, `C ⊆ v(S_e)`,
//! gives a witness directly: the stars at the vertices of `C` are cliques
//! of `L(G)`, the matchings are stable sets, and a star at `c` meets every
//! `S_e` because `c` is an endpoint of some edge of `S_e`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covers::{matching_for_edge, VertexCover};
use crate::decomposition::{
    matching_for_edge_bridged, plan_good_cover, CoverPlan, DecompositionError,
};
use crate::graph::io::{from_graph6, to_graph6, ParseError};
use crate::graph::{bridges, line_graph, Edge, Graph, GraphError, LineGraphMap};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("certificate does not verify: {0}")]
    Certificate(#[from] CertificateFailure),
    #[error("witness does not verify: {0}")]
    Witness(#[from] WitnessFailure),
    #[error("malformed certificate file: {0}")]
    Json(String),
    #[error("certificate graph: {0}")]
    GraphField(#[from] ParseError),
    #[error("unsupported certificate format_version {0}")]
    Version(u32),
}

/// A vertex cover with one matching per edge.
///
/// Matchings are kept as raw vertex pairs so a damaged certificate can be
/// represented and then rejected by [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodCoverCertificate {
    pub cover: Vec<usize>,
    pub per_edge: BTreeMap<Edge, Vec<(usize, usize)>>,
}

impl GoodCoverCertificate {
    pub fn from_parts(
        cover: &VertexCover,
        per_edge: impl IntoIterator<Item = (Edge, Vec<Edge>)>,
    ) -> Self {
        GoodCoverCertificate {
            cover: cover.vertices().to_vec(),
            per_edge: per_edge
                .into_iter()
                .map(|(e, s)| (e, s.into_iter().map(|x| (x.u, x.v)).collect()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CliqueTag {
    Star { center: usize },
    Triangle,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    pub tag: CliqueTag,
    /// Sorted line-graph vertex ids.
    pub line_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityWitness {
    pub cliques: Vec<Clique>,
    /// Sorted, deduplicated, each sorted.
    pub stables: Vec<Vec<usize>>,
    pub host: LineGraphMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFailure {
    #[error("cover failure: vertex {vertex} out of range for {n} vertices")]
    CoverOutOfRange { vertex: usize, n: usize },
    #[error("cover failure: edge ({0}) has no endpoint in the cover")]
    EdgeUncovered(Edge),
    #[error("coverage failure: no matching listed for edge ({0})")]
    MissingEdge(Edge),
    #[error("coverage failure: matching listed for ({0}), which is not an edge")]
    ExtraEntry(Edge),
    #[error("coverage failure: {found} matchings for {edges} edges")]
    EntryCount { found: usize, edges: usize },
    #[error("matching for ({edge}): pair ({a},{b}) is not an edge of the graph")]
    NotAnEdge { edge: Edge, a: usize, b: usize },
    #[error("disjointness failure: matching for ({edge}) uses vertex {vertex} twice")]
    Disjointness { edge: Edge, vertex: usize },
    #[error("membership failure: matching for ({0}) does not contain it")]
    Membership(Edge),
    #[error("endpoint coverage failure: matching for ({edge}) misses cover vertex {vertex}")]
    EndpointCoverage { edge: Edge, vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessFailure {
    #[error("{family} {index}: vertex {vertex} out of range for {n} line vertices")]
    IdOutOfRange {
        family: Family,
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("clique {index}: line vertices {a} and {b} are not adjacent")]
    NotClique { index: usize, a: usize, b: usize },
    #[error("stable {index}: line vertices {a} and {b} are adjacent")]
    NotStable { index: usize, a: usize, b: usize },
    #[error("coverage failure: line vertex {vertex} is in no {family}")]
    Coverage { family: Family, vertex: usize },
    #[error("intersection failure: clique {clique} and stable {stable} are disjoint")]
    Disjoint { clique: usize, stable: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Clique,
    Stable,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Clique => "clique",
            Family::Stable => "stable",
        })
    }
}

/// Good cover plus one matching per edge for a connected graph with
/// degrees in `{1, 3}`. The result is verified before it is returned.
pub fn build_certificate(g: &Graph) -> Result<GoodCoverCertificate, WitnessError> {
    let plan = plan_good_cover(g)?;
    certificate_from_plan(g, &plan)
}

pub fn certificate_from_plan(
    g: &Graph,
    plan: &CoverPlan,
) -> Result<GoodCoverCertificate, WitnessError> {
    let single_cubic = g.is_cubic() && bridges(g).is_empty();
    let mut per_edge = Vec::with_capacity(g.m());
    for &e in g.edges() {
        let s = if single_cubic {
            matching_for_edge(g, &plan.cover, e).map_err(DecompositionError::from)?
        } else {
            matching_for_edge_bridged(g, plan, e)?
        };
        per_edge.push((e, s.edges().to_vec()));
    }
    let cert = GoodCoverCertificate::from_parts(&plan.cover, per_edge);
    verify_certificate(g, &cert)?;
    Ok(cert)
}

/// Replays every certificate invariant and reports the first failure.
pub fn verify_certificate(
    g: &Graph,
    cert: &GoodCoverCertificate,
) -> Result<(), CertificateFailure> {
    let n = g.n();
    let mut in_cover = vec![false; n];
    for &v in &cert.cover {
        if v >= n {
            return Err(CertificateFailure::CoverOutOfRange { vertex: v, n });
        }
        in_cover[v] = true;
    }
    if let Some(&e) = g.edges().iter().find(|e| !in_cover[e.u] && !in_cover[e.v]) {
        return Err(CertificateFailure::EdgeUncovered(e));
    }
    if let Some(&e) = cert
        .per_edge
        .keys()
        .find(|e| e.v >= n || !g.has_edge(e.u, e.v))
    {
        return Err(CertificateFailure::ExtraEntry(e));
    }
    let mut seen = vec![usize::MAX; n];
    for (i, &e) in g.edges().iter().enumerate() {
        let s = cert
            .per_edge
            .get(&e)
            .ok_or(CertificateFailure::MissingEdge(e))?;
        let mut has_e = false;
        for &(a, b) in s {
            if a >= n || b >= n || !g.has_edge(a, b) {
                return Err(CertificateFailure::NotAnEdge { edge: e, a, b });
            }
            for x in [a, b] {
                if seen[x] == i {
                    return Err(CertificateFailure::Disjointness { edge: e, vertex: x });
                }
                seen[x] = i;
            }
            has_e |= Edge::new(a, b) == e;
        }
        if !has_e {
            return Err(CertificateFailure::Membership(e));
        }
        if let Some(&v) = cert.cover.iter().find(|&&v| seen[v] != i) {
            return Err(CertificateFailure::EndpointCoverage { edge: e, vertex: v });
        }
    }
    Ok(())
}

/// Stars at the cover vertices and the distinct matchings, in line-graph ids.
pub fn to_normality_witness(
    g: &Graph,
    cert: &GoodCoverCertificate,
) -> Result<NormalityWitness, WitnessError> {
    let host = line_graph(g)?;
    let line_id = |a: usize, b: usize| -> Result<usize, WitnessError> {
        let e = Edge::try_new(a, b)?;
        host.vertex_of_edge(e)
            .ok_or(WitnessError::Certificate(CertificateFailure::ExtraEntry(e)))
    };
    let mut cliques = Vec::with_capacity(cert.cover.len());
    for &c in &cert.cover {
        let mut line_vertices = g
            .neighbors(c)
            .iter()
            .map(|&w| line_id(c, w))
            .collect::<Result<Vec<_>, _>>()?;
        line_vertices.sort_unstable();
        cliques.push(Clique {
            tag: CliqueTag::Star { center: c },
            line_vertices,
        });
    }
    cliques.sort();
    let mut stables = Vec::with_capacity(cert.per_edge.len());
    for s in cert.per_edge.values() {
        let mut ids = s
            .iter()
            .map(|&(a, b)| line_id(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        ids.sort_unstable();
        stables.push(ids);
    }
    stables.sort();
    stables.dedup();
    Ok(NormalityWitness {
        cliques,
        stables,
        host,
    })
}

/// Checks clique-ness, stability, coverage by both families and
/// pairwise intersection against the line graph `l`.
pub fn verify_witness(l: &Graph, w: &NormalityWitness) -> Result<(), WitnessFailure> {
    let n = l.n();
    let families: [(Family, Vec<&[usize]>); 2] = [
        (
            Family::Clique,
            w.cliques
                .iter()
                .map(|c| c.line_vertices.as_slice())
                .collect(),
        ),
        (
            Family::Stable,
            w.stables.iter().map(Vec::as_slice).collect(),
        ),
    ];
    for (family, sets) in &families {
        for (index, set) in sets.iter().enumerate() {
            if let Some(&vertex) = set.iter().find(|&&v| v >= n) {
                return Err(WitnessFailure::IdOutOfRange {
                    family: *family,
                    index,
                    vertex,
                    n,
                });
            }
        }
    }
    for (index, set) in families[0].1.iter().enumerate() {
        for (i, &a) in set.iter().enumerate() {
            if let Some(&b) = set[i + 1..].iter().find(|&&b| a != b && !l.has_edge(a, b)) {
                return Err(WitnessFailure::NotClique { index, a, b });
            }
        }
    }
    for (index, set) in families[1].1.iter().enumerate() {
        for (i, &a) in set.iter().enumerate() {
            if let Some(&b) = set[i + 1..].iter().find(|&&b| l.has_edge(a, b)) {
                return Err(WitnessFailure::NotStable { index, a, b });
            }
        }
    }
    for (family, sets) in &families {
        let mut hit = vec![false; n];
        for &v in sets.iter().flat_map(|s| s.iter()) {
            hit[v] = true;
        }
        if let Some(vertex) = hit.iter().position(|&h| !h) {
            return Err(WitnessFailure::Coverage {
                family: *family,
                vertex,
            });
        }
    }
    let masks = |sets: &[&[usize]]| -> Vec<Vec<u64>> {
        sets.iter()
            .map(|s| {
                let mut m = vec![0u64; n.div_ceil(64)];
                for &v in s.iter() {
                    m[v / 64] |= 1 << (v % 64);
                }
                m
            })
            .collect()
    };
    let cm = masks(&families[0].1);
    let sm = masks(&families[1].1);
    for (clique, c) in cm.iter().enumerate() {
        for (stable, s) in sm.iter().enumerate() {
            if c.iter().zip(s).all(|(x, y)| x & y == 0) {
                return Err(WitnessFailure::Disjoint { clique, stable });
            }
        }
    }
    Ok(())
}

/// Certificate and witness, both verified.
pub fn certify(g: &Graph) -> Result<(GoodCoverCertificate, NormalityWitness), WitnessError> {
    let cert = build_certificate(g)?;
    let witness = to_normality_witness(g, &cert)?;
    verify_witness(&witness.host.line, &witness)?;
    Ok((cert, witness))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRecord {
    pub center: usize,
    pub line_vertices: Vec<usize>,
}

/// On-disk form. Field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub graph: String,
    pub cover: Vec<usize>,
    pub matchings: Vec<Vec<[usize; 2]>>,
    pub cliques: Vec<CliqueRecord>,
    pub stables: Vec<Vec<usize>>,
    pub format_version: u32,
}

impl CertificateFile {
    /// Matchings are listed in the graph's edge order; triangle cliques
    /// have no file representation and are rejected.
    pub fn new(
        g: &Graph,
        cert: &GoodCoverCertificate,
        witness: &NormalityWitness,
    ) -> Result<Self, WitnessError> {
        let mut cover = cert.cover.clone();
        cover.sort_unstable();
        let matchings = g
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<[usize; 2]> = cert
                    .per_edge
                    .get(e)
                    .ok_or(CertificateFailure::MissingEdge(*e))?
                    .iter()
                    .map(|&(a, b)| [a.min(b), a.max(b)])
                    .collect();
                s.sort_unstable();
                Ok(s)
            })
            .collect::<Result<Vec<_>, CertificateFailure>>()?;
        let cliques = witness
            .cliques
            .iter()
            .map(|c| match c.tag {
                CliqueTag::Star { center } => Ok(CliqueRecord {
                    center,
                    line_vertices: c.line_vertices.clone(),
                }),
                CliqueTag::Triangle => Err(WitnessError::Json(
                    "triangle cliques are not serializable".into(),
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CertificateFile {
            graph: to_graph6(g),
            cover,
            matchings,
            cliques,
            stables: witness.stables.clone(),
            format_version: FORMAT_VERSION,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, WitnessError> {
        let file: CertificateFile =
            serde_json::from_str(text).map_err(|e| WitnessError::Json(e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Err(WitnessError::Version(file.format_version));
        }
        Ok(file)
    }

    pub fn embedded_graph(&self) -> Result<Graph, WitnessError> {
        Ok(from_graph6(self.graph.as_bytes())?)
    }

    /// Reads the matchings against `g`'s edge order. More matchings than
    /// edges is a coverage failure; fewer shows up when verifying.
    pub fn certificate_for(&self, g: &Graph) -> Result<GoodCoverCertificate, CertificateFailure> {
        if self.matchings.len() > g.m() {
            return Err(CertificateFailure::EntryCount {
                found: self.matchings.len(),
                edges: g.m(),
            });
        }
        Ok(GoodCoverCertificate {
            cover: self.cover.clone(),
            per_edge: g
                .edges()
                .iter()
                .zip(&self.matchings)
                .map(|(&e, s)| (e, s.iter().map(|&[a, b]| (a, b)).collect()))
                .collect(),
        })
    }

    pub fn witness_for(&self, g: &Graph) -> Result<NormalityWitness, WitnessError> {
        Ok(NormalityWitness {
            cliques: self
                .cliques
                .iter()
                .map(|c| Clique {
                    tag: CliqueTag::Star { center: c.center },
                    line_vertices: c.line_vertices.clone(),
                })
                .collect(),
            stables: self.stables.clone(),
            host: line_graph(g)?,
        })
    }
}

use super::shape::{classify_masked, ComponentShape};
use super::{require_cubic, CoverError, VertexCover};
use crate::graph::{max_bipartite_matching, BipartiteIncidence, Edge, Graph, Matching};

/// One edge of a nice matching: `important` lies in odd component
/// `component`, `outside` lies outside the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NiceEdge {
    pub component: usize,
    pub important: usize,
    pub outside: usize,
}

impl NiceEdge {
    pub fn edge(&self) -> Edge {
        Edge::new(self.important, self.outside)
    }
}

/// One edge per odd component, in component order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NiceMatching {
    pub edges: Vec<NiceEdge>,
}

impl NiceMatching {
    pub fn as_matching(&self) -> Matching {
        Matching::new(self.edges.iter().map(NiceEdge::edge))
            .expect("nice edges use distinct components and distinct outside vertices")
    }
}

/// The bipartite graph between odd components of `F[U]` and the surviving
/// vertices outside `U`.
///
/// `incidence.left[i]` is the index `i` into `odd`; `incidence.right`
/// holds host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeIncidence {
    pub odd: Vec<ComponentShape>,
    pub incidence: BipartiteIncidence,
}

impl FeIncidence {
    /// `in_u` marks `U`; `alive` marks the vertices of the host subgraph.
    pub(crate) fn build(host: &Graph, in_u: &[bool], alive: &[bool]) -> Result<Self, CoverError> {
        let odd: Vec<ComponentShape> = classify_masked(host, in_u)?
            .into_iter()
            .filter(|s| s.odd)
            .collect();
        let right: Vec<usize> = (0..host.n()).filter(|&v| alive[v] && !in_u[v]).collect();
        let mut position = vec![usize::MAX; host.n()];
        for (i, &b) in right.iter().enumerate() {
            position[b] = i;
        }
        let mut incidence = BipartiteIncidence::new((0..odd.len()).collect(), right);
        for (a, shape) in odd.iter().enumerate() {
            for &z in &shape.important {
                for &b in host.neighbors(z) {
                    if position[b] != usize::MAX {
                        incidence.add(a, position[b]);
                    }
                }
            }
        }
        Ok(FeIncidence { odd, incidence })
    }

    /// Reads a nice matching off a maximum matching, or `None` if some odd
    /// component stays unmatched.
    pub fn nice_matching(&self, host: &Graph) -> Option<NiceMatching> {
        let m = max_bipartite_matching(&self.incidence);
        if !m.covers_left() {
            return None;
        }
        let edges = m
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let outside = self.incidence.right[b];
                let important = *self.odd[a]
                    .important
                    .iter()
                    .find(|&&z| host.has_edge(z, outside))
                    .expect("incidence comes from an important vertex");
                NiceEdge {
                    component: a,
                    important,
                    outside,
                }
            })
            .collect();
        Some(NiceMatching { edges })
    }
}

/// `F_e` for a minimal cover `C` of a cubic graph and an edge `e = xy`:
/// odd components of `G[C \ {x,y}]` against `V \ C \ {x,y}`.
pub fn build_fe(g: &Graph, cover: &VertexCover, e: Edge) -> Result<FeIncidence, CoverError> {
    require_cubic(g)?;
    check_minimal_cover(g, cover)?;
    if !g.has_edge(e.u, e.v) {
        return Err(CoverError::NotAnEdge(e));
    }
    let (in_u, alive) = masks_without_edge(g, cover, e);
    FeIncidence::build(g, &in_u, &alive)
}

pub(crate) fn masks_without_edge(
    g: &Graph,
    cover: &VertexCover,
    e: Edge,
) -> (Vec<bool>, Vec<bool>) {
    let mut in_u = cover.mask(g.n());
    let mut alive = vec![true; g.n()];
    for x in [e.u, e.v] {
        in_u[x] = false;
        alive[x] = false;
    }
    (in_u, alive)
}

pub(crate) fn check_minimal_cover(g: &Graph, cover: &VertexCover) -> Result<(), CoverError> {
    let checked = VertexCover::new(g, cover.vertices().iter().copied())?;
    match checked.removable(g).first() {
        Some(&v) => Err(CoverError::NotMinimal(v)),
        None => Ok(()),
    }
}

/// A nice matching for `U` in an arbitrary graph `F` with `F[U]` of
/// maximum degree two, or `None` if none exists.
pub fn find_nice_matching(f: &Graph, subset: &[usize]) -> Result<Option<NiceMatching>, CoverError> {
    let mut in_u = vec![false; f.n()];
    for &v in subset {
        if v >= f.n() {
            return Err(CoverError::VertexOutOfRange {
                vertex: v,
                n: f.n(),
            });
        }
        in_u[v] = true;
    }
    let fe = FeIncidence::build(f, &in_u, &vec![true; f.n()])?;
    Ok(fe.nice_matching(f))
}

//! Vertex covers of cubic graphs and the nice-matching characterisation of
//! good covers.
//!
//! A cover `C` is *good* when every edge `e` lies in a matching `S` whose
//! endpoints contain `C`. For inclusion-minimal covers of cubic graphs this
//! reduces to a bipartite matching question per edge, answered here; the
//! constructive direction turns each answer into the matching itself.

mod complete;
mod nice;
mod shape;

use thiserror::Error;

use crate::graph::{Edge, Graph};

pub use complete::{complete_matching, is_good, matching_for_edge, nice_matching_for_edge};
pub(crate) use nice::check_minimal_cover;
pub use nice::{build_fe, find_nice_matching, FeIncidence, NiceEdge, NiceMatching};
pub use shape::{classify_components, delta, ComponentKind, ComponentShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}) is not covered")]
    NotACover(Edge),
    #[error("cover is not minimal: vertex {0} can be removed")]
    NotMinimal(usize),
    #[error("host graph is not cubic")]
    NotCubic,
    #[error("vertex {vertex} has degree {degree} in the induced subgraph (max 2)")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("component is even; delta is defined for odd components only")]
    EvenComponent,
    #[error("({0}) is not an edge of the host graph")]
    NotAnEdge(Edge),
    #[error("matching is not nice: {0}")]
    NotNice(String),
    #[error("no nice matching exists for edge ({0})")]
    NoNiceMatching(Edge),
    #[error("matching construction contradiction: {0}")]
    Contradiction(String),
}

/// A vertex cover of some host graph, stored as a sorted id list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexCover {
    vertices: Vec<usize>,
}

impl VertexCover {
    /// Validates that `vertices` cover every edge of `g`.
    pub fn new<I: IntoIterator<Item = usize>>(g: &Graph, vertices: I) -> Result<Self, CoverError> {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(CoverError::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        let cover = VertexCover { vertices };
        if let Some(e) = g
            .edges()
            .iter()
            .find(|e| !cover.contains(e.u) && !cover.contains(e.v))
        {
            return Err(CoverError::NotACover(*e));
        }
        Ok(cover)
    }

    /// Checks cover and inclusion-minimality.
    pub fn new_minimal<I: IntoIterator<Item = usize>>(
        g: &Graph,
        vertices: I,
    ) -> Result<Self, CoverError> {
        let cover = Self::new(g, vertices)?;
        match cover.removable(g).first() {
            Some(&v) => Err(CoverError::NotMinimal(v)),
            None => Ok(cover),
        }
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexCover { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.vertices {
            m[v] = true;
        }
        m
    }

    /// Cover vertices whose whole neighbourhood is in the cover.
    pub fn removable(&self, g: &Graph) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().all(|&w| self.contains(w)))
            .collect()
    }

    pub fn is_minimal(&self, g: &Graph) -> bool {
        self.removable(g).is_empty()
    }
}

/// Complement of the maximal independent set grown greedily in ascending
/// vertex order.
pub fn greedy_cover(g: &Graph) -> VertexCover {
    let mut independent = vec![false; g.n()];
    let mut blocked = vec![false; g.n()];
    for v in 0..g.n() {
        if !blocked[v] {
            independent[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    VertexCover::from_sorted_unchecked((0..g.n()).filter(|&v| !independent[v]).collect())
}

/// Drops the lowest-id removable vertex until none is left.
pub fn minimalize_cover(g: &Graph, cover: &VertexCover) -> Result<VertexCover, CoverError> {
    let order: Vec<usize> = cover.vertices().to_vec();
    minimalize_in_order(g, cover, &order)
}

/// Tries to drop cover vertices in the given order; vertices missing from
/// `order` are kept. A vertex that is not removable when visited never
/// becomes removable later, so one pass suffices.
pub fn minimalize_in_order(
    g: &Graph,
    cover: &VertexCover,
    order: &[usize],
) -> Result<VertexCover, CoverError> {
    let mut inside = VertexCover::new(g, cover.vertices().iter().copied())?.mask(g.n());
    for &v in order {
        if v < g.n() && inside[v] && g.neighbors(v).iter().all(|&w| inside[w]) {
            inside[v] = false;
        }
    }
    Ok(VertexCover::from_sorted_unchecked(
        (0..g.n()).filter(|&v| inside[v]).collect(),
    ))
}

pub(crate) fn require_cubic(g: &Graph) -> Result<(), CoverError> {
    if g.is_cubic() {
        Ok(())
    } else {
        Err(CoverError::NotCubic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::named_graph;

    /// Every subset check: a cover is minimal iff no proper subset is a cover.
    fn brute_minimal(g: &Graph, c: &[usize]) -> bool {
        let is_cover = |s: &[usize]| {
            g.edges()
                .iter()
                .all(|e| s.contains(&e.u) || s.contains(&e.v))
        };
        if !is_cover(c) {
            return false;
        }
        (0..(1u32 << c.len()) - 1).all(|mask| {
            let sub: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            !is_cover(&sub)
        })
    }

    #[test]
    fn greedy_on_small_graphs() {
        assert!(greedy_cover(&Graph::empty(4)).is_empty());
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(greedy_cover(&edge).vertices(), &[1]);
        let k4 = named_graph("K4").unwrap();
        assert_eq!(greedy_cover(&k4).vertices(), &[1, 2, 3]);
    }

    #[test]
    fn minimalize_k4_full_cover() {
        let k4 = named_graph("K4").unwrap();
        let full = VertexCover::new(&k4, 0..4).unwrap();
        let min = minimalize_cover(&k4, &full).unwrap();
        assert_eq!(min.vertices(), &[1, 2, 3]);
        assert!(brute_minimal(&k4, min.vertices()));
        assert_eq!(minimalize_cover(&k4, &min).unwrap(), min);
    }

    #[test]
    fn minimalize_rejects_non_cover() {
        let k4 = named_graph("K4").unwrap();
        let bad = VertexCover::from_sorted_unchecked(vec![0, 1]);
        assert!(matches!(
            minimalize_cover(&k4, &bad),
            Err(CoverError::NotACover(_))
        ));
    }

    #[test]
    fn minimal_covers_of_cubic_graphs_induce_max_degree_two() {
        for name in [
            "petersen",
            "K33",
            "prism",
            "cube",
            "tietze",
            "flower_snark5",
        ] {
            let g = named_graph(name).unwrap();
            let full = VertexCover::new(&g, 0..g.n()).unwrap();
            let c = minimalize_cover(&g, &full).unwrap();
            assert!(c.is_minimal(&g));
            if g.n() <= 12 {
                assert!(brute_minimal(&g, c.vertices()), "{name}");
            }
            for &v in c.vertices() {
                let inside = g.neighbors(v).iter().filter(|&&w| c.contains(w)).count();
                assert!(inside <= 2, "{name}");
            }
        }
    }

    #[test]
    fn constructor_validation() {
        let k4 = named_graph("K4").unwrap();
        assert!(matches!(
            VertexCover::new(&k4, [0, 9]),
            Err(CoverError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            VertexCover::new(&k4, [0, 1]),
            Err(CoverError::NotACover(_))
        ));
        assert_eq!(
            VertexCover::new_minimal(&k4, 0..4),
            Err(CoverError::NotMinimal(0))
        );
        assert!(VertexCover::new_minimal(&k4, [0, 1, 2]).is_ok());
    }
}

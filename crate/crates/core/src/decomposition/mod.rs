//! Cubic graphs with arms, decomposition along bridges, cubic completion,
//! and the construction of good covers for arbitrary graphs with degrees
//! in `{1, 3}`.
//!
//! The pipeline is [`decompose`] → [`good_cover_piece`] per piece →
//! [`merge_covers`]; [`matching_for_edge_bridged`] then answers per-edge
//! matching queries by walking the tree of pieces. [`find_wrong_set`]
//! explains why a minimal cover of a cubic graph fails to be good.

mod bridged;
mod completion;
mod piece_cover;
mod tree;
mod wrong_set;

use thiserror::Error;

use crate::covers::{CoverError, VertexCover};
use crate::graph::corpus::{connect_arms_mapped, gadget, gadget_ids};
use crate::graph::{Edge, Graph};

pub use bridged::{
    good_vertex_cover, matching_for_edge_bridged, merge_covers, plan_good_cover, CoverPlan,
};
pub use completion::{
    cubic_completion, pull_back_cover, pull_back_matching, Completion, GadgetPlacement,
};
pub use piece_cover::{good_cover_piece, OneArmCase, PieceCase, PieceCover};
pub use tree::{decompose, DecompositionTree, Link, Piece};
pub use wrong_set::{
    check_technical_exclusions, find_wrong_set, TechnicalClause, WrongSet, WrongSetStats,
    WrongSetType,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("vertex {vertex} has degree {degree}; only degrees 1 and 3 are allowed")]
    BadDegree { vertex: usize, degree: usize },
    #[error("arm {0} is adjacent to another arm")]
    ArmAdjacentToArm(usize),
    #[error("graph has no vertex of degree 3")]
    EmptyBody,
    #[error("vertex {0} is not an arm")]
    NotAnArm(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("({0}) is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("no good cover found for piece: {0}")]
    NoGoodCover(String),
    #[error("inconsistent decomposition: {0}")]
    Inconsistent(String),
    #[error("wrong set invariant failed: {0}")]
    WrongSetInvariant(String),
}

/// A graph whose body vertices have degree 3 and whose arms have degree 1
/// with a body neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicWithArms {
    graph: Graph,
    body: Vec<usize>,
    arms: Vec<usize>,
}

impl CubicWithArms {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Sorted.
    pub fn body(&self) -> &[usize] {
        &self.body
    }

    /// Sorted.
    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn is_arm(&self, v: usize) -> bool {
        self.arms.binary_search(&v).is_ok()
    }

    /// The body vertex an arm hangs off.
    pub fn arm_neighbor(&self, arm: usize) -> Result<usize, DecompositionError> {
        if !self.is_arm(arm) {
            return Err(DecompositionError::NotAnArm(arm));
        }
        Ok(self.graph.neighbors(arm)[0])
    }
}

/// Validates the degree pattern and splits the vertices into body and arms.
pub fn as_cubic_with_arms(g: &Graph) -> Result<CubicWithArms, DecompositionError> {
    let mut body = Vec::new();
    let mut arms = Vec::new();
    for v in 0..g.n() {
        match g.degree(v) {
            3 => body.push(v),
            1 => arms.push(v),
            degree => return Err(DecompositionError::BadDegree { vertex: v, degree }),
        }
    }
    if body.is_empty() {
        return Err(DecompositionError::EmptyBody);
    }
    if let Some(&a) = arms.iter().find(|&&a| g.degree(g.neighbors(a)[0]) == 1) {
        return Err(DecompositionError::ArmAdjacentToArm(a));
    }
    Ok(CubicWithArms {
        graph: g.clone(),
        body,
        arms,
    })
}

/// Deletes arm `v1` of `g1` and arm `v2` of `g2` and joins their
/// neighbours. Vertices of `g1` come first; the maps send old ids to new
/// ones (`None` for the deleted arms).
#[allow(clippy::type_complexity)]
pub fn connect_mapped(
    g1: &CubicWithArms,
    v1: usize,
    g2: &CubicWithArms,
    v2: usize,
) -> Result<(CubicWithArms, Vec<Option<usize>>, Vec<Option<usize>>), DecompositionError> {
    g1.arm_neighbor(v1)?;
    g2.arm_neighbor(v2)?;
    let (g, m1, m2) = connect_arms_mapped(&g1.graph, v1, &g2.graph, v2)
        .map_err(|e| DecompositionError::Inconsistent(e.to_string()))?;
    Ok((as_cubic_with_arms(&g)?, m1, m2))
}

pub fn connect(
    g1: &CubicWithArms,
    v1: usize,
    g2: &CubicWithArms,
    v2: usize,
) -> Result<CubicWithArms, DecompositionError> {
    connect_mapped(g1, v1, g2, v2).map(|(g, _, _)| g)
}

/// The six-vertex piece attached at every arm by the cubic completion:
/// K4 minus `cd`, an apex `w` on `c` and `d`, and the arm `u` at `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub shape: CubicWithArms,
}

impl Gadget {
    pub const A: usize = gadget_ids::A;
    pub const B: usize = gadget_ids::B;
    pub const C: usize = gadget_ids::C;
    pub const D: usize = gadget_ids::D;
    pub const W: usize = gadget_ids::W;
    pub const U: usize = gadget_ids::U;

    pub fn new() -> Self {
        Gadget {
            shape: as_cubic_with_arms(&gadget()).expect("gadget is cubic with one arm"),
        }
    }

    /// `{a, b, w}`: induces the edge `ab` plus the isolated apex.
    pub fn canonical_cover(&self) -> VertexCover {
        VertexCover::new(self.shape.graph(), [Self::A, Self::B, Self::W])
            .expect("covers the gadget")
    }
}

impl Default for Gadget {
    fn default() -> Self {
        Self::new()
    }
}

use super::{CubicWithArms, DecompositionError, Gadget};
use crate::covers::VertexCover;
use crate::graph::{Edge, Graph, Matching};

/// Where one gadget sits in a completion. All ids are completion ids
/// except `arm`, which is the piece arm it replaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetPlacement {
    pub arm: usize,
    /// Body vertex the arm hung off, in completion ids.
    pub attach: usize,
    /// `a, b, c, d, w`.
    pub vertices: [usize; 5],
}

impl GadgetPlacement {
    pub fn apex(&self) -> usize {
        self.vertices[4]
    }

    /// The gadget's `{a, b, w}` in completion ids.
    pub fn canonical_in(&self) -> [usize; 3] {
        [self.vertices[0], self.vertices[1], self.vertices[4]]
    }

    /// The gadget's `{c, d}` in completion ids.
    pub fn canonical_out(&self) -> [usize; 2] {
        [self.vertices[2], self.vertices[3]]
    }
}

/// A cubic graph containing the piece's body, with a gadget glued to
/// every arm. Body vertices come first in piece order, then five
/// vertices per gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub graph: Graph,
    /// Completion id of each piece vertex; `None` for arms.
    pub of_piece: Vec<Option<usize>>,
    /// Piece id of each completion vertex; `None` inside gadgets.
    pub to_piece: Vec<Option<usize>>,
    pub gadgets: Vec<GadgetPlacement>,
}

impl Completion {
    /// Completion edge standing for a piece edge; arm edges become the
    /// edge between the body vertex and the gadget apex.
    pub fn edge_of_piece(
        &self,
        piece: &CubicWithArms,
        e: Edge,
    ) -> Result<Edge, DecompositionError> {
        if !piece.graph().has_edge(e.u, e.v) {
            return Err(DecompositionError::NotAnEdge(e));
        }
        let map = |x: usize| match self.of_piece[x] {
            Some(c) => c,
            None => self
                .gadgets
                .iter()
                .find(|gp| gp.arm == x)
                .expect("every arm has a gadget")
                .apex(),
        };
        Ok(Edge::new(map(e.u), map(e.v)))
    }
}

pub fn cubic_completion(piece: &CubicWithArms) -> Completion {
    let g = piece.graph();
    let mut of_piece = vec![None; g.n()];
    let mut to_piece = Vec::with_capacity(piece.body().len() + 5 * piece.arms().len());
    for (i, &v) in piece.body().iter().enumerate() {
        of_piece[v] = Some(i);
        to_piece.push(Some(v));
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|e| Some((of_piece[e.u]?, of_piece[e.v]?)))
        .collect();
    let gadget = Gadget::new();
    let mut gadgets = Vec::with_capacity(piece.arms().len());
    for &arm in piece.arms() {
        let base = to_piece.len();
        to_piece.extend([None; 5]);
        let at = |x: usize| base + x;
        for e in gadget.shape.graph().edges() {
            if e.u != Gadget::U && e.v != Gadget::U {
                edges.push((at(e.u), at(e.v)));
            }
        }
        let attach = of_piece[g.neighbors(arm)[0]].expect("arm neighbour is in the body");
        edges.push((attach, at(Gadget::W)));
        gadgets.push(GadgetPlacement {
            arm,
            attach,
            vertices: [Gadget::A, Gadget::B, Gadget::C, Gadget::D, Gadget::W].map(at),
        });
    }
    let graph = Graph::new(to_piece.len(), edges).expect("completion is simple");
    debug_assert!(graph.is_cubic());
    Completion {
        graph,
        of_piece,
        to_piece,
        gadgets,
    }
}

/// Keeps the completion cover on the body and adds every arm's neighbour.
pub fn pull_back_cover(
    piece: &CubicWithArms,
    completion: &Completion,
    cover: &VertexCover,
) -> Result<VertexCover, DecompositionError> {
    let checked = VertexCover::new(&completion.graph, cover.vertices().iter().copied())?;
    let mut vertices: Vec<usize> = checked
        .vertices()
        .iter()
        .filter_map(|&v| completion.to_piece[v])
        .collect();
    for &arm in piece.arms() {
        vertices.push(piece.arm_neighbor(arm)?);
    }
    Ok(VertexCover::new(piece.graph(), vertices)?)
}

/// Keeps the matching edges inside the body and adds `{arm, neighbour}`
/// wherever the neighbour is left uncovered. Arms whose gadget edge is in
/// `s` go first, so a lifted arm edge comes back as itself.
pub fn pull_back_matching(
    piece: &CubicWithArms,
    completion: &Completion,
    s: &Matching,
) -> Matching {
    let mut edges: Vec<Edge> = s
        .edges()
        .iter()
        .filter_map(|e| {
            Some(Edge::new(
                completion.to_piece[e.u]?,
                completion.to_piece[e.v]?,
            ))
        })
        .collect();
    let mut covered: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    let (used, rest): (Vec<&GadgetPlacement>, Vec<&GadgetPlacement>) = completion
        .gadgets
        .iter()
        .partition(|gp| s.contains(&Edge::new(gp.attach, gp.apex())));
    for gp in used.into_iter().chain(rest) {
        let w = piece.graph().neighbors(gp.arm)[0];
        if !covered.contains(&w) {
            edges.push(Edge::new(gp.arm, w));
            covered.push(w);
        }
    }
    Matching::new(edges).expect("arm edges only touch uncovered neighbours")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{is_good, matching_for_edge};
    use crate::decomposition::as_cubic_with_arms;
    use crate::graph::corpus::named_graph;
    use crate::graph::{bridges, canon::isomorphic};

    #[test]
    fn gadget_completion_has_ten_vertices() {
        let gd = Gadget::new();
        let c = cubic_completion(&gd.shape);
        assert_eq!(c.graph.n(), 10);
        assert!(c.graph.is_cubic() && c.graph.is_connected());
        assert!(isomorphic(
            &c.graph,
            &named_graph("gadget_completion_pair").unwrap()
        ));
    }

    #[test]
    fn no_arms_is_identity() {
        let k4 = named_graph("K4").unwrap();
        let c = cubic_completion(&as_cubic_with_arms(&k4).unwrap());
        assert_eq!(c.graph, k4);
        assert!(c.gadgets.is_empty());
    }

    #[test]
    fn vertex_count_law() {
        for name in [
            "middle_piece",
            "claw",
            "one_arm_b",
            "one_arm_c",
            "one_arm_d",
        ] {
            let p = as_cubic_with_arms(&named_graph(name).unwrap()).unwrap();
            let c = cubic_completion(&p);
            assert_eq!(c.graph.n(), p.body().len() + 5 * p.arms().len(), "{name}");
            assert!(c.graph.is_cubic() && c.graph.is_connected());
            assert_eq!(bridges(&c.graph).len(), p.arms().len());
        }
    }

    #[test]
    fn canonical_pull_back_on_gadget() {
        let gd = Gadget::new();
        let c = cubic_completion(&gd.shape);
        let g = &c.graph;
        // body a,b,c,d,w at 0..5 then gadget a',b',c',d',w' at 5..10
        let canonical: Vec<usize> = [Gadget::A, Gadget::B, Gadget::W]
            .into_iter()
            .chain(c.gadgets[0].canonical_in())
            .collect();
        let cover = VertexCover::new_minimal(g, canonical).unwrap();
        assert!(is_good(g, &cover).unwrap());
        let back = pull_back_cover(&gd.shape, &c, &cover).unwrap();
        assert_eq!(back.vertices(), &[Gadget::A, Gadget::B, Gadget::W]);
        for &e in gd.shape.graph().edges() {
            let s = matching_for_edge(g, &cover, c.edge_of_piece(&gd.shape, e).unwrap()).unwrap();
            let s2 = pull_back_matching(&gd.shape, &c, &s);
            assert!(s2.contains(&e));
            assert!(back.vertices().iter().all(|&v| s2.covers_vertex(v)));
        }
    }

    #[test]
    fn pull_back_never_contains_arms() {
        let p = as_cubic_with_arms(&named_graph("middle_piece").unwrap()).unwrap();
        let c = cubic_completion(&p);
        let all = VertexCover::new(&c.graph, 0..c.graph.n()).unwrap();
        let back = pull_back_cover(&p, &c, &all).unwrap();
        assert!(back.vertices().iter().all(|&v| !p.is_arm(v)));
    }
}

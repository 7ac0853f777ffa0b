use serde::Serialize;

use super::{as_cubic_with_arms, connect_mapped, CubicWithArms, DecompositionError};
use crate::graph::{two_edge_connected_components, Edge, Graph};

/// One body of the input together with the vertices across its bridges,
/// which become arms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub shape: CubicWithArms,
    /// Input id of each piece vertex.
    pub to_original: Vec<usize>,
}

impl Piece {
    pub fn local(&self, original: usize) -> Option<usize> {
        self.to_original.binary_search(&original).ok()
    }

    /// The piece edge corresponding to an input edge, if the piece has it.
    pub fn local_edge(&self, e: Edge) -> Option<Edge> {
        let (a, b) = (self.local(e.u)?, self.local(e.v)?);
        self.shape.graph().has_edge(a, b).then(|| Edge::new(a, b))
    }

    pub fn original_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_original[e.u], self.to_original[e.v])
    }

    pub fn original_body(&self) -> Vec<usize> {
        self.shape
            .body()
            .iter()
            .map(|&v| self.to_original[v])
            .collect()
    }
}

/// A bridge between two bodies. `arm_a` is the arm of piece `piece_a`
/// standing for the far endpoint, and likewise for `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Link {
    pub piece_a: usize,
    pub arm_a: usize,
    pub piece_b: usize,
    pub arm_b: usize,
    pub bridge: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTree {
    pub n: usize,
    pub pieces: Vec<Piece>,
    pub links: Vec<Link>,
}

/// Splits a connected graph with degrees in `{1, 3}` along every bridge
/// between two degree-3 parts. Pieces are ordered by their smallest body
/// vertex and keep the input's relative vertex order.
pub fn decompose(g: &Graph) -> Result<DecompositionTree, DecompositionError> {
    as_cubic_with_arms(g)?;
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let mut bodies: Vec<Vec<usize>> = two_edge_connected_components(g)
        .into_iter()
        .filter(|c| !(c.len() == 1 && g.degree(c[0]) == 1))
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    bodies.sort();
    let mut body_of = vec![usize::MAX; g.n()];
    for (i, b) in bodies.iter().enumerate() {
        for &v in b {
            body_of[v] = i;
        }
    }

    let mut pieces = Vec::with_capacity(bodies.len());
    for (i, body) in bodies.iter().enumerate() {
        let mut vertices = body.clone();
        for &v in body {
            vertices.extend(g.neighbors(v).iter().copied().filter(|&w| body_of[w] != i));
        }
        vertices.sort_unstable();
        vertices.dedup();
        let (sub, to_original) = g.induced_subgraph(&vertices);
        let shape = as_cubic_with_arms(&sub)?;
        if shape.body().len() != body.len() {
            return Err(DecompositionError::Inconsistent(format!(
                "piece {i} body size changed"
            )));
        }
        pieces.push(Piece { shape, to_original });
    }

    let mut links = Vec::new();
    for e in g.edges() {
        let (bu, bv) = (body_of[e.u], body_of[e.v]);
        if bu == usize::MAX || bv == usize::MAX || bu == bv {
            continue;
        }
        let (pa, pb) = (bu.min(bv), bu.max(bv));
        let (in_a, in_b) = if bu == pa { (e.u, e.v) } else { (e.v, e.u) };
        links.push(Link {
            piece_a: pa,
            arm_a: pieces[pa]
                .local(in_b)
                .expect("far endpoint is an arm of the piece"),
            piece_b: pb,
            arm_b: pieces[pb]
                .local(in_a)
                .expect("far endpoint is an arm of the piece"),
            bridge: *e,
        });
    }
    Ok(DecompositionTree {
        n: g.n(),
        pieces,
        links,
    })
}

impl DecompositionTree {
    /// Pieces adjacent to `p` with the link joining them.
    pub fn neighbors(&self, p: usize) -> Vec<(usize, &Link)> {
        self.links
            .iter()
            .filter_map(|l| {
                if l.piece_a == p {
                    Some((l.piece_b, l))
                } else if l.piece_b == p {
                    Some((l.piece_a, l))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Rebuilds the input by connecting the pieces along the links, then
    /// renames vertices back to input ids.
    pub fn reassemble(&self) -> Result<Graph, DecompositionError> {
        let Some(first) = self.pieces.first() else {
            return Err(DecompositionError::EmptyBody);
        };
        let mut current = first.shape.clone();
        let mut names: Vec<usize> = first.to_original.clone();
        let mut done = vec![false; self.pieces.len()];
        done[0] = true;
        let mut pending: Vec<&Link> = self.links.iter().collect();
        while !pending.is_empty() {
            let pos = pending
                .iter()
                .position(|l| done[l.piece_a] != done[l.piece_b])
                .ok_or_else(|| {
                    DecompositionError::Inconsistent("links do not form a tree".into())
                })?;
            let l = pending.remove(pos);
            let (old, old_arm, new) = if done[l.piece_a] {
                (l.piece_a, l.arm_a, l.piece_b)
            } else {
                (l.piece_b, l.arm_b, l.piece_a)
            };
            let new_arm = if new == l.piece_a { l.arm_a } else { l.arm_b };
            let far = self.pieces[old].to_original[old_arm];
            let near =
                self.pieces[old].to_original[self.pieces[old].shape.arm_neighbor(old_arm)?];
            let arm_here = (0..current.graph().n())
                .find(|&v| {
                    names[v] == far
                        && current.is_arm(v)
                        && names[current.graph().neighbors(v)[0]] == near
                })
                .ok_or_else(|| {
                    DecompositionError::Inconsistent(format!("arm for bridge ({})", l.bridge))
                })?;
            let piece = &self.pieces[new];
            let (next, m1, m2) = connect_mapped(&current, arm_here, &piece.shape, new_arm)?;
            let mut next_names = vec![usize::MAX; next.graph().n()];
            for (v, m) in m1.iter().enumerate() {
                if let Some(x) = m {
                    next_names[*x] = names[v];
                }
            }
            for (v, m) in m2.iter().enumerate() {
                if let Some(x) = m {
                    next_names[*x] = piece.to_original[v];
                }
            }
            current = next;
            names = next_names;
            done[new] = true;
        }
        if done.iter().any(|d| !d) {
            return Err(DecompositionError::Inconsistent(
                "a piece is not linked".into(),
            ));
        }
        let mut inverse = vec![usize::MAX; self.n];
        for (v, &name) in names.iter().enumerate() {
            if name >= self.n || inverse[name] != usize::MAX {
                return Err(DecompositionError::Inconsistent(format!(
                    "vertex name {name}"
                )));
            }
            inverse[name] = v;
        }
        Graph::new(
            self.n,
            current
                .graph()
                .edges()
                .iter()
                .map(|e| (names[e.u], names[e.v])),
        )
        .map_err(|e| DecompositionError::Inconsistent(e.to_string()))
    }
}

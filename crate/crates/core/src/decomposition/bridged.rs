use super::piece_cover::{good_cover_piece, PieceCover};
use super::tree::{decompose, DecompositionTree};
use super::DecompositionError;
use crate::covers::VertexCover;
use crate::graph::{Edge, Graph, Matching};

/// A good cover of a whole graph together with what is needed to answer
/// per-edge matching queries. `tree` is `None` only for the single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPlan {
    pub tree: Option<DecompositionTree>,
    pub pieces: Vec<PieceCover>,
    pub cover: VertexCover,
}

/// Union of the piece covers in input ids.
pub fn merge_covers(
    g: &Graph,
    tree: &DecompositionTree,
    covers: &[PieceCover],
) -> Result<VertexCover, DecompositionError> {
    if covers.len() != tree.pieces.len() {
        return Err(DecompositionError::Inconsistent(format!(
            "{} covers for {} pieces",
            covers.len(),
            tree.pieces.len()
        )));
    }
    let mut vertices = Vec::new();
    for (piece, pc) in tree.pieces.iter().zip(covers) {
        for &v in pc.cover.vertices() {
            let original = *piece
                .to_original
                .get(v)
                .ok_or_else(|| DecompositionError::Inconsistent(format!("piece vertex {v}")))?;
            vertices.push(original);
        }
    }
    Ok(VertexCover::new(g, vertices)?)
}

fn check_input(g: &Graph) -> Result<(), DecompositionError> {
    for v in 0..g.n() {
        let degree = g.degree(v);
        if degree != 1 && degree != 3 {
            return Err(DecompositionError::BadDegree { vertex: v, degree });
        }
    }
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    Ok(())
}

/// Decomposes, covers every piece and merges.
pub fn plan_good_cover(g: &Graph) -> Result<CoverPlan, DecompositionError> {
    check_input(g)?;
    if g.n() == 2 {
        // the single edge: every vertex has degree one
        return Ok(CoverPlan {
            tree: None,
            pieces: Vec::new(),
            cover: VertexCover::new(g, [0])?,
        });
    }
    let tree = decompose(g)?;
    let pieces = tree
        .pieces
        .iter()
        .map(|p| good_cover_piece(&p.shape))
        .collect::<Result<Vec<_>, _>>()?;
    let cover = merge_covers(g, &tree, &pieces)?;
    Ok(CoverPlan {
        tree: Some(tree),
        pieces,
        cover,
    })
}

/// A good vertex cover of a connected graph with degrees in `{1, 3}`.
pub fn good_vertex_cover(g: &Graph) -> Result<VertexCover, DecompositionError> {
    plan_good_cover(g).map(|p| p.cover)
}

/// A matching containing `f` whose endpoints include the plan's cover.
///
/// Solves in the first piece containing `f`, then walks the links
/// depth-first. A bridge already in the matching is requested again on the
/// far side; otherwise the far side is asked for its lowest edge at the
/// bridge endpoint that avoids the bridge.
pub fn matching_for_edge_bridged(
    g: &Graph,
    plan: &CoverPlan,
    f: Edge,
) -> Result<Matching, DecompositionError> {
    if !g.has_edge(f.u, f.v) {
        return Err(DecompositionError::NotAnEdge(f));
    }
    let Some(tree) = &plan.tree else {
        return Ok(Matching::new([f]).expect("single edge"));
    };
    let start = tree
        .pieces
        .iter()
        .position(|p| p.local_edge(f).is_some())
        .ok_or_else(|| DecompositionError::Inconsistent(format!("no piece holds ({f})")))?;

    let mut edges: Vec<Edge> = Vec::new();
    let mut visited = vec![false; tree.pieces.len()];
    let mut stack = vec![(start, f)];
    visited[start] = true;
    while let Some((p, request)) = stack.pop() {
        let piece = &tree.pieces[p];
        let local = piece
            .local_edge(request)
            .expect("requested edge lies in the piece");
        let s = plan.pieces[p].matching_for_edge(&piece.shape, local)?;
        let s: Vec<Edge> = s.edges().iter().map(|&e| piece.original_edge(e)).collect();
        let mut next = Vec::new();
        for (q, link) in tree.neighbors(p) {
            if visited[q] {
                continue;
            }
            visited[q] = true;
            let bridge = link.bridge;
            let request = if s.contains(&bridge) {
                bridge
            } else {
                let far = &tree.pieces[q];
                let (near_end, far_end) =
                    if far.local(bridge.u).is_some_and(|x| !far.shape.is_arm(x)) {
                        (bridge.v, bridge.u)
                    } else {
                        (bridge.u, bridge.v)
                    };
                let other = g
                    .neighbors(far_end)
                    .iter()
                    .copied()
                    .find(|&z| z != near_end)
                    .expect("bridge endpoints have degree 3");
                Edge::new(far_end, other)
            };
            next.push((q, request));
        }
        edges.extend(s);
        // reverse so the lowest link is expanded first
        stack.extend(next.into_iter().rev());
    }

    let matching = Matching::new(edges)
        .map_err(|e| DecompositionError::Inconsistent(format!("piece matchings overlap: {e}")))?;
    if !matching.contains(&f) {
        return Err(DecompositionError::Inconsistent(format!("({f}) missing")));
    }
    if let Some(&v) = plan
        .cover
        .vertices()
        .iter()
        .find(|&&v| !matching.covers_vertex(v))
    {
        return Err(DecompositionError::Inconsistent(format!(
            "cover vertex {v} uncovered"
        )));
    }
    Ok(matching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::{gadget_chain, named_graph, random_cubic};
    use crate::graph::{bridges, connected_cubic_graphs};
    use crate::oracle::brute_good;

    fn check_all_edges(g: &Graph) -> CoverPlan {
        let plan = plan_good_cover(g).unwrap();
        for &f in g.edges() {
            let s = matching_for_edge_bridged(g, &plan, f).unwrap();
            assert!(s.contains(&f));
            assert!(plan.cover.vertices().iter().all(|&v| s.covers_vertex(v)));
            assert!(s.edges().iter().all(|e| g.has_edge(e.u, e.v)));
        }
        plan
    }

    #[test]
    fn single_piece_delegates() {
        let g = named_graph("petersen").unwrap();
        let plan = check_all_edges(&g);
        assert_eq!(plan.pieces.len(), 1);
        assert!(plan.cover.is_minimal(&g));
        assert!((6..=7).contains(&plan.cover.len()));
        let k4 = good_vertex_cover(&named_graph("K4").unwrap()).unwrap();
        assert_eq!(k4.len(), 3);
    }

    #[test]
    fn gadget_pair_cover_and_bridge_cases() {
        let g = named_graph("gadget_completion_pair").unwrap();
        let plan = check_all_edges(&g);
        assert_eq!(plan.cover.len(), 6);
        assert!(brute_good(&g, plan.cover.vertices()));
        let bridge = bridges(&g)[0];
        // the bridge itself is kept on both sides
        let s = matching_for_edge_bridged(&g, &plan, bridge).unwrap();
        assert!(s.contains(&bridge));
        // an edge away from the bridge forces the far side to pick its own edge
        let away = g
            .edges()
            .iter()
            .copied()
            .find(|e| !e.meets(&bridge))
            .unwrap();
        let s = matching_for_edge_bridged(&g, &plan, away).unwrap();
        assert!(s.contains(&away));
    }

    #[test]
    fn chains_and_claw() {
        for k in 2..=5 {
            check_all_edges(&gadget_chain(k).unwrap());
        }
        let claw = named_graph("claw").unwrap();
        let plan = check_all_edges(&claw);
        assert_eq!(plan.cover.vertices(), &[0]);
        let p2 = named_graph("P2").unwrap();
        let plan = check_all_edges(&p2);
        assert_eq!(plan.cover.vertices(), &[0]);
    }

    #[test]
    fn all_bridged_cubic_graphs_to_twelve() {
        for n in [10, 12] {
            for g in connected_cubic_graphs(n) {
                if !bridges(&g).is_empty() {
                    let plan = check_all_edges(&g);
                    assert!(brute_good(&g, plan.cover.vertices()));
                }
            }
        }
    }

    #[test]
    fn random_cubic_graphs() {
        for seed in 0..10 {
            check_all_edges(&random_cubic(20, seed).unwrap());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            plan_good_cover(&named_graph("triangle").unwrap()),
            Err(DecompositionError::BadDegree { .. })
        ));
    }
}

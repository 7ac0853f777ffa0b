use super::nice::{check_minimal_cover, masks_without_edge, FeIncidence, NiceMatching};
use super::shape::{classify_masked, ComponentKind};
use super::{require_cubic, CoverError, VertexCover};
use crate::graph::{max_bipartite_matching, Edge, Graph, Matching};

/// A nice matching for `C \ {x,y}` in `G[V \ {x,y}]`, if one exists.
pub fn nice_matching_for_edge(
    g: &Graph,
    cover: &VertexCover,
    e: Edge,
) -> Result<Option<NiceMatching>, CoverError> {
    let fe = super::build_fe(g, cover, e)?;
    Ok(fe.nice_matching(g))
}

/// Whether a minimal cover of a cubic graph is good: every edge admits a
/// nice matching for the cover minus its endpoints.
pub fn is_good(g: &Graph, cover: &VertexCover) -> Result<bool, CoverError> {
    require_cubic(g)?;
    check_minimal_cover(g, cover)?;
    for &e in g.edges() {
        let (in_u, alive) = masks_without_edge(g, cover, e);
        let fe = FeIncidence::build(g, &in_u, &alive)?;
        if !max_bipartite_matching(&fe.incidence).covers_left() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A matching containing `e` whose endpoints include the whole cover.
pub fn matching_for_edge(g: &Graph, cover: &VertexCover, e: Edge) -> Result<Matching, CoverError> {
    let nice = nice_matching_for_edge(g, cover, e)?.ok_or(CoverError::NoNiceMatching(e))?;
    complete_matching(g, cover, e, &nice)
}

/// Extends `{e} ∪ N` by edges inside the components of `G[C \ {x,y}]`
/// until every cover vertex is an endpoint.
///
/// `nice` is checked against the components before use, and the result is
/// checked before it is returned.
pub fn complete_matching(
    g: &Graph,
    cover: &VertexCover,
    e: Edge,
    nice: &NiceMatching,
) -> Result<Matching, CoverError> {
    check_minimal_cover(g, cover)?;
    if !g.has_edge(e.u, e.v) {
        return Err(CoverError::NotAnEdge(e));
    }
    let (in_u, alive) = masks_without_edge(g, cover, e);
    let shapes = classify_masked(g, &in_u)?;

    let mut hit = vec![false; g.n()];
    for ne in &nice.edges {
        let edge = Edge::try_new(ne.important, ne.outside)
            .map_err(|_| CoverError::NotNice(format!("degenerate edge at {}", ne.important)))?;
        if ne.outside >= g.n() || ne.important >= g.n() || !g.has_edge(edge.u, edge.v) {
            return Err(CoverError::NotNice(format!("({edge}) is not an edge")));
        }
        if !alive[ne.outside] || in_u[ne.outside] {
            return Err(CoverError::NotNice(format!(
                "{} is not outside the cover",
                ne.outside
            )));
        }
        if hit[ne.important] || hit[ne.outside] {
            return Err(CoverError::NotNice(format!(
                "({edge}) overlaps another edge"
            )));
        }
        hit[ne.important] = true;
        hit[ne.outside] = true;
    }
    let odd_count = shapes.iter().filter(|s| s.odd).count();
    if nice.edges.len() != odd_count {
        return Err(CoverError::NotNice(format!(
            "{} edges for {odd_count} odd components",
            nice.edges.len()
        )));
    }

    let mut k: Vec<Edge> = vec![e];
    k.extend(nice.edges.iter().map(|ne| ne.edge()));
    for shape in &shapes {
        let vs = &shape.vertices;
        let hits: Vec<usize> = (0..vs.len()).filter(|&i| hit[vs[i]]).collect();
        if !shape.odd {
            if !hits.is_empty() {
                return Err(CoverError::NotNice(format!(
                    "even component at {} is hit",
                    vs[0]
                )));
            }
            for i in (0..vs.len()).step_by(2) {
                k.push(Edge::new(vs[i], vs[i + 1]));
            }
            continue;
        }
        let [j] = hits[..] else {
            return Err(CoverError::NotNice(format!(
                "odd component at {} is hit {} times",
                vs[0],
                hits.len()
            )));
        };
        if !shape.is_important(vs[j]) {
            return Err(CoverError::NotNice(format!("{} is not important", vs[j])));
        }
        match shape.kind {
            ComponentKind::IsolatedVertex => {}
            ComponentKind::Cycle => {
                let len = vs.len();
                // rotate so the hit vertex comes first, then pair the rest
                for i in (1..len).step_by(2) {
                    k.push(Edge::new(vs[(j + i) % len], vs[(j + i + 1) % len]));
                }
            }
            ComponentKind::Path => {
                for i in (0..j).step_by(2) {
                    k.push(Edge::new(vs[i], vs[i + 1]));
                }
                for i in (j + 1..vs.len()).step_by(2) {
                    k.push(Edge::new(vs[i], vs[i + 1]));
                }
            }
        }
    }

    let matching = Matching::new(k)
        .map_err(|err| CoverError::Contradiction(format!("result is not a matching: {err}")))?;
    if !matching.contains(&e) {
        return Err(CoverError::Contradiction(format!(
            "({e}) missing from result"
        )));
    }
    if let Some(&v) = cover
        .vertices()
        .iter()
        .find(|&&v| !matching.covers_vertex(v))
    {
        return Err(CoverError::Contradiction(format!(
            "cover vertex {v} not an endpoint"
        )));
    }
    Ok(matching)
}

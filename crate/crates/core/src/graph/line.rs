use super::{Edge, Graph, GraphError};

/// A line graph together with the bijection between its vertices and the
/// edges of the source graph. Line vertex `i` is the `i`-th edge of the
/// source in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap {
    pub line: Graph,
    edge_of_vertex: Vec<Edge>,
}

impl LineGraphMap {
    pub fn vertex_of_edge(&self, e: Edge) -> Option<usize> {
        self.edge_of_vertex.binary_search(&e).ok()
    }

    pub fn edge_of_vertex(&self, v: usize) -> Option<Edge> {
        self.edge_of_vertex.get(v).copied()
    }

    pub fn source_edges(&self) -> &[Edge] {
        &self.edge_of_vertex
    }
}

pub fn line_graph(g: &Graph) -> Result<LineGraphMap, GraphError> {
    if g.m() == 0 {
        return Err(GraphError::NoEdges);
    }
    let edges = g.edges().to_vec();
    let mut line_edges = Vec::new();
    // Edges sharing an endpoint are exactly the pairs within one star.
    for v in 0..g.n() {
        let star: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(Edge::new(v, w)).expect("edge of g"))
            .collect();
        for (i, &a) in star.iter().enumerate() {
            for &b in &star[i + 1..] {
                line_edges.push((a, b));
            }
        }
    }
    // Two distinct simple edges share at most one endpoint, so no pair
    // is produced twice.
    let line = Graph::new(edges.len(), line_edges)?;
    Ok(LineGraphMap {
        line,
        edge_of_vertex: edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::canonical_form;
    use crate::graph::corpus::{cycle, named_graph, path};

    #[test]
    fn path_p3_gives_single_edge() {
        let map = line_graph(&path(3).unwrap()).unwrap();
        assert_eq!(map.line.n(), 2);
        assert_eq!(map.line.m(), 1);
    }

    #[test]
    fn k4_gives_octahedron() {
        let k4 = named_graph("K4").unwrap();
        let map = line_graph(&k4).unwrap();
        assert_eq!(map.line.n(), 6);
        assert!(map.line.is_regular(4));
        // brute force: adjacency iff the source edges meet
        for a in 0..6 {
            for b in 0..6 {
                if a == b {
                    continue;
                }
                let (ea, eb) = (
                    map.edge_of_vertex(a).unwrap(),
                    map.edge_of_vertex(b).unwrap(),
                );
                assert_eq!(map.line.has_edge(a, b), ea.meets(&eb));
            }
        }
        // the octahedron is the complement of a perfect matching on 6 vertices
        let oct = Graph::new(6, [(0, 1), (2, 3), (4, 5)])
            .unwrap()
            .complement();
        assert_eq!(canonical_form(&map.line), canonical_form(&oct));
    }

    #[test]
    fn c5_is_self_line() {
        let c5 = cycle(5).unwrap();
        let map = line_graph(&c5).unwrap();
        assert_eq!(canonical_form(&map.line), canonical_form(&c5));
    }

    #[test]
    fn empty_edge_set_is_an_error() {
        assert_eq!(line_graph(&Graph::empty(3)), Err(GraphError::NoEdges));
    }

    #[test]
    fn degree_law_on_petersen() {
        let g = named_graph("petersen").unwrap();
        let map = line_graph(&g).unwrap();
        for (i, e) in map.source_edges().iter().enumerate() {
            assert_eq!(map.line.degree(i), g.degree(e.u) + g.degree(e.v) - 2);
            assert_eq!(map.vertex_of_edge(*e), Some(i));
        }
        assert!(map.line.is_regular(4));
    }
}

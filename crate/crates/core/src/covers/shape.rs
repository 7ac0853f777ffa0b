use super::CoverError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    IsolatedVertex,
    Path,
    Cycle,
}

/// A component of an induced subgraph of maximum degree two.
///
/// `vertices` is in path order (starting at the lower-id endpoint) or in
/// cyclic order (starting at the lowest id, then its lower-id neighbour).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentShape {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub odd: bool,
    /// Sorted.
    pub important: Vec<usize>,
}

impl ComponentShape {
    fn new(kind: ComponentKind, vertices: Vec<usize>) -> Self {
        let odd = vertices.len() % 2 == 1;
        let mut important: Vec<usize> = match (odd, kind) {
            (false, _) => Vec::new(),
            (true, ComponentKind::Path) => vertices.iter().copied().step_by(2).collect(),
            (true, _) => vertices.clone(),
        };
        important.sort_unstable();
        ComponentShape {
            kind,
            vertices,
            odd,
            important,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_important(&self, v: usize) -> bool {
        self.important.binary_search(&v).is_ok()
    }

    /// Cycles of three and isolated vertices: the shapes whose vertices are
    /// all important and have no edges leaving into the component's
    /// non-important part.
    pub fn is_triangle_or_point(&self) -> bool {
        match self.kind {
            ComponentKind::IsolatedVertex => true,
            ComponentKind::Cycle => self.len() == 3,
            ComponentKind::Path => false,
        }
    }
}

/// Number of host edges leaving the important vertices of an odd component
/// of a cubic graph: 3 for a point, `2k+1` for `C_{2k+1}`, `k+3` for
/// `P_{2k+1}`.
pub fn delta(shape: &ComponentShape) -> Result<usize, CoverError> {
    if !shape.odd {
        return Err(CoverError::EvenComponent);
    }
    let k = shape.len() / 2;
    Ok(match shape.kind {
        ComponentKind::IsolatedVertex => 3,
        ComponentKind::Cycle => 2 * k + 1,
        ComponentKind::Path => k + 3,
    })
}

/// Components of `g[U]`, ordered by smallest vertex.
pub fn classify_components(g: &Graph, subset: &[usize]) -> Result<Vec<ComponentShape>, CoverError> {
    let mut in_u = vec![false; g.n()];
    for &v in subset {
        if v >= g.n() {
            return Err(CoverError::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        in_u[v] = true;
    }
    classify_masked(g, &in_u)
}

pub(crate) fn classify_masked(g: &Graph, in_u: &[bool]) -> Result<Vec<ComponentShape>, CoverError> {
    let inner = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| in_u[w])
            .collect()
    };
    for v in (0..g.n()).filter(|&v| in_u[v]) {
        let degree = inner(v).len();
        if degree > 2 {
            return Err(CoverError::DegreeTooHigh { vertex: v, degree });
        }
    }
    let mut seen = vec![false; g.n()];
    let mut shapes = Vec::new();
    for s in (0..g.n()).filter(|&v| in_u[v]) {
        if seen[s] {
            continue;
        }
        // collect the component
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for w in inner(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let shape = if comp.len() == 1 {
            ComponentShape::new(ComponentKind::IsolatedVertex, comp)
        } else if comp.iter().all(|&v| inner(v).len() == 2) {
            let start = *comp.iter().min().expect("nonempty");
            ComponentShape::new(ComponentKind::Cycle, walk(start, &inner, comp.len()))
        } else {
            let start = *comp
                .iter()
                .filter(|&&v| inner(v).len() == 1)
                .min()
                .expect("a path has two endpoints");
            ComponentShape::new(ComponentKind::Path, walk(start, &inner, comp.len()))
        };
        shapes.push(shape);
    }
    Ok(shapes)
}

/// Walks a path or cycle from `start`, always stepping to the smallest
/// unvisited neighbour.
fn walk(start: usize, inner: &impl Fn(usize) -> Vec<usize>, len: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < len {
        let next = inner(cur)
            .into_iter()
            .filter(|&w| w != prev && !order.contains(&w))
            .min()
            .expect("component is a path or cycle");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::{named_graph, path};

    #[test]
    fn triangle_is_odd_cycle_all_important() {
        let g = named_graph("K4").unwrap();
        let shapes = classify_components(&g, &[1, 2, 3]).unwrap();
        assert_eq!(shapes.len(), 1);
        let s = &shapes[0];
        assert_eq!(s.kind, ComponentKind::Cycle);
        assert!(s.odd);
        assert_eq!(s.important, vec![1, 2, 3]);
        assert_eq!(s.vertices, vec![1, 2, 3]);
        assert_eq!(delta(s), Ok(3));
    }

    #[test]
    fn p3_and_p4() {
        let g = path(4).unwrap();
        let p3 = classify_components(&g, &[0, 1, 2]).unwrap();
        assert_eq!(p3[0].kind, ComponentKind::Path);
        assert!(p3[0].odd);
        assert_eq!(p3[0].important, vec![0, 2]);
        let p4 = classify_components(&g, &[0, 1, 2, 3]).unwrap();
        assert!(!p4[0].odd);
        assert!(p4[0].important.is_empty());
        assert_eq!(delta(&p4[0]), Err(CoverError::EvenComponent));
    }

    #[test]
    fn path_starts_at_lower_endpoint_and_importance_is_orientation_free() {
        // path 4 - 1 - 3 - 0 - 2 in vertex ids
        let g = Graph::new(5, [(4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        let s = &classify_components(&g, &[0, 1, 2, 3, 4]).unwrap()[0];
        assert_eq!(s.vertices, vec![2, 0, 3, 1, 4]);
        let mut reversed: Vec<usize> = s.vertices.iter().rev().copied().step_by(2).collect();
        reversed.sort_unstable();
        assert_eq!(s.important, reversed);
        assert_eq!(delta(s), Ok(5));
    }

    #[test]
    fn delta_counts_edges_leaving_important_vertices() {
        // every component of a minimal cover in a cubic graph
        for name in ["petersen", "tietze", "flower_snark5", "cube", "prism"] {
            let g = named_graph(name).unwrap();
            let c = crate::covers::greedy_cover(&g);
            let c = crate::covers::minimalize_cover(&g, &c).unwrap();
            for s in classify_components(&g, c.vertices()).unwrap() {
                if !s.odd {
                    continue;
                }
                let leaving: usize = s
                    .important
                    .iter()
                    .map(|&v| g.neighbors(v).iter().filter(|&&w| !s.contains(w)).count())
                    .sum();
                assert_eq!(delta(&s).unwrap(), leaving, "{name}");
            }
        }
    }

    #[test]
    fn degree_three_rejected() {
        let g = named_graph("K4").unwrap();
        assert!(matches!(
            classify_components(&g, &[0, 1, 2, 3]),
            Err(CoverError::DegreeTooHigh { .. })
        ));
    }

    #[test]
    fn isolated_vertex_delta() {
        let g = named_graph("K4").unwrap();
        let s = &classify_components(&g, &[0]).unwrap()[0];
        assert_eq!(s.kind, ComponentKind::IsolatedVertex);
        assert_eq!(delta(s), Ok(3));
    }
}

use super::{Edge, Graph};

/// All bridges (cutting edges), in ascending order.
///
/// Iterative lowlink DFS; parallel edges cannot occur so skipping the
/// parent vertex is enough.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbor position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*pos) {
                *pos += 1;
                if w == parent {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        out.push(Edge::new(parent, v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Components of `g` with its bridges removed, each sorted, ordered by
/// smallest member. Every vertex appears in exactly one component.
pub fn two_edge_connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let cut = bridges(g);
    let kept = g
        .edges()
        .iter()
        .filter(|e| cut.binary_search(e).is_err())
        .map(|e| (e.u, e.v));
    Graph::new(g.n(), kept)
        .expect("subgraph of a simple graph")
        .components()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::{connect_arms, gadget, named_graph, path};

    /// Edge-removal oracle: `e` is a bridge iff removing it increases the
    /// number of components.
    fn bridges_by_removal(g: &Graph) -> Vec<Edge> {
        let base = g.components().len();
        g.edges()
            .iter()
            .filter(|e| {
                let rest = g.edges().iter().filter(|f| f != e).map(|f| (f.u, f.v));
                Graph::new(g.n(), rest).unwrap().components().len() > base
            })
            .copied()
            .collect()
    }

    #[test]
    fn petersen_has_none() {
        let g = named_graph("petersen").unwrap();
        assert!(bridges(&g).is_empty());
        assert!(bridges_by_removal(&g).is_empty());
    }

    #[test]
    fn gadget_pair_has_exactly_the_joining_edge() {
        let g = connect_arms(&gadget(), 5, &gadget(), 5).unwrap();
        let found = bridges(&g);
        assert_eq!(found.len(), 1);
        assert_eq!(found, bridges_by_removal(&g));
        let e = found[0];
        assert_eq!((g.degree(e.u), g.degree(e.v)), (3, 3));
    }

    #[test]
    fn tree_edges_are_all_bridges() {
        let p4 = path(4).unwrap();
        assert_eq!(bridges(&p4), p4.edges().to_vec());
    }

    #[test]
    fn agrees_with_removal_oracle_on_small_corpus() {
        for n in [4, 6, 8, 10, 12] {
            for g in crate::graph::connected_cubic_graphs(n) {
                assert_eq!(bridges(&g), bridges_by_removal(&g), "{g}");
            }
        }
        for name in [
            "gadget",
            "gadget_completion_pair",
            "gadget_chain3",
            "P6",
            "C6",
        ] {
            let g = named_graph(name).unwrap();
            assert_eq!(bridges(&g), bridges_by_removal(&g), "{name}");
        }
    }

    #[test]
    fn components_partition_vertices() {
        let g = named_graph("gadget_completion_pair").unwrap();
        let comps = two_edge_connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), g.n());
    }
}

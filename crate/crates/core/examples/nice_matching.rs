//! The bipartite graph behind the goodness test for one edge, its nice
//! matching, and the completed covering matching.
//!
//! cargo run --example nice_matching

use cubic_normality::covers::{build_fe, complete_matching, find_nice_matching, greedy_cover};
use cubic_normality::graph::corpus::named_graph;
use cubic_normality::graph::{Edge, Graph};

fn show(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(|e| format!("({e})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    let g = named_graph("tietze").unwrap();
    let cover = greedy_cover(&g);
    println!("cover {:?}", cover.vertices());
    // the edge whose F_e has the most odd components
    let e = *g
        .edges()
        .iter()
        .max_by_key(|&&e| build_fe(&g, &cover, e).unwrap().odd.len())
        .unwrap();
    let f = build_fe(&g, &cover, e).unwrap();
    println!("edge ({e}): {} odd components", f.odd.len());
    for (i, shape) in f.odd.iter().enumerate() {
        println!(
            "  left {i}: {:?} {:?} important {:?}",
            shape.kind, shape.vertices, shape.important
        );
    }
    println!("  right side {:?}", f.incidence.right);

    let nice = f.nice_matching(&g).expect("a nice matching exists");
    let nice_edges: Vec<Edge> = nice.edges.iter().map(|ne| ne.edge()).collect();
    println!("nice matching: {}", show(&nice_edges));
    let s = complete_matching(&g, &cover, e, &nice).unwrap();
    println!("completed: {}", show(s.edges()));

    // the same search on any graph whose chosen set induces paths and cycles
    let p5 = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (2, 6)]).unwrap();
    let found = find_nice_matching(&p5, &[0, 1, 2, 3, 4]).unwrap().unwrap();
    println!(
        "P5 with two pendant vertices: {}",
        show(found.as_matching().edges())
    );
}

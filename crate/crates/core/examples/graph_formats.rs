//! Reading and writing graphs, and building a line graph.
//!
//! cargo run --example graph_formats

use cubic_normality::graph::corpus::named_graph;
use cubic_normality::graph::io::{from_edgelist, from_graph6, to_edgelist, to_graph6};
use cubic_normality::graph::line_graph;

fn main() {
    let g = named_graph("petersen").unwrap();
    let g6 = to_graph6(&g);
    println!("petersen as graph6: {g6}");
    assert_eq!(from_graph6(g6.as_bytes()).unwrap(), g);

    let text = to_edgelist(&g);
    println!("edge list:\n{text}");
    assert_eq!(from_edgelist(&text).unwrap(), g);

    let map = line_graph(&g).unwrap();
    println!(
        "L(petersen): {} vertices, {} edges",
        map.line.n(),
        map.line.m()
    );
    for v in 0..3 {
        println!(
            "  line vertex {v} is edge ({})",
            map.edge_of_vertex(v).unwrap()
        );
    }
}

//! A minimal vertex cover of a cubic graph, the goodness test, and the
//! matching it yields for every edge.
//!
//! cargo run --example good_cover

use cubic_normality::covers::{
    classify_components, delta, greedy_cover, is_good, matching_for_edge,
};
use cubic_normality::graph::corpus::named_graph;

fn main() {
    let g = named_graph("petersen").unwrap();
    let cover = greedy_cover(&g);
    println!(
        "cover {:?} minimal={}",
        cover.vertices(),
        cover.is_minimal(&g)
    );

    for shape in classify_components(&g, cover.vertices()).unwrap() {
        let d = delta(&shape)
            .map(|d| d.to_string())
            .unwrap_or_else(|_| "-".into());
        println!(
            "  component {:?} {:?} odd={} important={:?} delta={d}",
            shape.kind, shape.vertices, shape.odd, shape.important
        );
    }

    println!("good: {}", is_good(&g, &cover).unwrap());
    for &e in g.edges() {
        let s = matching_for_edge(&g, &cover, e).unwrap();
        let edges: Vec<String> = s.edges().iter().map(|x| format!("({x})")).collect();
        println!("  ({e}) -> {}", edges.join(" "));
    }
}

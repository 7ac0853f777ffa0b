//! Exhaustive normality checks on small graphs.
//!
//! cargo run --example brute_force_oracles

use cubic_normality::graph::corpus::named_graph;
use cubic_normality::oracle::{
    brute_edge_normal, brute_normal, brute_strongly_edge_normal, SearchBudget,
};

fn main() {
    let budget = SearchBudget::default();
    for name in ["C5", "C7", "C9", "triangle", "petersen"] {
        let g = named_graph(name).unwrap();
        println!(
            "{name:9} normal={} edge-normal={} strongly-edge-normal={}",
            brute_normal(&g, &budget),
            brute_edge_normal(&g, &budget),
            brute_strongly_edge_normal(&g, &budget)
        );
    }
}

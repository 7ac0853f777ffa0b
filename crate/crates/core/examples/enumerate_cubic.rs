//! Exhaustive lists of connected cubic graphs on few vertices.
//!
//! cargo run --example enumerate_cubic

use cubic_normality::graph::io::to_graph6;
use cubic_normality::graph::{bridges, connected_cubic_graphs};

fn main() {
    for n in [4, 6, 8, 10, 12] {
        let graphs = connected_cubic_graphs(n);
        let bridged = graphs.iter().filter(|g| !bridges(g).is_empty()).count();
        println!(
            "n={n:2}: {:3} graphs, {bridged} with a bridge",
            graphs.len()
        );
    }
    for g in connected_cubic_graphs(6) {
        println!("  {}", to_graph6(&g));
    }
}

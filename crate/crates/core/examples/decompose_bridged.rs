//! Splitting a bridged graph into pieces, completing each piece to a cubic
//! graph with gadgets, and merging the piece covers.
//!
//! cargo run --example decompose_bridged

use cubic_normality::decomposition::{decompose, matching_for_edge_bridged, plan_good_cover};
use cubic_normality::graph::corpus::gadget_chain;

fn main() {
    let g = gadget_chain(3).unwrap();
    let tree = decompose(&g).unwrap();
    for (i, p) in tree.pieces.iter().enumerate() {
        println!(
            "piece {i}: body {:?} arms {}",
            p.original_body(),
            p.shape.arms().len()
        );
    }
    for l in &tree.links {
        println!("link {} - {} over ({})", l.piece_a, l.piece_b, l.bridge);
    }
    assert_eq!(tree.reassemble().unwrap(), g);

    let plan = plan_good_cover(&g).unwrap();
    for (i, pc) in plan.pieces.iter().enumerate() {
        println!(
            "piece {i}: {:?}, completion on {} vertices, piece cover {:?}",
            pc.case,
            pc.completion.graph.n(),
            pc.cover.vertices()
        );
    }
    println!("merged cover {:?}", plan.cover.vertices());
    for &f in g.edges().iter().take(4) {
        let s = matching_for_edge_bridged(&g, &plan, f).unwrap();
        println!("  ({f}) -> {} edges", s.len());
    }
}

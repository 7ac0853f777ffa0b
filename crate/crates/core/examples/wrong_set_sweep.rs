//! Every minimal cover of every connected cubic graph up to twelve
//! vertices: counts of covers that are not good and the wrong sets that
//! explain them.
//!
//! cargo run --release --example wrong_set_sweep

use cubic_normality::covers::is_good;
use cubic_normality::decomposition::{check_technical_exclusions, find_wrong_set};
use cubic_normality::graph::connected_cubic_graphs;
use cubic_normality::graph::io::to_graph6;
use cubic_normality::oracle::enumerate_minimal_covers;

fn main() {
    let mut example = None;
    for n in [4, 6, 8, 10, 12] {
        let (mut covers, mut bad, mut graphs_hit) = (0, 0, 0);
        for g in connected_cubic_graphs(n) {
            let mut hit = false;
            for c in enumerate_minimal_covers(&g).unwrap() {
                covers += 1;
                if is_good(&g, &c).unwrap() {
                    continue;
                }
                bad += 1;
                hit = true;
                let ws = find_wrong_set(&g, &c)
                    .unwrap()
                    .expect("not good implies a wrong set");
                assert!(check_technical_exclusions(&ws, &g, &c).unwrap().is_empty());
                example.get_or_insert((to_graph6(&g), c.vertices().to_vec(), ws));
            }
            graphs_hit += usize::from(hit);
        }
        println!("n={n:2}: {covers:4} minimal covers, {bad:3} not good, on {graphs_hit} graphs");
    }
    if let Some((g6, cover, ws)) = example {
        println!("first: graph {g6} cover {cover:?}");
        println!(
            "  type {} W {:?} exit ({},{})",
            ws.kind, ws.w, ws.exit.0, ws.exit.1
        );
    }
}

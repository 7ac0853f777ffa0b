//! The verifiers on a valid certificate and on damaged ones.
//!
//! cargo run --example verify_certificate

use cubic_normality::graph::corpus::named_graph;
use cubic_normality::witness::{
    build_certificate, to_normality_witness, verify_certificate, verify_witness,
};

fn main() {
    let g = named_graph("tietze").unwrap();
    let cert = build_certificate(&g).unwrap();
    println!("valid: {:?}", verify_certificate(&g, &cert));

    let mut dropped = cert.clone();
    dropped.cover.pop();
    println!(
        "cover vertex dropped: {}",
        verify_certificate(&g, &dropped).unwrap_err()
    );

    let mut overlapping = cert.clone();
    let e = g.edges()[0];
    let s = overlapping.per_edge.get_mut(&e).unwrap();
    let (a, b) = s[0];
    let z = *g.neighbors(a).iter().find(|&&z| z != b).unwrap();
    s.push((a, z));
    println!(
        "overlap injected: {}",
        verify_certificate(&g, &overlapping).unwrap_err()
    );

    let mut w = to_normality_witness(&g, &cert).unwrap();
    println!("witness: {:?}", verify_witness(&w.host.line, &w));
    w.stables.truncate(1);
    println!(
        "stables truncated: {}",
        verify_witness(&w.host.line, &w).unwrap_err()
    );
}

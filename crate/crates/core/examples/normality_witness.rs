//! From a cubic graph to a verified normality witness of its line graph,
//! written as a certificate file.
//!
//! cargo run --example normality_witness [name]

use cubic_normality::graph::corpus::named_graph;
use cubic_normality::witness::{certify, CertificateFile};

fn main() {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "flower_snark5".into());
    let g = named_graph(&name).unwrap();
    let (cert, witness) = certify(&g).unwrap();
    println!(
        "{name}: |V|={} |E|={} |C|={} stars={} stables={}",
        g.n(),
        g.m(),
        cert.cover.len(),
        witness.cliques.len(),
        witness.stables.len()
    );
    let file = CertificateFile::new(&g, &cert, &witness).unwrap();
    let json = file.to_json();
    println!("certificate: {} bytes", json.len());
    println!("{}", json.lines().take(8).collect::<Vec<_>>().join("\n"));
}

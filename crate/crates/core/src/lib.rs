//! Good vertex covers of cubic graphs, the per-edge matchings they admit,
//! and the normality witnesses for line graphs built from them.
//!
//! ```
//! use cubic_normality::graph::corpus::named_graph;
//! use cubic_normality::witness::{certify, verify_witness};
//!
//! let g = named_graph("petersen").unwrap();
//! let (cert, witness) = certify(&g).unwrap();
//! assert_eq!(witness.cliques.len(), cert.cover.len());
//! assert!(verify_witness(&witness.host.line, &witness).is_ok());
//! ```
//!
//! Modules build on each other in order: [`graph`], [`covers`],
//! [`decomposition`], [`witness`]. [`oracle`] holds brute-force deciders
//! that share nothing with the constructive path and serve as a check on
//! it. [`cli`] backs the `cubic-normality` binary.

pub mod cli;
pub mod covers;
pub mod decomposition;
pub mod graph;
pub mod oracle;
pub mod witness;

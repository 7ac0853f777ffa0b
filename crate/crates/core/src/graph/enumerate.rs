//! Exhaustive lists of connected cubic graphs up to isomorphism, n <= 12.
//!
//! Graphs are grown from K4 by edge insertion (subdivide two edges, join
//! the new vertices) and diamond insertion (replace an edge by a path
//! through a K4-minus-an-edge). Graphs with a bridge are glued from two
//! "one-poles" (connected graphs with a single degree-2 vertex) grown the
//! same way. Completeness is checked against the published counts.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use super::canon::{canonical_form, canonical_graph};
use super::corpus::complete;
use super::{Edge, Graph};

/// Number of connected cubic graphs on 4, 6, 8, 10, 12 vertices.
pub const KNOWN_CONNECTED_CUBIC_COUNTS: [(usize, usize); 5] =
    [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)];

const MAX_N: usize = 12;

type Level = BTreeMap<Vec<u64>, Graph>;

struct Tables {
    cubic: BTreeMap<usize, Level>,
    poles: BTreeMap<usize, Level>,
}

fn tables() -> &'static Mutex<Tables> {
    static T: OnceLock<Mutex<Tables>> = OnceLock::new();
    T.get_or_init(|| {
        Mutex::new(Tables {
            cubic: BTreeMap::new(),
            poles: BTreeMap::new(),
        })
    })
}

/// All connected cubic graphs on `n` vertices, one per isomorphism class,
/// in canonical labeling and a fixed order.
///
/// Panics for `n > 12`; returns an empty list for odd `n` or `n < 4`.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_N,
        "exhaustive lists are only built up to {MAX_N} vertices"
    );
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let mut t = tables().lock().expect("enumeration cache poisoned");
    cubic_level(&mut t, n).values().cloned().collect()
}

fn insert(level: &mut Level, g: Graph) {
    let key = canonical_form(&g);
    level.entry(key).or_insert_with(|| canonical_graph(&g));
}

/// Subdivides `e1` and `e2` and joins the two new vertices.
fn edge_insertion(g: &Graph, e1: Edge, e2: Edge) -> Graph {
    let (x, y) = (g.n(), g.n() + 1);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| **e != e1 && **e != e2)
        .map(|e| (e.u, e.v))
        .collect();
    edges.extend([(e1.u, x), (x, e1.v), (e2.u, y), (y, e2.v), (x, y)]);
    Graph::new(g.n() + 2, edges).expect("insertion keeps the graph simple")
}

/// Replaces `e = ab` by `a - x`, a diamond on `x p q y` and `y - b`.
fn diamond_insertion(g: &Graph, e: Edge) -> Graph {
    let (x, p, q, y) = (g.n(), g.n() + 1, g.n() + 2, g.n() + 3);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|f| **f != e)
        .map(|f| (f.u, f.v))
        .collect();
    edges.extend([(e.u, x), (x, p), (x, q), (p, q), (p, y), (q, y), (y, e.v)]);
    Graph::new(g.n() + 4, edges).expect("diamond insertion keeps the graph simple")
}

fn all_insertions(g: &Graph, level: &mut Level) {
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            insert(level, edge_insertion(g, edges[i], edges[j]));
        }
    }
}

fn all_diamonds(g: &Graph, level: &mut Level) {
    for &e in g.edges() {
        insert(level, diamond_insertion(g, e));
    }
}

fn cubic_level(t: &mut Tables, n: usize) -> &Level {
    if !t.cubic.contains_key(&n) {
        let mut level = Level::new();
        if n == 4 {
            insert(&mut level, complete(4));
        } else {
            let smaller: Vec<Graph> = cubic_level(t, n - 2).values().cloned().collect();
            for g in &smaller {
                all_insertions(g, &mut level);
            }
            if n >= 8 {
                let base: Vec<Graph> = cubic_level(t, n - 4).values().cloned().collect();
                for g in &base {
                    all_diamonds(g, &mut level);
                }
            }
            // bridged graphs: join the degree-2 vertices of two one-poles
            let mut m1 = 5;
            while m1 <= n - m1 {
                let left: Vec<Graph> = pole_level(t, m1).values().cloned().collect();
                let right: Vec<Graph> = pole_level(t, n - m1).values().cloned().collect();
                for a in &left {
                    for b in &right {
                        insert(&mut level, join_poles(a, b));
                    }
                }
                m1 += 2;
            }
        }
        t.cubic.insert(n, level);
    }
    &t.cubic[&n]
}

fn pole_level(t: &mut Tables, m: usize) -> &Level {
    if !t.poles.contains_key(&m) {
        let mut level = Level::new();
        if m >= 5 {
            let base: Vec<Graph> = cubic_level(t, m - 1).values().cloned().collect();
            for g in &base {
                for &e in g.edges() {
                    let v = g.n();
                    let mut edges: Vec<(usize, usize)> = g
                        .edges()
                        .iter()
                        .filter(|f| **f != e)
                        .map(|f| (f.u, f.v))
                        .collect();
                    edges.extend([(e.u, v), (v, e.v)]);
                    insert(
                        &mut level,
                        Graph::new(m, edges).expect("subdivision is simple"),
                    );
                }
            }
            if m >= 7 {
                let smaller: Vec<Graph> = pole_level(t, m - 2).values().cloned().collect();
                for g in &smaller {
                    all_insertions(g, &mut level);
                }
            }
            if m >= 9 {
                let base: Vec<Graph> = pole_level(t, m - 4).values().cloned().collect();
                for g in &base {
                    all_diamonds(g, &mut level);
                }
            }
        }
        t.poles.insert(m, level);
    }
    &t.poles[&m]
}

fn join_poles(a: &Graph, b: &Graph) -> Graph {
    let pa = (0..a.n()).find(|&v| a.degree(v) == 2).expect("one-pole");
    let pb = (0..b.n()).find(|&v| b.degree(v) == 2).expect("one-pole");
    let off = a.n();
    let mut edges: Vec<(usize, usize)> = a.edges().iter().map(|e| (e.u, e.v)).collect();
    edges.extend(b.edges().iter().map(|e| (e.u + off, e.v + off)));
    edges.push((pa, pb + off));
    Graph::new(a.n() + b.n(), edges).expect("disjoint union plus one edge")
}

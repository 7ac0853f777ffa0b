//! Exponential brute-force deciders used to cross-check the polynomial
//! pipeline on small graphs.
//!
//! Everything here works on bitmasks over at most 64 vertices and avoids
//! the bipartite machinery of [`crate::covers`], so agreement between the
//! two is meaningful.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::covers::VertexCover;
use crate::graph::{line_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_millis: u64,
    pub node_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 64,
            max_millis: 60_000,
            node_limit: 200_000_000,
        }
    }
}

impl SearchBudget {
    pub fn with_millis(self, max_millis: u64) -> Self {
        SearchBudget { max_millis, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    True,
    False,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::True
        } else {
            Decision::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::True => Some(true),
            Decision::False => Some(false),
            Decision::Unknown => None,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::True => "true",
            Decision::False => "false",
            Decision::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("search budget exceeded")]
    BudgetExceeded,
}

/// Node and wall-clock accounting shared by one decision.
struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Instant,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            deadline: Instant::now() + Duration::from_millis(budget.max_millis),
        }
    }

    /// Counts a node; `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
            && (!self.nodes.is_multiple_of(1024) || Instant::now() < self.deadline)
    }
}

struct Exhausted;

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Maximal cliques of the graph given by adjacency masks (Bron–Kerbosch
/// with pivoting).
fn maximal_cliques(adj: &[u64], meter: &mut Meter) -> Result<Vec<u64>, Exhausted> {
    fn bk(
        adj: &[u64],
        r: u64,
        mut p: u64,
        mut x: u64,
        out: &mut Vec<u64>,
        meter: &mut Meter,
    ) -> Result<(), Exhausted> {
        if !meter.tick() {
            return Err(Exhausted);
        }
        if p == 0 && x == 0 {
            out.push(r);
            return Ok(());
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut candidates = p & !adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out, meter)?;
            p &= !(1 << v);
            x |= 1 << v;
        }
        Ok(())
    }
    let mut out = Vec::new();
    bk(adj, 0, full(adj.len()), 0, &mut out, meter)?;
    out.sort_unstable();
    Ok(out)
}

fn check_size(g: &Graph, budget: &SearchBudget) -> Result<(), OracleError> {
    let limit = budget.max_vertices.min(64);
    if g.n() > limit {
        Err(OracleError::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Decides whether `g` has a clique covering and a stable-set covering in
/// which every clique meets every stable set.
///
/// Both families may be taken from maximal cliques and maximal stable
/// sets. The search picks cliques one at a time, always for the uncovered
/// vertex with the fewest candidates, and keeps only the stable sets that
/// meet every chosen clique; it backtracks once those no longer cover `V`.
pub fn brute_normal(g: &Graph, budget: &SearchBudget) -> Decision {
    if check_size(g, budget).is_err() {
        return Decision::Unknown;
    }
    match normal_search(g, budget) {
        Ok(b) => Decision::from_bool(b),
        Err(Exhausted) => Decision::Unknown,
    }
}

fn normal_search(g: &Graph, budget: &SearchBudget) -> Result<bool, Exhausted> {
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    let mut meter = Meter::new(budget);
    let adj = masks(g);
    let co_adj: Vec<u64> = (0..n).map(|v| full(n) & !adj[v] & !(1 << v)).collect();
    let cliques = maximal_cliques(&adj, &mut meter)?;
    let stables = maximal_cliques(&co_adj, &mut meter)?;
    let by_vertex: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            cliques
                .iter()
                .copied()
                .filter(|c| c >> v & 1 == 1)
                .collect()
        })
        .collect();

    fn union(sets: &[u64], alive: &[bool]) -> u64 {
        sets.iter()
            .zip(alive)
            .filter(|(_, &a)| a)
            .fold(0, |m, (s, _)| m | s)
    }

    fn go(
        n: usize,
        covered: u64,
        alive: &mut Vec<bool>,
        stables: &[u64],
        by_vertex: &[Vec<u64>],
        meter: &mut Meter,
    ) -> Result<bool, Exhausted> {
        if !meter.tick() {
            return Err(Exhausted);
        }
        if union(stables, alive) != full(n) {
            return Ok(false);
        }
        if covered == full(n) {
            return Ok(true);
        }
        let v = (0..n)
            .filter(|&v| covered >> v & 1 == 0)
            .min_by_key(|&v| by_vertex[v].len())
            .expect("some vertex is uncovered");
        for &c in &by_vertex[v] {
            let dropped: Vec<usize> = (0..stables.len())
                .filter(|&i| alive[i] && stables[i] & c == 0)
                .collect();
            for &i in &dropped {
                alive[i] = false;
            }
            let found = go(n, covered | c, alive, stables, by_vertex, meter)?;
            for &i in &dropped {
                alive[i] = true;
            }
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    let mut alive = vec![true; stables.len()];
    go(n, 0, &mut alive, &stables, &by_vertex, &mut meter)
}

/// Whether `g` and its complement get the same decision. Errors if either
/// side is left undecided.
pub fn brute_normal_complement_consistency(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<bool, OracleError> {
    check_size(g, budget)?;
    let a = brute_normal(g, budget)
        .as_bool()
        .ok_or(OracleError::BudgetExceeded)?;
    let b = brute_normal(&g.complement(), budget)
        .as_bool()
        .ok_or(OracleError::BudgetExceeded)?;
    Ok(a == b)
}

/// For every edge `e`, searches for a matching containing `e` whose
/// endpoints include `cover`. Also `false` if `cover` misses an edge.
pub fn brute_good(g: &Graph, cover: &[usize]) -> bool {
    let mut in_cover = vec![false; g.n()];
    for &v in cover {
        in_cover[v] = true;
    }
    if g.edges().iter().any(|e| !in_cover[e.u] && !in_cover[e.v]) {
        return false;
    }
    let todo: Vec<usize> = (0..g.n()).filter(|&v| in_cover[v]).collect();
    g.edges().iter().all(|e| {
        let mut used = vec![false; g.n()];
        used[e.u] = true;
        used[e.v] = true;
        extend_matching(g, &todo, &mut used)
    })
}

fn extend_matching(g: &Graph, todo: &[usize], used: &mut [bool]) -> bool {
    let Some(pos) = todo.iter().position(|&v| !used[v]) else {
        return true;
    };
    let v = todo[pos];
    used[v] = true;
    for &w in g.neighbors(v) {
        if !used[w] {
            used[w] = true;
            if extend_matching(g, &todo[pos + 1..], used) {
                return true;
            }
            used[w] = false;
        }
    }
    used[v] = false;
    false
}

/// True iff some inclusion-minimal vertex cover passes [`brute_good`].
pub fn brute_strongly_edge_normal(g: &Graph, budget: &SearchBudget) -> Decision {
    if g.m() == 0 {
        return Decision::True;
    }
    if check_size(g, budget).is_err() {
        return Decision::Unknown;
    }
    let mut meter = Meter::new(budget);
    let adj = masks(g);
    let co_adj: Vec<u64> = (0..g.n())
        .map(|v| full(g.n()) & !adj[v] & !(1 << v))
        .collect();
    let Ok(independent) = maximal_cliques(&co_adj, &mut meter) else {
        return Decision::Unknown;
    };
    for s in independent {
        if !meter.tick() {
            return Decision::Unknown;
        }
        let cover: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 0).collect();
        if brute_good(g, &cover) {
            return Decision::True;
        }
    }
    Decision::False
}

/// Normality of the line graph; stars and triangles are both allowed as
/// cliques.
pub fn brute_edge_normal(g: &Graph, budget: &SearchBudget) -> Decision {
    match line_graph(g) {
        Ok(map) => brute_normal(&map.line, budget),
        Err(_) => Decision::True,
    }
}

pub const MINIMAL_COVER_LIMIT: usize = 16;

/// All inclusion-minimal vertex covers, as complements of maximal
/// independent sets, found by scanning every vertex subset.
pub fn enumerate_minimal_covers(g: &Graph) -> Result<Vec<VertexCover>, OracleError> {
    let n = g.n();
    if n > MINIMAL_COVER_LIMIT {
        return Err(OracleError::TooLarge {
            n,
            limit: MINIMAL_COVER_LIMIT,
        });
    }
    let adj = masks(g);
    let mut out = Vec::new();
    for s in 0u64..1 << n {
        let independent = (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0);
        let maximal = (0..n).all(|v| s >> v & 1 == 1 || adj[v] & s != 0);
        if independent && maximal {
            let cover = VertexCover::new(g, (0..n).filter(|&v| s >> v & 1 == 0))
                .expect("complement of an independent set is a cover");
            out.push(cover);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::{complete, cycle, named_graph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn odd_cycle_fixtures() {
        assert_eq!(brute_normal(&cycle(5).unwrap(), &budget()), Decision::False);
        assert_eq!(brute_normal(&cycle(7).unwrap(), &budget()), Decision::False);
        assert_eq!(brute_normal(&cycle(9).unwrap(), &budget()), Decision::True);
        assert_eq!(brute_normal(&complete(3), &budget()), Decision::True);
    }

    #[test]
    fn even_cycles_and_cliques_are_normal() {
        for k in [4, 6, 8] {
            assert_eq!(brute_normal(&cycle(k).unwrap(), &budget()), Decision::True);
        }
        assert_eq!(brute_normal(&complete(5), &budget()), Decision::True);
        assert_eq!(brute_normal(&Graph::empty(3), &budget()), Decision::True);
    }

    #[test]
    fn triangle_edge_normality() {
        let k3 = complete(3);
        assert_eq!(brute_strongly_edge_normal(&k3, &budget()), Decision::False);
        assert_eq!(brute_edge_normal(&k3, &budget()), Decision::True);
        assert_eq!(
            brute_strongly_edge_normal(&complete(4), &budget()),
            Decision::True
        );
        assert_eq!(
            brute_edge_normal(&cycle(5).unwrap(), &budget()),
            Decision::False
        );
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let tight = SearchBudget {
            node_limit: 3,
            ..budget()
        };
        assert_eq!(brute_normal(&cycle(9).unwrap(), &tight), Decision::Unknown);
        let small = SearchBudget {
            max_vertices: 4,
            ..budget()
        };
        assert_eq!(brute_normal(&cycle(5).unwrap(), &small), Decision::Unknown);
        assert!(brute_normal_complement_consistency(&cycle(9).unwrap(), &tight).is_err());
    }

    #[test]
    fn complement_consistency_on_cycles() {
        for k in [5, 7] {
            let c = cycle(k).unwrap();
            assert!(brute_normal_complement_consistency(&c, &budget()).unwrap());
            assert_eq!(brute_normal(&c.complement(), &budget()), Decision::False);
        }
    }

    #[test]
    fn complement_consistency_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            assert!(brute_normal_complement_consistency(&g, &budget()).unwrap());
        }
    }

    #[test]
    fn brute_good_triangle_and_k4() {
        let k3 = complete(3);
        assert!(!brute_good(&k3, &[0, 1]));
        assert!(!brute_good(&k3, &[0]));
        let k4 = complete(4);
        for c in enumerate_minimal_covers(&k4).unwrap() {
            assert!(brute_good(&k4, c.vertices()));
        }
    }

    #[test]
    fn minimal_cover_counts() {
        let k3 = enumerate_minimal_covers(&complete(3)).unwrap();
        assert_eq!(k3.len(), 3);
        assert!(k3.iter().all(|c| c.len() == 2));
        let k4 = enumerate_minimal_covers(&complete(4)).unwrap();
        assert_eq!(k4.len(), 4);
        assert!(k4
            .iter()
            .all(|c| c.len() == 3 && c.is_minimal(&complete(4))));
        assert!(matches!(
            enumerate_minimal_covers(&Graph::empty(17)),
            Err(OracleError::TooLarge { .. })
        ));
    }

    /// Maximal independent sets counted by Bron–Kerbosch on the complement
    /// agree with the subset scan.
    #[test]
    fn minimal_cover_count_matches_independent_set_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let co: Vec<u64> = {
                let adj = masks(&g);
                (0..n).map(|v| full(n) & !adj[v] & !(1 << v)).collect()
            };
            let mut meter = Meter::new(&budget());
            let mis = maximal_cliques(&co, &mut meter).ok().unwrap();
            assert_eq!(enumerate_minimal_covers(&g).unwrap().len(), mis.len());
        }
    }

    #[test]
    fn petersen_line_graph_is_normal() {
        let p = named_graph("petersen").unwrap();
        assert_eq!(brute_strongly_edge_normal(&p, &budget()), Decision::True);
    }
}

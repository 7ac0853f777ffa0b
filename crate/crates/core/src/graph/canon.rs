//! Canonical labeling by colour refinement plus individualization.
//!
//! The search tree is explored in full (no automorphism pruning), which is
//! fine for the small graphs this crate enumerates.

use super::Graph;

/// A relabeling-invariant key: two graphs have equal keys iff they are
/// isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let perm = canonical_labeling(g);
    certificate(g, &perm)
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let cells = refine(g, vec![(0..n).collect()]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    best.expect("search reaches at least one leaf").1
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(_, c)| c.len())
        .map(|(i, _)| i);
    let Some(t) = target else {
        let mut perm = vec![0; g.n()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let cert = certificate(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, perm));
        }
        return;
    };
    for &v in &cells[t] {
        let mut split = cells.clone();
        let rest: Vec<usize> = cells[t].iter().copied().filter(|&x| x != v).collect();
        split.splice(t..=t, [vec![v], rest]);
        search(g, refine(g, split), best);
    }
}

/// Equitable refinement of an ordered partition. Cells are split by the
/// number of neighbours in each other cell; the order of the new cells
/// depends only on those counts, so it is labeling-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    loop {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(c.len()) {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn certificate(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut edges: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.u] as u64, perm[e.v] as u64);
            a.min(b) << 32 | a.max(b)
        })
        .collect();
    edges.sort_unstable();
    edges.insert(0, g.n() as u64);
    edges
}

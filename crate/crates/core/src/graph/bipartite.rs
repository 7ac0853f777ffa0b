use std::collections::VecDeque;

/// Bipartite incidence structure. `left` and `right` carry caller-chosen
/// labels; `adj[i]` lists positions into `right` adjacent to `left[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BipartiteIncidence {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub adj: Vec<Vec<usize>>,
}

impl BipartiteIncidence {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Self {
        let adj = vec![Vec::new(); left.len()];
        BipartiteIncidence { left, right, adj }
    }

    /// Adds an incidence by position; repeated pairs are ignored.
    pub fn add(&mut self, left_pos: usize, right_pos: usize) {
        assert!(right_pos < self.right.len(), "right position out of range");
        let row = &mut self.adj[left_pos];
        if let Err(at) = row.binary_search(&right_pos) {
            row.insert(at, right_pos);
        }
    }

    /// Right positions adjacent to any of the given left positions.
    pub fn neighborhood(&self, left_positions: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = left_positions
            .iter()
            .flat_map(|&a| self.adj[a].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Maximum matching, as mates by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
}

impl BipartiteMatching {
    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    /// `(left_pos, right_pos)` pairs in left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(a, m)| m.map(|b| (a, b)))
            .collect()
    }

    pub fn covers_left(&self) -> bool {
        self.left_mate.iter().all(Option::is_some)
    }
}

/// Hopcroft–Karp. Left vertices and their adjacency lists are scanned in
/// ascending order, so the result is deterministic.
pub fn max_bipartite_matching(inc: &BipartiteIncidence) -> BipartiteMatching {
    let nl = inc.left.len();
    let nr = inc.right.len();
    let mut left_mate = vec![None; nl];
    let mut right_mate: Vec<Option<usize>> = vec![None; nr];
    let mut dist = vec![usize::MAX; nl];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for a in 0..nl {
            if left_mate[a].is_none() {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &inc.adj[a] {
                match right_mate[b] {
                    None => found = true,
                    Some(a2) if dist[a2] == usize::MAX => {
                        dist[a2] = dist[a] + 1;
                        queue.push_back(a2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; nl];
        for a in 0..nl {
            if left_mate[a].is_none() {
                augment(
                    inc,
                    a,
                    &mut dist,
                    &mut next,
                    &mut left_mate,
                    &mut right_mate,
                );
            }
        }
    }
    BipartiteMatching {
        left_mate,
        right_mate,
    }
}

fn augment(
    inc: &BipartiteIncidence,
    a: usize,
    dist: &mut [usize],
    next: &mut [usize],
    left_mate: &mut [Option<usize>],
    right_mate: &mut [Option<usize>],
) -> bool {
    while next[a] < inc.adj[a].len() {
        let b = inc.adj[a][next[a]];
        next[a] += 1;
        let ok = match right_mate[b] {
            None => true,
            Some(a2) => {
                dist[a2] == dist[a] + 1 && augment(inc, a2, dist, next, left_mate, right_mate)
            }
        };
        if ok {
            left_mate[a] = Some(b);
            right_mate[b] = Some(a);
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// A left set `X` with `|N(X)| < |X|`, or `None` if some matching covers
/// the whole left side.
///
/// Uses the alternating-reachability set from unmatched left vertices of a
/// maximum matching; returned positions are sorted.
pub fn hall_violator(inc: &BipartiteIncidence) -> Option<Vec<usize>> {
    let m = max_bipartite_matching(inc);
    if m.covers_left() {
        return None;
    }
    let nl = inc.left.len();
    let mut in_x = vec![false; nl];
    let mut queue: VecDeque<usize> = (0..nl).filter(|&a| m.left_mate[a].is_none()).collect();
    for &a in &queue {
        in_x[a] = true;
    }
    while let Some(a) = queue.pop_front() {
        for &b in &inc.adj[a] {
            let a2 = m.right_mate[b].expect("maximum matching saturates N(X)");
            if !in_x[a2] {
                in_x[a2] = true;
                queue.push_back(a2);
            }
        }
    }
    Some((0..nl).filter(|&a| in_x[a]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn instance(nl: usize, nr: usize, pairs: &[(usize, usize)]) -> BipartiteIncidence {
        let mut inc = BipartiteIncidence::new((0..nl).collect(), (0..nr).collect());
        for &(a, b) in pairs {
            inc.add(a, b);
        }
        inc
    }

    /// Exhaustive maximum matching size by recursion over left vertices.
    fn brute_max(inc: &BipartiteIncidence) -> usize {
        fn go(inc: &BipartiteIncidence, a: usize, used: &mut Vec<bool>) -> usize {
            if a == inc.left.len() {
                return 0;
            }
            let mut best = go(inc, a + 1, used);
            for &b in &inc.adj[a] {
                if !used[b] {
                    used[b] = true;
                    best = best.max(1 + go(inc, a + 1, used));
                    used[b] = false;
                }
            }
            best
        }
        go(inc, 0, &mut vec![false; inc.right.len()])
    }

    fn check_matching(inc: &BipartiteIncidence, m: &BipartiteMatching) {
        for (a, b) in m.pairs() {
            assert!(inc.adj[a].contains(&b));
            assert_eq!(m.right_mate[b], Some(a));
        }
        assert_eq!(m.right_mate.iter().flatten().count(), m.size());
    }

    #[test]
    fn single_pair() {
        let inc = instance(1, 1, &[(0, 0)]);
        assert_eq!(max_bipartite_matching(&inc).size(), 1);
        assert_eq!(hall_violator(&inc), None);
    }

    #[test]
    fn star_is_pigeonhole() {
        let inc = instance(2, 1, &[(0, 0), (1, 0)]);
        assert_eq!(max_bipartite_matching(&inc).size(), 1);
        let x = hall_violator(&inc).unwrap();
        assert_eq!(x, vec![0, 1]);
        assert_eq!(inc.neighborhood(&x), vec![0]);
    }

    #[test]
    fn augmenting_through_long_paths() {
        // Chain forcing repeated augmentation: a_i -- b_i, a_i -- b_{i+1}.
        let k = 6;
        let mut pairs = Vec::new();
        for i in 0..k {
            pairs.push((i, i));
            pairs.push((i, i + 1));
        }
        let inc = instance(k, k + 1, &pairs);
        let m = max_bipartite_matching(&inc);
        check_matching(&inc, &m);
        assert_eq!(m.size(), k);
    }

    fn arb_instance() -> impl Strategy<Value = BipartiteIncidence> {
        (1usize..=7, 1usize..=7).prop_flat_map(|(nl, nr)| {
            proptest::collection::vec(proptest::bool::weighted(0.35), nl * nr).prop_map(
                move |bits| {
                    let pairs: Vec<_> = (0..nl)
                        .flat_map(|a| (0..nr).map(move |b| (a, b)))
                        .zip(bits)
                        .filter_map(|(p, keep)| keep.then_some(p))
                        .collect();
                    instance(nl, nr, &pairs)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn matches_exhaustive_maximum(inc in arb_instance()) {
            let m = max_bipartite_matching(&inc);
            check_matching(&inc, &m);
            prop_assert_eq!(m.size(), brute_max(&inc));
        }

        #[test]
        fn violator_iff_left_not_covered(inc in arb_instance()) {
            let covered = brute_max(&inc) == inc.left.len();
            match hall_violator(&inc) {
                None => prop_assert!(covered),
                Some(x) => {
                    prop_assert!(!covered);
                    prop_assert!(inc.neighborhood(&x).len() < x.len());
                }
            }
        }
    }
}

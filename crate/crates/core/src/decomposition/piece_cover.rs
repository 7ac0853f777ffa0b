use super::completion::{cubic_completion, pull_back_cover, pull_back_matching, Completion};
use super::{CubicWithArms, DecompositionError};
use crate::covers::{greedy_cover, is_good, matching_for_edge, VertexCover};
use crate::graph::{Edge, Graph, Matching};

/// Which constraint pattern for a one-arm piece produced the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OneArmCase {
    /// The two body neighbours `q, r` of the attachment `p` are
    /// non-adjacent: `p` in, `q, r` out.
    A,
    /// `p q r` is a triangle and the third neighbours `s` of `r` and `t`
    /// of `q` are non-adjacent: `q, r` in, `p, s, t` out.
    B,
    /// `s t` adjacent, their third neighbours `u` (of `s`) and `v` (of `t`)
    /// non-adjacent: `p, q, s, t` in, `r, u, v` out.
    C,
    /// `u v` adjacent with distinct third neighbours `x` (of `u`) and `y`
    /// (of `v`): `p, q, t, s, u` in, `r, v, x` out.
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieceCase {
    /// No arms: any minimal cover.
    Bridgeless,
    /// Two or more arms: canonical pattern on every gadget.
    Canonical,
    OneArm(OneArmCase),
    /// Found by bounded search over canonical-pattern minimal covers.
    Search,
}

/// A good cover of a piece together with the good minimal cover of its
/// completion it was pulled back from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceCover {
    pub case: PieceCase,
    pub completion: Completion,
    pub completion_cover: VertexCover,
    /// In piece ids; never contains arms.
    pub cover: VertexCover,
}

impl PieceCover {
    /// A matching of the piece containing `e` whose endpoints include
    /// [`PieceCover::cover`].
    pub fn matching_for_edge(
        &self,
        piece: &CubicWithArms,
        e: Edge,
    ) -> Result<Matching, DecompositionError> {
        let lifted = self.completion.edge_of_piece(piece, e)?;
        let s = matching_for_edge(&self.completion.graph, &self.completion_cover, lifted)?;
        Ok(pull_back_matching(piece, &self.completion, &s))
    }
}

const SEARCH_NODE_LIMIT: u64 = 2_000_000;

/// Builds a good cover for a piece whose body is 2-edge-connected.
///
/// Every candidate is checked with [`is_good`] on the completion before it
/// is accepted.
pub fn good_cover_piece(piece: &CubicWithArms) -> Result<PieceCover, DecompositionError> {
    let completion = cubic_completion(piece);
    let g = &completion.graph;
    let finish = |case: PieceCase, cover: VertexCover| -> Result<PieceCover, DecompositionError> {
        let pulled = pull_back_cover(piece, &completion, &cover)?;
        Ok(PieceCover {
            case,
            completion: completion.clone(),
            completion_cover: cover,
            cover: pulled,
        })
    };

    let mut pattern_in = Vec::new();
    let mut pattern_out = Vec::new();
    for gp in &completion.gadgets {
        pattern_in.extend(gp.canonical_in());
        pattern_out.extend(gp.canonical_out());
    }

    let candidates: Vec<(PieceCase, Vec<usize>, Vec<usize>)> = match completion.gadgets.len() {
        0 => {
            let c = greedy_cover(g);
            if is_good(g, &c)? {
                return finish(PieceCase::Bridgeless, c);
            }
            Vec::new()
        }
        1 => one_arm_constraints(
            g,
            completion.gadgets[0].attach,
            completion.gadgets[0].apex(),
        ),
        _ => vec![(PieceCase::Canonical, Vec::new(), Vec::new())],
    };
    for (case, forced_in, forced_out) in candidates {
        let mut fin = pattern_in.clone();
        fin.extend(forced_in);
        let mut fout = pattern_out.clone();
        fout.extend(forced_out);
        if let Some(c) = constrained_cover(g, &fin, &fout) {
            if is_good(g, &c)? {
                return finish(case, c);
            }
        }
    }
    match search_pattern_covers(g, &pattern_in, &pattern_out)? {
        Some(c) => finish(PieceCase::Search, c),
        None => Err(DecompositionError::NoGoodCover(format!(
            "piece with body {} and {} arms",
            piece.body().len(),
            piece.arms().len()
        ))),
    }
}

/// The unique neighbour of `v` outside `exclude`, if there is exactly one.
fn third(g: &Graph, v: usize, exclude: &[usize]) -> Option<usize> {
    let rest: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|w| !exclude.contains(w))
        .collect();
    match rest[..] {
        [x] => Some(x),
        _ => None,
    }
}

/// Constraint sets for the single-arm cases, in the order they are tried.
/// Each non-symmetric case is offered for both orientations of `q, r`.
fn one_arm_constraints(
    g: &Graph,
    p: usize,
    apex: usize,
) -> Vec<(PieceCase, Vec<usize>, Vec<usize>)> {
    let inner: Vec<usize> = g
        .neighbors(p)
        .iter()
        .copied()
        .filter(|&x| x != apex)
        .collect();
    let [q0, r0] = inner[..] else {
        return Vec::new();
    };
    if !g.has_edge(q0, r0) {
        return vec![(PieceCase::OneArm(OneArmCase::A), vec![p], vec![q0, r0])];
    }
    let mut out = Vec::new();
    for (q, r) in [(q0, r0), (r0, q0)] {
        let (Some(s), Some(t)) = (third(g, r, &[p, q]), third(g, q, &[p, r])) else {
            continue;
        };
        if !g.has_edge(s, t) {
            out.push((PieceCase::OneArm(OneArmCase::B), vec![q, r], vec![p, s, t]));
            continue;
        }
        let (Some(u), Some(v)) = (third(g, s, &[r, t]), third(g, t, &[q, s])) else {
            continue;
        };
        if !g.has_edge(u, v) {
            out.push((
                PieceCase::OneArm(OneArmCase::C),
                vec![p, q, s, t],
                vec![r, u, v],
            ));
            continue;
        }
        let (Some(x), Some(y)) = (third(g, u, &[s, v]), third(g, v, &[t, u])) else {
            continue;
        };
        if x != y {
            out.push((
                PieceCase::OneArm(OneArmCase::D),
                vec![p, q, t, s, u],
                vec![r, v, x],
            ));
        }
    }
    out
}

/// Complement of an independent set grown from `forced_out` in ascending
/// id order, never taking a vertex of `forced_in`. `None` if the
/// constraints clash or the result is not a minimal cover.
fn constrained_cover(g: &Graph, forced_in: &[usize], forced_out: &[usize]) -> Option<VertexCover> {
    let mut independent = vec![false; g.n()];
    let mut banned = vec![false; g.n()];
    for &v in forced_in {
        banned[v] = true;
    }
    for &v in forced_out {
        if banned[v] || g.neighbors(v).iter().any(|&w| independent[w]) {
            return None;
        }
        independent[v] = true;
    }
    for v in 0..g.n() {
        if !banned[v] && !independent[v] && g.neighbors(v).iter().all(|&w| !independent[w]) {
            independent[v] = true;
        }
    }
    let cover = VertexCover::new(g, (0..g.n()).filter(|&v| !independent[v])).ok()?;
    cover.is_minimal(g).then_some(cover)
}

/// Depth-first search over maximal independent sets containing
/// `pattern_out` and avoiding `pattern_in`, returning the first whose
/// complement is good.
fn search_pattern_covers(
    g: &Graph,
    pattern_in: &[usize],
    pattern_out: &[usize],
) -> Result<Option<VertexCover>, DecompositionError> {
    let n = g.n();
    let mut state = vec![0u8; n]; // 0 undecided, 1 independent, 2 excluded
    for &v in pattern_in {
        state[v] = 2;
    }
    for &v in pattern_out {
        state[v] = 1;
    }
    let mut nodes = 0u64;

    fn go(
        g: &Graph,
        v: usize,
        state: &mut Vec<u8>,
        nodes: &mut u64,
    ) -> Result<Option<VertexCover>, DecompositionError> {
        *nodes += 1;
        if *nodes > SEARCH_NODE_LIMIT {
            return Ok(None);
        }
        if v == g.n() {
            let cover = VertexCover::new(g, (0..g.n()).filter(|&x| state[x] != 1))?;
            if cover.is_minimal(g) && is_good(g, &cover)? {
                return Ok(Some(cover));
            }
            return Ok(None);
        }
        if state[v] != 0 {
            return go(g, v + 1, state, nodes);
        }
        if g.neighbors(v).iter().all(|&w| state[w] != 1) {
            state[v] = 1;
            if let Some(c) = go(g, v + 1, state, nodes)? {
                return Ok(Some(c));
            }
        }
        state[v] = 2;
        let found = go(g, v + 1, state, nodes)?;
        state[v] = 0;
        Ok(found)
    }
    go(g, 0, &mut state, &mut nodes)
}

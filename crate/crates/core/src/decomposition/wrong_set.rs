use std::fmt;

use serde::Serialize;

use super::DecompositionError;
use crate::covers::{
    build_fe, check_minimal_cover, classify_components, delta, require_cubic, ComponentKind,
    CoverError, FeIncidence, VertexCover,
};
use crate::graph::{hall_violator, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WrongSetType {
    /// Three edges between `U` and `Z`; the exit vertex is in `U`.
    T1,
    /// Four edges between `U` and `Z`; the exit vertex is in `Y`.
    T2a,
    /// Four edges between `U` and `Z`; `Z` has one three-vertex path whose
    /// midpoint is the exit vertex.
    T2b,
}

impl fmt::Display for WrongSetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WrongSetType::T1 => "1",
            WrongSetType::T2a => "2a",
            WrongSetType::T2b => "2b",
        })
    }
}

/// Sums over the components in the Hall violator `X`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WrongSetStats {
    pub delta: usize,
    pub epsilon: usize,
    pub p: usize,
    pub t: usize,
    pub x_size: usize,
    pub nx_size: usize,
}

/// A vertex set joined to the rest of the graph by a single edge that
/// certifies a minimal cover is not good.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WrongSet {
    /// The edge `U = {x, y}` with no nice matching.
    pub edge: Edge,
    pub w: Vec<usize>,
    pub z: Vec<usize>,
    pub y: Vec<usize>,
    /// `(w, v)` with `w` inside and `v` outside the set.
    pub exit: (usize, usize),
    pub kind: WrongSetType,
    pub stats: WrongSetStats,
    /// Vertex lists of the components in `X`.
    pub components: Vec<Vec<usize>>,
}

impl WrongSet {
    /// A bare set with an exit edge, for evaluating the technical
    /// exclusions on a hypothesis.
    pub fn hypothetical(mut w: Vec<usize>, exit: (usize, usize)) -> Self {
        w.sort_unstable();
        w.dedup();
        WrongSet {
            edge: Edge::new(exit.0, exit.1),
            w,
            z: Vec::new(),
            y: Vec::new(),
            exit,
            kind: WrongSetType::T1,
            stats: WrongSetStats::default(),
            components: Vec::new(),
        }
    }

    pub fn exit_vertex(&self) -> usize {
        self.exit.0
    }

    /// Every violated property, as text. Empty for a genuine wrong set.
    pub fn violations(&self, g: &Graph, cover: &VertexCover) -> Vec<String> {
        let mut out = Vec::new();
        let n = g.n();
        let mut in_w = vec![false; n];
        for &v in &self.w {
            in_w[v] = true;
        }
        let (x, y) = (self.edge.u, self.edge.v);
        if !g.has_edge(x, y) {
            out.push(format!("U = ({}) is not an edge", self.edge));
        }
        let mut parts: Vec<usize> = self
            .z
            .iter()
            .chain(&self.y)
            .copied()
            .chain([x, y])
            .collect();
        parts.sort_unstable();
        if parts != self.w {
            out.push("Z, Y, U do not partition W".into());
        }
        if let Some(v) = self.z.iter().find(|&&v| !cover.contains(v)) {
            out.push(format!("Z vertex {v} not in the cover"));
        }
        if let Some(v) = self.y.iter().find(|&&v| cover.contains(v)) {
            out.push(format!("Y vertex {v} in the cover"));
        }

        let exits: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|e| in_w[e.u] != in_w[e.v])
            .map(|e| if in_w[e.u] { (e.u, e.v) } else { (e.v, e.u) })
            .collect();
        if exits != [self.exit] {
            out.push(format!(
                "{} edges leave W, expected only {:?}",
                exits.len(),
                self.exit
            ));
        }

        let uz = g
            .edges()
            .iter()
            .filter(|e| {
                let inz = |a: usize| self.z.binary_search(&a).is_ok();
                (self.edge.contains(e.u) && inz(e.v)) || (self.edge.contains(e.v) && inz(e.u))
            })
            .count();
        let expected_uz = match self.kind {
            WrongSetType::T1 => 3,
            _ => 4,
        };
        if uz != expected_uz || uz != self.stats.epsilon {
            out.push(format!(
                "|E(U,Z)| = {uz}, epsilon = {}, type {} needs {expected_uz}",
                self.stats.epsilon, self.kind
            ));
        }

        let s = &self.stats;
        if s.x_size != s.nx_size + 1 {
            out.push(format!("|X| = {}, |N(X)| = {}", s.x_size, s.nx_size));
        }
        if !(3..=4).contains(&s.epsilon) {
            out.push(format!("epsilon = {} outside 3..=4", s.epsilon));
        }
        if !(3 * s.x_size..=3 * s.x_size + 1).contains(&s.delta) {
            out.push(format!("delta = {} outside 3|X|..=3|X|+1", s.delta));
        }

        let w = self.exit_vertex();
        match classify_components(g, &self.z) {
            Err(e) => out.push(format!("G[Z]: {e}")),
            Ok(shapes) => {
                let p3: Vec<_> = shapes
                    .iter()
                    .filter(|c| c.kind == ComponentKind::Path && c.len() == 3)
                    .collect();
                let others_ok = shapes
                    .iter()
                    .filter(|c| !(c.kind == ComponentKind::Path && c.len() == 3))
                    .all(|c| c.is_triangle_or_point());
                if !others_ok {
                    out.push("G[Z] has a component other than a triangle, point or P3".into());
                }
                match self.kind {
                    WrongSetType::T1 | WrongSetType::T2a if !p3.is_empty() => {
                        out.push(format!("type {} with a P3 in G[Z]", self.kind));
                    }
                    WrongSetType::T2b if p3.len() != 1 || p3[0].vertices[1] != w => {
                        out.push("type 2b needs one P3 in G[Z] centred at the exit vertex".into());
                    }
                    _ => {}
                }
            }
        }
        match self.kind {
            WrongSetType::T1 if !self.edge.contains(w) => {
                out.push("type 1 exit vertex not in U".into())
            }
            WrongSetType::T2a if self.y.binary_search(&w).is_err() => {
                out.push("type 2a exit vertex not in Y".into())
            }
            _ => {}
        }
        out
    }
}

/// The four configurations a genuine wrong set can never show.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TechnicalClause {
    /// The exit vertex is in the cover with no cover neighbour inside.
    LonelyExit,
    /// Some two-vertex component of `G[C]` lies inside `W` and avoids the
    /// exit vertex.
    InnerP2,
    /// `G[C ∩ W]` has a four-vertex path component.
    P4,
    /// `G[C ∩ W]` has a five-vertex path component ending at the exit
    /// vertex.
    P5AtExit,
}

impl TechnicalClause {
    pub fn number(self) -> usize {
        match self {
            TechnicalClause::LonelyExit => 1,
            TechnicalClause::InnerP2 => 2,
            TechnicalClause::P4 => 3,
            TechnicalClause::P5AtExit => 4,
        }
    }
}

pub fn check_technical_exclusions(
    ws: &WrongSet,
    g: &Graph,
    cover: &VertexCover,
) -> Result<Vec<TechnicalClause>, CoverError> {
    let w = ws.exit_vertex();
    let in_w = |v: usize| ws.w.binary_search(&v).is_ok();
    let mut out = Vec::new();
    if cover.contains(w) && !g.neighbors(w).iter().any(|&x| cover.contains(x) && in_w(x)) {
        out.push(TechnicalClause::LonelyExit);
    }
    let whole = classify_components(g, cover.vertices())?;
    if whole
        .iter()
        .any(|c| c.len() == 2 && c.vertices.iter().all(|&v| in_w(v) && v != w))
    {
        out.push(TechnicalClause::InnerP2);
    }
    let inside: Vec<usize> = cover
        .vertices()
        .iter()
        .copied()
        .filter(|&v| in_w(v))
        .collect();
    let local = classify_components(g, &inside)?;
    let paths = |len: usize| {
        local
            .iter()
            .filter(move |c| c.kind == ComponentKind::Path && c.len() == len)
    };
    if paths(4).next().is_some() {
        out.push(TechnicalClause::P4);
    }
    if paths(5).any(|c| c.vertices[0] == w || c.vertices[4] == w) {
        out.push(TechnicalClause::P5AtExit);
    }
    Ok(out)
}

/// `None` if the cover is good; otherwise the wrong set read off the first
/// edge without a nice matching, using the alternating-reachability Hall
/// violator. Every invariant is re-checked before returning.
pub fn find_wrong_set(
    g: &Graph,
    cover: &VertexCover,
) -> Result<Option<WrongSet>, DecompositionError> {
    require_cubic(g)?;
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    check_minimal_cover(g, cover)?;
    for &e in g.edges() {
        let fe = build_fe(g, cover, e)?;
        let Some(x) = hall_violator(&fe.incidence) else {
            continue;
        };
        let ws = assemble(g, e, &fe, &x)?;
        let problems = ws.violations(g, cover);
        if !problems.is_empty() {
            return Err(DecompositionError::WrongSetInvariant(problems.join("; ")));
        }
        return Ok(Some(ws));
    }
    Ok(None)
}

fn assemble(
    g: &Graph,
    e: Edge,
    fe: &FeIncidence,
    x: &[usize],
) -> Result<WrongSet, DecompositionError> {
    let nx: Vec<usize> = fe
        .incidence
        .neighborhood(x)
        .into_iter()
        .map(|b| fe.incidence.right[b])
        .collect();
    let mut stats = WrongSetStats {
        x_size: x.len(),
        nx_size: nx.len(),
        ..Default::default()
    };
    let mut z = Vec::new();
    let mut components = Vec::new();
    for &a in x {
        let shape = &fe.odd[a];
        stats.delta += delta(shape)?;
        let mut hits = vec![0usize; g.n()];
        for &imp in &shape.important {
            for &b in g.neighbors(imp) {
                if e.contains(b) {
                    stats.epsilon += 1;
                } else if !shape.contains(b) {
                    hits[b] += 1;
                }
            }
        }
        for &b in &fe.incidence.right {
            match hits[b] {
                2 => stats.p += 1,
                3 => stats.t += 1,
                _ => {}
            }
        }
        z.extend(shape.vertices.iter().copied());
        let mut vs = shape.vertices.clone();
        vs.sort_unstable();
        components.push(vs);
    }
    z.sort_unstable();
    let mut w: Vec<usize> = z.iter().chain(&nx).copied().chain([e.u, e.v]).collect();
    w.sort_unstable();
    let in_w = |v: usize| w.binary_search(&v).is_ok();
    let exits: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|f| in_w(f.u) != in_w(f.v))
        .map(|f| if in_w(f.u) { (f.u, f.v) } else { (f.v, f.u) })
        .collect();
    let [exit] = exits[..] else {
        return Err(DecompositionError::WrongSetInvariant(format!(
            "{} edges leave W for edge ({e})",
            exits.len()
        )));
    };
    let kind = match (stats.epsilon, stats.delta) {
        (3, _) => WrongSetType::T1,
        (4, d) if d == 3 * x.len() => WrongSetType::T2a,
        (4, d) if d == 3 * x.len() + 1 => WrongSetType::T2b,
        (eps, d) => {
            return Err(DecompositionError::WrongSetInvariant(format!(
                "epsilon = {eps}, delta = {d}, |X| = {}",
                x.len()
            )))
        }
    };
    Ok(WrongSet {
        edge: e,
        w,
        z,
        y: nx,
        exit,
        kind,
        stats,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::is_good;
    use crate::decomposition::{as_cubic_with_arms, cubic_completion};
    use crate::graph::connected_cubic_graphs;
    use crate::graph::corpus::named_graph;
    use crate::oracle::enumerate_minimal_covers;

    #[test]
    fn good_pairs_have_no_wrong_set() {
        for name in ["K4", "petersen", "gadget_completion_pair"] {
            let g = named_graph(name).unwrap();
            for c in enumerate_minimal_covers(&g).unwrap() {
                if is_good(&g, &c).unwrap() {
                    assert_eq!(find_wrong_set(&g, &c).unwrap(), None);
                }
            }
        }
    }

    #[test]
    fn agrees_with_is_good_up_to_ten_vertices() {
        for n in [4, 6, 8, 10] {
            for g in connected_cubic_graphs(n) {
                for c in enumerate_minimal_covers(&g).unwrap() {
                    let ws = find_wrong_set(&g, &c).unwrap();
                    assert_eq!(ws.is_none(), is_good(&g, &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn lonely_exit_detected() {
        // exit vertex 4 of the gadget, in the cover, with no cover neighbour inside W
        let g = named_graph("gadget_completion_pair").unwrap();
        let c = VertexCover::new_minimal(&g, [0, 1, 4, 5, 6, 9]).unwrap();
        let ws = WrongSet::hypothetical(vec![4, 2, 3], (4, 9));
        let clauses = check_technical_exclusions(&ws, &g, &c).unwrap();
        assert!(clauses.contains(&TechnicalClause::LonelyExit));
    }

    #[test]
    fn gadget_p2_triggers_second_clause() {
        let piece = as_cubic_with_arms(&named_graph("middle_piece").unwrap()).unwrap();
        let comp = cubic_completion(&piece);
        let g = &comp.graph;
        let mut forced_out = vec![false; g.n()];
        for gp in &comp.gadgets {
            for v in gp.canonical_out() {
                forced_out[v] = true;
            }
        }
        let mut independent = forced_out.clone();
        for v in 0..g.n() {
            let inside = comp.gadgets.iter().any(|gp| gp.canonical_in().contains(&v));
            if !inside && !independent[v] && g.neighbors(v).iter().all(|&w| !independent[w]) {
                independent[v] = true;
            }
        }
        let c = VertexCover::new_minimal(g, (0..g.n()).filter(|&v| !independent[v])).unwrap();
        for gp in &comp.gadgets {
            let hyp = WrongSet::hypothetical(gp.vertices.to_vec(), (gp.apex(), gp.attach));
            let clauses = check_technical_exclusions(&hyp, g, &c).unwrap();
            assert!(clauses.contains(&TechnicalClause::InnerP2));
            let rest: Vec<usize> = (0..g.n()).filter(|v| !gp.vertices.contains(v)).collect();
            let hyp = WrongSet::hypothetical(rest, (gp.attach, gp.apex()));
            let clauses = check_technical_exclusions(&hyp, g, &c).unwrap();
            assert!(clauses.contains(&TechnicalClause::InnerP2));
        }
    }

    #[test]
    fn synthetic_paths_trigger_third_and_fourth_clauses() {
        // path 0-1-2-3-4 plus extra vertices to host it
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c4 = VertexCover::new(&g, [0, 1, 2, 3, 5]).unwrap();
        let hyp = WrongSet::hypothetical(vec![0, 1, 2, 3, 4], (4, 5));
        assert!(check_technical_exclusions(&hyp, &g, &c4)
            .unwrap()
            .contains(&TechnicalClause::P4));
        let c5 = VertexCover::new(&g, [0, 1, 2, 3, 4]).unwrap();
        let hyp = WrongSet::hypothetical(vec![0, 1, 2, 3, 4], (4, 5));
        assert!(check_technical_exclusions(&hyp, &g, &c5)
            .unwrap()
            .contains(&TechnicalClause::P5AtExit));
    }

    #[test]
    fn violations_flag_a_broken_set() {
        let g = named_graph("gadget_completion_pair").unwrap();
        let c = VertexCover::new_minimal(&g, [0, 1, 4, 5, 6, 9]).unwrap();
        let ws = WrongSet::hypothetical(vec![0, 1, 2, 3, 4], (4, 9));
        assert!(!ws.violations(&g, &c).is_empty());
    }

    #[test]
    fn preconditions() {
        let k4 = named_graph("K4").unwrap();
        let full = VertexCover::new(&k4, 0..4).unwrap();
        assert!(matches!(
            find_wrong_set(&k4, &full),
            Err(DecompositionError::Cover(CoverError::NotMinimal(0)))
        ));
    }
}

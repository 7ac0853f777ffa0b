//! Named graphs, seeded random cubic graphs and the small fixtures used by
//! the decomposition tests.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// Looks up a named graph. Parameterised families take a numeric suffix:
/// `C5`, `P4`, `flower_snark5`, `gadget_chain3`.
///
/// Names: `K4`, `K33`, `prism`, `cube`, `petersen`, `tietze`, `triangle`,
/// `claw`, `C<k>`, `P<k>`, `flower_snark<k>`, `gadget`, `middle_piece`,
/// `gadget_completion_pair`, `gadget_chain<k>`, `one_arm_a` .. `one_arm_d`.
pub fn named_graph(name: &str) -> Result<Graph, GraphError> {
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .filter(|&i| !matches!(&name[..i], "K" | ""))
        .unwrap_or(name.len());
    let (stem, digits) = name.split_at(split);
    let k = if digits.is_empty() {
        None
    } else {
        Some(
            digits
                .parse::<usize>()
                .map_err(|_| bad(name, "bad numeric suffix"))?,
        )
    };
    named_graph_with(stem, k)
}

/// Like [`named_graph`] with the family parameter given separately.
pub fn named_graph_with(stem: &str, k: Option<usize>) -> Result<Graph, GraphError> {
    let need_k = || k.ok_or_else(|| bad(stem, "missing parameter"));
    let no_k = |g: Graph| match k {
        None => Ok(g),
        Some(_) => Err(bad(stem, "takes no parameter")),
    };
    match stem {
        "K4" => no_k(complete(4)),
        "K33" => no_k(complete_bipartite(3, 3)),
        "prism" => no_k(prism()),
        "cube" => no_k(cube()),
        "petersen" => no_k(petersen()),
        "tietze" => no_k(tietze()),
        "triangle" => no_k(complete(3)),
        "claw" => no_k(complete_bipartite(1, 3)),
        "C" => cycle(need_k()?),
        "P" => path(need_k()?),
        "flower_snark" | "J" => flower_snark(need_k()?),
        "gadget" => no_k(gadget()),
        "middle_piece" => no_k(middle_piece()),
        "gadget_completion_pair" => no_k(gadget_chain(2)?),
        "gadget_chain" => gadget_chain(need_k()?),
        "one_arm_a" => no_k(gadget()),
        "one_arm_b" => no_k(one_arm_b()),
        "one_arm_c" => no_k(one_arm_c()),
        "one_arm_d" => no_k(one_arm_d()),
        other => Err(GraphError::UnknownName(other.to_string())),
    }
}

/// Every fixed fixture, by the name [`named_graph`] accepts.
pub const CORPUS_NAMES: &[&str] = &[
    "K4",
    "K33",
    "prism",
    "cube",
    "petersen",
    "tietze",
    "flower_snark3",
    "flower_snark5",
    "flower_snark7",
    "gadget",
    "middle_piece",
    "gadget_completion_pair",
    "gadget_chain3",
    "gadget_chain4",
    "one_arm_b",
    "one_arm_c",
    "one_arm_d",
    "claw",
    "P2",
];

/// The corpus graphs paired with their names.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    CORPUS_NAMES
        .iter()
        .map(|&name| (name, named_graph(name).expect("corpus names resolve")))
        .collect()
}

fn bad(name: &str, reason: &str) -> GraphError {
    GraphError::BadParameter {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("fixture is a simple graph")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    build(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|x| (0..b).map(move |y| (x, a + y)))
        .collect();
    build(a + b, &edges)
}

pub fn cycle(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(bad("C", "cycle needs at least 3 vertices"));
    }
    Ok(build(
        k,
        &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>(),
    ))
}

pub fn path(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(bad("P", "path needs at least 1 vertex"));
    }
    Ok(build(k, &(1..k).map(|i| (i - 1, i)).collect::<Vec<_>>()))
}

fn prism() -> Graph {
    build(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

fn cube() -> Graph {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|v| [1, 2, 4].map(|bit| (v, v ^ bit)))
        .filter(|(a, b)| a < b)
        .collect();
    build(8, &edges)
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Petersen graph with vertex 0 blown up into a triangle.
fn tietze() -> Graph {
    let p = petersen();
    let shift = |v: usize| v - 1;
    let mut edges: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .filter(|e| !e.contains(0))
        .map(|e| (shift(e.u), shift(e.v)))
        .collect();
    let (t0, t1, t2) = (9, 10, 11);
    edges.extend([(t0, t1), (t1, t2), (t0, t2)]);
    for (t, nb) in [t0, t1, t2].into_iter().zip(p.neighbors(0).iter()) {
        edges.push((t, shift(*nb)));
    }
    build(12, &edges)
}

/// Flower snark J_k for odd `k >= 3`: vertices `a_i, b_i, c_i, d_i` at ids
/// `i, k+i, 2k+i, 3k+i`.
pub fn flower_snark(k: usize) -> Result<Graph, GraphError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(bad("flower_snark", "k must be odd and at least 3"));
    }
    let (a, b, c, d) = (0, k, 2 * k, 3 * k);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.extend([(a + i, b + i), (a + i, c + i), (a + i, d + i)]);
        edges.push((b + i, b + (i + 1) % k));
        if i + 1 < k {
            edges.push((c + i, c + i + 1));
            edges.push((d + i, d + i + 1));
        }
    }
    edges.push((c + k - 1, d));
    edges.push((d + k - 1, c));
    Ok(build(4 * k, &edges))
}

/// Gadget vertex ids: `a, b, c, d, w` form the body, `u` is the arm.
pub mod gadget_ids {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const W: usize = 4;
    pub const U: usize = 5;
}

/// The smallest cubic graph with one arm: K4 minus the edge `cd`, an apex
/// `w` joined to `c` and `d`, and the arm `u` hanging off `w`.
pub fn gadget() -> Graph {
    use gadget_ids::*;
    build(
        6,
        &[
            (A, B),
            (A, C),
            (A, D),
            (B, C),
            (B, D),
            (C, W),
            (D, W),
            (W, U),
        ],
    )
}

/// K4 with two disjoint edges subdivided; each subdivision vertex carries
/// an arm. Arms are 6 (at 4) and 7 (at 5).
pub fn middle_piece() -> Graph {
    build(
        8,
        &[
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (0, 4),
            (4, 1),
            (2, 5),
            (5, 3),
            (4, 6),
            (5, 7),
        ],
    )
}

/// One-arm piece whose arm vertex `p` sits in a triangle `p, q, r` and the
/// third neighbours of `q` and `r` are non-adjacent. Arm is vertex 7.
fn one_arm_b() -> Graph {
    // p=0 q=1 r=2 t=3 s=4 ; 5, 6 close it up
    build(
        8,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
            (0, 7),
        ],
    )
}

/// One-arm piece: triangle `p q r`, third neighbours `s t` adjacent, their
/// further neighbours `u v` non-adjacent. Arm is vertex 9.
fn one_arm_c() -> Graph {
    // p=0 q=1 r=2 s=3 t=4 u=5 v=6 x=7 y=8
    build(
        10,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 4),
            (2, 3),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
            (7, 8),
            (0, 9),
        ],
    )
}

/// One-arm piece: as `one_arm_c` but `u v` adjacent with distinct third
/// neighbours. Arm is vertex 11.
fn one_arm_d() -> Graph {
    // p=0 q=1 r=2 s=3 t=4 u=5 v=6 x=7 y=8 e=9 f=10
    build(
        12,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 4),
            (2, 3),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 8),
            (7, 9),
            (7, 10),
            (8, 9),
            (8, 10),
            (9, 10),
            (0, 11),
        ],
    )
}

/// Glues two graphs at degree-one vertices: both arms are deleted and their
/// neighbours joined. `g1`'s remaining vertices keep their relative order
/// and come first. Returns the new graph and the old-to-new id maps.
#[allow(clippy::type_complexity)]
pub fn connect_arms_mapped(
    g1: &Graph,
    arm1: usize,
    g2: &Graph,
    arm2: usize,
) -> Result<(Graph, Vec<Option<usize>>, Vec<Option<usize>>), GraphError> {
    for (g, arm) in [(g1, arm1), (g2, arm2)] {
        if arm >= g.n() || g.degree(arm) != 1 {
            return Err(bad(
                "connect",
                &format!("vertex {arm} is not a degree-one vertex"),
            ));
        }
    }
    let renumber = |g: &Graph, arm: usize, offset: usize| -> Vec<Option<usize>> {
        (0..g.n())
            .map(|v| match v.cmp(&arm) {
                std::cmp::Ordering::Less => Some(offset + v),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(offset + v - 1),
            })
            .collect()
    };
    let map1 = renumber(g1, arm1, 0);
    let map2 = renumber(g2, arm2, g1.n() - 1);
    let mut edges = Vec::new();
    for (g, map) in [(g1, &map1), (g2, &map2)] {
        for e in g.edges() {
            if let (Some(a), Some(b)) = (map[e.u], map[e.v]) {
                edges.push((a, b));
            }
        }
    }
    let w1 = map1[g1.neighbors(arm1)[0]].expect("neighbour of an arm survives");
    let w2 = map2[g2.neighbors(arm2)[0]].expect("neighbour of an arm survives");
    edges.push((w1, w2));
    let g = Graph::new(g1.n() + g2.n() - 2, edges)?;
    Ok((g, map1, map2))
}

pub fn connect_arms(g1: &Graph, arm1: usize, g2: &Graph, arm2: usize) -> Result<Graph, GraphError> {
    connect_arms_mapped(g1, arm1, g2, arm2).map(|(g, _, _)| g)
}

/// `k >= 2` pieces in a row: gadget bodies at both ends and `k - 2` copies
/// of [`middle_piece`] between them, joined by `k - 1` bridges.
pub fn gadget_chain(k: usize) -> Result<Graph, GraphError> {
    if k < 2 {
        return Err(bad("gadget_chain", "needs at least 2 pieces"));
    }
    let mut g = gadget();
    let mut free_arm = gadget_ids::U;
    let mid = middle_piece();
    for _ in 0..k - 2 {
        let (next, _, map2) = connect_arms_mapped(&g, free_arm, &mid, 6)?;
        g = next;
        free_arm = map2[7].expect("other arm survives");
    }
    connect_arms(&g, free_arm, &gadget(), gadget_ids::U)
}

/// Uniform-ish random connected cubic graph on `n` vertices from the
/// pairing model, rejecting loops, multi-edges and disconnected outcomes.
/// Deterministic for a fixed seed.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(bad("random_cubic", "n must be even and at least 4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::new(n, pairs) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::isomorphic;

    #[test]
    fn petersen_basics() {
        let g = named_graph("petersen").unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.is_cubic());
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn corpus_degrees_are_one_or_three() {
        for (name, g) in corpus() {
            assert!(g.is_connected(), "{name}");
            assert!((0..g.n()).all(|v| matches!(g.degree(v), 1 | 3)), "{name}");
        }
    }

    #[test]
    fn flower_snark_five() {
        let g = named_graph("flower_snark5").unwrap();
        assert_eq!((g.n(), g.m()), (20, 30));
        assert!(g.is_cubic() && g.is_connected());
        assert_eq!(named_graph_with("flower_snark", Some(5)).unwrap(), g);
    }

    #[test]
    fn cubic_entries_are_cubic() {
        for name in [
            "K4",
            "K33",
            "prism",
            "cube",
            "petersen",
            "tietze",
            "flower_snark3",
            "flower_snark7",
            "gadget_completion_pair",
            "gadget_chain3",
        ] {
            let g = named_graph(name).unwrap();
            assert!(g.is_cubic(), "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn cycles_and_paths() {
        let c5 = named_graph("C5").unwrap();
        assert!(c5.is_regular(2) && c5.is_connected() && c5.n() == 5);
        assert_eq!(named_graph("P4").unwrap().m(), 3);
        assert_eq!(named_graph("triangle").unwrap(), named_graph("C3").unwrap());
    }

    #[test]
    fn bad_names_and_parameters() {
        assert!(matches!(
            named_graph("dodecahedron"),
            Err(GraphError::UnknownName(_))
        ));
        assert!(matches!(
            named_graph("flower_snark4"),
            Err(GraphError::BadParameter { .. })
        ));
        assert!(matches!(
            named_graph("C2"),
            Err(GraphError::BadParameter { .. })
        ));
        assert!(matches!(
            named_graph("C"),
            Err(GraphError::BadParameter { .. })
        ));
        assert!(matches!(
            named_graph_with("petersen", Some(3)),
            Err(GraphError::BadParameter { .. })
        ));
    }

    #[test]
    fn one_arm_fixtures_have_degrees_three_and_one() {
        for name in [
            "gadget",
            "one_arm_b",
            "one_arm_c",
            "one_arm_d",
            "middle_piece",
        ] {
            let g = named_graph(name).unwrap();
            assert!(g.is_connected(), "{name}");
            let ones = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
            let threes = (0..g.n()).filter(|&v| g.degree(v) == 3).count();
            assert_eq!(ones + threes, g.n(), "{name}");
            assert_eq!(ones, if name == "middle_piece" { 2 } else { 1 }, "{name}");
        }
    }

    #[test]
    fn random_cubic_small_cases() {
        assert!(isomorphic(&random_cubic(4, 0).unwrap(), &complete(4)));
        let g = random_cubic(10, 1).unwrap();
        assert!(g.is_cubic());
        assert_eq!(g, random_cubic(10, 1).unwrap());
        assert!(random_cubic(7, 0).is_err());
        assert!(random_cubic(2, 0).is_err());
    }

    #[test]
    fn random_cubic_property_run() {
        for seed in 0..100 {
            let g = random_cubic(12, seed).unwrap();
            assert!(g.is_cubic() && g.is_connected() && g.n() == 12);
        }
    }
}

//! Named built-in polymatroids used by the CLI and the test corpus, plus the
//! literal polynomials of the worked three-variable example.

use std::collections::BTreeMap;

use crate::point::PointSet;
use crate::poly::SparsePoly;
use crate::polymatroid::{
    direct_sum, graphic, rank_from_points, restriction_polymatroid, translate_minus, truncate,
    uniform, Polymatroid,
};

/// The worked example: `p = 3`, cage `(2,2,4)`, ranks
/// `rk{1} = rk{2} = 2`, `rk{3} = rk{1,2} = 4`, `rk{1,3} = rk{2,3} = rk{1,2,3} = 5`.
pub fn paper_example() -> Polymatroid {
    let mut ranks = BTreeMap::new();
    ranks.insert(0b001, 2);
    ranks.insert(0b010, 2);
    ranks.insert(0b100, 4);
    ranks.insert(0b011, 4);
    ranks.insert(0b101, 5);
    ranks.insert(0b110, 5);
    ranks.insert(0b111, 5);
    Polymatroid::validate(3, Some(vec![2, 2, 4]), &ranks).expect("the example validates")
}

/// Dual of the example with respect to the cage `(2,2,4)`.
pub fn paper_example_dual() -> Polymatroid {
    paper_example().dual(&[2, 2, 4]).expect("cage is legal")
}

/// The matroid `U_{1,2}` as a polymatroid.
pub fn u12() -> Polymatroid {
    uniform(2, &[1, 1], 1).expect("valid parameters")
}

/// The rank-zero polymatroid `{(0,0)}` on two elements.
pub fn rank_zero() -> Polymatroid {
    uniform(2, &[0, 0], 0).expect("valid parameters")
}

/// Edges of the complete graph `K_n` in lexicographic order.
fn complete_graph_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    edges
}

fn path_edges(n_edges: usize) -> Vec<(usize, usize)> {
    (0..n_edges).map(|k| (k, k + 1)).collect()
}

fn k4_restriction(groups: &[Vec<usize>]) -> Polymatroid {
    let edges = complete_graph_edges(4);
    restriction_polymatroid(
        6,
        |mask| crate::polymatroid::graphic_rank(4, &edges, mask),
        groups,
    )
    .expect("graphic matroid rank oracle is valid")
}

fn derived_from_dual_points(truncated: bool) -> Polymatroid {
    let base = paper_example_dual().base_points();
    let e3 = [0, 0, 1];
    let set = if truncated {
        truncate(&base, &e3)
    } else {
        translate_minus(&base, &e3)
    };
    rank_from_points(&set).expect("derived sets stay M-convex")
}

/// The full fixture corpus: at least 20 distinct polymatroids with `p ≤ 4`
/// and cage entries `≤ 4`, in a deterministic order.
pub fn corpus() -> Vec<(String, Polymatroid)> {
    let mut out: Vec<(String, Polymatroid)> = Vec::new();
    let mut push = |name: &str, p: Polymatroid| out.push((name.to_string(), p));

    push("paper-example", paper_example());
    push("paper-example-dual", paper_example_dual());
    push("u12", u12());
    push("rank-zero", rank_zero());
    push("U(1;1,1,1)", uniform(3, &[1, 1, 1], 1).unwrap());
    push("U(2;1,1,1)", uniform(3, &[1, 1, 1], 2).unwrap());
    push("U(2;2,2)", uniform(2, &[2, 2], 2).unwrap());
    push("U(3;2,2,2)", uniform(3, &[2, 2, 2], 3).unwrap());
    push("U(1;2,2)", uniform(2, &[2, 2], 1).unwrap());
    push("U(2;1,2,1)", uniform(3, &[1, 2, 1], 2).unwrap());
    push("U(3;1,2,3)", uniform(3, &[1, 2, 3], 3).unwrap());
    push("graphic-k3", graphic(3, &complete_graph_edges(3)).unwrap());
    push("graphic-path2", graphic(3, &path_edges(2)).unwrap());
    push("graphic-path3", graphic(4, &path_edges(3)).unwrap());
    // Triangle 0-1-2 with a pendant edge 2-3.
    push(
        "graphic-triangle-pendant",
        graphic(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
    );
    push(
        "restriction-k4-pairs",
        k4_restriction(&[vec![0, 1], vec![2, 3], vec![4, 5]]),
    );
    push(
        "restriction-k4-halves",
        k4_restriction(&[vec![0, 1, 2], vec![3, 4, 5]]),
    );
    push(
        "restriction-k4-mixed",
        k4_restriction(&[vec![0], vec![1, 2], vec![3, 4, 5]]),
    );
    push("sum-u12-u12", direct_sum(&u12(), &u12()).unwrap());
    push(
        "sum-u12-u11",
        direct_sum(&u12(), &uniform(1, &[1], 1).unwrap()).unwrap(),
    );
    push(
        "dual-u23",
        uniform(3, &[1, 1, 1], 2).unwrap().dual(&[1, 1, 1]).unwrap(),
    );
    push(
        "dual-uniform22",
        uniform(2, &[2, 2], 2).unwrap().dual(&[2, 2]).unwrap(),
    );
    push(
        "dual-graphic-k3",
        graphic(3, &complete_graph_edges(3))
            .unwrap()
            .dual(&[1, 1, 1])
            .unwrap(),
    );
    push("trunc-paper-dual-e3", derived_from_dual_points(true));
    push("trans-paper-dual-e3", derived_from_dual_points(false));
    out
}

/// Every named fixture, including the large ones excluded from the `p ≤ 4`
/// corpus.
pub fn all() -> Vec<(String, Polymatroid)> {
    let mut out = corpus();
    out.push((
        "graphic-k4".to_string(),
        graphic(4, &complete_graph_edges(4)).unwrap(),
    ));
    out
}

/// Looks up a fixture by name. Names of the form `U(r;m1,…,mp)` build the
/// uniform family on the fly.
pub fn by_name(name: &str) -> Option<Polymatroid> {
    if let Some(p) = parse_uniform(name) {
        return Some(p);
    }
    all().into_iter().find(|(n, _)| n == name).map(|(_, p)| p)
}

fn parse_uniform(name: &str) -> Option<Polymatroid> {
    let inner = name.strip_prefix("U(")?.strip_suffix(')')?;
    let (r_str, weights_str) = inner.split_once(';')?;
    let r: i64 = r_str.trim().parse().ok()?;
    let weights: Vec<i64> = weights_str
        .split(',')
        .map(|w| w.trim().parse().ok())
        .collect::<Option<_>>()?;
    uniform(weights.len(), &weights, r).ok()
}

/// The printed 17-term cave polynomial of the dual of the worked example.
pub fn printed_cave_dual() -> SparsePoly {
    SparsePoly::from_int_terms(
        3,
        &[
            (&[2, 1, 0], 1),
            (&[1, 2, 0], 1),
            (&[2, 0, 1], 1),
            (&[1, 1, 1], 1),
            (&[0, 2, 1], 1),
            (&[1, 0, 2], 1),
            (&[0, 1, 2], 1),
            (&[0, 0, 3], 1),
            (&[2, 0, 0], -1),
            (&[1, 1, 0], -2),
            (&[0, 2, 0], -1),
            (&[1, 0, 1], -2),
            (&[0, 1, 1], -2),
            (&[0, 0, 2], -2),
            (&[1, 0, 0], 1),
            (&[0, 1, 0], 1),
            (&[0, 0, 1], 1),
        ],
    )
}

/// The printed 17-term K-polynomial of the worked example's ideal.
pub fn printed_k_polynomial() -> SparsePoly {
    SparsePoly::from_int_terms(
        3,
        &[
            (&[2, 2, 3], 1),
            (&[2, 1, 4], 1),
            (&[1, 2, 4], 1),
            (&[2, 2, 2], -2),
            (&[2, 1, 3], -2),
            (&[1, 2, 3], -2),
            (&[2, 0, 4], -1),
            (&[1, 1, 4], -2),
            (&[0, 2, 4], -1),
            (&[2, 2, 1], 1),
            (&[2, 1, 2], 1),
            (&[1, 2, 2], 1),
            (&[2, 0, 3], 1),
            (&[1, 1, 3], 1),
            (&[0, 2, 3], 1),
            (&[1, 0, 4], 1),
            (&[0, 1, 4], 1),
        ],
    )
}

/// The printed dual base points of the worked example.
pub fn printed_dual_points() -> PointSet {
    PointSet::new(
        3,
        vec![
            vec![2, 0, 1],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![0, 1, 2],
            vec![0, 0, 3],
            vec![1, 1, 1],
            vec![1, 2, 0],
            vec![2, 1, 0],
        ],
    )
}

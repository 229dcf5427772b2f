//! Seeded instance generators and small-graph enumeration.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dce::{DceInstance, DegreeListFunction, OpKind};
use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph};
use crate::reductions::{reduce, ReductionKind, ReductionOutput};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

fn check_probability(p: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("{what} must lie in [0, 1], got {p}")));
    }
    Ok(())
}

/// `G(n, p)` with every value `0..=r` put on each list independently with
/// probability `list_density`.
pub fn gen_random_dce(
    n: usize,
    edge_prob: f64,
    k: usize,
    r: usize,
    list_density: f64,
    op: OpKind,
    seed: u64,
) -> Result<DceInstance> {
    check_probability(edge_prob, "edge probability")?;
    check_probability(list_density, "list density")?;
    let mut rng = rng(seed);
    let graph = gen_gnp(n, edge_prob, &mut rng);
    let lists = (0..n)
        .map(|_| (0..=r).filter(|_| rng.gen_bool(list_density)).collect())
        .collect();
    DceInstance::new(graph, k, DegreeListFunction::new(r, lists)?, op)
}

/// An edge-addition yes-instance: a random graph with maximum degree at
/// most `r`, up to `k` planted non-edges whose addition keeps degrees within
/// `r`, and lists that contain every final degree plus random extra values.
pub fn gen_planted_dce(
    n: usize,
    edge_prob: f64,
    k: usize,
    r: usize,
    extra_density: f64,
    seed: u64,
) -> Result<DceInstance> {
    check_probability(edge_prob, "edge probability")?;
    check_probability(extra_density, "list density")?;
    let mut rng = rng(seed);
    let full = gen_gnp(n, edge_prob, &mut rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in full.edges() {
        if deg[u] < r && deg[v] < r {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    let graph = Graph::from_edges(n, &edges)?;
    let mut candidates = graph.non_edges();
    candidates.shuffle(&mut rng);
    let planted = rng.gen_range(0..=k);
    let mut added = 0;
    for (u, v) in candidates {
        if added == planted {
            break;
        }
        if deg[u] < r && deg[v] < r {
            deg[u] += 1;
            deg[v] += 1;
            added += 1;
        }
    }
    let lists = (0..n)
        .map(|v| {
            (0..=r)
                .filter(|&d| d == deg[v] || rng.gen_bool(extra_density))
                .collect()
        })
        .collect();
    DceInstance::new(graph, k, DegreeListFunction::new(r, lists)?, OpKind::EdgeAddition)
}

/// A uniformly paired 3-regular simple graph, retrying rejected pairings.
pub fn gen_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::invalid(format!(
            "cubic graphs need an even vertex count of at least 4, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(&mut rng);
        let mut seen = HashSet::new();
        let ok = points.chunks(2).all(|pair| {
            let (u, v) = (pair[0], pair[1]);
            u != v && seen.insert(normalize(u, v))
        });
        if ok {
            let mut edges: Vec<Edge> = seen.into_iter().collect();
            edges.sort_unstable();
            return Graph::from_edges(n, &edges);
        }
    }
}

/// A reduction output on a generated source graph: a cubic graph for the
/// vertex cover and independent set reductions, `G(n, 1/2)` for the clique
/// reductions (with the greedy cover).
pub fn gen_from_reduction(kind: ReductionKind, n: usize, h: usize, seed: u64) -> Result<ReductionOutput> {
    let g = match kind {
        ReductionKind::VertexCover | ReductionKind::IndependentSet => gen_cubic(n, seed)?,
        ReductionKind::CliqueEdge | ReductionKind::CliqueVertex => gen_gnp(n, 0.5, &mut rng(seed)),
    };
    reduce(kind, &g, h, None)
}

/// Bit position of each unordered pair in an adjacency code.
fn pair_index(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        return usize::MAX;
                    }
                    let (a, b) = (u.min(v), u.max(v));
                    // Pairs (a, b) with a < b, enumerated row by row.
                    a * (2 * n - a - 1) / 2 + (b - a - 1)
                })
                .collect()
        })
        .collect()
}

/// Smallest adjacency code over all labelings that list vertices by
/// nonincreasing degree. The candidate labelings form an isomorphism-invariant
/// set, so isomorphic graphs get equal codes.
fn canonical_code(g: &Graph, pairs: &[Vec<usize>]) -> u64 {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    fn rec(
        g: &Graph,
        pairs: &[Vec<usize>],
        slot_degree: &[usize],
        order: &mut Vec<usize>,
        used: &mut [bool],
        code: u64,
        best: &mut u64,
    ) {
        let p = order.len();
        if p == g.n() {
            *best = (*best).min(code);
            return;
        }
        for v in 0..g.n() {
            if used[v] || g.degree(v) != slot_degree[p] {
                continue;
            }
            let mut c = code;
            for (q, &w) in order.iter().enumerate() {
                if g.has_edge(v, w) {
                    c |= 1 << pairs[q][p];
                }
            }
            used[v] = true;
            order.push(v);
            rec(g, pairs, slot_degree, order, used, c, best);
            order.pop();
            used[v] = false;
        }
    }

    let mut best = u64::MAX;
    rec(g, pairs, &slot_degree, &mut Vec::new(), &mut vec![false; n], 0, &mut best);
    best
}

/// One graph per isomorphism class on `n` vertices, built by attaching a new
/// vertex in every possible way to each class on `n - 1` vertices.
///
/// # Panics
///
/// If `n > 8`; the enumeration is meant for exhaustive tests.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    let mut level = vec![Graph::new(0)];
    for size in 1..=n {
        let pairs = pair_index(size);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<Edge> = g.edges().collect();
            for mask in 0u32..(1 << (size - 1)) {
                let mut edges = base.clone();
                edges.extend((0..size - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, size - 1)));
                let h = Graph::from_edges(size, &edges).expect("extension is simple");
                if seen.insert(canonical_code(&h, &pairs)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

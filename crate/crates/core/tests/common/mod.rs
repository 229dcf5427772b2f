//! Plain exhaustive oracles, written independently of the library searches.
#![allow(dead_code)]

use degcomp::dce::{DceInstance, OpKind};
use degcomp::{DegreeSequence, Edge, Graph};

/// Calls `f` on every subset of `0..n` with at most `max` elements, in order
/// of increasing size, until `f` returns true. Returns whether it did.
pub fn any_subset(n: usize, max: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            if rec(i + 1, n, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    (0..=max.min(n)).any(|size| rec(0, n, size, &mut Vec::new(), &mut f))
}

/// Size of a smallest solution, or `None` if none fits the budget.
pub fn dce_min_size(inst: &DceInstance) -> Option<usize> {
    let g = &inst.graph;
    let n = g.n();
    let deg = g.degrees();
    let mut best = None;
    match inst.op {
        OpKind::EdgeAddition | OpKind::EdgeDeletion => {
            let add = inst.op == OpKind::EdgeAddition;
            let cands: Vec<Edge> = if add { g.non_edges() } else { g.edges().collect() };
            any_subset(cands.len(), inst.k, |s| {
                let mut d = deg.clone();
                for &i in s {
                    let (u, v) = cands[i];
                    if add {
                        d[u] += 1;
                        d[v] += 1;
                    } else {
                        d[u] -= 1;
                        d[v] -= 1;
                    }
                }
                let ok = (0..n).all(|v| inst.tau.allows(v, d[v]));
                if ok {
                    best = Some(s.len());
                }
                ok
            });
        }
        OpKind::VertexDeletion => {
            any_subset(n, inst.k, |s| {
                let mut gone = vec![false; n];
                for &v in s {
                    gone[v] = true;
                }
                let ok = (0..n).filter(|&v| !gone[v]).all(|v| {
                    let d = g.neighbors(v).iter().filter(|&&w| !gone[w]).count();
                    inst.tau.allows(v, d)
                });
                if ok {
                    best = Some(s.len());
                }
                ok
            });
        }
    }
    best
}

/// Feasible total increases `0..=k_max`.
pub fn nce_totals(degrees: &[usize], phi: &[Vec<usize>], k_max: usize) -> Vec<bool> {
    let mut reach = vec![false; k_max + 1];
    reach[0] = true;
    for (d, set) in degrees.iter().zip(phi) {
        let mut next = vec![false; k_max + 1];
        for (j, _) in reach.iter().enumerate().filter(|(_, &b)| b) {
            for &x in set.iter().filter(|&&x| x >= *d) {
                if j + x - d <= k_max {
                    next[j + x - d] = true;
                }
            }
        }
        reach = next;
    }
    reach
}

/// Whether some subset of the edges has exactly degree `f(v)` everywhere.
pub fn has_f_factor(g: &Graph, f: &[usize]) -> bool {
    let edges: Vec<Edge> = g.edges().collect();
    assert!(edges.len() <= 24, "oracle is exponential in m");
    (0u32..1 << edges.len()).any(|mask| {
        let mut d = vec![0; g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d == f
    })
}

pub fn maximum_matching_size(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, used: &mut [bool]) -> usize {
        if v == g.n() {
            return 0;
        }
        if used[v] {
            return rec(g, v + 1, used);
        }
        used[v] = true;
        let mut best = rec(g, v + 1, used);
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + rec(g, v + 1, used));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    rec(g, 0, &mut vec![false; g.n()])
}

pub fn has_vertex_cover(g: &Graph, h: usize) -> bool {
    any_subset(g.n(), h, |s| g.edges().all(|(u, v)| s.contains(&u) || s.contains(&v)))
}

pub fn is_vertex_cover(g: &Graph, x: &[usize]) -> bool {
    g.edges().all(|(u, v)| x.contains(&u) || x.contains(&v))
}

pub fn has_independent_set(g: &Graph, h: usize) -> bool {
    if h > g.n() {
        return false;
    }
    let mut found = false;
    any_subset(g.n(), h, |s| {
        found = s.len() == h && s.iter().all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v)));
        found
    });
    found
}

pub fn has_clique(g: &Graph, h: usize) -> bool {
    if h > g.n() {
        return false;
    }
    let mut found = false;
    any_subset(g.n(), h, |s| {
        found = s.len() == h && s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)));
        found
    });
    found
}

/// Whether at most `k` new edges make `accept` hold on the degree sequence,
/// with no final degree above `cap`.
pub fn completable(g: &Graph, k: usize, cap: Option<usize>, accept: impl Fn(&DegreeSequence) -> bool) -> bool {
    let cands = g.non_edges();
    let deg = g.degrees();
    any_subset(cands.len(), k, |s| {
        let mut d = deg.clone();
        for &i in s {
            d[cands[i].0] += 1;
            d[cands[i].1] += 1;
        }
        cap.is_none_or(|c| d.iter().all(|&x| x <= c)) && accept(&DegreeSequence::from_unsorted(d))
    })
}

pub fn is_regular(seq: &DegreeSequence) -> bool {
    seq.values().windows(2).all(|w| w[0] == w[1])
}

pub fn is_anonymous(seq: &DegreeSequence, k: usize) -> bool {
    let v = seq.values();
    v.iter().all(|d| v.iter().filter(|&e| e == d).count() >= k)
}

/// Whether `edges` are new, distinct and raise each vertex by `demand`.
pub fn realizes(g: &Graph, edges: &[Edge], demand: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut d = vec![0; g.n()];
    for &(u, v) in edges {
        if u == v || g.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
            return false;
        }
        d[u] += 1;
        d[v] += 1;
    }
    d == demand
}

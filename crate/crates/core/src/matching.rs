//! Maximum matchings in general graphs and exact f-factors.
//!
//! The matching engine is Edmonds' blossom algorithm (augmenting paths with
//! blossom contraction via base relabelling), started from a greedy maximal
//! matching. f-factors are found through Tutte's gadget: a graph has an
//! f-factor iff the gadget graph has a perfect matching.

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    seen: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            seen: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.seen.fill(false);
        loop {
            a = self.base[a];
            self.seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from the exposed vertex `root`; returns the
    /// exposed endpoint reached, with the path encoded in `parent`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let w = self.mate[to];
                    self.used[w] = true;
                    self.queue.push(w);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy();
        // A vertex with no augmenting path now never gains one later.
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Mates of a maximum matching on raw adjacency lists (`usize::MAX` = exposed).
fn mates(adj: &[Vec<usize>]) -> Vec<usize> {
    Blossom::new(adj).run()
}

/// A maximum-cardinality matching of `g`.
pub fn max_matching(g: &Graph) -> Vec<Edge> {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let mate = mates(&adj);
    (0..g.n())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect()
}

/// Finds a spanning subgraph of `g` in which every vertex `v` has degree
/// exactly `f[v]`, or `None` if there is none.
///
/// Vertices with `f[v] = 0` are dropped together with their edges before the
/// gadget is built. For every remaining vertex `v` with `d` usable edges the
/// gadget has one stub per edge and `d - f[v]` fillers joined completely to
/// the stubs; the two stubs of an edge are adjacent. Edges whose stubs are
/// matched to each other form the factor.
///
/// # Panics
///
/// If `f.len() != g.n()`.
pub fn f_factor(g: &Graph, f: &[usize]) -> Option<Vec<Edge>> {
    assert_eq!(f.len(), g.n(), "demand vector length must equal vertex count");
    let n = g.n();
    if f.iter().sum::<usize>() % 2 == 1 {
        return None;
    }
    let active_edges: Vec<Edge> = g.edges().filter(|&(u, v)| f[u] > 0 && f[v] > 0).collect();
    let mut deg = vec![0usize; n];
    for &(u, v) in &active_edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    if (0..n).any(|v| f[v] > deg[v]) {
        return None;
    }
    if active_edges.is_empty() {
        return Some(Vec::new());
    }

    // Stubs of edge j are 2j (at its first endpoint) and 2j+1 (at its second).
    let stub_count = 2 * active_edges.len();
    let mut stubs_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, &(u, v)) in active_edges.iter().enumerate() {
        stubs_of[u].push(2 * j);
        stubs_of[v].push(2 * j + 1);
    }
    let filler_total: usize = (0..n).filter(|&v| f[v] > 0).map(|v| deg[v] - f[v]).sum();
    let total = stub_count + filler_total;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for j in 0..active_edges.len() {
        adj[2 * j].push(2 * j + 1);
        adj[2 * j + 1].push(2 * j);
    }
    let mut next = stub_count;
    for v in 0..n {
        if f[v] == 0 {
            continue;
        }
        for _ in 0..(deg[v] - f[v]) {
            let filler = next;
            next += 1;
            for &s in &stubs_of[v] {
                adj[filler].push(s);
                adj[s].push(filler);
            }
        }
    }

    let mate = mates(&adj);
    if mate.contains(&NONE) {
        return None;
    }
    let factor = active_edges
        .iter()
        .enumerate()
        .filter(|&(j, _)| mate[2 * j] == 2 * j + 1)
        .map(|(_, &(u, v))| normalize(u, v))
        .collect();
    Some(factor)
}

/// Sufficient condition for f-factor existence with demands in `1..=r`:
/// `min_degree >= n - r - 1` and `n >= (r + 1)^2`.
pub fn kt_condition_holds(n: usize, min_degree: usize, r: usize) -> Result<bool> {
    if r < 1 {
        return Err(Error::invalid("degree bound r must be at least 1"));
    }
    let dense = min_degree + r + 1 >= n;
    Ok(dense && n >= (r + 1) * (r + 1))
}

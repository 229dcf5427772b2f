//! Simple undirected graphs.
//!
//! A [`Graph`] stores one strictly sorted neighbor list per vertex. Vertices
//! are `0..n`. Values are immutable once built; every editing operation
//! returns a new graph.

use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Orders the endpoints of an edge.
pub fn normalize(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Vertex degrees sorted in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts an arbitrary tuple of degrees.
    pub fn from_unsorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Conflict(format!(
                    "duplicate edge {{{}, {}}}",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Builds a graph from already sorted, symmetric adjacency lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v)));
        Graph { adj, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum degree, 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// All vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            let mut it = self.adj[u].iter().peekable();
            for v in (u + 1)..n {
                while it.next_if(|&&w| w < v).is_some() {}
                if it.next_if(|&&w| w == v).is_none() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut it = self.adj[v].iter().peekable();
                (0..n)
                    .filter(|&w| {
                        if it.next_if(|&&x| x == w).is_some() {
                            false
                        } else {
                            w != v
                        }
                    })
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// The subgraph induced by `vs`. The returned map sends new index `i`
    /// to the original vertex `map[i]`; it follows the order of `vs`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in vs.iter().enumerate() {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range (n = {n})")));
            }
            if new_index[v] != usize::MAX {
                return Err(Error::invalid(format!("vertex {v} listed twice")));
            }
            new_index[v] = i;
        }
        let adj = vs
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_index[w] != usize::MAX).then_some(new_index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Ok((Graph::from_sorted_adjacency(adj), vs.to_vec()))
    }

    /// `G - vs`, with the map from new to old indices.
    pub fn remove_vertices(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut gone = vec![false; self.n()];
        for &v in vs {
            if v >= self.n() {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// `G + es`. Every pair must be a new edge between distinct vertices.
    pub fn add_edges(&self, es: &[Edge]) -> Result<Graph> {
        let n = self.n();
        let mut adj = self.adj.clone();
        let mut extra: Vec<Edge> = Vec::with_capacity(es.len());
        for &(u, v) in es {
            check_pair(n, u, v)?;
            if self.has_edge(u, v) {
                return Err(Error::Conflict(format!(
                    "edge {{{u}, {v}}} is already present"
                )));
            }
            extra.push(normalize(u, v));
        }
        extra.sort_unstable();
        if let Some(w) = extra.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Conflict(format!(
                "edge {{{}, {}}} added twice",
                w[0].0, w[0].1
            )));
        }
        for &(u, v) in &extra {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: self.m + extra.len(),
        })
    }

    /// `G - es`. Every pair must be a present edge, listed once.
    pub fn remove_edges(&self, es: &[Edge]) -> Result<Graph> {
        let n = self.n();
        let mut drop: Vec<Edge> = Vec::with_capacity(es.len());
        for &(u, v) in es {
            check_pair(n, u, v)?;
            if !self.has_edge(u, v) {
                return Err(Error::Conflict(format!("edge {{{u}, {v}}} is not present")));
            }
            drop.push(normalize(u, v));
        }
        drop.sort_unstable();
        if let Some(w) = drop.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Conflict(format!(
                "edge {{{}, {}}} removed twice",
                w[0].0, w[0].1
            )));
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, list)| {
                list.iter()
                    .copied()
                    .filter(|&v| drop.binary_search(&normalize(u, v)).is_err())
                    .collect()
            })
            .collect();
        Ok(Graph {
            adj,
            m: self.m - drop.len(),
        })
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::invalid(format!(
            "edge {{{u}, {v}}} has an endpoint out of range (n = {n})"
        )));
    }
    if u == v {
        return Err(Error::invalid(format!("self-loop at vertex {u}")));
    }
    Ok(())
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n(), self.m())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

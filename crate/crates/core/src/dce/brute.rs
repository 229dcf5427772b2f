//! Exhaustive minimum-cardinality search for all three edit operations.
//!
//! Edit sets are enumerated by increasing size. Two pruning rules keep this
//! fast without losing completeness: a vertex whose edit count has moved
//! past every admissible degree can never recover, and `s` more edits can
//! touch at most `2s` vertex degrees, so the summed distance of all vertices
//! to their nearest reachable admissible degree must not exceed that.

use crate::dce::{DceInstance, Edit, EditSolution, OpKind};
use crate::error::{Error, Result};
use crate::graph::Edge;

/// Guards for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Upper bound on the number of candidate edit sets, `sum_{i<=k} C(N, i)`.
    pub max_space: u128,
    /// Largest block set the degree-sequence search accepts.
    pub max_block_set: usize,
    /// Increment vectors the generic number-sequence search may enumerate.
    pub max_nsc_vectors: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_space: 10_000_000_000,
            max_block_set: 256,
            max_nsc_vectors: 1_000_000,
        }
    }
}

impl SearchLimits {
    pub(crate) fn check_space(&self, candidates: usize, k: usize, what: &str) -> Result<()> {
        let space = search_space(candidates, k);
        if space > self.max_space {
            return Err(Error::ResourceLimit(format!(
                "{what}: {space} candidate sets ({candidates} candidates, budget {k}) exceed the limit of {}",
                self.max_space
            )));
        }
        Ok(())
    }
}

/// `sum_{i=0}^{min(k, n)} C(n, i)`, saturating.
pub(crate) fn search_space(n: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for i in 0..=k.min(n) {
        total = total.saturating_add(term);
        term = term.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    total
}

/// Minimum-cardinality solution within budget, or `None`.
pub fn brute_force_solve(inst: &DceInstance, limits: &SearchLimits) -> Result<Option<EditSolution>> {
    match inst.op {
        OpKind::EdgeAddition => {
            let cands = inst.graph.non_edges();
            limits.check_space(cands.len(), inst.k, "edge-addition search")?;
            Ok(EdgeSearch::new(inst, cands, true)
                .solve(inst.k)
                .map(|es| EditSolution {
                    edits: es.into_iter().map(|(u, v)| Edit::AddEdge(u, v)).collect(),
                }))
        }
        OpKind::EdgeDeletion => {
            let cands: Vec<Edge> = inst.graph.edges().collect();
            limits.check_space(cands.len(), inst.k, "edge-deletion search")?;
            Ok(EdgeSearch::new(inst, cands, false)
                .solve(inst.k)
                .map(|es| EditSolution {
                    edits: es.into_iter().map(|(u, v)| Edit::DeleteEdge(u, v)).collect(),
                }))
        }
        OpKind::VertexDeletion => {
            limits.check_space(inst.n(), inst.k, "vertex-deletion search")?;
            Ok(VertexSearch::new(inst).solve(inst.k).map(|vs| EditSolution {
                edits: vs.into_iter().map(Edit::DeleteVertex).collect(),
            }))
        }
    }
}

const INF: usize = usize::MAX;

struct EdgeSearch {
    cands: Vec<Edge>,
    /// `reach[v][x]`: least `y >= x` such that shifting `v` by `y` edits lands on its list.
    reach: Vec<Vec<usize>>,
    shift: Vec<usize>,
    need_total: usize,
    dead: usize,
    chosen: Vec<usize>,
}

impl EdgeSearch {
    fn new(inst: &DceInstance, cands: Vec<Edge>, adding: bool) -> Self {
        let n = inst.n();
        let k = inst.k;
        let reach: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let deg = inst.graph.degree(v);
                let mut offsets: Vec<usize> = inst
                    .tau
                    .list(v)
                    .iter()
                    .filter_map(|&d| {
                        if adding {
                            d.checked_sub(deg)
                        } else {
                            deg.checked_sub(d)
                        }
                    })
                    .collect();
                offsets.sort_unstable();
                (0..=k)
                    .map(|x| offsets.iter().copied().find(|&y| y >= x).unwrap_or(INF))
                    .collect()
            })
            .collect();
        let mut s = EdgeSearch {
            cands,
            reach,
            shift: vec![0; n],
            need_total: 0,
            dead: 0,
            chosen: Vec::new(),
        };
        for v in 0..n {
            match s.need(v) {
                INF => s.dead += 1,
                d => s.need_total += d,
            }
        }
        s
    }

    fn need(&self, v: usize) -> usize {
        match self.reach[v][self.shift[v]] {
            INF => INF,
            y => y - self.shift[v],
        }
    }

    fn bump(&mut self, v: usize, up: bool) {
        match self.need(v) {
            INF => self.dead -= 1,
            d => self.need_total -= d,
        }
        if up {
            self.shift[v] += 1;
        } else {
            self.shift[v] -= 1;
        }
        match self.need(v) {
            INF => self.dead += 1,
            d => self.need_total += d,
        }
    }

    fn dfs(&mut self, pos: usize, remaining: usize) -> bool {
        if self.dead > 0 || self.need_total > 2 * remaining {
            return false;
        }
        if remaining == 0 {
            return self.need_total == 0;
        }
        if self.cands.len() - pos < remaining {
            return false;
        }
        for i in pos..=(self.cands.len() - remaining) {
            let (u, v) = self.cands[i];
            self.bump(u, true);
            self.bump(v, true);
            self.chosen.push(i);
            if self.dfs(i + 1, remaining - 1) {
                return true;
            }
            self.chosen.pop();
            self.bump(u, false);
            self.bump(v, false);
        }
        false
    }

    fn solve(mut self, k: usize) -> Option<Vec<Edge>> {
        for size in 0..=k.min(self.cands.len()) {
            if self.dfs(0, size) {
                return Some(self.chosen.iter().map(|&i| self.cands[i]).collect());
            }
        }
        None
    }
}

struct VertexSearch<'a> {
    inst: &'a DceInstance,
    deg: Vec<usize>,
    deleted: Vec<bool>,
    /// Vertices whose closed neighborhood has its largest index at `pos`.
    settled_at: Vec<Vec<usize>>,
    chosen: Vec<usize>,
}

impl<'a> VertexSearch<'a> {
    fn new(inst: &'a DceInstance) -> Self {
        let n = inst.n();
        let mut settled_at = vec![Vec::new(); n];
        for v in 0..n {
            let last = inst.graph.neighbors(v).last().map_or(v, |&w| w.max(v));
            settled_at[last].push(v);
        }
        VertexSearch {
            inst,
            deg: inst.graph.degrees(),
            deleted: vec![false; n],
            settled_at,
            chosen: Vec::new(),
        }
    }

    fn settled_ok(&self, pos: usize) -> bool {
        self.settled_at[pos]
            .iter()
            .all(|&u| self.deleted[u] || self.inst.tau.allows(u, self.deg[u]))
    }

    fn rec(&mut self, pos: usize, remaining: usize) -> bool {
        let n = self.inst.n();
        if pos == n {
            return remaining == 0;
        }
        if n - pos < remaining {
            return false;
        }
        if remaining > 0 {
            self.deleted[pos] = true;
            for &w in self.inst.graph.neighbors(pos) {
                self.deg[w] -= 1;
            }
            self.chosen.push(pos);
            if self.settled_ok(pos) && self.rec(pos + 1, remaining - 1) {
                return true;
            }
            self.chosen.pop();
            for &w in self.inst.graph.neighbors(pos) {
                self.deg[w] += 1;
            }
            self.deleted[pos] = false;
        }
        self.settled_ok(pos) && self.rec(pos + 1, remaining)
    }

    fn solve(mut self, k: usize) -> Option<Vec<usize>> {
        for size in 0..=k.min(self.inst.n()) {
            if self.rec(0, size) {
                return Some(self.chosen);
            }
        }
        None
    }
}

//! Degree constraint editing: instances, edits and the edge-addition kernel.

mod brute;
mod kernel;

pub use brute::{brute_force_solve, SearchLimits};
pub(crate) use kernel::require_addition as kernel_require_addition;
pub use kernel::{core_set, kernelize_kr, rule2_check, solve_e_plus, KrKernel, TrivialNo};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph};

/// Per-vertex sets of admissible degrees, all within `0..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeListFunction {
    r: usize,
    lists: Vec<Vec<usize>>,
}

impl DegreeListFunction {
    /// Lists are sorted and deduplicated; any value above `r` is rejected.
    pub fn new(r: usize, lists: Vec<Vec<usize>>) -> Result<Self> {
        let mut lists = lists;
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if let Some(&d) = list.last() {
                if d > r {
                    return Err(Error::invalid(format!(
                        "degree {d} in the list of vertex {v} exceeds r = {r}"
                    )));
                }
            }
        }
        Ok(DegreeListFunction { r, lists })
    }

    /// The same list for each of `n` vertices.
    pub fn uniform(n: usize, r: usize, list: &[usize]) -> Result<Self> {
        Self::new(r, vec![list.to_vec(); n])
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn allows(&self, v: usize, d: usize) -> bool {
        self.lists[v].binary_search(&d).is_ok()
    }

    /// Largest admissible degree of `v`; `None` for an empty list.
    pub fn max(&self, v: usize) -> Option<usize> {
        self.lists[v].last().copied()
    }

    /// Total number of listed degrees, the encoding size used for linear-time bounds.
    pub fn encoding_size(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>().max(self.lists.len())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    #[serde(rename = "e+")]
    EdgeAddition,
    #[serde(rename = "e-")]
    EdgeDeletion,
    #[serde(rename = "v-")]
    VertexDeletion,
}

impl OpKind {
    pub fn token(self) -> &'static str {
        match self {
            OpKind::EdgeAddition => "e+",
            OpKind::EdgeDeletion => "e-",
            OpKind::VertexDeletion => "v-",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "e+" => Some(OpKind::EdgeAddition),
            "e-" => Some(OpKind::EdgeDeletion),
            "v-" => Some(OpKind::VertexDeletion),
            _ => None,
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DceInstance {
    pub graph: Graph,
    pub k: usize,
    pub tau: DegreeListFunction,
    pub op: OpKind,
}

impl DceInstance {
    pub fn new(graph: Graph, k: usize, tau: DegreeListFunction, op: OpKind) -> Result<Self> {
        if tau.len() != graph.n() {
            return Err(Error::invalid(format!(
                "degree list function covers {} vertices but the graph has {}",
                tau.len(),
                graph.n()
            )));
        }
        Ok(DceInstance { graph, k, tau, op })
    }

    pub fn r(&self) -> usize {
        self.tau.r()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_satisfied(&self, v: usize) -> bool {
        self.tau.allows(v, self.graph.degree(v))
    }

    /// Vertices whose current degree is not on their list.
    pub fn unsatisfied_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.is_satisfied(v)).collect()
    }

    /// `{i in 0..=r : deg(v) + i in tau(v)}`.
    pub fn vertex_types(&self, v: usize) -> Vec<usize> {
        let deg = self.graph.degree(v);
        self.tau
            .list(v)
            .iter()
            .filter(|&&d| d >= deg)
            .map(|&d| d - deg)
            .collect()
    }

    /// Deletes `vs` and shifts every survivor's list down by the number of
    /// neighbors it lost, dropping values that would become negative.
    /// Returns the reduced instance and the map from new to old indices.
    pub fn safely_remove(&self, vs: &[usize]) -> Result<(DceInstance, Vec<usize>)> {
        let n = self.n();
        let mut removed = vec![false; n];
        for &v in vs {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range (n = {n})")));
            }
            removed[v] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        let (graph, map) = self.graph.induced_subgraph(&keep)?;
        let lists = keep
            .iter()
            .map(|&u| {
                let lost = self.graph.degree(u) - graph_degree_in(&removed, &self.graph, u);
                self.tau
                    .list(u)
                    .iter()
                    .filter(|&&d| d >= lost)
                    .map(|&d| d - lost)
                    .collect()
            })
            .collect();
        let tau = DegreeListFunction::new(self.r(), lists)?;
        Ok((
            DceInstance {
                graph,
                k: self.k,
                tau,
                op: self.op,
            },
            map,
        ))
    }
}

fn graph_degree_in(removed: &[bool], g: &Graph, u: usize) -> usize {
    g.neighbors(u).iter().filter(|&&w| !removed[w]).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edit {
    AddEdge(usize, usize),
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
}

impl Edit {
    fn kind(self) -> OpKind {
        match self {
            Edit::AddEdge(..) => OpKind::EdgeAddition,
            Edit::DeleteEdge(..) => OpKind::EdgeDeletion,
            Edit::DeleteVertex(_) => OpKind::VertexDeletion,
        }
    }

    /// The same edit with vertices renamed through `map`.
    pub fn relabel(self, map: &[usize]) -> Edit {
        match self {
            Edit::AddEdge(u, v) => {
                let (a, b) = normalize(map[u], map[v]);
                Edit::AddEdge(a, b)
            }
            Edit::DeleteEdge(u, v) => {
                let (a, b) = normalize(map[u], map[v]);
                Edit::DeleteEdge(a, b)
            }
            Edit::DeleteVertex(v) => Edit::DeleteVertex(map[v]),
        }
    }
}

/// An ordered list of edits of a single kind.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EditSolution {
    pub edits: Vec<Edit>,
}

impl EditSolution {
    pub fn empty() -> Self {
        EditSolution { edits: Vec::new() }
    }

    pub fn additions(edges: &[Edge]) -> Self {
        EditSolution {
            edits: edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = normalize(u, v);
                    Edit::AddEdge(a, b)
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.edits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }

    pub fn relabel(&self, map: &[usize]) -> EditSolution {
        EditSolution {
            edits: self.edits.iter().map(|e| e.relabel(map)).collect(),
        }
    }

    /// Added edges, in order.
    pub fn added_edges(&self) -> Vec<Edge> {
        self.edits
            .iter()
            .filter_map(|e| match *e {
                Edit::AddEdge(u, v) => Some((u, v)),
                _ => None,
            })
            .collect()
    }

    /// Applies the edits to `g`. Returns the edited graph and, for vertex
    /// deletions, the map from surviving to original indices.
    pub fn apply(&self, g: &Graph) -> Result<(Graph, Vec<usize>)> {
        let mut add = Vec::new();
        let mut del = Vec::new();
        let mut rm = Vec::new();
        for e in &self.edits {
            match *e {
                Edit::AddEdge(u, v) => add.push((u, v)),
                Edit::DeleteEdge(u, v) => del.push((u, v)),
                Edit::DeleteVertex(v) => rm.push(v),
            }
        }
        let mut sorted_rm = rm.clone();
        sorted_rm.sort_unstable();
        if sorted_rm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Conflict("a vertex is deleted twice".into()));
        }
        let touches_rm = |&(u, v): &Edge| sorted_rm.binary_search(&u).is_ok() || sorted_rm.binary_search(&v).is_ok();
        if add.iter().chain(del.iter()).any(touches_rm) {
            return Err(Error::Conflict(
                "an edited edge is incident to a deleted vertex".into(),
            ));
        }
        let g = g.add_edges(&add)?.remove_edges(&del)?;
        g.remove_vertices(&rm)
    }

    /// Checks every requirement of a solution of `inst`: edit kind, budget,
    /// consistency and the degree constraints of all surviving vertices.
    pub fn validate(&self, inst: &DceInstance) -> Result<()> {
        if let Some(e) = self.edits.iter().find(|e| e.kind() != inst.op) {
            return Err(Error::invalid(format!(
                "edit {e:?} does not match operation {}",
                inst.op
            )));
        }
        if self.len() > inst.k {
            return Err(Error::invalid(format!(
                "{} edits exceed the budget k = {}",
                self.len(),
                inst.k
            )));
        }
        let (g, map) = self.apply(&inst.graph)?;
        for (i, &v) in map.iter().enumerate() {
            if !inst.tau.allows(v, g.degree(i)) {
                return Err(Error::invalid(format!(
                    "vertex {v} ends with degree {} which is not in its list {:?}",
                    g.degree(i),
                    inst.tau.list(v)
                )));
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, inst: &DceInstance) -> bool {
        self.validate(inst).is_ok()
    }
}

//! Hardness constructions as instance transformers.
//!
//! Each function maps a source instance (vertex cover, independent set or
//! clique) to an equivalent DCE instance and records, for every constructed
//! vertex, what it stands for.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::dce::{DceInstance, DegreeListFunction, OpKind};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// What a constructed vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// The source vertex with this index.
    Original(usize),
    /// The extra vertex collecting one edge per independent-set vertex.
    Collector,
    /// Source vertex `source` inside copy `copy`.
    Copy { copy: usize, source: usize },
    /// Inner node of the selector tree, by heap index.
    TreeNode(usize),
    /// The tree leaf attached to copy `i`.
    Leaf(usize),
    /// The vertex joining leaf `i`, copy `i` and clique `i`.
    Connector(usize),
    /// A member of the frozen clique attached to copy `i`.
    CliqueMember(usize),
    /// The single vertex of a constant-size no-instance.
    Placeholder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: DceInstance,
    pub roles: Vec<Role>,
}

/// Source problem of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    /// Vertex cover to vertex deletion.
    VertexCover,
    /// Independent set on cubic graphs to edge addition.
    IndependentSet,
    /// Clique to edge deletion.
    CliqueEdge,
    /// Clique to vertex deletion.
    CliqueVertex,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::VertexCover => "vc",
            ReductionKind::IndependentSet => "is",
            ReductionKind::CliqueEdge => "clique-e",
            ReductionKind::CliqueVertex => "clique-v",
        })
    }
}

impl FromStr for ReductionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "vc" => Ok(ReductionKind::VertexCover),
            "is" => Ok(ReductionKind::IndependentSet),
            "clique-e" => Ok(ReductionKind::CliqueEdge),
            "clique-v" => Ok(ReductionKind::CliqueVertex),
            _ => Err(format!("unknown reduction `{s}` (vc, is, clique-e, clique-v)")),
        }
    }
}

/// Dispatches to the matching construction. `cover` is only used by the
/// clique reductions; without it a greedy cover is computed.
pub fn reduce(
    kind: ReductionKind,
    g: &Graph,
    h: usize,
    cover: Option<&[usize]>,
) -> Result<ReductionOutput> {
    match kind {
        ReductionKind::VertexCover => vc_to_dce_vminus(g, h),
        ReductionKind::IndependentSet => is_to_dce_eplus(g, h),
        ReductionKind::CliqueEdge => clique_to_dce_eminus(g, h, cover),
        ReductionKind::CliqueVertex => clique_to_dce_vminus(g, h, cover),
    }
}

fn binom2(h: usize) -> usize {
    h * h.saturating_sub(1) / 2
}

/// `ceil(log2(l))`, with `ceil_log2(0) = ceil_log2(1) = 0`.
pub fn ceil_log2(l: usize) -> usize {
    if l <= 1 {
        0
    } else {
        (usize::BITS - (l - 1).leading_zeros()) as usize
    }
}

fn build(
    n: usize,
    edges: &[Edge],
    k: usize,
    lists: Vec<Vec<usize>>,
    op: OpKind,
    roles: Vec<Role>,
) -> Result<ReductionOutput> {
    let r = lists.iter().flatten().copied().max().unwrap_or(0);
    let instance = DceInstance::new(
        Graph::from_edges(n, edges)?,
        k,
        DegreeListFunction::new(r, lists)?,
        op,
    )?;
    debug_assert_eq!(roles.len(), n);
    Ok(ReductionOutput { instance, roles })
}

/// One vertex that wants degree 1 and no budget.
fn canonical_no(op: OpKind) -> Result<ReductionOutput> {
    build(1, &[], 0, vec![vec![1]], op, vec![Role::Placeholder])
}

/// Deleting at most `h` vertices so that every remaining degree is 0 is
/// exactly finding a vertex cover of size at most `h`.
pub fn vc_to_dce_vminus(g: &Graph, h: usize) -> Result<ReductionOutput> {
    let edges: Vec<Edge> = g.edges().collect();
    build(
        g.n(),
        &edges,
        h,
        vec![vec![0]; g.n()],
        OpKind::VertexDeletion,
        (0..g.n()).map(Role::Original).collect(),
    )
}

/// Cubic graph with an independent set of size `h` to edge addition: a new
/// vertex wants degree `h`, every original vertex degree 3 or `3 + h`, and
/// the budget is `C(h,2) + h`.
pub fn is_to_dce_eplus(g: &Graph, h: usize) -> Result<ReductionOutput> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::invalid(format!(
            "graph is not cubic: vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    if h == 0 {
        return Err(Error::invalid("independent set size must be at least 1"));
    }
    let n = g.n();
    let edges: Vec<Edge> = g.edges().collect();
    let mut lists = vec![vec![3, 3 + h]; n];
    lists.push(vec![h]);
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    roles.push(Role::Collector);
    build(n + 1, &edges, binom2(h) + h, lists, OpKind::EdgeAddition, roles)
}

/// Endpoints of a greedy maximal matching, sorted. At most twice the size
/// of a minimum vertex cover.
pub fn approx_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut matched = vec![false; g.n()];
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
        }
    }
    (0..g.n()).filter(|&v| matched[v]).collect()
}

fn cover_mask(g: &Graph, x: &[usize]) -> Result<Vec<bool>> {
    let mut in_x = vec![false; g.n()];
    for &v in x {
        if v >= g.n() {
            return Err(Error::invalid(format!("vertex {v} out of range (n = {})", g.n())));
        }
        in_x[v] = true;
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !in_x[u] && !in_x[v]) {
        return Err(Error::invalid(format!(
            "not a vertex cover: edge {{{u}, {v}}} is uncovered"
        )));
    }
    Ok(in_x)
}

/// Vertices outside the cover `x`, grouped by their neighborhood in `x`.
/// Classes are ordered by their smallest member; members are sorted.
pub fn twin_classes(g: &Graph, x: &[usize]) -> Result<Vec<Vec<usize>>> {
    let in_x = cover_mask(g, x)?;
    let mut classes: BTreeMap<&[usize], usize> = BTreeMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in (0..g.n()).filter(|&v| !in_x[v]) {
        // Outside a cover every neighbor lies in the cover.
        let key = g.neighbors(v);
        let idx = *classes.entry(key).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[idx].push(v);
    }
    Ok(out)
}

struct CliqueSetup {
    x: Vec<usize>,
    /// Source vertices of every copy, sorted.
    copies: Vec<Vec<usize>>,
}

/// Shared preconditions. `None` means the constant no-instance applies.
fn clique_setup(g: &Graph, h: usize, x: Option<&[usize]>) -> Result<Option<CliqueSetup>> {
    if h == 0 {
        return Err(Error::invalid("clique size must be at least 1"));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < h) {
        return Err(Error::invalid(format!(
            "vertex {v} has degree {} < h = {h}",
            g.degree(v)
        )));
    }
    let mut x = match x {
        Some(x) => x.to_vec(),
        None => approx_vertex_cover(g),
    };
    x.sort_unstable();
    x.dedup();
    let classes = twin_classes(g, &x)?;
    if h > x.len() + 1 {
        return Ok(None);
    }
    let copies = if classes.is_empty() {
        vec![x.clone()]
    } else {
        classes
            .iter()
            .map(|class| {
                let mut c = x.clone();
                c.push(class[0]);
                c.sort_unstable();
                c
            })
            .collect()
    };
    Ok(Some(CliqueSetup { x, copies }))
}

/// Adds the copies `G[X + v_i]` as consecutive blocks of vertices and
/// returns, per copy, the constructed indices.
fn add_copies(
    g: &Graph,
    copies: &[Vec<usize>],
    edges: &mut Vec<Edge>,
    roles: &mut Vec<Role>,
) -> Vec<Vec<usize>> {
    copies
        .iter()
        .enumerate()
        .map(|(i, members)| {
            let base = roles.len();
            roles.extend(members.iter().map(|&s| Role::Copy { copy: i, source: s }));
            for (a, &sa) in members.iter().enumerate() {
                for (b, &sb) in members.iter().enumerate().skip(a + 1) {
                    if g.has_edge(sa, sb) {
                        edges.push((base + a, base + b));
                    }
                }
            }
            (base..base + members.len()).collect()
        })
        .collect()
}

fn degrees_of(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// Clique to edge deletion. One copy of `G[X + v_i]` per twin class, a
/// full binary selector tree whose `l` leaves each see a whole copy, and
/// lists that allow deleting nothing or exactly an `h`-clique with its
/// leaf edges plus one root-to-leaf path. Budget `C(h,2) + h + ceil(log l)`.
///
/// With a single copy there is no tree; the lone leaf is forced to drop `h`
/// of its edges instead.
pub fn clique_to_dce_eminus(g: &Graph, h: usize, x: Option<&[usize]>) -> Result<ReductionOutput> {
    let Some(setup) = clique_setup(g, h, x)? else {
        return canonical_no(OpKind::EdgeDeletion);
    };
    let l = setup.copies.len();
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    let copy_vertices = add_copies(g, &setup.copies, &mut edges, &mut roles);

    // Heap layout: node j has children 2j+1, 2j+2; nodes l-1..2l-1 are the leaves.
    let tree_size = 2 * l - 1;
    let tree_base = roles.len();
    for j in 0..tree_size {
        roles.push(if j + 1 >= l { Role::Leaf(j + 1 - l) } else { Role::TreeNode(j) });
        if j > 0 {
            edges.push((tree_base + (j - 1) / 2, tree_base + j));
        }
    }
    let leaf = |i: usize| tree_base + l - 1 + i;
    for (i, vs) in copy_vertices.iter().enumerate() {
        edges.extend(vs.iter().map(|&v| (v, leaf(i))));
    }

    let n = roles.len();
    let deg = degrees_of(n, &edges);
    let shift = |d: usize, by: usize| d.checked_sub(by);
    let lists: Vec<Vec<usize>> = (0..n)
        .map(|v| match roles[v] {
            Role::Copy { .. } => [Some(deg[v]), shift(deg[v], h)].into_iter().flatten().collect(),
            Role::Leaf(_) if l == 1 => shift(deg[v], h).into_iter().collect(),
            Role::Leaf(_) => [Some(deg[v]), shift(deg[v], h + 1)].into_iter().flatten().collect(),
            Role::TreeNode(0) => vec![1],
            Role::TreeNode(_) => vec![1, 3],
            _ => unreachable!("no other roles in this construction"),
        })
        .collect();
    let k = binom2(h) + h + ceil_log2(l);
    build(n, &edges, k, lists, OpKind::EdgeDeletion, roles)
}

/// Clique to vertex deletion. Copies as for edge deletion; the selector tree
/// has its root removed up front, siblings are adjacent, inner nodes want
/// degree 2 or 4 and leaves 1 or 3. Each leaf `u_i` reaches its copy through
/// a connector `u_i'` that also sees a frozen clique `C_i` larger than the
/// budget, so the connector can never be deleted. Budget
/// `ceil(log l) + |X| + 1 - h`.
///
/// With a single copy there is no tree and the connector is forced to lose
/// all but `h` copy neighbors.
pub fn clique_to_dce_vminus(g: &Graph, h: usize, x: Option<&[usize]>) -> Result<ReductionOutput> {
    let Some(setup) = clique_setup(g, h, x)? else {
        return canonical_no(OpKind::VertexDeletion);
    };
    let l = setup.copies.len();
    let k = ceil_log2(l) + setup.x.len() + 1 - h;
    let clique_size = (setup.x.len() * setup.x.len()).max(k + 1);
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    let copy_vertices = add_copies(g, &setup.copies, &mut edges, &mut roles);

    let mut connectors = Vec::with_capacity(l);
    for (i, vs) in copy_vertices.iter().enumerate() {
        let c = roles.len();
        roles.push(Role::Connector(i));
        connectors.push(c);
        edges.extend(vs.iter().map(|&v| (v, c)));
        let base = roles.len();
        roles.extend(std::iter::repeat_n(Role::CliqueMember(i), clique_size));
        for a in base..base + clique_size {
            edges.push((a, c));
            edges.extend((a + 1..base + clique_size).map(|b| (a, b)));
        }
    }

    if l >= 2 {
        // Heap nodes 1..2l-1; node 0 is the removed root.
        let tree_base = roles.len();
        let node = |j: usize| tree_base + j - 1;
        for j in 1..2 * l - 1 {
            roles.push(if j + 1 >= l { Role::Leaf(j + 1 - l) } else { Role::TreeNode(j) });
            let parent = (j - 1) / 2;
            if parent > 0 {
                edges.push((node(parent), node(j)));
            }
            if j % 2 == 0 {
                edges.push((node(j - 1), node(j)));
            }
        }
        for (i, &c) in connectors.iter().enumerate() {
            edges.push((node(l - 1 + i), c));
        }
    }

    let n = roles.len();
    let deg = degrees_of(n, &edges);
    let lists: Vec<Vec<usize>> = (0..n)
        .map(|v| match roles[v] {
            Role::Copy { .. } => vec![deg[v], h],
            Role::Connector(_) if l == 1 => vec![clique_size + h],
            Role::Connector(_) => vec![deg[v], clique_size + h],
            Role::CliqueMember(_) => vec![deg[v]],
            Role::TreeNode(_) => vec![2, 4],
            Role::Leaf(_) => vec![1, 3],
            _ => unreachable!("no other roles in this construction"),
        })
        .collect();
    build(n, &edges, k, lists, OpKind::VertexDeletion, roles)
}

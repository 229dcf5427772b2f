//! Degree sequence completion: add at most `k` edges so that the degree
//! sequence fulfills a tuple property.
//!
//! Two routes are provided. The block-set search enumerates edge sets inside
//! a bounded vertex subset that any solution can be rerouted into. When a
//! degree bound `delta'` for the completed graph is known, large budgets are
//! first handled numerically: a completion of the degree numbers with total
//! `2k'` for `k' >= delta'(delta'+1)^2` is always realizable, and otherwise
//! `k` can be clamped to that threshold.

mod anonymity;

pub use anonymity::{anonymity_fulfills, anonymity_nsc};

use std::fmt;

use crate::dce::SearchLimits;
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Edge, Graph};
use crate::winwin::realize_demands;

/// A property of degree sequences.
pub trait Property: fmt::Debug + Send + Sync {
    fn fulfills(&self, seq: &DegreeSequence) -> bool;

    /// A bespoke solver for the number problem: increments `x` with
    /// `sum x = target`, `d_i + x_i <= delta` and a fulfilling completion.
    /// The outer `None` means no solver is available.
    fn solve_nsc(&self, _degrees: &[usize], _target: usize, _delta: usize) -> Option<Option<Vec<usize>>> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinProperty {
    /// All degrees equal.
    Regular,
    /// Every occurring degree occurs at least this many times.
    Anonymity(usize),
    /// At least `l` entries are `>= l`.
    HIndex(usize),
    /// Every occurring degree occurs exactly `l` times.
    Balanced(usize),
}

impl fmt::Display for BuiltinProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinProperty::Regular => write!(f, "regular"),
            BuiltinProperty::Anonymity(k) => write!(f, "anon {k}"),
            BuiltinProperty::HIndex(l) => write!(f, "hindex {l}"),
            BuiltinProperty::Balanced(l) => write!(f, "balanced {l}"),
        }
    }
}

fn runs(values: &[usize]) -> impl Iterator<Item = usize> + '_ {
    let mut i = 0;
    std::iter::from_fn(move || {
        if i >= values.len() {
            return None;
        }
        let run = values[i..].iter().take_while(|&&d| d == values[i]).count();
        i += run;
        Some(run)
    })
}

fn regular_nsc(degrees: &[usize], target: usize, delta: usize) -> Option<Vec<usize>> {
    let Some(&top) = degrees.iter().max() else {
        return (target == 0).then(Vec::new);
    };
    let base: usize = degrees.iter().sum();
    (top..=delta)
        .find(|&c| c * degrees.len() - base == target)
        .map(|c| degrees.iter().map(|&d| c - d).collect())
}

impl Property for BuiltinProperty {
    fn fulfills(&self, seq: &DegreeSequence) -> bool {
        let values = seq.values();
        match *self {
            BuiltinProperty::Regular => values.windows(2).all(|w| w[0] == w[1]),
            BuiltinProperty::Anonymity(k) => anonymity_fulfills(seq, k),
            BuiltinProperty::HIndex(l) => values.iter().filter(|&&d| d >= l).count() >= l,
            BuiltinProperty::Balanced(l) => runs(values).all(|run| run == l),
        }
    }

    fn solve_nsc(&self, degrees: &[usize], target: usize, delta: usize) -> Option<Option<Vec<usize>>> {
        match *self {
            BuiltinProperty::Regular => Some(regular_nsc(degrees, target, delta)),
            BuiltinProperty::Anonymity(k) => Some(anonymity_nsc(degrees, k, target, delta)),
            BuiltinProperty::HIndex(_) | BuiltinProperty::Balanced(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DscInstance {
    pub graph: Graph,
    pub k: usize,
    pub property: BuiltinProperty,
    pub delta_prime: Option<usize>,
}

impl DscInstance {
    pub fn new(
        graph: Graph,
        k: usize,
        property: BuiltinProperty,
        delta_prime: Option<usize>,
    ) -> Result<Self> {
        if let Some(dp) = delta_prime {
            if dp < graph.max_degree() {
                return Err(Error::invalid(format!(
                    "degree bound {dp} is below the current maximum degree {}",
                    graph.max_degree()
                )));
            }
        }
        Ok(DscInstance {
            graph,
            k,
            property,
            delta_prime,
        })
    }

    /// Whether adding `edges` yields a fulfilling degree sequence within the
    /// budget and the optional degree bound.
    pub fn accepts(&self, edges: &[Edge]) -> bool {
        if edges.len() > self.k {
            return false;
        }
        let Ok(g) = self.graph.add_edges(edges) else {
            return false;
        };
        if self.delta_prime.is_some_and(|dp| g.max_degree() > dp) {
            return false;
        }
        self.property.fulfills(&g.degree_sequence())
    }
}

/// `D_G(d)`, the vertices of degree exactly `d`.
pub fn block(g: &Graph, d: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == d).collect()
}

/// The lowest-indexed `min(alpha, |D_G(d)|)` vertices of every block
/// `d = 0..=Delta`, with `alpha = (Delta + 2)k`. Sorted.
pub fn block_set(g: &Graph, k: usize) -> Vec<usize> {
    let alpha = g.max_degree().saturating_add(2).saturating_mul(k);
    let mut taken = vec![0usize; g.max_degree() + 1];
    (0..g.n())
        .filter(|&v| {
            let d = g.degree(v);
            let keep = taken[d] < alpha;
            taken[d] += 1;
            keep
        })
        .collect()
}

struct BlockSearch<'a> {
    property: &'a dyn Property,
    cap: Option<usize>,
    cands: Vec<Edge>,
    deg: Vec<usize>,
    chosen: Vec<usize>,
}

impl BlockSearch<'_> {
    fn dfs(&mut self, pos: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return self
                .property
                .fulfills(&DegreeSequence::from_unsorted(self.deg.clone()));
        }
        for i in pos..=(self.cands.len() - remaining) {
            let (u, v) = self.cands[i];
            if self
                .cap
                .is_some_and(|c| self.deg[u] >= c || self.deg[v] >= c)
            {
                continue;
            }
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push(i);
            if self.dfs(i + 1, remaining - 1) {
                return true;
            }
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        false
    }
}

/// Smallest edge set inside the block set whose addition fulfills the
/// property, never raising a degree above `cap`.
pub fn block_set_search(
    g: &Graph,
    k: usize,
    property: &dyn Property,
    cap: Option<usize>,
    limits: &SearchLimits,
) -> Result<Option<Vec<Edge>>> {
    let c = block_set(g, k);
    if c.len() > limits.max_block_set {
        return Err(Error::ResourceLimit(format!(
            "block set has {} vertices, limit is {}",
            c.len(),
            limits.max_block_set
        )));
    }
    let (sub, map) = g.induced_subgraph(&c)?;
    let cands: Vec<Edge> = sub
        .non_edges()
        .into_iter()
        .map(|(a, b)| (map[a], map[b]))
        .collect();
    limits.check_space(cands.len(), k, "block-set search")?;
    let mut search = BlockSearch {
        property,
        cap,
        deg: g.degrees(),
        cands,
        chosen: Vec::new(),
    };
    for size in 0..=k.min(search.cands.len()) {
        if search.dfs(0, size) {
            return Ok(Some(search.chosen.iter().map(|&i| search.cands[i]).collect()));
        }
    }
    Ok(None)
}

/// Exhaustive search over the block set, in increasing solution size.
/// The degree bound is not enforced here.
pub fn dsc_fpt_solve(inst: &DscInstance, limits: &SearchLimits) -> Result<Option<Vec<Edge>>> {
    block_set_search(&inst.graph, inst.k, &inst.property, None, limits)
}

fn generic_nsc(
    property: &dyn Property,
    degrees: &[usize],
    target: usize,
    delta: usize,
    limit: u64,
) -> Result<Option<Vec<usize>>> {
    struct Enum<'a> {
        property: &'a dyn Property,
        degrees: &'a [usize],
        caps_suffix: Vec<usize>,
        delta: usize,
        x: Vec<usize>,
        visited: u64,
        limit: u64,
    }
    impl Enum<'_> {
        fn rec(&mut self, left: usize) -> Result<bool> {
            let i = self.x.len();
            if i == self.degrees.len() {
                self.visited += 1;
                if self.visited > self.limit {
                    return Err(Error::ResourceLimit(format!(
                        "generic number-sequence search exceeded {} vectors",
                        self.limit
                    )));
                }
                let done = self.degrees.iter().zip(&self.x).map(|(d, x)| d + x).collect();
                return Ok(self.property.fulfills(&DegreeSequence::from_unsorted(done)));
            }
            let cap = self.delta - self.degrees[i];
            let rest = self.caps_suffix[i + 1];
            for xi in left.saturating_sub(rest)..=cap.min(left) {
                self.x.push(xi);
                if self.rec(left - xi)? {
                    return Ok(true);
                }
                self.x.pop();
            }
            Ok(false)
        }
    }

    if degrees.iter().any(|&d| d > delta) {
        return Ok(None);
    }
    let mut caps_suffix = vec![0usize; degrees.len() + 1];
    for i in (0..degrees.len()).rev() {
        caps_suffix[i] = caps_suffix[i + 1] + (delta - degrees[i]);
    }
    if caps_suffix[0] < target {
        return Ok(None);
    }
    let mut e = Enum {
        property,
        degrees,
        caps_suffix,
        delta,
        x: Vec::new(),
        visited: 0,
        limit,
    };
    Ok(if e.rec(target)? { Some(e.x) } else { None })
}

/// Number problem for an arbitrary property. Uses the property's own solver
/// when it has one and a guarded enumeration otherwise; every witness is
/// checked before it is returned.
pub fn pi_nsc_decide(
    property: &dyn Property,
    degrees: &[usize],
    target: usize,
    delta: usize,
    limits: &SearchLimits,
) -> Result<Option<Vec<usize>>> {
    let found = match property.solve_nsc(degrees, target, delta) {
        Some(answer) => answer,
        None => generic_nsc(property, degrees, target, delta, limits.max_nsc_vectors)?,
    };
    if let Some(x) = &found {
        let done: Vec<usize> = degrees.iter().zip(x).map(|(d, x)| d + x).collect();
        let ok = x.len() == degrees.len()
            && x.iter().sum::<usize>() == target
            && done.iter().all(|&d| d <= delta)
            && property.fulfills(&DegreeSequence::from_unsorted(done));
        if !ok {
            return Err(Error::InvariantViolation(format!(
                "number-sequence witness {x:?} for {property:?} fails its conditions"
            )));
        }
    }
    Ok(found)
}

/// `delta'(delta'+1)^2`.
pub fn dsc_threshold(delta_prime: usize) -> usize {
    delta_prime * (delta_prime + 1) * (delta_prime + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundOutcome {
    /// A realized solution with at least the threshold number of edges.
    LargeYes(Vec<Edge>),
    /// No large solution; the budget can be lowered to this value.
    Clamp(usize),
}

/// Scans `k' = threshold..=k` for a number completion with total `2k'` and
/// realizes the first one as new edges.
pub fn dsc_bound_k(inst: &DscInstance, limits: &SearchLimits) -> Result<BoundOutcome> {
    let Some(dp) = inst.delta_prime else {
        return Err(Error::Precondition("a degree bound delta' is required".into()));
    };
    let threshold = dsc_threshold(dp);
    if inst.k <= threshold {
        return Err(Error::Precondition(format!(
            "budget {} does not exceed delta'(delta'+1)^2 = {threshold}",
            inst.k
        )));
    }
    let degrees = inst.graph.degrees();
    for kp in threshold..=inst.k {
        if let Some(x) = pi_nsc_decide(&inst.property, &degrees, 2 * kp, dp, limits)? {
            return match realize_demands(&inst.graph, &x) {
                Some(edges) => Ok(BoundOutcome::LargeYes(edges)),
                None => Err(Error::InvariantViolation(format!(
                    "increments for k' = {kp} are not realizable despite the density guarantee"
                ))),
            };
        }
    }
    Ok(BoundOutcome::Clamp(threshold))
}

/// Large-solution check when the budget exceeds the threshold, then the
/// block-set search with the (possibly clamped) budget, rejecting edge sets
/// that exceed the degree bound.
pub fn dsc_solve(inst: &DscInstance, limits: &SearchLimits) -> Result<Option<Vec<Edge>>> {
    let mut k = inst.k;
    if let Some(dp) = inst.delta_prime {
        if k > dsc_threshold(dp) {
            match dsc_bound_k(inst, limits)? {
                BoundOutcome::LargeYes(edges) => return Ok(Some(edges)),
                BoundOutcome::Clamp(t) => k = t,
            }
        }
    }
    block_set_search(&inst.graph, k, &inst.property, inst.delta_prime, limits)
}

/// At most `s` new edges making every degree shared by at least `k_anon`
/// vertices, or `None`.
pub fn anonymize(
    g: &Graph,
    k_anon: usize,
    s: usize,
    limits: &SearchLimits,
) -> Result<Option<Vec<Edge>>> {
    if k_anon == 0 {
        return Err(Error::invalid("anonymity level must be at least 1"));
    }
    let inst = DscInstance::new(
        g.clone(),
        s,
        BuiltinProperty::Anonymity(k_anon),
        Some(g.max_degree() + s),
    )?;
    dsc_solve(&inst, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn star() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_unsorted(v.to_vec())
    }

    #[test]
    fn blocks() {
        assert_eq!(block(&p3(), 1), vec![0, 2]);
        assert_eq!(block(&p3(), 2), vec![1]);
        assert!(block(&p3(), 5).is_empty());
        assert_eq!(block_set(&Graph::new(100), 1), vec![0, 1]);
        assert_eq!(block_set(&p3(), 1), vec![0, 1, 2]);
        assert!(block_set(&p3(), 0).is_empty());
    }

    #[test]
    fn builtin_properties() {
        let regular = BuiltinProperty::Regular;
        assert!(regular.fulfills(&seq(&[2, 2, 2])));
        assert!(!regular.fulfills(&seq(&[2, 1, 1])));
        assert!(regular.fulfills(&seq(&[])));
        assert!(BuiltinProperty::HIndex(2).fulfills(&seq(&[3, 2, 0])));
        assert!(!BuiltinProperty::HIndex(3).fulfills(&seq(&[3, 2, 2])));
        assert!(BuiltinProperty::Balanced(2).fulfills(&seq(&[1, 1, 3, 3])));
        assert!(!BuiltinProperty::Balanced(2).fulfills(&seq(&[1, 1, 1, 3])));
        assert_eq!(BuiltinProperty::Anonymity(3).to_string(), "anon 3");
    }

    #[test]
    fn fpt_examples() {
        let limits = SearchLimits::default();
        let inst = DscInstance::new(p3(), 1, BuiltinProperty::Regular, None).unwrap();
        assert_eq!(dsc_fpt_solve(&inst, &limits).unwrap(), Some(vec![(0, 2)]));
        let done = DscInstance::new(Graph::new(3).complement(), 2, BuiltinProperty::Regular, None)
            .unwrap();
        assert_eq!(dsc_fpt_solve(&done, &limits).unwrap(), Some(vec![]));
        let stuck = DscInstance::new(
            Graph::from_edges(3, &[(0, 1)]).unwrap(),
            0,
            BuiltinProperty::Regular,
            None,
        )
        .unwrap();
        assert_eq!(dsc_fpt_solve(&stuck, &limits).unwrap(), None);
    }

    #[test]
    fn nsc_examples() {
        let limits = SearchLimits::default();
        let r = BuiltinProperty::Regular;
        assert_eq!(pi_nsc_decide(&r, &[2, 1, 1], 2, 2, &limits).unwrap(), Some(vec![0, 1, 1]));
        assert_eq!(pi_nsc_decide(&r, &[0, 0], 1, 1, &limits).unwrap(), None);
        assert_eq!(pi_nsc_decide(&r, &[0, 1], 1, 1, &limits).unwrap(), Some(vec![1, 0]));
        assert_eq!(pi_nsc_decide(&r, &[3, 3], 0, 5, &limits).unwrap(), Some(vec![0, 0]));
        let h = BuiltinProperty::HIndex(2);
        assert_eq!(pi_nsc_decide(&h, &[2, 2, 0], 0, 2, &limits).unwrap(), Some(vec![0, 0, 0]));
        let x = pi_nsc_decide(&h, &[1, 1, 0], 2, 2, &limits).unwrap().unwrap();
        assert_eq!(x.iter().sum::<usize>(), 2);
        assert_eq!(pi_nsc_decide(&h, &[0, 0], 1, 2, &limits).unwrap(), None);
    }

    #[test]
    fn generic_guard() {
        let limits = SearchLimits {
            max_nsc_vectors: 10,
            ..SearchLimits::default()
        };
        let b = BuiltinProperty::Balanced(7);
        assert!(matches!(
            pi_nsc_decide(&b, &[0; 6], 12, 6, &limits),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn bound_k_perfect_matching() {
        let limits = SearchLimits::default();
        let inst = DscInstance::new(Graph::new(10), 5, BuiltinProperty::Regular, Some(1)).unwrap();
        let BoundOutcome::LargeYes(edges) = dsc_bound_k(&inst, &limits).unwrap() else {
            panic!("expected a large solution");
        };
        assert_eq!(edges.len(), 5);
        let g = inst.graph.add_edges(&edges).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 1));
        assert_eq!(dsc_solve(&inst, &limits).unwrap().map(|e| e.len()), Some(5));

        // Nine vertices cannot all reach degree 1.
        let odd = DscInstance::new(Graph::new(9), 5, BuiltinProperty::Regular, Some(1)).unwrap();
        assert_eq!(dsc_bound_k(&odd, &limits).unwrap(), BoundOutcome::Clamp(4));

        let small = DscInstance::new(Graph::new(10), 4, BuiltinProperty::Regular, Some(1)).unwrap();
        assert!(matches!(dsc_bound_k(&small, &limits), Err(Error::Precondition(_))));
    }

    #[test]
    fn solve_respects_degree_bound() {
        let limits = SearchLimits::default();
        let inst = DscInstance::new(p3(), 1, BuiltinProperty::Regular, Some(2)).unwrap();
        assert_eq!(dsc_solve(&inst, &limits).unwrap(), Some(vec![(0, 2)]));
        assert!(DscInstance::new(p3(), 1, BuiltinProperty::Regular, Some(1)).is_err());
    }

    #[test]
    fn anonymize_star() {
        let limits = SearchLimits::default();
        let edges = anonymize(&star(), 2, 2, &limits).unwrap().unwrap();
        assert_eq!(edges.len(), 2);
        let g = star().add_edges(&edges).unwrap();
        assert!(anonymity_fulfills(&g.degree_sequence(), 2));
        assert_eq!(anonymize(&star(), 2, 1, &limits).unwrap(), None);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(anonymize(&c4, 2, 3, &limits).unwrap(), Some(vec![]));
    }
}

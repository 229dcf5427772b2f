//! Large solutions via numbers and f-factors, and the `O(r^5)` kernel.
//!
//! If the degree numbers alone can be completed with a total increase of
//! `2k'` for some `k' >= r(r+1)^2`, the demanded increments can always be
//! realized by new edges: the affected vertices are numerous enough and the
//! complement of the graph they induce is dense enough for an f-factor to
//! exist. Otherwise the budget can be clamped to `r(r+1)^2`, after which the
//! `O(kr^2)` kernel has `O(r^5)` vertices.

use crate::dce::{kernelize_kr, DceInstance, EditSolution, KrKernel, TrivialNo};
use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph};
use crate::matching::f_factor;
use crate::nce::NceTable;

/// `r(r+1)^2`.
pub fn large_solution_threshold(r: usize) -> usize {
    r * (r + 1) * (r + 1)
}

/// Result of the `O(r^5)` kernelization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelResult {
    /// The instance is a yes-instance; the witness solves the original.
    TrivialYes(EditSolution),
    TrivialNo(TrivialNo),
    Kernel {
        instance: DceInstance,
        origin: Vec<usize>,
    },
}

/// New edges, absent from `g`, that raise every vertex `v` by exactly
/// `demand[v]`; searched as an f-factor of the complement of the graph
/// induced by vertices with positive demand.
///
/// # Panics
///
/// If `demand.len() != g.n()`.
pub fn realize_demands(g: &Graph, demand: &[usize]) -> Option<Vec<Edge>> {
    assert_eq!(demand.len(), g.n());
    if demand.iter().sum::<usize>() % 2 == 1 {
        return None;
    }
    let affected: Vec<usize> = (0..g.n()).filter(|&v| demand[v] > 0).collect();
    if affected.iter().any(|&v| demand[v] + g.degree(v) > g.n() - 1) {
        return None;
    }
    let (sub, map) = g
        .induced_subgraph(&affected)
        .expect("affected vertices are in range");
    let f: Vec<usize> = map.iter().map(|&v| demand[v]).collect();
    let factor = f_factor(&sub.complement(), &f)?;
    Some(
        factor
            .into_iter()
            .map(|(a, b)| normalize(map[a], map[b]))
            .collect(),
    )
}

/// Searches `k' = r(r+1)^2, ..., k` in ascending order for a target `2k'`
/// at which the degree numbers can be completed, and realizes the first one.
///
/// Requires edge addition and `k >= r(r+1)^2`. Realization at that point
/// cannot fail for a correct f-factor engine; a failure is reported as an
/// invariant violation.
pub fn try_large_solution(inst: &DceInstance) -> Result<Option<EditSolution>> {
    crate::dce::kernel_require_addition(inst)?;
    let r = inst.r();
    let threshold = large_solution_threshold(r);
    if r == 0 || inst.k < threshold {
        return Err(Error::Precondition(format!(
            "large-solution search needs r >= 1 and k >= r(r+1)^2 = {threshold}, got r = {r}, k = {}",
            inst.k
        )));
    }
    let g = &inst.graph;
    let degrees = g.degrees();
    let table = NceTable::build(&degrees, inst.tau.lists(), 2 * inst.k);
    let Some(k_prime) = (threshold..=inst.k).find(|&kp| table.feasible(2 * kp)) else {
        return Ok(None);
    };
    let targets = table.witness(2 * k_prime).ok_or_else(|| {
        Error::InvariantViolation(format!("no traceback for feasible target {}", 2 * k_prime))
    })?;
    let demand: Vec<usize> = targets.iter().zip(&degrees).map(|(t, d)| t - d).collect();
    let affected = demand.iter().filter(|&&x| x > 0).count();
    let floor = 2 * (r + 1) * (r + 1);
    if affected < floor {
        return Err(Error::InvariantViolation(format!(
            "only {affected} affected vertices, expected at least {floor}"
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| demand[v] > 0 && g.degree(v) > r) {
        return Err(Error::InvariantViolation(format!(
            "affected vertex {v} has degree {} > r",
            g.degree(v)
        )));
    }
    let edges = realize_demands(g, &demand).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "demands for k' = {k_prime} are not realizable despite the density guarantee"
        ))
    })?;
    debug_assert_eq!(edges.len(), k_prime);
    Ok(Some(EditSolution::additions(&edges)))
}

/// Two cases on `k`. Above `r(r+1)^2`, a large solution is either found
/// outright or ruled out, and `k` is clamped to the threshold. The clamp
/// relies on every edge-addition solution inducing a number solution of the
/// same size. Then the `O(kr^2)` kernel is applied.
pub fn kernelize_r(inst: &DceInstance) -> Result<KernelResult> {
    crate::dce::kernel_require_addition(inst)?;
    let threshold = large_solution_threshold(inst.r());
    let mut working = inst.clone();
    if inst.k > threshold {
        // With r = 0 no edge can ever be added, so the clamp to 0 is exact.
        if inst.r() > 0 {
            if let Some(sol) = try_large_solution(inst)? {
                return Ok(KernelResult::TrivialYes(sol));
            }
        }
        working.k = threshold;
    }
    Ok(match kernelize_kr(&working)? {
        KrKernel::TrivialNo(no) => KernelResult::TrivialNo(no),
        KrKernel::Kernel { instance, origin } => KernelResult::Kernel { instance, origin },
    })
}

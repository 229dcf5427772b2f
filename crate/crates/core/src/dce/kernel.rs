use crate::dce::{brute_force_solve, DceInstance, EditSolution, OpKind, SearchLimits};
use crate::error::{Error, Result};

/// Why an instance was rejected outright.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivialNo {
    /// More unsatisfied vertices than `k` added edges can touch.
    TooManyUnsatisfied { count: usize, bound: usize },
    /// A vertex already exceeds every degree on its list (or the list is empty).
    DegreeAboveList { vertex: usize },
}

/// Outcome of the `O(kr^2)` kernelization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KrKernel {
    TrivialNo(TrivialNo),
    /// The reduced instance and, for each of its vertices, the original index.
    Kernel {
        instance: DceInstance,
        origin: Vec<usize>,
    },
}

pub(crate) fn require_addition(inst: &DceInstance) -> Result<()> {
    if inst.op != OpKind::EdgeAddition {
        return Err(Error::Precondition(format!(
            "operation must be e+, found {}",
            inst.op
        )));
    }
    Ok(())
}

/// Unsatisfied vertices plus up to `alpha = k(Delta + 2)` satisfied vertices of
/// every positive type, collected in one pass over the vertices.
///
/// A satisfied vertex is kept if some counter of its positive types is still
/// below `alpha`; it then advances the counters of all its types. The result
/// is sorted.
pub fn core_set(inst: &DceInstance) -> Result<Vec<usize>> {
    require_addition(inst)?;
    let g = &inst.graph;
    let alpha = inst.k.saturating_mul(g.max_degree() + 2);
    let mut counters = vec![0usize; inst.r() + 1];
    let mut core = Vec::new();
    for v in 0..g.n() {
        let deg = g.degree(v);
        let list = inst.tau.list(v);
        if !inst.tau.allows(v, deg) {
            core.push(v);
            continue;
        }
        let types = list.iter().filter(|&&d| d > deg).map(|&d| d - deg);
        if types.clone().any(|i| counters[i] < alpha) {
            core.push(v);
        }
        for i in types {
            counters[i] += 1;
        }
    }
    Ok(core)
}

/// Rejects instances with more than `2k` unsatisfied vertices or a vertex
/// whose degree exceeds the maximum of its list.
pub fn rule2_check(inst: &DceInstance) -> Result<Option<TrivialNo>> {
    require_addition(inst)?;
    let g = &inst.graph;
    let mut unsatisfied = 0usize;
    for v in 0..g.n() {
        let deg = g.degree(v);
        match inst.tau.max(v) {
            Some(max) if deg <= max => {}
            _ => return Ok(Some(TrivialNo::DegreeAboveList { vertex: v })),
        }
        if !inst.tau.allows(v, deg) {
            unsatisfied += 1;
        }
    }
    let bound = inst.k.saturating_mul(2);
    if unsatisfied > bound {
        return Ok(Some(TrivialNo::TooManyUnsatisfied {
            count: unsatisfied,
            bound,
        }));
    }
    Ok(None)
}

/// Rule 2 followed by one application of Rule 1: keep a core set and safely
/// remove everything else. A returned kernel has at most `2k + rk(r + 2)`
/// vertices.
pub fn kernelize_kr(inst: &DceInstance) -> Result<KrKernel> {
    if let Some(no) = rule2_check(inst)? {
        return Ok(KrKernel::TrivialNo(no));
    }
    let core = core_set(inst)?;
    let mut in_core = vec![false; inst.n()];
    for &v in &core {
        in_core[v] = true;
    }
    let outside: Vec<usize> = (0..inst.n()).filter(|&v| !in_core[v]).collect();
    let (instance, origin) = inst.safely_remove(&outside)?;
    Ok(KrKernel::Kernel { instance, origin })
}

/// Exact solver for edge addition: kernelize, search the kernel exhaustively,
/// and map the edges back to the original vertex indices.
pub fn solve_e_plus(inst: &DceInstance, limits: &SearchLimits) -> Result<Option<EditSolution>> {
    match kernelize_kr(inst)? {
        KrKernel::TrivialNo(_) => Ok(None),
        KrKernel::Kernel { instance, origin } => Ok(brute_force_solve(&instance, limits)?
            .map(|sol| sol.relabel(&origin))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dce::tests::{paw, paw_default, three_isolated};
    use crate::dce::DegreeListFunction;
    use crate::graph::Graph;

    fn isolated(n: usize, k: usize) -> DceInstance {
        DceInstance::new(
            Graph::new(n),
            k,
            DegreeListFunction::uniform(n, 1, &[0, 1]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap()
    }

    #[test]
    fn core_set_examples() {
        let all_unsat = DceInstance::new(
            Graph::new(4).complement(),
            6,
            DegreeListFunction::uniform(4, 3, &[0]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        assert_eq!(core_set(&all_unsat).unwrap(), vec![0, 1, 2, 3]);

        let inst = isolated(100, 1);
        let core = core_set(&inst).unwrap();
        assert_eq!(core.len(), 2);
        for &v in &core {
            assert_eq!(inst.vertex_types(v), vec![0, 1]);
        }

        // alpha = 5 is never reached, but v and x are satisfied with no
        // positive type, so only u (types {0,1}) and unsatisfied w remain.
        assert_eq!(core_set(&paw_default(1)).unwrap(), vec![0, 2]);
    }

    #[test]
    fn core_set_needs_addition() {
        let mut inst = isolated(3, 1);
        inst.op = OpKind::EdgeDeletion;
        assert!(matches!(core_set(&inst), Err(Error::Precondition(_))));
    }

    #[test]
    fn rule2() {
        let inst = paw(1, vec![vec![1, 2], vec![2], vec![3], vec![2]]);
        assert_eq!(
            rule2_check(&inst).unwrap(),
            Some(TrivialNo::DegreeAboveList { vertex: 1 })
        );
        let k3 = DceInstance::new(
            Graph::new(3).complement(),
            1,
            DegreeListFunction::uniform(3, 2, &[0, 2]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        assert_eq!(rule2_check(&k3).unwrap(), None);
        let k3_zero = DceInstance::new(
            Graph::new(3).complement(),
            1,
            DegreeListFunction::uniform(3, 2, &[0, 1]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        // Degree 2 exceeds max 1 before the unsatisfied count matters.
        assert!(rule2_check(&k3_zero).unwrap().is_some());
        let unsat = DceInstance::new(
            Graph::new(3),
            1,
            DegreeListFunction::uniform(3, 2, &[1, 2]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        assert_eq!(
            rule2_check(&unsat).unwrap(),
            Some(TrivialNo::TooManyUnsatisfied { count: 3, bound: 2 })
        );
        assert_eq!(rule2_check(&three_isolated()).unwrap(), None);
        let empty_list = DceInstance::new(
            Graph::new(1),
            1,
            DegreeListFunction::new(1, vec![vec![]]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        assert!(rule2_check(&empty_list).unwrap().is_some());
    }

    #[test]
    fn kernel_of_isolated_vertices() {
        let inst = isolated(100, 1);
        let KrKernel::Kernel { instance, origin } = kernelize_kr(&inst).unwrap() else {
            panic!("expected a kernel");
        };
        assert_eq!(instance.n(), 2);
        assert_eq!(instance.graph.m(), 0);
        assert_eq!(instance.k, 1);
        assert_eq!(instance.tau.lists(), &[vec![0, 1], vec![0, 1]]);
        assert_eq!(origin.len(), 2);
        let limits = SearchLimits::default();
        assert!(brute_force_solve(&inst, &limits).unwrap().is_some());
        assert!(brute_force_solve(&instance, &limits).unwrap().is_some());
    }

    #[test]
    fn paw_kernel() {
        let inst = paw_default(1);
        let KrKernel::Kernel { instance, origin } = kernelize_kr(&inst).unwrap() else {
            panic!("expected a kernel");
        };
        assert_eq!(origin, vec![0, 2]);
        assert_eq!(instance.graph.m(), 0);
        assert_eq!(instance.tau.lists(), &[vec![0, 1], vec![1]]);
        let limits = SearchLimits::default();
        let sol = brute_force_solve(&instance, &limits).unwrap().unwrap();
        assert!(sol.relabel(&origin).is_valid_for(&inst));
    }

    #[test]
    fn small_all_typed_instance_unchanged() {
        // Every vertex either is unsatisfied or has a positive type, and
        // n is below alpha, so Rule 1 removes nothing.
        let inst = DceInstance::new(
            Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(),
            1,
            DegreeListFunction::new(3, vec![vec![1, 2], vec![2, 3], vec![2]]).unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        let KrKernel::Kernel { instance, origin } = kernelize_kr(&inst).unwrap() else {
            panic!("expected a kernel");
        };
        assert_eq!(instance, inst);
        assert_eq!(origin, vec![0, 1, 2]);
    }

    #[test]
    fn solve_e_plus_examples() {
        let limits = SearchLimits::default();
        let inst = isolated(100, 1);
        let sol = solve_e_plus(&inst, &limits).unwrap().unwrap();
        // An empty solution already works: every vertex accepts degree 0.
        assert!(sol.is_valid_for(&inst));

        let forced = DceInstance::new(
            Graph::new(100),
            1,
            DegreeListFunction::new(
                1,
                (0..100).map(|v| if v < 2 { vec![1] } else { vec![0, 1] }).collect(),
            )
            .unwrap(),
            OpKind::EdgeAddition,
        )
        .unwrap();
        let sol = solve_e_plus(&forced, &limits).unwrap().unwrap();
        assert_eq!(sol.len(), 1);
        assert!(sol.is_valid_for(&forced));

        let bad = paw(1, vec![vec![1, 2], vec![2], vec![3], vec![2]]);
        assert_eq!(solve_e_plus(&bad, &limits).unwrap(), None);

        let done = paw(0, vec![vec![1], vec![3], vec![2], vec![2]]);
        assert_eq!(solve_e_plus(&done, &limits).unwrap(), Some(EditSolution::empty()));

        let sol = solve_e_plus(&three_isolated(), &limits).unwrap().unwrap();
        assert_eq!(sol.len(), 3);
    }
}

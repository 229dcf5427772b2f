mod common;

use proptest::prelude::*;

use degcomp::dce::{
    brute_force_solve, kernelize_kr, solve_e_plus, DceInstance, DegreeListFunction, Edit, EditSolution,
    KrKernel, OpKind, SearchLimits,
};
use degcomp::dsc::{dsc_fpt_solve, dsc_solve, BuiltinProperty, DscInstance};
use degcomp::io::{parse_instance, parse_solution, serialize_dce, serialize_dsc, serialize_solution, Instance};
use degcomp::matching::{f_factor, max_matching};
use degcomp::nce::NceTable;
use degcomp::winwin::{kernelize_r, realize_demands, KernelResult};
use degcomp::{Edge, Graph};

use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn op() -> impl Strategy<Value = OpKind> {
    prop_oneof![
        Just(OpKind::EdgeAddition),
        Just(OpKind::EdgeDeletion),
        Just(OpKind::VertexDeletion)
    ]
}

fn dce(max_n: usize, max_k: usize, max_r: usize, op: impl Strategy<Value = OpKind>) -> impl Strategy<Value = DceInstance> {
    (graph(max_n), 0..=max_k, 0..=max_r, op).prop_flat_map(|(g, k, r, op)| {
        let n = g.n();
        proptest::collection::vec(proptest::collection::btree_set(0..=r, 0..=r + 1), n).prop_map(move |sets| {
            let lists = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            DceInstance::new(g.clone(), k, DegreeListFunction::new(r, lists).unwrap(), op).unwrap()
        })
    })
}

fn property() -> impl Strategy<Value = BuiltinProperty> {
    prop_oneof![
        Just(BuiltinProperty::Regular),
        (1usize..=3).prop_map(BuiltinProperty::Anonymity),
        (0usize..=3).prop_map(BuiltinProperty::HIndex),
        (1usize..=3).prop_map(BuiltinProperty::Balanced),
    ]
}

fn edge_set(g: &Graph) -> Vec<Edge> {
    g.edges().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(9)) {
        let c = g.complement();
        prop_assert_eq!(&c.complement(), &g);
        for v in 0..g.n() {
            prop_assert_eq!(c.degree(v) + g.degree(v), g.n() - 1);
        }
        prop_assert_eq!(c.m() + g.m(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn adding_then_removing_edges_restores_graph(g in graph(8), pick in proptest::collection::vec(any::<bool>(), 28)) {
        let new: Vec<Edge> = g.non_edges().into_iter().zip(pick).filter(|(_, b)| *b).map(|(e, _)| e).collect();
        let bigger = g.add_edges(&new).unwrap();
        prop_assert_eq!(bigger.m(), g.m() + new.len());
        prop_assert_eq!(bigger.remove_edges(&new).unwrap(), g);
    }

    #[test]
    fn dce_text_round_trip(inst in dce(10, 6, 6, op())) {
        let text = serialize_dce(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &Instance::Dce(inst));
        prop_assert_eq!(degcomp::io::serialize_instance(&back), text);
    }

    #[test]
    fn dsc_text_round_trip(g in graph(8), k in 0usize..5, p in property(), bounded in any::<bool>()) {
        let bound = bounded.then(|| g.max_degree() + k);
        let inst = DscInstance::new(g, k, p, bound).unwrap();
        let text = serialize_dsc(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), Instance::Dsc(inst));
    }

    #[test]
    fn solution_text_round_trip(edits in proptest::collection::vec((0usize..20, 0usize..20, 0u8..3), 0..8), no in any::<bool>()) {
        let sol = EditSolution {
            edits: edits
                .into_iter()
                .filter(|(u, v, _)| u != v)
                .map(|(u, v, kind)| match kind {
                    0 => Edit::AddEdge(u.min(v), u.max(v)),
                    1 => Edit::DeleteEdge(u.min(v), u.max(v)),
                    _ => Edit::DeleteVertex(u),
                })
                .collect(),
        };
        let sol = (!no).then_some(sol);
        let text = serialize_solution(sol.as_ref());
        prop_assert_eq!(parse_solution(&text).unwrap(), sol);
    }

    #[test]
    fn brute_force_is_minimum(inst in dce(6, 3, 4, op())) {
        let got = brute_force_solve(&inst, &SearchLimits::default()).unwrap();
        prop_assert_eq!(got.as_ref().map(EditSolution::len), dce_min_size(&inst));
        if let Some(s) = got {
            prop_assert!(s.is_valid_for(&inst));
        }
    }

    #[test]
    fn edge_addition_solver_is_exact(inst in dce(8, 3, 4, Just(OpKind::EdgeAddition))) {
        let got = solve_e_plus(&inst, &SearchLimits::default()).unwrap();
        prop_assert_eq!(got.is_some(), dce_min_size(&inst).is_some());
        if let Some(s) = got {
            prop_assert!(s.is_valid_for(&inst));
        }
    }

    #[test]
    fn kernel_preserves_answer_and_size(inst in dce(10, 3, 4, Just(OpKind::EdgeAddition))) {
        let expected = dce_min_size(&inst).is_some();
        match kernelize_kr(&inst).unwrap() {
            KrKernel::TrivialNo(_) => prop_assert!(!expected),
            KrKernel::Kernel { instance, origin } => {
                let (k, r) = (inst.k, inst.r());
                prop_assert!(instance.n() <= 2 * k + r * k * (r + 2));
                prop_assert_eq!(origin.len(), instance.n());
                prop_assert!(origin.windows(2).all(|w| w[0] < w[1]));
                let sol = brute_force_solve(&instance, &SearchLimits::default()).unwrap();
                prop_assert_eq!(sol.is_some(), expected);
                if let Some(s) = sol {
                    prop_assert!(s.relabel(&origin).is_valid_for(&inst));
                }
            }
        }
    }

    #[test]
    fn win_win_kernel_is_sound(inst in dce(9, 12, 1, Just(OpKind::EdgeAddition))) {
        let expected = dce_min_size(&inst).is_some();
        match kernelize_r(&inst).unwrap() {
            KernelResult::TrivialYes(s) => prop_assert!(s.is_valid_for(&inst)),
            KernelResult::TrivialNo(_) => prop_assert!(!expected),
            KernelResult::Kernel { instance, .. } => {
                prop_assert!(instance.k <= inst.k);
                prop_assert_eq!(brute_force_solve(&instance, &SearchLimits::default()).unwrap().is_some(), expected);
            }
        }
    }

    #[test]
    fn f_factor_matches_enumeration(g in graph(7), seed in proptest::collection::vec(0usize..4, 7)) {
        prop_assume!(g.m() <= 14);
        let f: Vec<usize> = (0..g.n()).map(|v| seed[v].min(g.degree(v))).collect();
        let got = f_factor(&g, &f);
        prop_assert_eq!(got.is_some(), has_f_factor(&g, &f));
        if let Some(edges) = got {
            let h = Graph::from_edges(g.n(), &edges).unwrap();
            prop_assert_eq!(h.degrees(), f);
            prop_assert!(edges.iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }

    #[test]
    fn matching_is_maximum(g in graph(9)) {
        let m = max_matching(&g);
        let mut used = vec![false; g.n()];
        for &(u, v) in &m {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!used[u] && !used[v]);
            used[u] = true;
            used[v] = true;
        }
        prop_assert_eq!(m.len(), maximum_matching_size(&g));
    }

    #[test]
    fn realized_demands_are_exact(g in graph(7), raw in proptest::collection::vec(0usize..3, 7)) {
        let demand: Vec<usize> = (0..g.n()).map(|v| raw[v]).collect();
        if let Some(edges) = realize_demands(&g, &demand) {
            prop_assert!(realizes(&g, &edges, &demand));
        } else {
            prop_assert!(!has_f_factor_on_complement(&g, &demand));
        }
    }

    #[test]
    fn nce_table_matches_enumeration(
        degrees in proptest::collection::vec(0usize..5, 0..6),
        sets in proptest::collection::vec(proptest::collection::btree_set(0usize..5, 0..4), 6),
        k_max in 0usize..12,
    ) {
        let phi: Vec<Vec<usize>> = sets.into_iter().take(degrees.len()).map(|s| s.into_iter().collect()).collect();
        let table = NceTable::build(&degrees, &phi, k_max);
        let expected = nce_totals(&degrees, &phi, k_max);
        prop_assert_eq!(table.all_targets(), expected.clone());
        for (t, &ok) in expected.iter().enumerate() {
            prop_assert_eq!(table.witness(t).is_some(), ok);
        }
    }

    #[test]
    fn dsc_solvers_match_enumeration(g in graph(6), k in 0usize..3, p in property(), bounded in any::<bool>()) {
        let cap = bounded.then(|| g.max_degree() + 1);
        let inst = DscInstance::new(g.clone(), k, p, cap).unwrap();
        let expected = completable(&g, k, cap, |s| degcomp::dsc::Property::fulfills(&p, s));
        let got = dsc_solve(&inst, &SearchLimits::default()).unwrap();
        prop_assert_eq!(got.is_some(), expected);
        if let Some(edges) = got {
            prop_assert!(inst.accepts(&edges));
        }
        if cap.is_none() {
            prop_assert_eq!(dsc_fpt_solve(&inst, &SearchLimits::default()).unwrap().is_some(), expected);
        }
    }
}

/// The demands can be met with new edges among the demanding vertices.
fn has_f_factor_on_complement(g: &Graph, demand: &[usize]) -> bool {
    let comp = g.complement();
    let keep: Vec<Edge> = edge_set(&comp)
        .into_iter()
        .filter(|&(u, v)| demand[u] > 0 && demand[v] > 0)
        .collect();
    has_f_factor(&Graph::from_edges(g.n(), &keep).unwrap(), demand)
}

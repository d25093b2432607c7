use std::collections::BTreeMap;

use proptest::prelude::*;
use vedom::domination::{is_minimal_by_removal, is_minimal_ve_dominating};
use vedom::harness::canonical_form;
use vedom::reduction::is_reduced;
use vedom::{
    expand_backbone, recognize, reduce, sat_decide_via_graph, sat_to_graph,
    satisfying_assignment_via_graph, unit_cut_decompose, unit_cut_extend, verify_certificate,
    CnfInstance, EdgeSet, Graph, Oracle, VertexSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, pairs.zip(bits).filter(|&(_, keep)| keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        (parents, Just((0..n).collect::<Vec<usize>>()).prop_shuffle()).prop_map(
            move |(parents, perm)| {
                let t =
                    Graph::from_edges(n, parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)))
                        .unwrap();
                t.relabel(&perm)
            },
        )
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn cnf(max_vars: usize, max_clauses: usize) -> impl Strategy<Value = CnfInstance> {
    (3..=max_vars).prop_flat_map(move |n| {
        let clause = (
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), 3),
        )
            .prop_map(|(vars, signs)| {
                [0, 1, 2].map(|k| {
                    let code = vars[k] as i64 + 1;
                    if signs[k] {
                        -code
                    } else {
                        code
                    }
                })
            });
        proptest::collection::vec(clause, 1..=max_clauses)
            .prop_map(move |clauses| CnfInstance::from_signed(n, &clauses).unwrap())
    })
}

fn sizes(g: &Graph) -> BTreeMap<usize, u64> {
    Oracle::default().report(g).unwrap().minimal_size_multiset
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn oracle_is_label_invariant((g, perm) in graph(9).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), permutation(n)) })) {
        let o = Oracle::default();
        let a = o.report(&g).unwrap();
        let b = o.report(&g.relabel(&perm)).unwrap();
        prop_assert_eq!(a.minimal_size_multiset, b.minimal_size_multiset);
        prop_assert_eq!((a.i_ve, a.beta_ve), (b.i_ve, b.beta_ve));
    }

    #[test]
    fn private_edge_test_matches_removal((g, bits) in graph(9).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), proptest::collection::vec(any::<bool>(), n)) })) {
        let s = VertexSet::from_members(g.vertex_count(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v));
        prop_assert_eq!(is_minimal_ve_dominating(&g, &s), is_minimal_by_removal(&g, &s));
    }

    #[test]
    fn enumerated_sets_are_minimal(g in graph(8)) {
        for s in Oracle::default().enumerate(&g, None).unwrap() {
            prop_assert!(is_minimal_by_removal(&g, &s));
        }
    }

    #[test]
    fn reduction_is_idempotent_and_preserves_verdict(g in graph(9)) {
        let r = reduce(&g).reduced_graph;
        prop_assert!(is_reduced(&r));
        prop_assert_eq!(&reduce(&r).reduced_graph, &r);
        let o = Oracle::default();
        let (a, b) = (o.report(&g).unwrap(), o.report(&r).unwrap());
        prop_assert_eq!(a.is_well_ve_dominated, b.is_well_ve_dominated);
        prop_assert_eq!(a.gamma_ve, b.gamma_ve);
    }

    #[test]
    fn disjoint_union_adds_parameters(a in graph(6), b in graph(6)) {
        let o = Oracle::default();
        let (ra, rb) = (o.report(&a).unwrap(), o.report(&b).unwrap());
        let u = o.report(&a.disjoint_union(&b)).unwrap();
        prop_assert_eq!(u.gamma_ve, ra.gamma_ve + rb.gamma_ve);
        prop_assert_eq!(u.big_gamma_ve, ra.big_gamma_ve + rb.big_gamma_ve);
        prop_assert_eq!(u.minimal_set_count(), ra.minimal_set_count() * rb.minimal_set_count());
        prop_assert_eq!(u.is_well_ve_dominated, ra.is_well_ve_dominated && rb.is_well_ve_dominated);
    }

    #[test]
    fn bounded_equals_full_when_bound_covers_order((g, extra) in (graph(9), 0usize..3)) {
        let o = Oracle::default();
        let bounded = o.bounded_report(&g, g.vertex_count() + extra).unwrap();
        prop_assert_eq!(bounded, o.report(&g).unwrap());
    }

    #[test]
    fn bounded_is_prefix_of_full((g, bound) in (graph(9), 0usize..9)) {
        let o = Oracle::default();
        let full = sizes(&g);
        let bounded = o.bounded_report(&g, bound).unwrap().minimal_size_multiset;
        let expected: BTreeMap<usize, u64> = full.into_iter().filter(|&(k, _)| k <= bound).collect();
        prop_assert_eq!(bounded, expected);
    }

    #[test]
    fn parameter_chain(g in graph(9)) {
        prop_assert!(Oracle::default().report(&g).unwrap().chain_holds());
    }

    #[test]
    fn recognizer_matches_oracle_on_random_trees(t in tree(1, 16)) {
        let r = recognize(&t).unwrap();
        prop_assert_eq!(r.is_yes(), Oracle::default().is_well_ve_dominated(&t).unwrap());
    }

    #[test]
    fn recognizer_is_label_invariant((t, perm) in tree(1, 40).prop_flat_map(|t| { let n = t.vertex_count(); (Just(t), permutation(n)) })) {
        let a = recognize(&t).unwrap();
        let b = recognize(&t.relabel(&perm)).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.gamma_ve(), b.gamma_ve());
        if let Some(cert) = &a.certificate {
            prop_assert!(verify_certificate(&a.reduced_tree, cert).passed);
        }
    }

    #[test]
    fn expansion_is_recognized(r in tree(2, 30)) {
        let (t, p) = expand_backbone(&r).unwrap();
        let k = r.vertex_count();
        let res = recognize(&t).unwrap();
        prop_assert!(res.is_yes());
        prop_assert_eq!(res.gamma_ve(), Some(k));
        prop_assert_eq!(res.partition.as_ref(), Some(&p));
        let parts = unit_cut_decompose(&t, &p).unwrap();
        prop_assert_eq!(parts.len(), k);
        let p3 = canonical_form(&vedom::path_graph(3).unwrap());
        prop_assert!(parts.iter().all(|(g, _)| canonical_form(g) == p3));
    }

    #[test]
    fn extension_round_trip((r1, r2, a, b) in (tree(2, 8), tree(2, 8), any::<prop::sample::Index>(), any::<prop::sample::Index>())) {
        let (t1, p1) = expand_backbone(&r1).unwrap();
        let (t2, p2) = expand_backbone(&r2).unwrap();
        let u = a.index(r1.vertex_count());
        let v = b.index(r2.vertex_count());
        let (joined, q) = unit_cut_extend(&t1, &p1, u, &t2, &p2, v).unwrap();
        q.validate(&joined).unwrap();
        let res = recognize(&joined).unwrap();
        prop_assert_eq!(res.gamma_ve(), Some(r1.vertex_count() + r2.vertex_count()));

        let mut cut = EdgeSet::new(joined.edge_count());
        cut.insert(joined.edge_index(u, v + t1.vertex_count()).unwrap());
        let mut forms: Vec<String> = joined.without_edges(&cut).component_graphs().iter().map(|(g, _)| canonical_form(g)).collect();
        let mut expected = vec![canonical_form(&t1), canonical_form(&t2)];
        forms.sort();
        expected.sort();
        prop_assert_eq!(forms, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sat_gadget_shape_and_sizes(f in cnf(4, 4)) {
        let n = f.variable_count();
        let m = f.clauses().len();
        let map = sat_to_graph(&f);
        prop_assert_eq!(map.graph.vertex_count(), 6 * n + m + 1);
        prop_assert_eq!(map.graph.edge_count(), 5 * n + 3 * m + m * (m - 1) / 2 + m);
        prop_assert_eq!(&sat_to_graph(&f).graph, &map.graph);

        let bounded = Oracle::default().bounded_report(&map.graph, 2 * n + 1).unwrap();
        let found: Vec<usize> = bounded.minimal_size_multiset.keys().copied().collect();
        prop_assert!(found.iter().all(|&k| k == 2 * n || k == 2 * n + 1));
        prop_assert!(found.contains(&(2 * n + 1)));
    }

    #[test]
    fn consistent_decider_matches_truth_table(f in cnf(4, 8)) {
        let o = Oracle::default();
        let via_graph = satisfying_assignment_via_graph(&f, &o).unwrap();
        prop_assert_eq!(via_graph.is_some(), f.brute_force_satisfying_assignment().is_some());
        if let Some(a) = via_graph {
            prop_assert!(f.is_satisfied_by(&a));
            prop_assert!(sat_decide_via_graph(&f, &o).unwrap());
        }
    }
}

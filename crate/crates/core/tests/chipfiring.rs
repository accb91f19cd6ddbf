use std::collections::{BTreeMap, BTreeSet};

use fourient_core::chipfiring::*;
use fourient_core::corpus::{self, default_corpus, is_saturated, outerplanar_walk};
use fourient_core::fourientation::{reachable_set, CutCycleIndex};
use fourient_core::minedge::good_for_cut;
use fourient_core::poly::{int, Univariate};
use fourient_core::tutte::tutte_polynomial;
use fourient_core::{CutProperty, EdgeState, Error, Fourientation, Graph, Sign};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_corpus(max_edges: usize) -> Vec<Graph> {
    default_corpus()
        .into_iter()
        .map(|c| c.graph)
        .filter(|g| g.edge_count() <= max_edges)
        .collect()
}

#[test]
fn theta_golden_values() {
    let g = corpus::theta();
    let tree = RootedTree { root: 0, arcs: vec![(0, Sign::Plus), (1, Sign::Plus)] };
    let ctx = SubparkingContext::new(g.clone(), 0, tree).unwrap();
    assert_eq!(ctx.aci_orientations().unwrap().len(), 9);
    assert_eq!(ctx.hilbert_numerator().unwrap(), Univariate::from_i64(&[1, 2, 1]));
    let set: BTreeSet<Divisor> = ctx.subparking_functions().unwrap().into_iter().collect();
    let expected: BTreeSet<Divisor> = [[0, 0, 0], [0, 1, 0], [0, 0, 1], [0, 2, 0]]
        .into_iter()
        .map(|v| Divisor(v.to_vec()))
        .collect();
    assert_eq!(set, expected);
    assert!(ctx.verify_conjecture(&tutte_polynomial(&g)).unwrap().ok());
}

#[test]
fn pivot_classes_are_divisor_classes() {
    for g in small_corpus(4) {
        let classes = reversal_classes(&g, ReversalMoves::PivotsOnly).unwrap();
        let all: Vec<Fourientation> = Fourientation::all(g.edge_count()).collect();
        let divisors: Vec<Divisor> = all.iter().map(|o| divisor_of(&g, o)).collect();
        for i in 0..all.len() {
            for j in 0..i {
                assert_eq!(classes[i] == classes[j], divisors[i] == divisors[j], "{g}");
            }
        }
    }
}

#[test]
fn cocycle_classes_are_linear_equivalence_classes() {
    for g in small_corpus(4) {
        let classes = reversal_classes(&g, ReversalMoves::PivotsAndCuts).unwrap();
        let reduced: Vec<(i64, Divisor)> = Fourientation::all(g.edge_count())
            .map(|o| {
                let d = divisor_of(&g, &o);
                (d.degree(), q_reduced(&g, &d, 0).unwrap())
            })
            .collect();
        for i in 0..reduced.len() {
            for j in 0..i {
                assert_eq!(classes[i] == classes[j], reduced[i] == reduced[j], "{g}");
            }
        }
    }
}

#[test]
fn bfs_agrees_with_union_find() {
    let g = corpus::triangle();
    let classes = reversal_classes(&g, ReversalMoves::PivotsAndCuts).unwrap();
    let a: Fourientation = "+u-".parse().unwrap();
    for b in Fourientation::all(3) {
        let same = classes[a.packed() as usize] == classes[b.packed() as usize];
        assert_eq!(reversal_equivalent(&g, &a, &b, ReversalMoves::PivotsAndCuts).unwrap(), same);
    }
    assert!(reversal_equivalent(&g, &a, &a, ReversalMoves::PivotsOnly).unwrap());
}

#[test]
fn complement_duality_on_corpus() {
    for g in small_corpus(5) {
        assert!(Fourientation::all(g.edge_count()).all(|o| riemann_roch_complement_check(&g, &o)));
    }
}

#[test]
fn type_reduction_respects_degree_bound() {
    for g in small_corpus(4) {
        let bound = g.cyclomatic_number() as i64 - 1;
        for o in Fourientation::all(g.edge_count()) {
            let d = divisor_of(&g, &o);
            for (target, ok) in [(TypeTarget::A, d.degree() <= bound), (TypeTarget::B, d.degree() >= bound)] {
                match type_reduce(&g, &o, target) {
                    Ok(r) => {
                        assert!(ok);
                        assert!(if target == TypeTarget::A { r.is_type_a() } else { r.is_type_b() });
                        assert!(linearly_equivalent(&g, &divisor_of(&g, &r), &d).unwrap());
                    }
                    Err(Error::Unrepresentable { .. }) => assert!(!ok, "{g} {o}"),
                    Err(e) => panic!("{g} {o}: {e}"),
                }
            }
        }
    }
}

#[test]
fn parking_counts_match_tutte() {
    for g in small_corpus(usize::MAX).into_iter().filter(|g| !g.has_loops()) {
        let t = tutte_polynomial(&g);
        let pf = parking_functions(&g, 0).unwrap();
        assert_eq!(int(pf.len() as i64), t.eval(&int(1), &int(1)), "{g}");
        let max = maximal_parking_functions(&g, 0).unwrap();
        assert_eq!(int(max.len() as i64), t.eval(&int(1), &int(0)), "{g}");
        let mut merino = vec![BigInt::from(0); g.cyclomatic_number() + 1];
        for (_, j, c) in t.terms() {
            merino[j] += c;
        }
        assert_eq!(merino_polynomial(&g, 0).unwrap(), Univariate::new(merino), "{g}");
    }
}

#[test]
fn maximal_parking_functions_come_from_unique_source_orientations() {
    for g in small_corpus(5).into_iter().filter(|g| !g.has_loops()) {
        let n = g.vertex_count();
        let mut from_orientations = BTreeSet::new();
        for bits in 0..1u64 << g.edge_count() {
            let signs: Vec<Sign> = (0..g.edge_count())
                .map(|e| if bits >> e & 1 == 0 { Sign::Plus } else { Sign::Minus })
                .collect();
            let o = Fourientation::total(&signs);
            let sources = (0..n).filter(|&v| reachable_set(&g, &o, 1 << v) == (1u64 << n) - 1).count();
            if is_acyclic(&g, &o) && is_q_connected(&g, &o, 0) && sources == 1 {
                let mut d = divisor_of(&g, &o);
                d.0[0] = 0;
                from_orientations.insert(d);
            }
        }
        let max: BTreeSet<Divisor> = maximal_parking_functions(&g, 0).unwrap().into_iter().collect();
        assert_eq!(max, from_orientations, "{g}");
    }
}

#[test]
fn cori_le_borgne_postconditions() {
    for g in small_corpus(usize::MAX).into_iter().filter(|g| !g.has_loops()) {
        let tree = RootedTree::breadth_first(&g, 0);
        let ctx = SubparkingContext::from_tree(&g, &tree).unwrap();
        let h = &ctx.graph;
        for c in parking_functions(h, 0).unwrap() {
            let o = cori_le_borgne(h, &ctx.tree, &c).unwrap();
            assert!(o.is_type_a());
            assert!(is_acyclic(h, &o));
            assert!(is_q_connected(h, &o, 0));
            let mut d = divisor_of(h, &o);
            d.0[0] = 0;
            assert_eq!(d, c, "{h}");
        }
    }
}

#[test]
fn cut_connected_is_q_connected_for_compatible_data() {
    let connected = CutProperty::named("connected").unwrap();
    for g in small_corpus(5) {
        let tree = RootedTree::breadth_first(&g, 0);
        let ctx = SubparkingContext::from_tree(&g, &tree).unwrap();
        let h = &ctx.graph;
        let index = CutCycleIndex::new(h);
        for o in Fourientation::all(h.edge_count()).filter(|o| o.is_type_a()) {
            assert_eq!(good_for_cut(&index, &o, connected), is_q_connected(h, &o, 0), "{h} {o}");
        }
    }
}

#[test]
fn conjecture_on_saturated_and_outerplanar_graphs() {
    let mut checked = BTreeMap::new();
    for c in default_corpus() {
        let g = &c.graph;
        let t = tutte_polynomial(g);
        if is_saturated(g) {
            let ctx = SubparkingContext::from_tree(g, &RootedTree::star(g, 0).unwrap()).unwrap();
            assert!(ctx.verify_conjecture(&t).unwrap().ok(), "star tree on {}", c.name);
            *checked.entry("saturated").or_insert(0) += 1;
        }
        if let Some(walk) = outerplanar_walk(g, 0) {
            if g.edge_count() > 10 {
                continue;
            }
            let tree = boundary_tree(g, 0, &walk).unwrap();
            let ctx = SubparkingContext::from_tree(g, &tree).unwrap();
            assert!(ctx.verify_conjecture(&t).unwrap().ok(), "boundary tree on {}", c.name);
            *checked.entry("outerplanar").or_insert(0) += 1;
        }
    }
    assert!(checked["saturated"] > 10 && checked["outerplanar"] > 100);
}

#[test]
fn tree_search_finds_a_witness_for_k4() {
    let g = corpus::complete(4);
    let found = search_conjecture_tree(&g, 0, &tutte_polynomial(&g)).unwrap();
    assert!(found.is_some());
    assert!(ordered_rooted_trees(&corpus::triangle(), 0).unwrap().len() == 4);
}

#[test]
fn invalid_inputs() {
    let g = corpus::triangle();
    let plus: Fourientation = "+++".parse().unwrap();
    assert!(edge_pivot(&g, &plus, (0, Sign::Plus), (0, Sign::Plus)).is_err());
    assert!(edge_pivot(&g, &plus, (0, Sign::Minus), (2, Sign::Minus)).is_err());
    let walk = [(0, Sign::Plus)];
    assert!(matches!(boundary_tree(&g, 0, &walk), Err(Error::InvalidWalk(_))));
    let child_first = RootedTree { root: 0, arcs: vec![(2, Sign::Plus), (0, Sign::Plus)] };
    assert!(!validate_tree(&g, &child_first));
    assert!(SubparkingContext::new(g.clone(), 0, child_first).is_err());
    assert_eq!(
        parking_functions(&corpus::cycle(1), 0),
        Err(Error::LoopsPresent)
    );
}

fn any_fourientation(m: usize) -> impl Strategy<Value = Fourientation> {
    proptest::collection::vec(0u64..4, m).prop_map(|v| {
        Fourientation::from_states(&v.into_iter().map(EdgeState::from_bits).collect::<Vec<_>>())
    })
}

proptest! {
    #[test]
    fn pivots_preserve_divisors(o in any_fourientation(5)) {
        let g = corpus::theta();
        for p in pivots(&g, &o) {
            prop_assert_eq!(divisor_of(&g, &p), divisor_of(&g, &o));
        }
    }

    #[test]
    fn laplacian_moves_are_linearly_equivalent(
        d in proptest::collection::vec(-4i64..5, 5),
        x in proptest::collection::vec(-3i64..4, 5),
    ) {
        let g = corpus::five_vertex_example();
        let d = Divisor(d);
        let moved = apply_laplacian(&g, &d, &x);
        prop_assert!(linearly_equivalent(&g, &d, &moved).unwrap());
        prop_assert_eq!(q_reduced(&g, &d, 0).unwrap(), q_reduced(&g, &moved, 0).unwrap());
    }
}

use std::collections::HashSet;

use dp5::classifier::golden_orbits;
use dp5::groups::{all_conjugacy_classes_of_subgroups, all_perms, orbits, Perm5};
use dp5::lattice::CurveId;
use dp5::petersen::{
    action_on_quadruples, all_graph_automorphisms, build_graph, maximal_disjoint_quadruples,
    sym5_to_graph_aut, Perm10,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn label_action_is_a_homomorphism(i in 0usize..120, j in 0usize..120) {
        let (a, b) = (Perm5::from_index(i), Perm5::from_index(j));
        prop_assert_eq!(sym5_to_graph_aut(&a.compose(&b)), sym5_to_graph_aut(&a).compose(&sym5_to_graph_aut(&b)));
    }
}

#[test]
fn automorphisms_form_a_group_of_order_120() {
    let auts: HashSet<Perm10> = all_graph_automorphisms().into_iter().collect();
    assert_eq!(auts.len(), 120);
    assert!(auts.contains(&Perm10::identity()));
    for a in &auts {
        assert!(auts.contains(&a.inverse()));
        for b in &auts {
            assert!(auts.contains(&a.compose(b)));
        }
    }
}

#[test]
fn vertex_transitive() {
    let reach: HashSet<CurveId> = all_graph_automorphisms()
        .iter()
        .map(|a| a.apply(CurveId::E1))
        .collect();
    assert_eq!(reach.len(), 10);
}

#[test]
fn injective_label_action() {
    let images: HashSet<Perm10> = all_perms().iter().map(sym5_to_graph_aut).collect();
    assert_eq!(images.len(), 120);
}

#[test]
fn quadruple_action_is_faithful_and_transitive() {
    let auts = all_graph_automorphisms();
    let kernel = auts
        .iter()
        .filter(|a| action_on_quadruples(a).unwrap().is_identity())
        .count();
    assert_eq!(kernel, 1);
    let reach: HashSet<u8> = auts
        .iter()
        .map(|a| action_on_quadruples(a).unwrap().apply(1))
        .collect();
    assert_eq!(reach.len(), 5);
    let g = build_graph();
    for q in maximal_disjoint_quadruples() {
        assert!(g.is_independent(&q));
    }
}

#[test]
fn figure_colorings_are_reproduced() {
    for (rep, golden) in all_conjugacy_classes_of_subgroups()
        .iter()
        .zip(golden_orbits())
    {
        let mut got = orbits(rep);
        let mut want = golden;
        for o in want.iter_mut() {
            o.sort();
        }
        got.sort();
        want.sort();
        assert_eq!(got, want, "class {}", rep.class_id);
    }
}

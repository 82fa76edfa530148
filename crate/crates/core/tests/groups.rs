use std::collections::{BTreeMap, HashSet};

use dp5::groups::{
    all_conjugacy_classes_of_subgroups, all_perms, all_subgroup_records, all_subgroups,
    centralizer, generate, identify, orbits, parse_generators, ElementSet, IsoType, Perm5,
    REPRESENTATIVES,
};
use proptest::prelude::*;

/// Independent census: close every set of at most two generators.
fn two_generator_closures() -> HashSet<ElementSet> {
    let mut out = HashSet::new();
    for a in all_perms() {
        for b in all_perms() {
            let mut s = ElementSet::singleton(a);
            s.insert(b);
            out.insert(s.closure());
        }
    }
    out
}

#[test]
fn subgroup_census_is_156_by_two_methods() {
    let oracle = two_generator_closures();
    assert_eq!(oracle.len(), 156);
    // Every subgroup of Sym5 is 2-generated; check closure-maximality: no
    // single element adjoined to any of them yields something new.
    for h in &oracle {
        for g in all_perms() {
            let mut ext = *h;
            ext.insert(g);
            assert!(oracle.contains(&ext.closure()));
        }
    }
    let fixpoint: HashSet<ElementSet> = all_subgroups().iter().copied().collect();
    assert_eq!(fixpoint, oracle);
}

#[test]
fn nineteen_classes() {
    let reps = all_conjugacy_classes_of_subgroups();
    assert_eq!(reps.len(), 19);
    let ids: HashSet<usize> = all_subgroup_records().iter().map(|r| r.class_id).collect();
    assert_eq!(ids.len(), 19);
    assert!(reps
        .iter()
        .any(|r| r.order() == 6 && r.contains(&"(1 2 3)(4 5)".parse().unwrap())));
}

#[test]
fn representatives_are_the_pinned_generator_groups() {
    for (i, (rep, pinned)) in all_conjugacy_classes_of_subgroups()
        .iter()
        .zip(&REPRESENTATIVES)
        .enumerate()
    {
        let gens = pinned.parsed_generators();
        assert_eq!(rep.element_set(), generate(&gens).element_set());
        assert_eq!(rep.class_id, i + 1);
    }
}

#[test]
fn conjugates_share_class_ids() {
    for h in all_subgroup_records() {
        for g in all_perms().iter().step_by(7) {
            let conj: Vec<Perm5> = h.elements.iter().map(|x| x.conjugate_by(g)).collect();
            assert_eq!(generate(&conj).class_id, h.class_id);
        }
    }
}

#[test]
fn signatures_separate_types() {
    let sigs: HashSet<_> = IsoType::ALL.iter().map(|t| t.signature()).collect();
    assert_eq!(sigs.len(), IsoType::ALL.len());
    let occurring: HashSet<IsoType> = all_subgroup_records()
        .iter()
        .map(|h| identify(h).unwrap())
        .collect();
    assert_eq!(occurring.len(), IsoType::ALL.len());
    for t in IsoType::ALL {
        assert_eq!(
            t.signature().2.iter().map(|&(_, n)| n).sum::<usize>(),
            t.order()
        );
    }
}

#[test]
fn centralizer_laws_on_every_subgroup() {
    let mut type_by_class: BTreeMap<usize, IsoType> = BTreeMap::new();
    for h in all_subgroup_records() {
        let c = centralizer(&h);
        assert_eq!(
            generate(&c.elements).element_set(),
            c.element_set(),
            "centralizer is a subgroup"
        );
        let cc = centralizer(&c);
        assert!(h.element_set().is_subset(&cc.element_set()));
        let t = identify(&c).unwrap();
        assert_eq!(
            *type_by_class.entry(h.class_id).or_insert(t),
            t,
            "class {}",
            h.class_id
        );
    }
}

#[test]
fn orbit_sizes_divide_the_group_order() {
    for h in all_subgroup_records() {
        let o = orbits(&h);
        assert_eq!(o.iter().map(Vec::len).sum::<usize>(), 10);
        assert!(o.iter().all(|x| h.order() % x.len() == 0));
    }
}

#[test]
fn centralizer_examples() {
    let c = centralizer(&generate(&parse_generators("(3 4)").unwrap()));
    assert_eq!((c.order(), identify(&c).unwrap()), (12, IsoType::S3xZ2));
    let c = centralizer(&generate(&parse_generators("(1 2)(3 4)").unwrap()));
    assert_eq!((c.order(), identify(&c).unwrap()), (8, IsoType::D4));
}

fn perm() -> impl Strategy<Value = Perm5> {
    (0usize..120).prop_map(Perm5::from_index)
}

proptest! {
    #[test]
    fn display_parse_round_trip(p in perm()) {
        prop_assert_eq!(p.to_string().parse::<Perm5>().unwrap(), p);
    }

    #[test]
    fn group_laws(a in perm(), b in perm(), c in perm()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
    }

    #[test]
    fn generated_order_divides_120(gs in prop::collection::vec(perm(), 0..4)) {
        let h = generate(&gs);
        prop_assert_eq!(120 % h.order(), 0);
        prop_assert!(h.contains(&Perm5::identity()));
    }
}

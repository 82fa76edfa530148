use dp5::classifier::lattice_map_of;
use dp5::groups::{all_perms, all_subgroups};
use dp5::lattice::{
    canonical_class, curve_class, fixed_rank, intersect, CurveId, DivisorClass, LatticeMap,
};
use proptest::prelude::*;

fn class() -> impl Strategy<Value = DivisorClass> {
    prop::array::uniform5(-20i64..=20).prop_map(DivisorClass)
}

proptest! {
    #[test]
    fn intersection_is_symmetric_and_bilinear(u in class(), v in class(), w in class(), a in -5i64..=5, b in -5i64..=5) {
        prop_assert_eq!(intersect(&u, &v), intersect(&v, &u));
        let lhs = intersect(&(a * u + b * v), &w);
        prop_assert_eq!(lhs, a * intersect(&u, &w) + b * intersect(&v, &w));
    }

    #[test]
    fn fixed_rank_never_grows(idx in prop::collection::vec(0usize..120, 0..6), extra in 0usize..120) {
        let maps: Vec<LatticeMap> = idx.iter().map(|&i| lattice_map_of(&all_perms()[i])).collect();
        let mut more = maps.clone();
        more.push(lattice_map_of(&all_perms()[extra]));
        prop_assert!(fixed_rank(&more) <= fixed_rank(&maps));
    }
}

#[test]
fn exactly_ten_minus_one_classes_in_the_box() {
    let k = canonical_class();
    let mut found = Vec::new();
    for a in -2..=2 {
        for b1 in -2..=2 {
            for b2 in -2..=2 {
                for b3 in -2..=2 {
                    for b4 in -2..=2 {
                        let d = DivisorClass::new(a, b1, b2, b3, b4);
                        if d.self_intersection() == -1 && intersect(&d, &k) == -1 {
                            found.push(d);
                        }
                    }
                }
            }
        }
    }
    let mut expected: Vec<DivisorClass> = CurveId::ALL.iter().map(|&c| curve_class(c)).collect();
    found.sort();
    expected.sort();
    assert_eq!(found, expected);
}

#[test]
fn every_induced_map_is_an_isometry_fixing_k() {
    for g in all_perms() {
        let m = lattice_map_of(g);
        assert!(m.preserves_form() && m.fixes_canonical(), "{g}");
        for a in CurveId::ALL {
            for b in CurveId::ALL {
                let (u, v) = (curve_class(a), curve_class(b));
                assert_eq!(intersect(&m.apply(&u), &m.apply(&v)), intersect(&u, &v));
            }
        }
    }
}

#[test]
fn transposition_4_5_sends_the_line_to_a_conic_class() {
    let m = lattice_map_of(&"(4 5)".parse().unwrap());
    assert_eq!(
        m.apply(&DivisorClass::line()),
        DivisorClass::new(2, -1, -1, -1, 0)
    );
}

#[test]
fn burnside_on_every_subgroup() {
    for h in all_subgroups() {
        let maps: Vec<LatticeMap> = h.iter().map(|g| lattice_map_of(&g)).collect();
        let trace_sum: i64 = maps.iter().map(LatticeMap::trace).sum();
        assert_eq!(fixed_rank(&maps) as i64 * maps.len() as i64, trace_sum);
    }
}

#[test]
fn fixed_rank_examples() {
    assert_eq!(fixed_rank(&[]), 5);
    let v: Vec<LatticeMap> = ["(1 2)", "(3 4)"]
        .iter()
        .map(|s| lattice_map_of(&s.parse().unwrap()))
        .collect();
    assert_eq!(fixed_rank(&v), 3);
    let all: Vec<LatticeMap> = all_perms().iter().map(lattice_map_of).collect();
    assert_eq!(fixed_rank(&all), 1);
}

use std::collections::BTreeSet;
use std::process::ExitCode;

use dp5::classifier::{
    classify_all, equivariant_aut_brute, equivariant_aut_via_centralizer, golden_orbits, GaloisCase,
};
use dp5::groups::{
    all_conjugacy_classes_of_subgroups, all_perms, all_subgroup_records, point_orbits, ElementSet,
    IsoType,
};
use dp5::petersen::{
    action_on_quadruples, all_graph_automorphisms, independent_sets_of_size,
    maximal_disjoint_quadruples,
};
use dp5::verify::{self, NamedCheck};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, ok_detail: impl Into<String>) -> Outcome {
    if problems.is_empty() {
        Outcome {
            passed: true,
            detail: ok_detail.into(),
        }
    } else {
        Outcome {
            passed: false,
            detail: problems.join("; "),
        }
    }
}

fn from_named(suites: &[NamedCheck]) -> Outcome {
    let problems = suites
        .iter()
        .flat_map(|s| {
            s.checks
                .iter()
                .filter(|c| !c.passed)
                .map(move |c| format!("{} / {} [{}]", s.name, c.name, c.detail))
        })
        .collect();
    let total: usize = suites.iter().map(|s| s.checks.len()).sum();
    outcome(problems, format!("{total} checks"))
}

fn subgroup_census() -> Outcome {
    let classes = all_conjugacy_classes_of_subgroups().len();
    let mut problems = Vec::new();
    if classes != 19 {
        problems.push(format!("{classes} conjugacy classes"));
    }
    // Independent count: every subgroup of Sym5 is generated by at most two elements.
    let mut two_gen: BTreeSet<ElementSet> = BTreeSet::new();
    let perms = all_perms();
    for a in perms.iter() {
        for b in perms.iter() {
            let mut s = ElementSet::singleton(a);
            s.insert(b);
            two_gen.insert(s.closure());
        }
    }
    if two_gen.len() != 156 {
        problems.push(format!("{} subgroups from pairs", two_gen.len()));
    }
    let records = all_subgroup_records().len();
    if records != 156 {
        problems.push(format!("{records} subgroups enumerated"));
    }
    outcome(problems, "19 classes, 156 subgroups")
}

const AUT_TYPES: [IsoType; 19] = [
    IsoType::S5,
    IsoType::S3xZ2,
    IsoType::D4,
    IsoType::Z2xZ2,
    IsoType::Z2xZ2,
    IsoType::Z6,
    IsoType::Z4,
    IsoType::Trivial,
    IsoType::Z2,
    IsoType::Trivial,
    IsoType::Z2,
    IsoType::Z6,
    IsoType::Z2,
    IsoType::Z2,
    IsoType::Z5,
    IsoType::Trivial,
    IsoType::Trivial,
    IsoType::Trivial,
    IsoType::Trivial,
];

fn aut_types(cases: &[GaloisCase]) -> Outcome {
    let problems = cases
        .iter()
        .zip(AUT_TYPES)
        .filter(|(c, t)| c.aut_type != *t)
        .map(|(c, t)| {
            format!(
                "{}: expected {t} got {}",
                c.subgroup.generator_string(),
                c.aut_type
            )
        })
        .collect();
    outcome(problems, "19 rows")
}

fn expected_rk_aut(class_id: usize) -> usize {
    match class_id {
        1 | 2 | 15..=19 => 1,
        4 => 3,
        _ => 2,
    }
}

fn rank_table(cases: &[GaloisCase]) -> Outcome {
    let mut problems = Vec::new();
    for c in cases {
        let id = c.subgroup.class_id;
        let h = c.subgroup.generator_string();
        if c.rk_ns_aut != expected_rk_aut(id) {
            problems.push(format!(
                "{h}: rk NS^Aut expected {} got {}",
                expected_rk_aut(id),
                c.rk_ns_aut
            ));
        }
        let transitive = point_orbits(&c.subgroup).len() == 1;
        if (c.rk_ns == 1) != transitive || (transitive != (15..=19).contains(&id)) {
            problems.push(format!(
                "{h}: rk NS = {} with {} orbits",
                c.rk_ns,
                c.orbit_partition.len()
            ));
        }
        if id == 1 && c.rk_ns != 5 {
            problems.push(format!("{h}: rk NS = {}", c.rk_ns));
        }
    }
    outcome(problems, "19 rows")
}

fn double_computation() -> Outcome {
    let records = all_subgroup_records();
    let problems = records
        .iter()
        .filter(|h| equivariant_aut_brute(h) != equivariant_aut_via_centralizer(h))
        .map(|h| h.generator_string())
        .collect();
    outcome(problems, format!("{} subgroups", records.len()))
}

fn petersen_structure() -> Outcome {
    let mut problems = Vec::new();
    let auts = all_graph_automorphisms();
    if auts.len() != 120 {
        problems.push(format!("|Aut| = {}", auts.len()));
    }
    let maximal = independent_sets_of_size(4);
    if maximal.len() != 5 || !independent_sets_of_size(5).is_empty() {
        problems.push(format!("{} independent 4-sets", maximal.len()));
    }
    let quads = maximal_disjoint_quadruples();
    let as_sets: BTreeSet<Vec<_>> = quads
        .iter()
        .map(|q| {
            let mut v = q.to_vec();
            v.sort();
            v
        })
        .collect();
    let found: BTreeSet<Vec<_>> = maximal
        .into_iter()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    if as_sets != found {
        problems.push("quadruples differ from the independent 4-sets".into());
    }
    let mut images = BTreeSet::new();
    let mut orbit_of_first = BTreeSet::new();
    for a in &auts {
        match action_on_quadruples(a) {
            Ok(g) => {
                images.insert(g);
                orbit_of_first.insert(g.apply(1));
            }
            Err(e) => problems.push(e.to_string()),
        }
    }
    if images.len() != auts.len() {
        problems.push(format!("action has {} distinct images", images.len()));
    }
    if orbit_of_first.len() != 5 {
        problems.push(format!(
            "orbit of one quadruple has size {}",
            orbit_of_first.len()
        ));
    }
    outcome(
        problems,
        "|Aut| = 120, 5 quadruples, faithful and transitive",
    )
}

fn orbit_partitions(cases: &[GaloisCase]) -> Outcome {
    let golden = golden_orbits();
    let problems = cases
        .iter()
        .zip(&golden)
        .filter(|(c, g)| {
            let norm = |p: &[Vec<_>]| {
                p.iter()
                    .map(|o| o.iter().copied().collect::<BTreeSet<_>>())
                    .collect::<BTreeSet<_>>()
            };
            norm(&c.orbit_partition) != norm(g)
        })
        .map(|(c, _)| c.subgroup.generator_string())
        .collect();
    let problems = if golden.len() == 19 {
        problems
    } else {
        vec![format!("{} transcribed rows", golden.len())]
    };
    outcome(problems, "19 partitions")
}

fn main() -> ExitCode {
    let seed = verify::seed_from_env();
    let cases = classify_all();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("subgroup census", subgroup_census()),
        ("equivariant automorphism types", aut_types(&cases)),
        ("invariant rank table", rank_table(&cases)),
        ("equivariant group double computation", double_computation()),
        ("Petersen structure", petersen_structure()),
        ("orbit partitions", orbit_partitions(&cases)),
        ("Noether relations", from_named(&verify::noether_suite())),
        (
            "phi order, base points and inverse",
            from_named(&[verify::phi5_order(seed)]),
        ),
        (
            "finite field examples and involutions",
            from_named(&[
                verify::f8_degree3_point(),
                verify::f16_degree4_point(),
                verify::a4_discriminant(),
                verify::a4_factorizations(),
                verify::prop1_involutions(),
                verify::prop2_involutions(),
            ]),
        ),
    ];
    println!("seed: {seed}");
    let mut failures = 0;
    for (i, (name, o)) in criteria.iter().enumerate() {
        let status = if o.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!o.passed);
        println!("{status} {} {name}: {}", i + 1, o.detail);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

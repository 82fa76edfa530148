use dp5::cli::{run, Outcome};
use dp5::report::parse_json_report;

fn dp5(args: &[&str]) -> Outcome {
    run(
        std::iter::once("dp5").chain(args.iter().copied()),
        dp5::verify::DEFAULT_SEED,
    )
}

#[test]
fn all_rows_json_round_trip() {
    let out = dp5(&["classify", "--all", "--format", "json"]);
    assert_eq!(out.code, 0);
    let rows = parse_json_report(&out.stdout).unwrap();
    assert_eq!(rows.len(), 19);
    assert_eq!(
        serde_json::to_string_pretty(&rows).unwrap() + "\n",
        out.stdout
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "--all", "--format", "csv"][..],
        &["verify"],
        &["graph", "--case", "z6", "--dot"],
    ] {
        assert_eq!(dp5(args), dp5(args));
    }
}

#[test]
fn golden_check_reports_the_transposition_row() {
    let out = dp5(&["classify", "--all", "--check-golden"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("class 2: rk_ns_aut expected 1 got 2"));
    let ok = dp5(&["classify", "--generators", "(1 2), (3 4)", "--check-golden"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
}

#[test]
fn verify_suites_pass_and_echo_the_seed() {
    for flag in ["--examples", "--noether", "--involutions"] {
        let out = dp5(&["verify", flag]);
        assert_eq!(out.code, 0, "{flag}: {}", out.stdout);
        assert!(out
            .stdout
            .starts_with(&format!("seed: {}", dp5::verify::DEFAULT_SEED)));
    }
    let out = dp5(&["verify"]);
    for name in [
        "F8-degree3-point",
        "F16-degree4-point",
        "phi5-order",
        "A4-discriminant",
        "A4-factorizations",
        "prop1-involutions",
        "prop2-involutions",
        "noether-all-120",
    ] {
        assert!(out.stdout.contains(&format!("PASS {name}")), "{name}");
    }
}

#[test]
fn graph_dot_output() {
    let out = dp5(&["graph", "--generators", "(1 2 3 4 5)", "--dot"]);
    assert_eq!(
        out.stdout.lines().filter(|l| l.contains(" -- ")).count(),
        15
    );
    let colors: std::collections::BTreeMap<&str, usize> = out
        .stdout
        .lines()
        .filter_map(|l| l.split("fillcolor=\"").nth(1))
        .fold(Default::default(), |mut m, rest| {
            *m.entry(&rest[..7]).or_default() += 1;
            m
        });
    assert_eq!(colors.values().copied().collect::<Vec<_>>(), vec![5, 5]);

    let out = dp5(&["graph", "--generators", "()", "--dot"]);
    assert_eq!(out.stdout.matches("comment=\"orbit").count(), 10);
    let distinct: std::collections::HashSet<&str> = out
        .stdout
        .lines()
        .filter_map(|l| l.split("comment=\"orbit ").nth(1))
        .collect();
    assert_eq!(distinct.len(), 10);
}

#[test]
fn unknown_flags_and_bad_cycles_exit_2() {
    assert_eq!(dp5(&["verify", "--everything"]).code, 2);
    assert_eq!(dp5(&["classify", "--generators", "(1 2"]).code, 2);
    assert_eq!(dp5(&["classify", "--case", "q8"]).code, 2);
    assert_eq!(dp5(&["frobnicate"]).code, 2);
}

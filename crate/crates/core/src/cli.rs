//! The `dp5` command line: `classify`, `verify`, `graph` and `cremona`.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::classifier::{
    classify_case, compare_with_golden, cremona_profile, golden_rows, theorem1_table, Mismatch,
};
use crate::groups::{
    all_perms, generate, named_case, parse_generators, GroupError, SubgroupRecord,
};
use crate::report::{emit_dot, emit_report, Format};
use crate::verify::{example_suite, involution_suite, noether_suite, NamedCheck};

#[derive(Parser, Debug)]
#[command(
    name = "dp5",
    version,
    about = "Galois actions on the ten lines of a quintic del Pezzo surface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one subgroup of Sym5 or all nineteen conjugacy classes.
    Classify(ClassifyArgs),
    /// Run verification suites over finite fields and the lattice.
    Verify(VerifyArgs),
    /// Print the incidence diagram colored by Galois orbits.
    Graph(GraphArgs),
    /// Cremona degree profiles of elements of Sym5.
    Cremona(CremonaArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["all", "generators", "case"])))]
struct ClassifyArgs {
    /// All nineteen pinned representatives.
    #[arg(long)]
    all: bool,
    /// Generators in cycle notation, separated by ',' or ';'.
    #[arg(long)]
    generators: Option<String>,
    /// A named representative such as d5, ga15, z6 or a class id 1..19.
    #[arg(long)]
    case: Option<String>,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    /// Compare against the transcribed table; exit 1 on any mismatch.
    #[arg(long)]
    check_golden: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    examples: bool,
    #[arg(long)]
    noether: bool,
    #[arg(long)]
    involutions: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").args(["generators", "case"])))]
struct GraphArgs {
    #[arg(long)]
    generators: Option<String>,
    #[arg(long)]
    case: Option<String>,
    /// Graphviz output instead of an orbit listing.
    #[arg(long)]
    dot: bool,
}

#[derive(Args, Debug)]
struct CremonaArgs {
    /// Elements in cycle notation; all 120 when omitted.
    #[arg(long)]
    elements: Option<String>,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, seed: u64) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Classify(a) => run_classify(a),
        Command::Verify(a) => run_verify(a, seed),
        Command::Graph(a) => run_graph(a),
        Command::Cremona(a) => run_cremona(a),
    }
}

fn subgroup_from(
    generators: Option<&str>,
    case: Option<&str>,
) -> Result<SubgroupRecord, GroupError> {
    match (generators, case) {
        (_, Some(name)) => named_case(name),
        (Some(g), None) => Ok(generate(&parse_generators(g)?)),
        (None, None) => Ok(generate(&[])),
    }
}

fn run_classify(a: ClassifyArgs) -> Outcome {
    let (cases, mismatches): (Vec<_>, Vec<Mismatch>) = if a.all {
        theorem1_table()
    } else {
        let h = match subgroup_from(a.generators.as_deref(), a.case.as_deref()) {
            Ok(h) => h,
            Err(e) => return Outcome::usage(e),
        };
        let case = classify_case(&h);
        let golden = &golden_rows()[h.class_id - 1];
        let diff = compare_with_golden(&case, golden)
            .into_iter()
            .filter(|m| m.field != "subgroup")
            .collect();
        (vec![case], diff)
    };
    let stdout = match emit_report(&cases, a.format) {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    if !a.check_golden {
        return Outcome::ok(stdout);
    }
    let mut stderr = String::new();
    for m in &mismatches {
        let _ = writeln!(stderr, "golden mismatch: {m}");
    }
    let _ = writeln!(
        stderr,
        "golden check: {} row(s), {} mismatch(es)",
        cases.len(),
        mismatches.len()
    );
    Outcome {
        code: i32::from(!mismatches.is_empty()),
        stdout,
        stderr,
    }
}

fn run_verify(a: VerifyArgs, seed: u64) -> Outcome {
    let everything = !(a.examples || a.noether || a.involutions);
    let mut suites: Vec<NamedCheck> = Vec::new();
    if a.examples || everything {
        suites.extend(example_suite(seed));
    }
    if a.noether || everything {
        suites.extend(noether_suite());
    }
    if a.involutions || everything {
        suites.extend(involution_suite());
    }
    let mut stdout = format!("seed: {seed}\n");
    let mut failed = Vec::new();
    for s in &suites {
        let status = if s.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(stdout, "{status} {}", s.name);
        for c in &s.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(stdout, "    {mark} {}", c.name);
            } else {
                let _ = writeln!(stdout, "    {mark} {} [{}]", c.name, c.detail);
            }
        }
        if !s.passed() {
            failed.push(s.name.clone());
        }
    }
    if failed.is_empty() {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: 1,
            stdout,
            stderr: format!("failed: {}\n", failed.join(", ")),
        }
    }
}

fn run_graph(a: GraphArgs) -> Outcome {
    let h = match subgroup_from(a.generators.as_deref(), a.case.as_deref()) {
        Ok(h) => h,
        Err(e) => return Outcome::usage(e),
    };
    let case = classify_case(&h);
    if a.dot {
        return Outcome::ok(emit_dot(&case));
    }
    let mut out = format!("H = {} (order {})\n", h.generator_string(), h.order());
    for (i, o) in case.orbit_partition.iter().enumerate() {
        let names: Vec<&str> = o.iter().map(|c| c.name()).collect();
        let _ = writeln!(out, "orbit {i}: {}", names.join(" "));
    }
    Outcome::ok(out)
}

fn run_cremona(a: CremonaArgs) -> Outcome {
    let elements = match a.elements.as_deref() {
        Some(s) => match parse_generators(s) {
            Ok(v) => v,
            Err(e) => return Outcome::usage(e),
        },
        None => all_perms().to_vec(),
    };
    let mut out = String::from("element\td\tm1\tm2\tm3\tm4\tnoether\n");
    let mut all_ok = true;
    for g in &elements {
        let c = cremona_profile(g);
        all_ok &= c.satisfies_noether();
        let [m1, m2, m3, m4] = c.multiplicities;
        let _ = writeln!(
            out,
            "{g}\t{}\t{m1}\t{m2}\t{m3}\t{m4}\t{}",
            c.degree,
            c.satisfies_noether()
        );
    }
    Outcome {
        code: i32::from(!all_ok),
        stdout: out,
        stderr: String::new(),
    }
}

use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = dp5::cli::run(std::env::args_os(), dp5::verify::seed_from_env());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}

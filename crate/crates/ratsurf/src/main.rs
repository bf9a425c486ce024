use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(ratsurf::cli::run(std::env::args()) as u8)
}

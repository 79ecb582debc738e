use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(sexpand::cli::run(std::env::args()) as u8)
}

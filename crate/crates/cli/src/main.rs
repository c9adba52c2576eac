use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(boundstate_cli::run(std::env::args_os()))
}

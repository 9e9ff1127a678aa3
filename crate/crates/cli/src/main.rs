use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(polybergman_cli::run(std::env::args_os()))
}

use std::process::ExitCode;

fn main() -> ExitCode {
    qdtorus::cli::run(std::env::args_os())
}

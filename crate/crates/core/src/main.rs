use std::process::ExitCode;

fn main() -> ExitCode {
    prirlab::cli::main_with_args(std::env::args_os())
}

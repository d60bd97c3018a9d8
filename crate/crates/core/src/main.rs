use std::process::ExitCode;

fn main() -> ExitCode {
    stfmm::cli::main_with_args(std::env::args_os())
}

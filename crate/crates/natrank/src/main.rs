use std::process::ExitCode;

fn main() -> ExitCode {
    natrank::cli::main()
}

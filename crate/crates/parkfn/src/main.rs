use std::process::ExitCode;

fn main() -> ExitCode {
    parkfn::cli::run()
}

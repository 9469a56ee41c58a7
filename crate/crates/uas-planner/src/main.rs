use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(uas_planner::cli::run())
}

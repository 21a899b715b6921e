use std::process::ExitCode;
use std::time::Instant;

use windlab_core::verify::{run_suite, threads_from_env};

fn main() -> ExitCode {
    let start = Instant::now();
    let results = run_suite("all", threads_from_env()).expect("suite `all` exists");
    let failed = results.iter().filter(|r| !r.passed).count();
    for r in &results {
        println!("{r}");
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

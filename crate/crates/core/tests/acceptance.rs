//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use tfpl_core::bijection::LocalRuleTable;
use tfpl_core::suite::run_suite;
use tfpl_core::Limits;

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria = match run_suite(Limits::default(), *LocalRuleTable::standard()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("acceptance suite aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    for c in &criteria {
        println!("{}", c.line());
    }
    let failed = criteria.iter().filter(|c| !c.pass).count();
    println!("acceptance: {} passed, {failed} failed in {:.1?}", criteria.len() - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::time::Instant;

use suzuki_census::oracle::{run_suite, Suite};

#[test]
fn sz8_suites_pass() {
    for suite in Suite::ALL {
        let start = Instant::now();
        let report = run_suite(suite, 3).unwrap();
        println!("{}: {} checks in {:?}", suite.name(), report.checks.len(), start.elapsed());
        assert!(report.passed(), "{:#?}", report.failures());
    }
}

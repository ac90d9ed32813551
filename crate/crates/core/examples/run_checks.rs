//! Running check groups from code with a JSON configuration.

use altq::config::RunConfig;
use altq::runner::{all_passed, run, to_json};

fn main() {
    let cfg = RunConfig::from_json(
        r#"{ "params": { "eps_plus": "2", "eps_minus": "q" }, "groups": ["ybe", "serre", "pbw"], "pbw_max_degree": 4 }"#,
    )
    .unwrap();
    let reports = run(&cfg);
    for r in &reports {
        println!("{:?} {}", r.status, r.check_id);
    }
    println!("all passed: {}", all_passed(&reports));
    println!("{} bytes of JSON", to_json(&reports).len());
}

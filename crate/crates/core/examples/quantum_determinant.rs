//! The quantum determinant and the central elements it generates.

use altq::fm::{determinant_report, sklyanin_delta};
use altq::FMParams;

fn main() {
    let params = FMParams::default();
    let sd = sklyanin_delta(3, &params).unwrap();
    for e in [-2, -4] {
        if let Some(c) = sd.delta.coeff((e, 0)) {
            println!("u^{e}: {c}\n");
        }
    }
    let report = determinant_report(3, &params);
    println!("{:?}\n{:#}", report.status, report.details);
}

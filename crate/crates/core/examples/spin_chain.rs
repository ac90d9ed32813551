//! Dressing the scalar seed by Lax operators of a small spin chain and checking
//! that the resulting matrices represent the algebra.

use altq::reps::{alt_ops, dress, reps_reports, DressConfig};
use altq::{FMParams, Gen, RatFuncQ};

fn main() {
    let config = DressConfig::new(
        &[1, 1],
        vec![RatFuncQ::from_int(1), RatFuncQ::from_ratio(2, 3)],
        FMParams::default(),
    )
    .unwrap();
    println!("{} acting on a space of dimension {}", config.label(), config.dim());

    let k = dress(&config);
    println!("K(u) top-left entry has {} terms", k.get(0, 0).terms().len());

    let ops = alt_ops(&config, 1);
    for g in [Gen::W0, Gen::W1, Gen::G(0)] {
        println!("{g} =\n{:?}", ops.get(g).unwrap());
    }
    for r in reps_reports(&config, 2, 2) {
        println!("{:?} {}", r.status, r.check_id);
    }
}

//! Alternating generators as polynomials in W0, W1 and the central elements.

use altq::generators::{build_generators, central_delta, qserre_consequence};
use altq::{FMParams, Gen};

fn main() {
    let rho = FMParams::default().rho_bar().clone();
    let t = build_generators(1, &rho);
    for g in [Gen::G(0), Gen::Gt(0), Gen::Wm(1), Gen::Wp(1)] {
        println!("{g} = {}\n", t.get(g).unwrap());
    }
    for n in 0..2 {
        let d = central_delta(n, &rho);
        println!("D{} = {d}", n + 1);
        println!("  in W0, W1: {}\n", t.substitute(&d));
    }
    let serre = qserre_consequence(&rho);
    println!("q-Serre from the recursion: {:?}", serre.status);
    println!("{:#}", serre.details);
}

//! The defining relations of the alternating algebra and its two symmetries.

use altq::{defining_relations, derived_relations, FMParams, Gen, NCPoly};

fn main() {
    let rho = FMParams::default().rho_bar().clone();
    println!("rho = {rho}");
    let defining = defining_relations(1, &rho);
    println!("{} defining instances with indices <= 1:", defining.len());
    for r in defining.iter().take(8) {
        println!("  {:<14} {}", r.label, r.poly);
    }
    println!("{} derived instances", derived_relations(1, &rho).len());

    let p = &NCPoly::word(&[Gen::Wm(1), Gen::G(0)]) + &NCPoly::gen(Gen::Wp(0));
    println!("p        = {p}");
    println!("sigma(p) = {}", p.apply_sigma().unwrap());
    println!("S(p)     = {}", p.apply_s().unwrap());
}

//! Root vectors in E0, E1 and their dictionary with the alternating generators.

use altq::roots::{build_root_vectors, iota, iota_images, verify_dictionary};
use altq::{Gen, NCPoly};

fn main() {
    let t = build_root_vectors(2).unwrap();
    println!("E_delta     = {}", t.e_delta());
    println!("E_delta+a0  = {}", t.real0[1]);
    println!("E_2delta    = {}", t.e_k_delta(2));

    let images = iota_images(1);
    let g1 = NCPoly::gen(Gen::G(0));
    println!("iota(G1)    = {}", iota(&g1, &images));

    let report = verify_dictionary();
    println!("{:?}\n{:#}", report.status, report.details["e_delta_inverse"]);
}

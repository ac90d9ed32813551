//! The q -> 1 limit: classical r-matrices, the loop algebra realization and the
//! specialized generators.

use altq::classical::{
    check_cybe, check_ns_cybe, classical_fm_equivalence, loop_image, loop_realization_check,
    specialize_generators_q1, Side,
};
use altq::Gen;

fn main() {
    println!("non-standard CYBE: {:?}", check_ns_cybe().status);
    println!("CYBE: {:?}", check_cybe().status);
    let c = classical_fm_equivalence(2).unwrap();
    println!("matrix presentation at order 2: same span {}", c.equal());

    for g in [Gen::Wm(1), Gen::Wp(1), Gen::G(1)] {
        println!("{g} -> {:?}", loop_image(g, Side::Right).terms());
    }
    println!("loop realization: {:?}", loop_realization_check(3).status);

    let t = specialize_generators_q1(1).unwrap();
    for g in [Gen::G(0), Gen::Wm(1)] {
        println!("{g} at q = 1: {}", t[&g]);
    }
}

//! Exact arithmetic in Q(q^{1/2}): q-integers, evaluation, symmetric functions.

use altq::scalar::{consts, elementary_symmetric, qbracket};
use altq::RatFuncQ;
use num_rational::BigRational;

fn main() {
    for n in 0..=4 {
        println!("[{n}] = {}", qbracket(n));
    }
    let f: RatFuncQ = "(q^3 + 2)/(q - 1)".parse().unwrap();
    println!("f = {f}, f(q -> q^-1) = {}", f.invert_s());

    let two = BigRational::from_integer(2.into());
    println!("[3] at s = 2 (q = 4): {}", qbracket(3).eval_at(&two).unwrap());
    let one = BigRational::from_integer(1.into());
    match consts::qm().inv().eval_at(&one) {
        Ok(v) => println!("1/(q - q^-1) at q = 1: {v}"),
        Err(e) => println!("1/(q - q^-1) at q = 1: {e}"),
    }

    let vals = [RatFuncQ::q(), RatFuncQ::from_int(2), RatFuncQ::q_pow(-1)];
    for k in 0..=3 {
        println!("e_{k}(q, 2, q^-1) = {}", elementary_symmetric(k, &vals).unwrap());
    }
}

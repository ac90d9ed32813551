//! Graded dimensions from the product formula against ordered monomials.

use altq::pbw::{census, hilbert_phi, pbw_monomials, Basis};

fn main() {
    let d = 6;
    let phi = hilbert_phi(d);
    for i in 0..=d {
        let row: Vec<String> = (0..=d - i).map(|j| format!("{:>4}", phi.get(i, j))).collect();
        println!("{}", row.join(""));
    }
    println!("census agrees: {}", census(d, Basis::Central) == phi);
    let at11: Vec<_> = pbw_monomials(2, Basis::Central)
        .into_iter()
        .filter(|w| w.len() <= 2 && w.iter().map(|g| g.deg()).fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1)) == (1, 1))
        .collect();
    println!("degree (1,1): {at11:?}");
}

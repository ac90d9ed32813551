//! The R-matrix, the Yang-Baxter equation and the matrix presentation of the
//! algebra read off order by order.

use altq::fm::{check_ybe, extract_fm_relations, fm_equivalence, Variant};
use altq::FMParams;

fn main() {
    println!("Yang-Baxter: {:?}", check_ybe().status);
    let params = FMParams::default();
    let rels = extract_fm_relations(2, &params, Variant::Re).unwrap();
    println!("{} relations from the order-2 expansion, e.g.", rels.len());
    for r in rels.iter().take(4) {
        println!("  {}: {}", r.label, r.poly);
    }
    for variant in [Variant::Re, Variant::Rep] {
        let eq = fm_equivalence(3, &params, variant).unwrap();
        let c = &eq.comparison;
        println!(
            "{variant:?} at order 3: rank {} vs {}, same span: {}",
            c.rank_a,
            c.rank_b,
            c.equal()
        );
    }
}

//! Graded dimensions of the alternating algebra and census of its ordered
//! (PBW) monomials.
//!
//! ```text
//! Phi(l, m) = H(l, m) Z(l, m)
//! H = prod_{n>=1} 1/((1 - l^n m^{n-1})(1 - l^{n-1} m^n)(1 - l^n m^n))
//! Z = prod_{n>=1} 1/(1 - l^n m^n)
//! ```
//!
//! `Phi` counts ordered monomials in `W_{-k} < G_{l+1} < G~_{m+1} < W_{n+1}`;
//! `H` counts those of the quotient without central elements, generated by
//! `W_{-k}, G_{l+1}, W_{n+1}`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use crate::free::Gen;
use crate::report::CheckReport;

/// Coefficients `d_{i,j}` on the grid `i + j <= max_total`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiSeries {
    pub max_total: u32,
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl BiSeries {
    /// The constant series `1`.
    pub fn one(max_total: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        for i in 0..=max_total {
            for j in 0..=max_total - i {
                coeffs.insert((i, j), 0);
            }
        }
        coeffs.insert((0, 0), 1);
        BiSeries { max_total, coeffs }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(k, v)| (*k, *v))
    }

    /// Multiply by `1/(1 - l^a m^b)`, `(a, b) != (0, 0)`.
    pub fn mul_geometric(&mut self, (a, b): (u32, u32)) {
        assert!(a + b > 0);
        // in place, increasing degree: d'_{i,j} = d_{i,j} + d'_{i-a,j-b}
        let keys: Vec<(u32, u32)> = self.coeffs.keys().copied().collect();
        let mut sorted = keys;
        sorted.sort_by_key(|&(i, j)| (i + j, i));
        for (i, j) in sorted {
            if i >= a && j >= b {
                let prev = self.get(i - a, j - b);
                *self.coeffs.get_mut(&(i, j)).unwrap() += prev;
            }
        }
    }

    /// `d_{i,j} = d_{j,i}` on the whole grid.
    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|((i, j), d)| self.get(j, i) == d)
    }
}

fn product(max_total: u32, central: bool) -> BiSeries {
    let mut s = BiSeries::one(max_total);
    for n in 1..=max_total {
        s.mul_geometric((n, n - 1));
        s.mul_geometric((n - 1, n));
        s.mul_geometric((n, n));
        if central {
            s.mul_geometric((n, n));
        }
    }
    s
}

/// `Phi = H Z` truncated to `i + j <= max_total`.
pub fn hilbert_phi(max_total: u32) -> BiSeries {
    product(max_total, true)
}

/// `H` alone: graded dimensions of the quotient by the central elements.
pub fn hilbert_h(max_total: u32) -> BiSeries {
    product(max_total, false)
}

/// Which algebra and linear order the monomials are ordered by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// `W_{-k} < G_{l+1} < G~_{m+1} < W_{n+1}`.
    Central,
    /// `W_{-k} < G_{l+1} < W_{n+1}`.
    QuotientMinusFirst,
    /// `W_{k+1} < G_{l+1} < W_{-n}`.
    QuotientPlusFirst,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Central, Basis::QuotientMinusFirst, Basis::QuotientPlusFirst];

    /// Generators of total degree `<= max_total`, listed in increasing order;
    /// within a family by increasing index.
    pub fn ordered_generators(self, max_total: u32) -> Vec<Gen> {
        let family = |f: fn(u32) -> Gen| -> Vec<Gen> {
            (0..max_total)
                .map(f)
                .filter(|g| {
                    let (i, j) = g.deg();
                    i + j <= max_total
                })
                .collect()
        };
        let (wm, g, gt, wp) = (family(Gen::Wm), family(Gen::G), family(Gen::Gt), family(Gen::Wp));
        match self {
            Basis::Central => [wm, g, gt, wp].concat(),
            Basis::QuotientMinusFirst => [wm, g, wp].concat(),
            Basis::QuotientPlusFirst => [wp, g, wm].concat(),
        }
    }
}

/// Every non-decreasing word in the order of `basis` with total degree `<= max_total`.
pub fn pbw_monomials(max_total: u32, basis: Basis) -> Vec<Vec<Gen>> {
    fn go(gens: &[Gen], start: usize, budget: u32, word: &mut Vec<Gen>, out: &mut Vec<Vec<Gen>>) {
        out.push(word.clone());
        for (i, g) in gens.iter().enumerate().skip(start) {
            let (a, b) = g.deg();
            if a + b <= budget {
                word.push(*g);
                go(gens, i, budget - a - b, word, out);
                word.pop();
            }
        }
    }
    let gens = basis.ordered_generators(max_total);
    let mut out = Vec::new();
    go(&gens, 0, max_total, &mut Vec::new(), &mut out);
    out
}

/// Ordered monomials counted by degree.
pub fn census(max_total: u32, basis: Basis) -> BiSeries {
    let mut s = BiSeries::one(max_total);
    s.coeffs.insert((0, 0), 0);
    for w in pbw_monomials(max_total, basis) {
        let deg = w.iter().fold((0, 0), |(i, j), g| {
            let (a, b) = g.deg();
            (i + a, j + b)
        });
        *s.coeffs.get_mut(&deg).expect("degree within the grid") += 1;
    }
    s
}

fn mismatches(a: &BiSeries, b: &BiSeries) -> Vec<serde_json::Value> {
    a.iter()
        .filter(|(k, d)| b.get(k.0, k.1) != *d)
        .map(|((i, j), d)| json!({ "degree": [i, j], "census": d, "series": b.get(i, j) }))
        .collect()
}

fn grid(s: &BiSeries) -> Vec<serde_json::Value> {
    s.iter().map(|((i, j), d)| json!([i, j, d])).collect()
}

/// Census against the series for both algebras and every listed order.
pub fn pbw_reports(max_total: u32) -> Vec<CheckReport> {
    let phi = hilbert_phi(max_total);
    let h = hilbert_h(max_total);
    let central = census(max_total, Basis::Central);
    let bad = mismatches(&central, &phi);
    let mut out = vec![CheckReport::new(
        "pbw.census.central",
        "ordered monomials in W_{-k} < G_{l+1} < G~_{m+1} < W_{n+1} are counted by Phi = H Z",
        bad.is_empty() && phi.is_symmetric(),
        json!({
            "max_total_degree": max_total,
            "d_1_1": phi.get(1, 1),
            "symmetric": phi.is_symmetric(),
            "mismatches": bad,
            "grid": grid(&phi),
        }),
    )];
    let minus = census(max_total, Basis::QuotientMinusFirst);
    let plus = census(max_total, Basis::QuotientPlusFirst);
    let bad = mismatches(&minus, &h);
    let orders_agree = minus == plus;
    out.push(CheckReport::new(
        "pbw.census.quotient",
        "ordered monomials in W_{-k} < G_{l+1} < W_{n+1} and in W_{k+1} < G_{l+1} < W_{-n} are counted by H",
        bad.is_empty() && orders_agree,
        json!({
            "max_total_degree": max_total,
            "d_1_1": minus.get(1, 1),
            "orders_agree": orders_agree,
            "mismatches": bad,
            "grid": grid(&h),
        }),
    ));
    out
}

//! Runs the selected check groups and merges their reports.

use crate::classical;
use crate::config::{Group, RunConfig};
use crate::fm::{self, Variant};
use crate::generators;
use crate::pbw;
use crate::report::CheckReport;
use crate::reps::{self, SpinRep};
use crate::roots;

/// Reports of one group, in no particular order.
pub fn run_group(group: Group, cfg: &RunConfig) -> Vec<CheckReport> {
    let rho = cfg.params.rho_bar();
    match group {
        Group::Ybe => vec![fm::check_ybe()],
        Group::Fm => vec![
            fm::fm_report(cfg.order, &cfg.params, Variant::Re),
            fm::fm_report(cfg.order, &cfg.params, Variant::Rep),
        ],
        Group::Determinant => {
            let mut out = vec![fm::determinant_report(cfg.order, &cfg.params)];
            out.extend(cfg.dress.iter().map(|c| reps::gamma_check(c, cfg.k_max)));
            out
        }
        Group::Reps => {
            let mut out = Vec::new();
            let mut spins: Vec<u32> = cfg.dress.iter().flat_map(|c| c.sites.iter().map(|s| s.two_j())).collect();
            spins.sort();
            spins.dedup();
            for two_j in spins {
                let rep = SpinRep::new(two_j);
                out.push(rep.check());
                out.push(reps::yang_baxter_lax(&rep));
            }
            for c in &cfg.dress {
                out.push(reps::closed_form_check(c));
                out.push(reps::re_check(c));
                out.push(reps::relations_in_rep(c, cfg.k_max));
                out.push(reps::linear_relations_check(c, cfg.p_max));
            }
            out
        }
        Group::Classical => vec![
            classical::check_ns_cybe(),
            classical::check_cybe(),
            classical::classical_fm_report(cfg.order),
            classical::loop_realization_check(cfg.loop_k_max),
            classical::specialization_check(cfg.specialization_n_max),
        ],
        Group::Dictionary => vec![roots::verify_dictionary()],
        Group::Pbw => pbw::pbw_reports(cfg.pbw_max_degree),
        Group::Serre => vec![generators::qserre_consequence(rho), generators::examples_report(rho)],
    }
}

/// Every selected group, run concurrently; reports sorted by id.
pub fn run(cfg: &RunConfig) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = std::thread::scope(|s| {
        let handles: Vec<_> = cfg
            .groups
            .iter()
            .map(|g| s.spawn(move || run_group(*g, cfg)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("check group panicked"))
            .collect()
    });
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}

/// Deterministic JSON document: an array of reports.
pub fn to_json(reports: &[CheckReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

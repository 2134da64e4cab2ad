//! Verification workflows bundling the individual checks, shared by the command line
//! and the acceptance tests.

use std::time::Instant;

use crate::cartan::{check_clearing_identity, check_reflected_identity, g_coeffs, CartanData, RootDegree};
use crate::double;
use crate::error::Result;
use crate::modes::{bimodule_axiom_suite, coalgebra_axiom_suite, TruncationPolicy};
use crate::pairing::{
    annihilator_check, check_base_values, compare_with_oracle, gram_report, pairing_axiom_suite, r1_instances,
    r2_instances, r3_instances, rel13_instances, serre_instances, Evaluator, PairingConvention, Relation,
};
use crate::report::VerificationReport;
use crate::shuffle;

/// Shared parameters of every workflow.
#[derive(Clone, Debug)]
pub struct Config {
    pub cartan: CartanData,
    pub n_tail: u64,
    pub window: i64,
    pub convention: PairingConvention,
    pub central_quotient: bool,
}

impl Config {
    pub fn new(cartan: CartanData) -> Self {
        Config { cartan, n_tail: 6, window: 1, convention: PairingConvention::QPlus, central_quotient: false }
    }

    pub fn policy(&self) -> TruncationPolicy {
        TruncationPolicy::new(self.n_tail, self.window)
    }
}

/// Runs `f`, filling in elapsed milliseconds when `timing` is set.
pub fn timed(timing: bool, f: impl FnOnce() -> Result<Vec<VerificationReport>>) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let mut reports = f()?;
    if timing {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut reports {
            r.millis.get_or_insert(ms);
        }
    }
    Ok(reports)
}

/// Clearing and reflected identities of every `g`-series up to order `n_tail`.
pub fn g_suite(cfg: &Config) -> Result<Vec<VerificationReport>> {
    let n = cfg.n_tail as usize;
    let mut out = Vec::new();
    for i in cfg.cartan.nodes() {
        for j in cfg.cartan.nodes() {
            let g = g_coeffs(&cfg.cartan, i, j, n)?;
            out.push(check_clearing_identity(&g, n));
            out.push(check_reflected_identity(&g, n));
        }
    }
    Ok(out)
}

fn family_report(
    ev: &mut Evaluator<'_>,
    cfg: &Config,
    family: &str,
    rels: &[Relation],
    max_cartan: usize,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("annihilator-{family}"))
        .param("cartan", cfg.cartan.name())
        .param("convention", cfg.convention)
        .param("window", cfg.window)
        .param("max_cartan_letters", max_cartan);
    let mut opponents = 0usize;
    for rel in rels {
        let r = annihilator_check(ev, rel, cfg.window, max_cartan)?;
        if let Some(n) = r.notes.iter().find_map(|n| n.split(' ').next()?.parse::<usize>().ok()) {
            opponents += n;
        }
        if !r.passed() {
            report.fail(format!("{}: {}", rel.name, r.witness.unwrap_or_default()));
        }
    }
    report.note(format!("{} instances, {opponents} pairings", rels.len()));
    Ok(report)
}

/// Annihilator membership of the relation instances in the mode window.
pub fn relations_suite(cfg: &Config, max_cartan: usize) -> Result<Vec<VerificationReport>> {
    let c = &cfg.cartan;
    let w = cfg.window;
    let mut ev = Evaluator::new(c, cfg.convention);
    let mut serre = Vec::new();
    for i in c.nodes() {
        for j in c.nodes().filter(|&j| j != i) {
            serre.extend(serre_instances(c, i, j, w)?);
        }
    }
    let families: [(&str, Vec<Relation>); 5] = [
        ("r1", r1_instances(c)),
        ("r2", r2_instances(c, w)),
        ("r3", r3_instances(c, w)),
        ("relation13", rel13_instances(c, w)),
        ("serre", serre),
    ];
    families.iter().map(|(name, rels)| family_report(&mut ev, cfg, name, rels, max_cartan)).collect()
}

/// Base values against closed forms, then the fast evaluator against the axiom oracle.
pub fn pairing_compare_suite(cfg: &Config, max_x: i64, max_cartan: usize) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        check_base_values(&cfg.cartan, cfg.convention, cfg.window)?,
        compare_with_oracle(&cfg.cartan, cfg.convention, max_x, cfg.window, max_cartan)?,
    ])
}

/// Gram probes at the given degrees and mode sums.
pub fn gram_suite(cfg: &Config, degrees: &[RootDegree], modesums: &[i64]) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in degrees {
        for &m in modesums {
            out.push(gram_report(&cfg.cartan, cfg.convention, d, m, cfg.window)?.1);
        }
    }
    Ok(out)
}

/// Exchange rules against the oracle, centrality, associativity, embeddings, the
/// commutator shape and the `h`-series identity.
pub fn double_suite(cfg: &Config) -> Result<Vec<VerificationReport>> {
    let c = &cfg.cartan;
    let conv = cfg.convention;
    let small = cfg.window.min(1);
    Ok(vec![
        double::compare_rules_oracle(c, conv, cfg.window, cfg.n_tail, cfg.central_quotient)?,
        double::check_centrality(c, conv, cfg.window, cfg.n_tail)?,
        double::check_associativity(c, conv, small)?,
        double::check_embeddings(c, conv, cfg.window)?,
        double::check_commutator_shape(c, conv, cfg.window),
        double::check_h_series(c, cfg.n_tail as usize),
    ])
}

/// Coalgebra, Hopf-bimodule and pairing axioms.
pub fn axioms_suite(cfg: &Config) -> Result<Vec<VerificationReport>> {
    let policy = cfg.policy();
    let mut out = coalgebra_axiom_suite(&cfg.cartan, &policy);
    out.extend(bimodule_axiom_suite(&cfg.cartan, &policy)?);
    out.extend(pairing_axiom_suite(&cfg.cartan, cfg.convention, &policy)?);
    Ok(out)
}

/// Serre vanishing in the shuffle algebra, optionally for a single node pair.
pub fn serre_suite(cfg: &Config, pair: Option<(usize, usize)>) -> Result<Vec<VerificationReport>> {
    match pair {
        None => Ok(vec![shuffle::check_serre(&cfg.cartan)?]),
        Some((i, j)) => {
            let c = &cfg.cartan;
            let e = shuffle::serre_element(c, i, j)?;
            let mut r = VerificationReport::new("serre-vanishing")
                .param("cartan", c.name())
                .param("pair", format!("({i},{j})"))
                .param("sym", "sum");
            r.note(format!("a_ij={} tensors={}", c.a(i, j), e.num_tensors()));
            if let Some(w) = e.nonzero_witness() {
                r.fail(format!("nonzero on weight {w:?}"));
            }
            Ok(vec![r])
        }
    }
}

/// Braid equation and independence of the lift from the reduced word.
pub fn braid_suite(cfg: &Config, max_len: usize) -> Result<Vec<VerificationReport>> {
    Ok(vec![shuffle::check_braid_equation(&cfg.cartan)?, shuffle::check_reduced_words(&cfg.cartan, max_len)?])
}

pub fn relation13_suite(cfg: &Config) -> Result<Vec<VerificationReport>> {
    Ok(vec![shuffle::check_relation13(&cfg.cartan)?])
}

/// Shuffle associativity on random triples and the mode/current consistency check.
pub fn shuffle_suite(cfg: &Config, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        shuffle::check_associativity(&cfg.cartan, samples, 5, seed)?,
        shuffle::check_mode_consistency(&cfg.cartan, cfg.window, cfg.n_tail as usize)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_at_window_one() {
        let cfg = Config::new(CartanData::preset("A2").unwrap());
        let reports = relations_suite(&cfg, 1).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(VerificationReport::passed), "{reports:?}");
    }
}

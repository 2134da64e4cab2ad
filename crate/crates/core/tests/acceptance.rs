//! Acceptance criteria, one pass/fail line each. Runs as a plain binary so the
//! lines appear without `--nocapture`; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qshuffle::cartan::RootDegree;
use qshuffle::double;
use qshuffle::modes::{bimodule_axiom_suite, coalgebra_axiom_suite};
use qshuffle::pairing::check_base_values;
use qshuffle::report::VerificationReport;
use qshuffle::shuffle;
use qshuffle::suite::*;
use qshuffle::{CartanData, Result};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<Vec<VerificationReport>>,
}

fn cfg(name: &str) -> Config {
    Config::new(CartanData::preset(name).expect("preset"))
}

fn serre_a2() -> Result<Vec<VerificationReport>> {
    serre_suite(&cfg("A2"), None)
}

fn serre_b2_g2() -> Result<Vec<VerificationReport>> {
    let mut out = serre_suite(&cfg("B2"), None)?;
    out.extend(serre_suite(&cfg("G2"), None)?);
    Ok(out)
}

fn relation13_all() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for name in ["A2", "B2", "G2"] {
        out.extend(relation13_suite(&cfg(name))?);
    }
    Ok(out)
}

fn braid_a2() -> Result<Vec<VerificationReport>> {
    braid_suite(&cfg("A2"), 4)
}

fn shuffle_associativity() -> Result<Vec<VerificationReport>> {
    Ok(vec![shuffle::check_associativity(&cfg("A2").cartan, 100, 5, 1)?])
}

fn golden_values() -> Result<Vec<VerificationReport>> {
    let c = cfg("A2");
    let mut out = vec![check_base_values(&c.cartan, c.convention, 3)?];
    out.extend(g_suite(&c)?);
    Ok(out)
}

fn annihilator_window3() -> Result<Vec<VerificationReport>> {
    let mut c = cfg("A2");
    c.window = 3;
    relations_suite(&c, 1)
}

fn pairing_vs_oracle() -> Result<Vec<VerificationReport>> {
    let mut c = cfg("A2");
    c.window = 2;
    pairing_compare_suite(&c, 3, 1)
}

fn double_rules() -> Result<Vec<VerificationReport>> {
    let c = cfg("A2");
    Ok(vec![double::compare_rules_oracle(&c.cartan, c.convention, 3, c.n_tail, false)?])
}

fn centrality() -> Result<Vec<VerificationReport>> {
    let c = cfg("A2");
    Ok(vec![double::check_centrality(&c.cartan, c.convention, 3, c.n_tail)?])
}

fn coalgebra() -> Result<Vec<VerificationReport>> {
    let mut c = cfg("A2");
    c.window = 3;
    Ok(coalgebra_axiom_suite(&c.cartan, &c.policy()))
}

fn bimodule() -> Result<Vec<VerificationReport>> {
    let mut c = cfg("A2");
    c.window = 3;
    bimodule_axiom_suite(&c.cartan, &c.policy())
}

fn gram_probe() -> Result<Vec<VerificationReport>> {
    let c = cfg("A2");
    let degrees = [RootDegree(vec![1, 0]), RootDegree(vec![1, 1])];
    gram_suite(&c, &degrees, &[-1, 0, 1])
}

fn mode_consistency() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for name in ["A2", "B2"] {
        let c = cfg(name);
        out.push(shuffle::check_mode_consistency(&c.cartan, 2, c.n_tail as usize)?);
    }
    Ok(out)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "Serre vanishing, A2", budget: Duration::from_secs(1), run: serre_a2 },
    Criterion { id: 2, title: "Serre vanishing, B2 and G2", budget: Duration::from_secs(300), run: serre_b2_g2 },
    Criterion {
        id: 3,
        title: "quadratic exchange image vanishes",
        budget: Duration::from_secs(1),
        run: relation13_all,
    },
    Criterion { id: 4, title: "braid equation and reduced words, A2", budget: Duration::from_secs(10), run: braid_a2 },
    Criterion {
        id: 5,
        title: "shuffle associativity, 100 triples",
        budget: Duration::from_secs(60),
        run: shuffle_associativity,
    },
    Criterion { id: 6, title: "pairing base values", budget: Duration::from_secs(1), run: golden_values },
    Criterion {
        id: 7,
        title: "annihilator suite, window 3",
        budget: Duration::from_secs(300),
        run: annihilator_window3,
    },
    Criterion {
        id: 8,
        title: "pairing evaluator against oracle",
        budget: Duration::from_secs(300),
        run: pairing_vs_oracle,
    },
    Criterion {
        id: 9,
        title: "double exchange rules against oracle",
        budget: Duration::from_secs(300),
        run: double_rules,
    },
    Criterion { id: 10, title: "centrality", budget: Duration::from_secs(10), run: centrality },
    Criterion { id: 11, title: "coalgebra axioms", budget: Duration::from_secs(60), run: coalgebra },
    Criterion { id: 12, title: "Hopf bimodule axioms", budget: Duration::from_secs(60), run: bimodule },
    Criterion { id: 13, title: "Gram non-degeneracy probe", budget: Duration::from_secs(120), run: gram_probe },
    Criterion { id: 14, title: "mode/current consistency", budget: Duration::from_secs(60), run: mode_consistency },
];

fn main() -> ExitCode {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let detail = match &outcome {
            Err(e) => Some(format!("error: {e}")),
            Ok(reports) => match reports.iter().find(|r| !r.passed()) {
                Some(r) => Some(format!("{}: {}", r.check, r.witness.clone().unwrap_or_default())),
                None if reports.is_empty() => Some("no reports produced".into()),
                None if elapsed > c.budget => Some(format!("over budget of {:?}", c.budget)),
                None => None,
            },
        };
        let status = if detail.is_none() { "PASS" } else { "FAIL" };
        let checks = outcome.as_ref().map(|r| r.len()).unwrap_or(0);
        let mut line =
            format!("criterion {:>2} {status} {} ({checks} checks, {:.2}s)", c.id, c.title, elapsed.as_secs_f64());
        if let Some(d) = detail {
            failed += 1;
            line.push_str(&format!(" :: {d}"));
        }
        println!("{line}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

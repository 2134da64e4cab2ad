use std::thread;

use qshuffle::double::{cross_product_oracle, cross_product_rules};
use qshuffle::modes::Side;
use qshuffle::pairing::{Evaluator, PairingConvention, PairingOracle};
use qshuffle::parse::{parse_element, parse_word};
use qshuffle::shuffle::{shuffle_product, CurrentTensor, ShuffleElement};
use qshuffle::suite::{self, Config};
use qshuffle::{CartanData, Error, Result, RootDegree, VerificationReport};

use crate::{Cli, Command, Format, Global};

type Job<'a> = Box<dyn FnOnce() -> Result<Vec<VerificationReport>> + Send + 'a>;

fn config(g: &Global) -> Result<Config> {
    let mut cfg = Config::new(CartanData::load(&g.cartan)?);
    if g.window < 0 {
        return Err(Error::OutOfRange("--window must be nonnegative".into()));
    }
    cfg.n_tail = g.ntail;
    cfg.window = g.window;
    cfg.convention = g.convention.parse::<PairingConvention>()?;
    cfg.central_quotient = g.central_quotient;
    Ok(cfg)
}

/// Conventions echoed in every report.
fn conventions(cfg: &Config) -> [(&'static str, String); 4] {
    [
        ("g_identity", qshuffle::cartan::G_SIGN_CONVENTION.to_string()),
        ("pairing_constant", cfg.convention.x_constant().to_string()),
        ("sym", "sum".to_string()),
        ("cartan", cfg.cartan.name().to_string()),
    ]
}

/// Runs independent jobs on up to `jobs` threads; results keep submission order.
fn run_jobs(jobs: Vec<Job<'_>>, threads: usize) -> Result<Vec<VerificationReport>> {
    let threads = threads.max(1);
    let mut results: Vec<Option<Result<Vec<VerificationReport>>>> = Vec::new();
    let mut queue = jobs.into_iter().peekable();
    while queue.peek().is_some() {
        let batch: Vec<Job<'_>> = queue.by_ref().take(threads).collect();
        let batch_results: Vec<_> = thread::scope(|s| {
            let handles: Vec<_> = batch.into_iter().map(|job| s.spawn(job)).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        results.extend(batch_results.into_iter().map(Some));
    }
    let mut out = Vec::new();
    for r in results.into_iter().flatten() {
        out.extend(r?);
    }
    Ok(out)
}

fn weight(text: &str, cartan: &CartanData) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            let i: usize = s.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad node {s:?}") })?;
            cartan.check_node(i)?;
            Ok(i)
        })
        .collect()
}

fn jobs_for<'a>(cmd: &'a Command, cfg: &'a Config, lines: &mut Vec<String>) -> Result<Vec<Job<'a>>> {
    let t = |f: Job<'a>| -> Job<'a> { f };
    Ok(match cmd {
        Command::CheckG => vec![t(Box::new(move || suite::g_suite(cfg)))],
        Command::Relations { max_cartan } => vec![t(Box::new(move || suite::relations_suite(cfg, *max_cartan)))],
        Command::Pair { plus: Some(p), minus: Some(m), .. } => {
            let u = parse_element(p)?;
            let v = parse_element(m)?;
            u.check_side(Side::Plus)?;
            v.check_side(Side::Minus)?;
            let value = Evaluator::new(&cfg.cartan, cfg.convention).pair(&u, &v)?;
            let brute = PairingOracle::new(&cfg.cartan, cfg.convention).pair(&u, &v)?;
            lines.push(value.to_string());
            let mut r = VerificationReport::new("pair")
                .param("plus", &u)
                .param("minus", &v)
                .param("convention", cfg.convention)
                .param("value", &value);
            if value != brute {
                r.fail(format!("evaluator {value} but axiom oracle {brute}"));
            }
            vec![t(Box::new(move || Ok(vec![r])))]
        }
        Command::Pair { max_x, max_cartan, .. } => {
            vec![t(Box::new(move || suite::pairing_compare_suite(cfg, *max_x, *max_cartan)))]
        }
        Command::Gram { degree, modesum } => {
            let degrees = degree.iter().map(|d| RootDegree::parse(d, cfg.cartan.rank())).collect::<Result<Vec<_>>>()?;
            vec![t(Box::new(move || suite::gram_suite(cfg, &degrees, modesum)))]
        }
        Command::Double { plus: Some(p), minus: Some(m) } => {
            let a = parse_word(p)?;
            let b = parse_word(m)?;
            a.check_side(Side::Plus)?;
            b.check_side(Side::Minus)?;
            let c = &cfg.cartan;
            let mut rules = cross_product_rules(c, cfg.convention, &b, &a).normalized(c)?;
            let mut oracle = cross_product_oracle(c, cfg.convention, &b, &a, cfg.n_tail)?;
            if cfg.central_quotient {
                rules = rules.quotient();
                oracle = oracle.quotient();
            }
            lines.push(rules.to_string());
            let mut r = VerificationReport::new("double-product")
                .param("plus", &a)
                .param("minus", &b)
                .param("n_tail", cfg.n_tail)
                .param("central_quotient", cfg.central_quotient);
            if rules != oracle {
                r.fail(format!("rules {rules} but oracle {oracle}"));
            }
            vec![t(Box::new(move || Ok(vec![r])))]
        }
        Command::Double { .. } => vec![t(Box::new(move || suite::double_suite(cfg)))],
        Command::Serre { pair } => {
            let pair = pair.as_ref().map(|p| (p[0], p[1]));
            vec![t(Box::new(move || suite::serre_suite(cfg, pair)))]
        }
        Command::BraidCheck { max_len } => vec![t(Box::new(move || suite::braid_suite(cfg, *max_len)))],
        Command::Relation13 => vec![t(Box::new(move || suite::relation13_suite(cfg)))],
        Command::Shuffle { left: Some(l), right: Some(r), .. } => {
            let c = &cfg.cartan;
            let s = ShuffleElement::from_tensor(CurrentTensor::new(&weight(l, c)?));
            let u = ShuffleElement::from_tensor(CurrentTensor::new(&weight(r, c)?));
            let p = shuffle_product(c, &s, &u)?;
            for x in p.tensors() {
                lines.push(x.to_string());
            }
            let report = VerificationReport::new("shuffle-product")
                .param("left", l)
                .param("right", r)
                .param("tensors", p.num_tensors());
            vec![t(Box::new(move || Ok(vec![report])))]
        }
        Command::Shuffle { samples, seed, .. } => vec![t(Box::new(move || suite::shuffle_suite(cfg, *samples, *seed)))],
        Command::Axioms => vec![t(Box::new(move || suite::axioms_suite(cfg)))],
        Command::All => vec![
            t(Box::new(move || suite::g_suite(cfg))),
            t(Box::new(move || suite::relations_suite(cfg, 1))),
            t(Box::new(move || suite::pairing_compare_suite(cfg, 2, 1))),
            t(Box::new(move || suite::double_suite(cfg))),
            t(Box::new(move || suite::axioms_suite(cfg))),
            t(Box::new(move || suite::serre_suite(cfg, None))),
            t(Box::new(move || suite::braid_suite(cfg, 3))),
            t(Box::new(move || suite::relation13_suite(cfg))),
            t(Box::new(move || suite::shuffle_suite(cfg, 20, 1))),
        ],
    })
}

/// Executes the command; returns whether every report passed.
pub fn run(cli: &Cli) -> Result<bool> {
    let cfg = config(&cli.global)?;
    let mut lines = Vec::new();
    let jobs = jobs_for(&cli.command, &cfg, &mut lines)?;
    let timing = cli.global.timing;
    let jobs: Vec<Job<'_>> =
        jobs.into_iter().map(|j| -> Job<'_> { Box::new(move || suite::timed(timing, j)) }).collect();
    let mut reports = run_jobs(jobs, cli.global.jobs)?;
    for r in &mut reports {
        for (k, v) in conventions(&cfg) {
            r.params.entry(k.to_string()).or_insert(v);
        }
    }
    match cli.global.format {
        Format::Text => {
            let header: Vec<String> = conventions(&cfg).iter().map(|(k, v)| format!("{k}: {v}")).collect();
            println!("# {}", header.join("; "));
            println!(
                "# n_tail: {}; window: {}; convention: {}; central_quotient: {}",
                cfg.n_tail, cfg.window, cfg.convention, cfg.central_quotient
            );
            for l in &lines {
                println!("{l}");
            }
            for r in &reports {
                println!("{r}");
            }
        }
        Format::JsonLines => {
            for r in &reports {
                println!("{}", r.to_json_line());
            }
        }
    }
    Ok(reports.iter().all(VerificationReport::passed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn global(args: &[&str]) -> Global {
        let mut full = vec!["qshuffle"];
        full.extend_from_slice(args);
        full.push("check-g");
        Cli::parse_from(full).global
    }

    #[test]
    fn config_reads_global_flags() {
        let cfg = config(&global(&["--cartan", "B2", "--window", "2", "--convention", "qminus"])).unwrap();
        assert_eq!(cfg.cartan.name(), "B2");
        assert_eq!(cfg.window, 2);
        assert_eq!(cfg.convention, PairingConvention::QMinus);
    }

    #[test]
    fn config_rejects_negative_window_and_unknown_convention() {
        assert!(config(&global(&["--window=-1"])).is_err());
        assert!(config(&global(&["--convention", "qtimes"])).is_err());
    }

    #[test]
    fn jobs_keep_submission_order() {
        let jobs: Vec<Job<'_>> = (0..7)
            .map(|k| -> Job<'_> { Box::new(move || Ok(vec![VerificationReport::new(format!("job{k}"))])) })
            .collect();
        let names: Vec<String> = run_jobs(jobs, 3).unwrap().into_iter().map(|r| r.check).collect();
        assert_eq!(names, (0..7).map(|k| format!("job{k}")).collect::<Vec<_>>());
    }

    #[test]
    fn weight_words_are_checked_against_the_rank() {
        let c = CartanData::preset("A2").unwrap();
        assert_eq!(weight("1, 2,1", &c).unwrap(), vec![1, 2, 1]);
        assert!(weight("1,3", &c).is_err());
        assert!(weight("x", &c).is_err());
    }

    #[test]
    fn conventions_name_every_choice() {
        let cfg = config(&global(&[])).unwrap();
        let keys: Vec<&str> = conventions(&cfg).iter().map(|(k, _)| *k).collect();
        assert_eq!(keys, ["g_identity", "pairing_constant", "sym", "cartan"]);
    }
}

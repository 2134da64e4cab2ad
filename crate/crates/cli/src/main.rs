//! Command line front end: parses configuration, dispatches verification workflows
//! and prints one report per check. Exits 0 iff every verdict is pass.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "qshuffle",
    version,
    about = "Exact checks for quantum affine Borel algebras, their pairing, double and shuffle realization"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Cartan preset (A1, A2, B2, G2) or path to a JSON file with `matrix` and `symmetrizer`.
    #[arg(long, global = true, default_value = "A2")]
    pub cartan: String,
    /// Completion degree kept in truncated tails.
    #[arg(long, global = true, default_value_t = 6)]
    pub ntail: u64,
    /// Half-width of the mode window.
    #[arg(long, global = true, default_value_t = 1)]
    pub window: i64,
    /// Constant of the x pairing: qplus is -1/(q+q^-1), qminus is -1/(q-q^-1).
    #[arg(long, global = true, default_value = "qplus")]
    pub convention: String,
    /// Work modulo K = Kp and φ_{i,0} ⊗ ψ_{i,0} = 1 in the double.
    #[arg(long, global = true)]
    pub central_quotient: bool,
    /// Output format: readable text or one JSON report per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for suites with independent members.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Record elapsed milliseconds in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Clearing and reflected identities of the structure series g_ij.
    CheckG,
    /// Annihilator checks for relation instances in the mode window.
    #[command(alias = "annihilate")]
    Relations {
        /// Largest Cartan block in the opposite monomials.
        #[arg(long, default_value_t = 1)]
        max_cartan: usize,
    },
    /// Evaluate a pairing, or compare the evaluator with the axiom oracle.
    Pair {
        /// Element of the positive half, e.g. "xp(1,1) phi(2,-1)".
        #[arg(long, requires = "minus")]
        plus: Option<String>,
        /// Element of the negative half, e.g. "xm(1,-1)".
        #[arg(long, requires = "plus")]
        minus: Option<String>,
        /// Most x letters per side in the oracle sweep.
        #[arg(long, default_value_t = 2)]
        max_x: i64,
        /// Largest Cartan block per side in the oracle sweep.
        #[arg(long, default_value_t = 1)]
        max_cartan: usize,
    },
    /// Gram matrix rank probes.
    Gram {
        /// Q-degree such as a1 or a1+a2; repeatable.
        #[arg(long, required = true)]
        degree: Vec<String>,
        /// Mode sum; repeatable.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        modesum: Vec<i64>,
    },
    /// Double product: exchange rules against the pairing route, or one product.
    Double {
        /// Positive word a in the product (1 ⊗ b)(a ⊗ 1).
        #[arg(long, requires = "minus")]
        plus: Option<String>,
        /// Negative word b in the product (1 ⊗ b)(a ⊗ 1).
        #[arg(long, requires = "plus")]
        minus: Option<String>,
    },
    /// Serre elements in the shuffle algebra.
    Serre {
        /// Only the ordered node pair (I, J); all pairs when omitted.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
    },
    /// Braid equation and reduced-word independence of braid lifts.
    BraidCheck {
        /// Longest weight word checked.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Image of the quadratic exchange relation in the shuffle algebra.
    Relation13,
    /// Shuffle products: one product, or associativity and mode consistency checks.
    Shuffle {
        /// Weight word of the left factor, e.g. 1,2.
        #[arg(long, requires = "right")]
        left: Option<String>,
        /// Weight word of the right factor.
        #[arg(long, requires = "left")]
        right: Option<String>,
        /// Random triples in the associativity check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for the random triples.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Coalgebra, Hopf-bimodule and pairing axioms.
    Axioms,
    /// Every suite at the configured window.
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

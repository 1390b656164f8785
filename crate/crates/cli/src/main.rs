use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use negabch::closed_forms::FormulaId;
use negabch::codes::{Budget, SearchConfig};
use negabch::cyclotomic::{ClassifierKind, DEFAULT_SCAN_CAP};
use negabch::harness::{
    cache_dir, cmd_code, cmd_leaders, cmd_verify, exit_code, CodeArgs, Family, LeaderModulus, LeadersArgs, VerifyArgs,
    CACHE_ENV, EXIT_MISMATCH,
};
use negabch::Error;

#[derive(Parser)]
#[command(name = "negabch", version, about = "Cyclic and negacyclic BCH codes: build, analyse, verify closed forms")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one code and print its parameter report as JSON.
    Code(CodeCmd),
    /// Compare a closed form with brute-force oracles; writes CSV.
    Verify(VerifyCmd),
    /// List coset leaders, or check a leader classifier against a scan.
    Leaders(LeadersCmd),
}

#[derive(Args)]
struct BudgetArgs {
    /// Most codewords an exhaustive enumeration may visit.
    #[arg(long, default_value_t = Budget::default().max_words)]
    max_words: u64,
    /// Most codewords times length an enumeration may cost.
    #[arg(long, default_value_t = Budget::default().max_symbol_ops)]
    max_ops: u64,
    /// Random messages tried when searching for light codewords.
    #[arg(long, default_value_t = SearchConfig::default().random_messages)]
    search_messages: u64,
    #[arg(long, default_value_t = SearchConfig::default().seed)]
    seed: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { max_words: self.max_words, max_symbol_ops: self.max_ops }
    }

    fn search(&self) -> SearchConfig {
        SearchConfig { random_messages: self.search_messages, seed: self.seed, ..SearchConfig::default() }
    }
}

#[derive(Args)]
struct CodeCmd {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: u32,
    /// neg-qm1-over-4, neg-qp1-over-4, neg-qm1-over-2, neg-qp1-over-2 or cyc-qm1-over-2
    #[arg(long)]
    family: String,
    #[arg(long)]
    delta: u64,
    /// Offset of the first designed zero (0 is narrow sense).
    #[arg(long, default_value_t = 0)]
    b: u64,
    /// Also compute the full weight distribution.
    #[arg(long)]
    weights: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Ignore the cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct VerifyCmd {
    /// Formula id, T1..T13.
    #[arg(long)]
    theorem: String,
    /// One or more field sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    q: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    m: Vec<u32>,
    #[arg(long)]
    delta: Option<u64>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Exit 0 even if some cells could not be decided within budget.
    #[arg(long)]
    skip_infeasible: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LeadersCmd {
    /// Modulus; alternatively give --m and --family.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: Option<u32>,
    /// half-qm1 or half-qp1
    #[arg(long)]
    family: Option<String>,
    /// Odd leaders only.
    #[arg(long)]
    odd: bool,
    /// Only the N largest leaders.
    #[arg(long)]
    top: Option<usize>,
    /// Classifier to check (divisor, half-qp1, odd-half-qm1-even,
    /// half-qm1-odd, odd-half-qp1, qp1-interval, or lemma3/5/7/8/10/11).
    #[arg(long)]
    classify: Option<String>,
    /// Divisor λ of q - 1 for the divisor classifier.
    #[arg(long, default_value_t = 2)]
    lambda: u64,
    #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
    scan_cap: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Code(c) => {
            let mut args = CodeArgs::new(c.q, c.m, c.family.parse::<Family>()?, c.delta);
            args.b = c.b;
            args.weights = c.weights;
            args.budget = c.budget.budget();
            args.search = c.budget.search();
            let dir = if c.no_cache { None } else { cache_dir(c.cache_dir.as_deref()) };
            let outcome = cmd_code(&args, dir.as_deref())?;
            emit(&outcome.report, c.out.as_ref())?;
            Ok(0)
        }
        Cmd::Verify(v) => {
            let args = VerifyArgs {
                theorem: v.theorem.parse::<FormulaId>()?,
                qs: v.q,
                ms: v.m,
                delta: v.delta,
                budget: v.budget.budget(),
                search: v.budget.search(),
            };
            let outcome = cmd_verify(&args)?;
            emit(&outcome.csv, v.out.as_ref())?;
            eprintln!(
                "{} cells: {} mismatch, {} infeasible, {} out of range",
                outcome.cells, outcome.mismatches, outcome.infeasible, outcome.out_of_range
            );
            Ok(outcome.exit_code(v.skip_infeasible))
        }
        Cmd::Leaders(l) => {
            let args = LeadersArgs {
                n: l.n,
                q: l.q,
                m: l.m,
                family: l.family.as_deref().map(str::parse::<LeaderModulus>).transpose()?,
                odd: l.odd,
                top: l.top,
                classify: l.classify.as_deref().map(str::parse::<ClassifierKind>).transpose()?,
                lambda: l.lambda,
                cap: l.scan_cap,
            };
            let outcome = cmd_leaders(&args)?;
            emit(&outcome.csv, l.out.as_ref())?;
            if args.classify.is_some() {
                eprintln!("{} soundness violations", outcome.violations);
            }
            Ok(if outcome.violations > 0 { EXIT_MISMATCH } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

//! Command drivers behind the `negabch` binary: code reports, conformance
//! sweeps and leader scans, plus the on-disk report cache.
//!
//! A request is a subcommand name and a flat map of parameters. Its
//! canonical form is compact JSON with sorted keys; the SHA-256 of those
//! bytes names the cache entry. Reports carry no timing data, so a cached
//! report is byte-identical to a fresh one.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arith::{big_pow, odd_prime_power};
use crate::closed_forms::{
    cells_to_csv, check_hypotheses, run_conformance, CellVerdict, ConformanceOptions, FormulaId,
};
use crate::codes::{
    bch_bound, build_code, min_distance_with, weight_distribution, Budget, CodeSpec, DistanceResult, SearchConfig, Unit,
};
use crate::cyclotomic::{classify_scan, leaders_with_cap, top_leaders, ClassifierKind, DEFAULT_SCAN_CAP};
use crate::error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CACHE_ENV: &str = "NEGABCH_CACHE_DIR";

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_SCAN_CAP: i32 = 4;

/// Exit status for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ScanCapExceeded { .. } => EXIT_SCAN_CAP,
        Error::Io(_) => 1,
        _ => EXIT_PRECONDITION,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Request {
    pub subcommand: String,
    pub params: BTreeMap<String, String>,
}

impl Request {
    pub fn new(subcommand: &str) -> Self {
        Request { subcommand: subcommand.to_string(), params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Compact JSON with keys in sorted order.
    pub fn canonical(&self) -> String {
        serde_json::to_string(self).expect("string maps always serialize")
    }

    pub fn cache_key(&self) -> String {
        hex::encode(Sha256::digest(self.canonical().as_bytes()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    NegQm1Over4,
    NegQp1Over4,
    NegQm1Over2,
    NegQp1Over2,
    CycQm1Over2,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::NegQm1Over4, Family::NegQp1Over4, Family::NegQm1Over2, Family::NegQp1Over2, Family::CycQm1Over2];

    pub fn key(self) -> &'static str {
        match self {
            Family::NegQm1Over4 => "neg-qm1-over-4",
            Family::NegQp1Over4 => "neg-qp1-over-4",
            Family::NegQm1Over2 => "neg-qm1-over-2",
            Family::NegQp1Over2 => "neg-qp1-over-2",
            Family::CycQm1Over2 => "cyc-qm1-over-2",
        }
    }

    pub fn unit(self) -> Unit {
        if self == Family::CycQm1Over2 {
            Unit::Cyclic
        } else {
            Unit::Negacyclic
        }
    }

    /// Code length, after checking that the divisor divides q^m ∓ 1.
    pub fn length(self, q: u64, m: u32) -> Result<u64> {
        if odd_prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        if m == 0 {
            return Err(Error::PreconditionViolated("m must be positive".into()));
        }
        let qm = big_pow(q, m);
        let (value, sign, div) = match self {
            Family::NegQm1Over4 => (&qm - 1u32, "-", 4u32),
            Family::NegQp1Over4 => (&qm + 1u32, "+", 4),
            Family::NegQm1Over2 | Family::CycQm1Over2 => (&qm - 1u32, "-", 2),
            Family::NegQp1Over2 => (&qm + 1u32, "+", 2),
        };
        if &value % div != BigUint::from(0u32) {
            return Err(Error::PreconditionViolated(format!(
                "{div} does not divide q^m {sign} 1 = {q}^{m} {sign} 1 = {value}"
            )));
        }
        (value / div)
            .to_u64()
            .ok_or_else(|| Error::PreconditionViolated(format!("length for q = {q}, m = {m} does not fit in 64 bits")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.key() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s}")))
    }
}

#[derive(Debug, Clone)]
pub struct CodeArgs {
    pub q: u64,
    pub m: u32,
    pub family: Family,
    pub delta: u64,
    pub b: u64,
    pub budget: Budget,
    pub search: SearchConfig,
    pub weights: bool,
}

impl CodeArgs {
    pub fn new(q: u64, m: u32, family: Family, delta: u64) -> Self {
        CodeArgs {
            q,
            m,
            family,
            delta,
            b: 0,
            budget: Budget::default(),
            search: SearchConfig::default(),
            weights: false,
        }
    }

    pub fn request(&self) -> Request {
        Request::new("code")
            .with("b", self.b)
            .with("delta", self.delta)
            .with("family", self.family)
            .with("m", self.m)
            .with("max_symbol_ops", self.budget.max_symbol_ops)
            .with("max_words", self.budget.max_words)
            .with("q", self.q)
            .with("search_max_symbol_ops", self.search.max_symbol_ops)
            .with("search_random_messages", self.search.random_messages)
            .with("search_seed", self.search.seed)
            .with("weights", self.weights)
    }
}

/// Builds the code and returns its report as pretty JSON.
pub fn code_report(args: &CodeArgs) -> Result<String> {
    let n = args.family.length(args.q, args.m)?;
    let spec = CodeSpec { q: args.q, n, unit: args.family.unit(), delta: args.delta, b: args.b };
    let code = build_code(&spec)?;
    let d = match min_distance_with(&code, &args.budget, &args.search) {
        DistanceResult::Exact { d, .. } => json!({ "exact": d.to_string() }),
        DistanceResult::Interval { lower, upper, .. } => {
            json!({ "lower": lower.to_string(), "upper": upper.to_string() })
        }
        DistanceResult::ZeroCode => json!({ "zero_code": true }),
    };
    let weights = if args.weights {
        match weight_distribution(&code, &args.budget) {
            Ok(w) => serde_json::from_str::<Value>(&w.to_json()).map_err(|e| Error::Io(e.to_string()))?,
            Err(Error::BudgetExceeded { .. }) => Value::String("over budget".into()),
            Err(e) => return Err(e),
        }
    } else {
        Value::Null
    };
    let report = json!({
        "request": args.request(),
        "code": {
            "q": args.q,
            "m": args.m,
            "family": args.family.key(),
            "unit": args.family.unit(),
            "delta": args.delta.to_string(),
            "b": args.b.to_string(),
            "n": n.to_string(),
            "k": code.k().to_string(),
            "bch_bound": bch_bound(&code).to_string(),
            "d": d,
            "weight_distribution": weights,
        },
        "provenance": {
            "version": VERSION,
            "seed": args.search.seed.to_string(),
            "random_messages": args.search.random_messages.to_string(),
            "search_max_symbol_ops": args.search.max_symbol_ops.to_string(),
            "budget": {
                "max_words": args.budget.max_words.to_string(),
                "max_symbol_ops": args.budget.max_symbol_ops.to_string(),
            },
        },
    });
    Ok(serde_json::to_string_pretty(&report).expect("json values always serialize") + "\n")
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: String,
    request: String,
    report: String,
}

/// Cache directory from an explicit path or the environment.
pub fn cache_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

pub fn cache_path(dir: &Path, req: &Request) -> PathBuf {
    dir.join(format!("{}.json", req.cache_key()))
}

/// Reads a cached report; stale versions and unreadable entries are misses.
pub fn cache_lookup(dir: &Path, req: &Request) -> Option<String> {
    let text = fs::read_to_string(cache_path(dir, req)).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    (entry.version == VERSION && entry.request == req.canonical()).then_some(entry.report)
}

pub fn cache_store(dir: &Path, req: &Request, report: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let entry = CacheEntry { version: VERSION.to_string(), request: req.canonical(), report: report.to_string() };
    let tmp = dir.join(format!(".{}.tmp", req.cache_key()));
    fs::write(&tmp, serde_json::to_string(&entry).expect("strings always serialize"))?;
    fs::rename(tmp, cache_path(dir, req))?;
    Ok(())
}

pub struct CodeOutcome {
    pub report: String,
    pub cached: bool,
}

pub fn cmd_code(args: &CodeArgs, cache: Option<&Path>) -> Result<CodeOutcome> {
    let req = args.request();
    if let Some(dir) = cache {
        if let Some(report) = cache_lookup(dir, &req) {
            return Ok(CodeOutcome { report, cached: true });
        }
    }
    let report = code_report(args)?;
    if let Some(dir) = cache {
        cache_store(dir, &req, &report)?;
    }
    Ok(CodeOutcome { report, cached: false })
}

#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub theorem: FormulaId,
    pub qs: Vec<u64>,
    pub ms: Vec<u32>,
    pub delta: Option<u64>,
    pub budget: Budget,
    pub search: SearchConfig,
}

pub struct VerifyOutcome {
    pub csv: String,
    pub cells: usize,
    pub mismatches: usize,
    pub infeasible: usize,
    pub out_of_range: usize,
}

impl VerifyOutcome {
    pub fn exit_code(&self, skip_infeasible: bool) -> i32 {
        if self.mismatches > 0 {
            EXIT_MISMATCH
        } else if self.infeasible > 0 && !skip_infeasible {
            EXIT_INFEASIBLE
        } else {
            0
        }
    }
}

/// Runs the sweep over every (q, m) that satisfies the formula's hypotheses.
/// Fails if none does.
pub fn cmd_verify(args: &VerifyArgs) -> Result<VerifyOutcome> {
    let opts = ConformanceOptions { delta: args.delta, budget: args.budget, search: args.search };
    let mut cells = Vec::new();
    let mut first_err = None;
    let mut any = false;
    for &q in &args.qs {
        for &m in &args.ms {
            if let Err(e) = check_hypotheses(args.theorem, q, m) {
                first_err.get_or_insert(e);
                continue;
            }
            any = true;
            cells.extend(run_conformance(args.theorem, q, m, &opts)?);
        }
    }
    if !any {
        return Err(first_err.unwrap_or_else(|| Error::InvalidArgument("no (q, m) pairs given".into())));
    }
    let count = |v: CellVerdict| cells.iter().filter(|c| c.verdict == v).count();
    Ok(VerifyOutcome {
        csv: cells_to_csv(&cells),
        cells: cells.len(),
        mismatches: count(CellVerdict::Mismatch),
        infeasible: count(CellVerdict::Infeasible),
        out_of_range: count(CellVerdict::FormulaOutOfRange),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeaderModulus {
    /// (q^m - 1)/2
    HalfQm1,
    /// (q^m + 1)/2
    HalfQp1,
}

impl FromStr for LeaderModulus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half-qm1" => Ok(LeaderModulus::HalfQm1),
            "half-qp1" => Ok(LeaderModulus::HalfQp1),
            _ => Err(Error::InvalidArgument(format!("unknown leader family {s}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LeadersArgs {
    pub n: Option<u64>,
    pub q: u64,
    pub m: Option<u32>,
    pub family: Option<LeaderModulus>,
    pub odd: bool,
    pub top: Option<usize>,
    pub classify: Option<ClassifierKind>,
    pub lambda: u64,
    pub cap: u64,
}

impl LeadersArgs {
    pub fn new(q: u64) -> Self {
        LeadersArgs {
            n: None,
            q,
            m: None,
            family: None,
            odd: false,
            top: None,
            classify: None,
            lambda: 2,
            cap: DEFAULT_SCAN_CAP,
        }
    }
}

pub struct LeadersOutcome {
    pub csv: String,
    pub violations: usize,
}

fn leader_modulus(args: &LeadersArgs) -> Result<u64> {
    if let Some(n) = args.n {
        return Ok(n);
    }
    let (Some(m), Some(f)) = (args.m, args.family) else {
        return Err(Error::InvalidArgument("give --n, or --m with --family".into()));
    };
    let fam = match f {
        LeaderModulus::HalfQm1 => Family::NegQm1Over2,
        LeaderModulus::HalfQp1 => Family::NegQp1Over2,
    };
    fam.length(args.q, m)
}

pub fn cmd_leaders(args: &LeadersArgs) -> Result<LeadersOutcome> {
    if let Some(kind) = args.classify {
        let m = args.m.ok_or_else(|| Error::InvalidArgument("--classify needs --m".into()))?;
        let report = classify_scan(kind, args.q, m, args.lambda, args.cap)?;
        let violations = report.violations().count();
        return Ok(LeadersOutcome { csv: report.to_csv(), violations });
    }
    let n = leader_modulus(args)?;
    let rows: Vec<(u64, u64)> = match args.top {
        Some(t) => top_leaders(n, args.q, t, args.odd)?,
        None => leaders_with_cap(n, args.q, args.cap)?.iter().filter(|(s, _)| !args.odd || s % 2 == 1).collect(),
    };
    let mut csv = String::from("leader,size\n");
    for (s, l) in rows {
        csv.push_str(&format!("{s},{l}\n"));
    }
    Ok(LeadersOutcome { csv, violations: 0 })
}

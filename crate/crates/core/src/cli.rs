//! Command-line front end: argument parsing, run configuration, and the
//! verification battery. The binary is a thin wrapper over [`run`].

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;
use serde_json::json;

use crate::cbposet::{self, check_params, CBPoset};
use crate::chains::{self, ChainSumTable, Verdict, DEFAULT_STEMBRIDGE_CAP};
use crate::egf::{cb_cardinalities, DEFAULT_EGF_CAP};
use crate::error::{Error, Result};
use crate::perms::{parse_list, validate_subset};
use crate::young::verify_grassmannian_anti_isomorphism;

/// Largest `n` accepted for enumeration and single checks unless raised.
pub const DEFAULT_MAX_N: usize = 8;
/// Largest `n` in the `verify --all` battery unless `--max-n` is given.
pub const DEFAULT_BATTERY_MAX_N: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "cbruhat", version, about = "Circular Bruhat order: enumeration, Hasse diagrams and exact verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for poset and chain sweeps (0 = all cores).
    #[arg(long, short = 'j', global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    /// Include wall-clock timings in verification reports.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the elements of CB(k,n).
    Enumerate(PosetArgs),
    /// Hasse diagram of CB(k,n) or of one anti-excedance fiber.
    Hasse(PosetArgs),
    /// Run one check, or the whole battery with --all.
    Verify(VerifyArgs),
    /// Table of |CB(k,n)| read off the generating function.
    Cardinalities(CardinalityArgs),
}

#[derive(Args, Debug)]
pub struct PosetArgs {
    /// Rank parameter, 0 <= k <= n.
    #[arg(short)]
    pub k: usize,
    /// Window size.
    #[arg(short)]
    pub n: usize,
    /// Anti-excedance positions, e.g. "2,4".
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Refuse inputs with n above this bound.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum, required_unless_present = "all", conflicts_with = "all")]
    pub check: Option<Check>,
    /// Run every check over all 0 <= k <= n <= max-n.
    #[arg(long)]
    pub all: bool,
    /// Rank parameter, 0 <= k <= n.
    #[arg(short)]
    pub k: Option<usize>,
    /// Window size.
    #[arg(short)]
    pub n: Option<usize>,
    /// Anti-excedance positions for a single fiber, e.g. "2,4".
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Upper bound on n (battery range with --all).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest n for the symmetric-group chain-sum check.
    #[arg(long, default_value_t = DEFAULT_STEMBRIDGE_CAP)]
    pub max_stembridge_n: usize,
}

#[derive(Args, Debug)]
pub struct CardinalityArgs {
    /// Last row of the table.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    MainTheorem,
    DeltaIndependence,
    Induct,
    LemmaCount,
    AntiIsomorphism,
    CorollaryChains,
    BsConsequence,
    Stembridge,
    Grassmannian,
    Cardinalities,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::MainTheorem => "main_theorem",
            Check::DeltaIndependence => "delta_independence",
            Check::Induct => "induct_identity",
            Check::LemmaCount => "lemma_count",
            Check::AntiIsomorphism => "anti_isomorphism",
            Check::CorollaryChains => "corollary_chains",
            Check::BsConsequence => "bs_consequence",
            Check::Stembridge => "stembridge",
            Check::Grassmannian => "grassmannian",
            Check::Cardinalities => "cardinalities",
        }
    }

    /// Checks that run on a built `CB(k,n)`.
    const POSET: [Check; 7] = [
        Check::MainTheorem,
        Check::DeltaIndependence,
        Check::Induct,
        Check::LemmaCount,
        Check::AntiIsomorphism,
        Check::CorollaryChains,
        Check::BsConsequence,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Enumerate { k: usize, n: usize },
    Hasse { k: usize, n: usize, lambda: Option<Vec<usize>> },
    Verify { check: Check, k: Option<usize>, n: Option<usize>, lambda: Option<Vec<usize>> },
    Battery { max_n: usize },
    Cardinalities { max_n: usize },
}

/// Everything a run depends on. Equal configs give byte-identical output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub max_n: usize,
    pub max_stembridge_n: usize,
    pub jobs: usize,
    pub timings: bool,
}

fn parse_lambda(s: &Option<String>, n: usize) -> Result<Option<Vec<usize>>> {
    s.as_deref().map(|s| validate_subset(&parse_list::<usize>(s)?, n)).transpose()
}

impl RunConfig {
    /// Validates parameters and caps; nothing heavy has run yet.
    pub fn from_cli(cli: Cli) -> Result<RunConfig> {
        let mut cfg = RunConfig {
            task: Task::Cardinalities { max_n: 0 },
            format: Format::Text,
            output: cli.output,
            max_n: DEFAULT_MAX_N,
            max_stembridge_n: DEFAULT_STEMBRIDGE_CAP,
            jobs: cli.jobs,
            timings: cli.timings,
        };
        match cli.command {
            Command::Enumerate(a) => {
                check_params(a.k, a.n)?;
                cap(a.n, a.max_n)?;
                if a.lambda.is_some() {
                    return Err(Error::InvalidParameters("enumerate does not take --lambda".into()));
                }
                if a.format == Format::Dot {
                    return Err(Error::InvalidParameters("enumerate supports json and text".into()));
                }
                cfg.task = Task::Enumerate { k: a.k, n: a.n };
                cfg.format = a.format;
                cfg.max_n = a.max_n;
            }
            Command::Hasse(a) => {
                check_params(a.k, a.n)?;
                cap(a.n, a.max_n)?;
                let lambda = parse_lambda(&a.lambda, a.n)?;
                if let Some(l) = &lambda {
                    if l.len() != a.k {
                        return Err(Error::InvalidSubset(format!("|{l:?}| != k = {}", a.k)));
                    }
                }
                cfg.task = Task::Hasse { k: a.k, n: a.n, lambda };
                cfg.format = a.format;
                cfg.max_n = a.max_n;
            }
            Command::Verify(a) => {
                cfg.format = a.format;
                cfg.max_stembridge_n = a.max_stembridge_n;
                if a.format == Format::Dot {
                    return Err(Error::InvalidParameters("verify supports json and text".into()));
                }
                if a.all {
                    let max_n = a.max_n.unwrap_or(DEFAULT_BATTERY_MAX_N);
                    cfg.max_n = max_n;
                    cfg.task = Task::Battery { max_n };
                } else {
                    let check = a.check.expect("clap requires a check without --all");
                    cfg.max_n = a.max_n.unwrap_or(DEFAULT_MAX_N);
                    let n = a.n.ok_or_else(|| Error::InvalidParameters(format!("{} needs -n", check.name())))?;
                    let needs_k = !matches!(check, Check::Stembridge | Check::Cardinalities);
                    if needs_k {
                        let k = a.k.ok_or_else(|| Error::InvalidParameters(format!("{} needs -k", check.name())))?;
                        check_params(k, n)?;
                    } else if n == 0 {
                        return Err(Error::InvalidParameters("n must be at least 1".into()));
                    }
                    match check {
                        Check::Stembridge => cap(n, a.max_stembridge_n)?,
                        Check::Cardinalities => cap(n, DEFAULT_EGF_CAP)?,
                        _ => cap(n, cfg.max_n)?,
                    }
                    let lambda = parse_lambda(&a.lambda, n)?;
                    if lambda.is_some() && check != Check::AntiIsomorphism {
                        return Err(Error::InvalidParameters("--lambda only applies to anti-isomorphism".into()));
                    }
                    if let (Some(l), Some(k)) = (&lambda, a.k) {
                        if l.len() != k {
                            return Err(Error::InvalidSubset(format!("|{l:?}| != k = {k}")));
                        }
                    }
                    cfg.task = Task::Verify { check, k: a.k.filter(|_| needs_k), n: Some(n), lambda };
                }
            }
            Command::Cardinalities(a) => {
                cap(a.max_n, DEFAULT_EGF_CAP)?;
                if a.format == Format::Dot {
                    return Err(Error::InvalidParameters("cardinalities supports json and text".into()));
                }
                cfg.task = Task::Cardinalities { max_n: a.max_n };
                cfg.format = a.format;
                cfg.max_n = a.max_n;
            }
        }
        Ok(cfg)
    }
}

fn cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what: "n", value: n, cap });
    }
    Ok(())
}

/// One line of a verification report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<usize>>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

impl Report {
    fn new(check: Check, k: Option<usize>, n: Option<usize>) -> Report {
        Report {
            check: check.name(),
            k,
            n,
            lambda: None,
            pass: false,
            lhs_terms: None,
            checked: None,
            value: None,
            counterexample: None,
            runtime_ms: None,
        }
    }

    fn text_line(&self) -> String {
        let mut s = format!("{} {}", if self.pass { "PASS" } else { "FAIL" }, self.check);
        if let Some(k) = self.k {
            write!(s, " k={k}").unwrap();
        }
        if let Some(n) = self.n {
            write!(s, " n={n}").unwrap();
        }
        if let Some(l) = &self.lambda {
            write!(s, " lambda={}", l.iter().join(",")).unwrap();
        }
        if let Some(t) = self.lhs_terms {
            write!(s, " lhs_terms={t}").unwrap();
        }
        if let Some(c) = self.checked {
            write!(s, " checked={c}").unwrap();
        }
        if let Some(v) = &self.value {
            write!(s, " value={v}").unwrap();
        }
        if let Some(ms) = self.runtime_ms {
            write!(s, " runtime_ms={ms}").unwrap();
        }
        if let Some(c) = &self.counterexample {
            write!(s, "\n  counterexample: {c}").unwrap();
        }
        s
    }
}

/// Rendered output and whether every check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

/// A built poset with its chain tables, shared by the per-poset checks.
struct Prepared {
    poset: CBPoset,
    table: ChainSumTable,
}

impl Prepared {
    fn new(k: usize, n: usize) -> Result<Prepared> {
        let poset = CBPoset::build(k, n)?;
        let table = ChainSumTable::compute(&poset);
        Ok(Prepared { poset, table })
    }
}

fn fill<T>(report: &mut Report, verdict: Verdict<T>, ok: impl FnOnce(&mut Report, T)) {
    match verdict {
        Ok(v) => {
            report.pass = true;
            ok(report, v);
        }
        Err(e) => report.counterexample = Some(e),
    }
}

fn poset_check(check: Check, prep: &Prepared, lambda: Option<&[usize]>) -> Report {
    let (p, t) = (&prep.poset, &prep.table);
    let mut r = Report::new(check, Some(p.k()), Some(p.n()));
    match check {
        Check::MainTheorem => fill(&mut r, chains::verify_main_theorem(p), |r, terms| r.lhs_terms = Some(terms)),
        Check::DeltaIndependence => fill(&mut r, chains::verify_delta_independence(p, t), |r, ()| r.checked = Some(p.len())),
        Check::Induct => fill(&mut r, chains::verify_induct_all(p, t), |r, c| r.checked = Some(c)),
        Check::LemmaCount => fill(&mut r, chains::verify_lemma_count(p, t), |r, v| r.value = Some(v.to_string())),
        Check::AntiIsomorphism => match lambda {
            Some(l) => {
                r.lambda = Some(l.to_vec());
                fill(&mut r, chains::verify_anti_isomorphism(p, l), |r, ()| r.checked = Some(1));
            }
            None => fill(&mut r, chains::verify_anti_isomorphism_all(p), |r, c| r.checked = Some(c)),
        },
        Check::CorollaryChains => fill(&mut r, chains::verify_corollary_all(p, t), |r, c| r.checked = Some(c)),
        Check::BsConsequence => fill(&mut r, chains::verify_bs_consequence(p), |r, ()| r.checked = Some(p.len())),
        _ => unreachable!("not a per-poset check"),
    }
    r
}

fn grassmannian_check(k: usize, n: usize) -> Report {
    let mut r = Report::new(Check::Grassmannian, Some(k), Some(n));
    fill(&mut r, verify_grassmannian_anti_isomorphism(k, n), |_, ()| {});
    r
}

fn stembridge_check(n: usize, cap: usize) -> Report {
    let mut r = Report::new(Check::Stembridge, None, Some(n));
    fill(&mut r, chains::verify_stembridge(n, cap), |r, t| r.lhs_terms = Some(t));
    r
}

/// Generating-function table against direct enumeration, up to `max_n`.
fn cardinality_check(max_n: usize) -> Report {
    let mut r = Report::new(Check::Cardinalities, None, Some(max_n));
    let verdict = (|| -> Verdict<usize> {
        let table = cb_cardinalities(max_n, DEFAULT_EGF_CAP).map_err(|e| e.to_string())?;
        let mut checked = 0;
        for (n, row) in table.iter().enumerate().skip(1) {
            for (k, count) in row.iter().enumerate() {
                let direct = cbposet::enumerate(k, n).map_err(|e| e.to_string())?.len();
                if *count != direct.into() {
                    return Err(format!("|CB({k},{n})|: series gives {count}, enumeration gives {direct}"));
                }
                checked += 1;
            }
        }
        Ok(checked)
    })();
    fill(&mut r, verdict, |r, c| r.checked = Some(c));
    r
}

fn timed(timings: bool, f: impl FnOnce() -> Report) -> Report {
    let start = Instant::now();
    let mut r = f();
    if timings {
        r.runtime_ms = Some(start.elapsed().as_millis());
    }
    r
}

fn prepare_failure(check: Check, k: usize, n: usize, e: Error) -> Report {
    let mut r = Report::new(check, Some(k), Some(n));
    r.counterexample = Some(format!("could not build CB({k},{n}): {e}"));
    r
}

/// The full battery: every per-poset check for `0 <= k <= n <= max_n`, the
/// Grassmannian lattice correspondence, the `S_n` chain sum up to the
/// Stembridge cap, and the cardinality table.
pub fn battery(max_n: usize, stembridge_cap: usize, timings: bool) -> Vec<Report> {
    let mut reports = Vec::new();
    for n in 1..=max_n {
        for k in 0..=n {
            let start = Instant::now();
            match Prepared::new(k, n) {
                Ok(prep) => {
                    let setup = start.elapsed();
                    for check in Check::POSET {
                        let mut r = timed(timings, || poset_check(check, &prep, None));
                        if let (Some(ms), Check::MainTheorem) = (r.runtime_ms.as_mut(), check) {
                            *ms += setup.as_millis();
                        }
                        reports.push(r);
                    }
                }
                Err(e) => reports.extend(Check::POSET.iter().map(|&c| prepare_failure(c, k, n, e.clone()))),
            }
            reports.push(timed(timings, || grassmannian_check(k, n)));
        }
    }
    for n in 1..=max_n.min(stembridge_cap) {
        reports.push(timed(timings, || stembridge_check(n, stembridge_cap)));
    }
    if max_n >= 1 {
        reports.push(timed(timings, || cardinality_check(max_n.min(DEFAULT_EGF_CAP))));
    }
    reports
}

fn single_check(cfg: &RunConfig, check: Check, k: Option<usize>, n: usize, lambda: Option<&[usize]>) -> Report {
    timed(cfg.timings, || match check {
        Check::Stembridge => stembridge_check(n, cfg.max_stembridge_n),
        Check::Cardinalities => cardinality_check(n),
        Check::Grassmannian => grassmannian_check(k.expect("validated"), n),
        _ => {
            let k = k.expect("validated");
            match Prepared::new(k, n) {
                Ok(prep) => poset_check(check, &prep, lambda),
                Err(e) => prepare_failure(check, k, n, e),
            }
        }
    })
}

fn render_reports(reports: &[Report], format: Format) -> Outcome {
    let success = reports.iter().all(|r| r.pass);
    let output = match format {
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                writeln!(s, "{}", r.text_line()).unwrap();
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(s, "{} checks, {} failed", reports.len(), failed).unwrap();
            s
        }
        _ => {
            let v = json!({"pass": success, "reports": reports});
            serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
        }
    };
    Outcome { output, success }
}

fn render_enumeration(k: usize, n: usize, format: Format) -> Result<String> {
    let elements = cbposet::enumerate(k, n)?;
    let top = k * (n - k);
    Ok(match format {
        Format::Json => {
            let records: Vec<_> = elements
                .iter()
                .map(|f| json!({"window": f.window(), "rank": top - f.length(), "decorated": f.to_decorated()}))
                .collect();
            serde_json::to_string_pretty(&json!({"k": k, "n": n, "count": records.len(), "elements": records}))
                .expect("json values serialize")
                + "\n"
        }
        _ => {
            let mut s = format!("CB({k},{n}): {} elements\n", elements.len());
            for f in &elements {
                let d = f.to_decorated();
                writeln!(s, "{f}  rank={}  perm={}  white={:?}", top - f.length(), d.perm(), d.white()).unwrap();
            }
            s
        }
    })
}

fn render_hasse(k: usize, n: usize, lambda: Option<&[usize]>, format: Format) -> Result<String> {
    let full = CBPoset::build(k, n)?;
    let p = match lambda {
        Some(l) => full.fiber_subposet(l)?,
        None => full,
    };
    Ok(match format {
        Format::Dot => p.to_dot(),
        Format::Json => serde_json::to_string_pretty(&p.to_json()).expect("json values serialize") + "\n",
        Format::Text => {
            let mut s = String::new();
            let label = match p.lambda() {
                Some(l) => format!("CB({k},{n})_{{{}}}", l.iter().join(",")),
                None => format!("CB({k},{n})"),
            };
            writeln!(s, "{label}: {} elements, {} covers", p.len(), p.covers().len()).unwrap();
            for c in p.covers() {
                let w = c.weight(n).to_string().replace(' ', "");
                writeln!(s, "{} > {}  ({},{})  {w}", p.element(c.upper), p.element(c.lower), c.i, c.j).unwrap();
            }
            s
        }
    })
}

fn render_cardinalities(max_n: usize, format: Format) -> Result<String> {
    let table = cb_cardinalities(max_n, DEFAULT_EGF_CAP)?;
    let mut s = String::new();
    match format {
        Format::Json => {
            for (n, row) in table.iter().enumerate() {
                let counts: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                let line = format!("{{\"n\":{n},\"counts\":[{}]}}", counts.join(","));
                writeln!(s, "{line}").unwrap();
            }
        }
        _ => {
            let width = table.iter().flatten().map(|c| c.to_string().len()).max().unwrap_or(1);
            for (n, row) in table.iter().enumerate() {
                let cells = row.iter().map(|c| format!("{c:>width$}")).join(" ");
                writeln!(s, "n={n:<2} {cells}").unwrap();
            }
        }
    }
    Ok(s)
}

fn run_inner(cfg: &RunConfig) -> Result<Outcome> {
    let done = |output: String| Outcome { output, success: true };
    Ok(match &cfg.task {
        Task::Enumerate { k, n } => done(render_enumeration(*k, *n, cfg.format)?),
        Task::Hasse { k, n, lambda } => done(render_hasse(*k, *n, lambda.as_deref(), cfg.format)?),
        Task::Cardinalities { max_n } => done(render_cardinalities(*max_n, cfg.format)?),
        Task::Battery { max_n } => render_reports(&battery(*max_n, cfg.max_stembridge_n, cfg.timings), cfg.format),
        Task::Verify { check, k, n, lambda } => {
            let n = n.expect("validated");
            render_reports(&[single_check(cfg, *check, *k, n, lambda.as_deref())], cfg.format)
        }
    })
}

/// Runs a validated config on a pool of `cfg.jobs` threads and returns the
/// rendered output. Writing it out is the caller's job.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    pool.install(|| run_inner(cfg))
}

/// Parse, run, write. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.output {
            Some(path) => std::fs::write(path, &outcome.output)
                .map_err(|e| Error::InvalidParameters(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{}", outcome.output),
        }
        Ok(outcome.success)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig> {
        let mut full = vec!["cbruhat"];
        full.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(full).expect("parses"))
    }

    #[test]
    fn validation() {
        assert!(cfg(&["enumerate", "-k", "3", "-n", "2"]).is_err());
        assert!(cfg(&["enumerate", "-k", "1", "-n", "9"]).is_err());
        assert!(cfg(&["enumerate", "-k", "1", "-n", "9", "--max-n", "9"]).is_ok());
        assert!(cfg(&["hasse", "-k", "2", "-n", "4", "--lambda", "2,5"]).is_err());
        assert!(cfg(&["hasse", "-k", "2", "-n", "4", "--lambda", "2"]).is_err());
        assert!(cfg(&["verify", "stembridge", "-n", "5"]).is_err());
        assert!(cfg(&["verify", "stembridge", "-n", "5", "--max-stembridge-n", "5"]).is_ok());
        assert!(cfg(&["verify", "main-theorem", "-n", "3"]).is_err());
        assert!(cfg(&["cardinalities", "--max-n", "20"]).is_err());
        let c = cfg(&["verify", "--all"]).unwrap();
        assert_eq!(c.task, Task::Battery { max_n: DEFAULT_BATTERY_MAX_N });
    }

    #[test]
    fn enumerate_and_hasse() {
        let out = run(&cfg(&["enumerate", "-k", "2", "-n", "3", "--format", "json"]).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), 7);
        let out = run(&cfg(&["enumerate", "-k", "0", "-n", "5", "--format", "json"]).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["count"], 1);

        let dot = run(&cfg(&["hasse", "-k", "2", "-n", "3", "--format", "dot"]).unwrap()).unwrap().output;
        assert_eq!(dot.matches("->").count(), 9);
        assert_eq!(dot.matches("[label=\"[").count(), 7);
        assert!(dot.contains("[label=\"a1+a3\"]"));
        let one = run(&cfg(&["hasse", "-k", "1", "-n", "1", "--format", "json"]).unwrap()).unwrap().output;
        let v: serde_json::Value = serde_json::from_str(&one).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn verify_reports() {
        let out = run(&cfg(&["verify", "main-theorem", "-k", "2", "-n", "3"]).unwrap()).unwrap();
        assert!(out.success);
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["reports"][0]["check"], "main_theorem");
        assert_eq!(v["reports"][0]["lhs_terms"], 6);
        assert!(v["reports"][0].get("runtime_ms").is_none());
        let out = run(&cfg(&["verify", "stembridge", "-n", "3", "--format", "text", "--timings"]).unwrap()).unwrap();
        assert!(out.success);
        assert!(out.output.starts_with("PASS stembridge n=3"));
        assert!(out.output.contains("runtime_ms="));
        let out = run(&cfg(&["verify", "anti-isomorphism", "-k", "2", "-n", "4", "--lambda", "2,4"]).unwrap()).unwrap();
        assert!(out.success);
    }

    #[test]
    fn cardinality_rendering() {
        let out = run(&cfg(&["cardinalities", "--max-n", "3", "--format", "json"]).unwrap()).unwrap();
        assert!(out.output.lines().any(|l| l == "{\"n\":3,\"counts\":[1,7,7,1]}"));
        let text = run(&cfg(&["cardinalities", "--max-n", "3"]).unwrap()).unwrap().output;
        assert_eq!(text.lines().count(), 4);
    }
}

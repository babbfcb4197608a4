//! `logmaj`: run verification suites over the inequality catalog, hunt for
//! counterexamples, reproduce known refutations and dump the catalog.
//!
//! Exit codes: 0 when every outcome is as expected (theorems hold,
//! refutations are found, conjectures survive), 1 for an unexpected outcome
//! (a theorem failure or a conjecture violation, distinguished in the
//! report), 2 for usage and numerical errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use logmaj_core::registry::{
    self, evaluate, expand_ids, run_suite, summarize, CheckOutcome, Grade, Selector, Status, SuiteConfig, SummaryRow,
    Tolerances, CATALOG_VERSION, SUITE_COND,
};
use logmaj_core::search::{search, verify_instance, SearchConfig, SearchReport};
use logmaj_core::serde_ext::ExtF64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable capping the worker-thread count.
pub const THREADS_ENV: &str = "LOGMAJ_THREADS";

const DEFAULT_MAX_DIM: usize = 8;
const HARD_MAX_DIM: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "logmaj", version, about = "Log-majorization and matrix-mean inequality lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run randomized suites over catalog entries.
    Verify(VerifyArgs),
    /// Random-restart hill climbing against a conjecture or refutation.
    Search(SearchArgs),
    /// Find (or load) a violating instance of a refuted claim and print it.
    Reproduce(ReproduceArgs),
    /// Catalog operations.
    Registry {
        #[command(subcommand)]
        action: RegistryAction,
    },
    /// Same as `registry dump`.
    #[command(name = "registry-dump")]
    RegistryDump(OutArgs),
}

#[derive(Subcommand, Debug)]
enum RegistryAction {
    /// Print the catalog as JSON.
    Dump(OutArgs),
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct TolArgs {
    /// Tolerance on log and Loewner margins.
    #[arg(long, default_value_t = 1e-9, allow_negative_numbers = true)]
    tol: f64,
    /// Tolerance on determinant (full-product) equalities.
    #[arg(long = "tol-det", default_value_t = 1e-8, allow_negative_numbers = true)]
    tol_det: f64,
    /// A violation needs a margin below minus this value.
    #[arg(long, default_value_t = 1e-6, allow_negative_numbers = true)]
    strictness: f64,
}

impl TolArgs {
    fn tolerances(&self) -> Result<Tolerances> {
        let t = Tolerances {
            tol: self.tol,
            tol_det: self.tol_det,
            strictness: self.strictness,
        };
        t.validate()?;
        Ok(t)
    }
}

#[derive(Args, Debug, Clone)]
struct DimArgs {
    /// Comma-separated matrix sizes.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    dims: Vec<usize>,
    /// Largest size accepted in --dims (at most 64).
    #[arg(long = "max-dim", default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
}

impl DimArgs {
    fn checked(&self) -> Result<Vec<usize>> {
        if self.max_dim > HARD_MAX_DIM {
            bail!("--max-dim may not exceed {HARD_MAX_DIM}");
        }
        if let Some(d) = self.dims.iter().find(|&&d| d < 2 || d > self.max_dim) {
            bail!("dimension {d} outside [2, {}]", self.max_dim);
        }
        Ok(self.dims.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    CsvSummary,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Selectors (`ID` or `ID:domain`) or all-theorems / all-refutations / all-conjectures.
    #[arg(long, value_delimiter = ',', default_value = "all-theorems")]
    ids: Vec<String>,
    #[command(flatten)]
    dims: DimArgs,
    /// Trials per selector and dimension.
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    tol: TolArgs,
    /// Record per-instance wall time (reports are then not byte-stable).
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Re-evaluate every outcome of an existing report instead of sampling.
    #[arg(long)]
    replay: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Target selector (a conjecture or an example refutation).
    id: String,
    /// Random restarts.
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    #[command(flatten)]
    dims: DimArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "hill-steps", default_value_t = 20)]
    hill_steps: u32,
    #[command(flatten)]
    tol: TolArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// Example refutation to reproduce.
    id: String,
    /// Re-verify a stored search report instead of searching.
    #[arg(long)]
    fixture: Option<PathBuf>,
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    dims: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "hill-steps", default_value_t = 20)]
    hill_steps: u32,
    #[command(flatten)]
    tol: TolArgs,
    /// Write the search report (usable later as --fixture).
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Run parameters recorded at the top of a verify report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub ids: Vec<String>,
    pub selectors: Vec<String>,
    pub dims: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
    pub tol_det: f64,
    pub strictness: f64,
    pub cond_target: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replay_of: Option<String>,
}

impl RunConfig {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            tol: self.tol,
            tol_det: self.tol_det,
            strictness: self.strictness,
        }
    }
}

/// The verify report: `{config, catalog_version, outcomes, summary}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub catalog_version: String,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: Vec<SummaryRow>,
}

impl Report {
    pub fn all_expected(&self) -> bool {
        self.summary.iter().all(|r| r.expected)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_ERROR;
        }
    };
    match pool.install(|| dispatch(cli.command)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .with_context(|| format!("{THREADS_ENV} must be a positive integer, got '{v}'"))?;
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Search(a) => search_cmd(a),
        Command::Reproduce(a) => reproduce(a),
        Command::Registry {
            action: RegistryAction::Dump(o),
        }
        | Command::RegistryDump(o) => {
            emit(o.out.as_deref(), &to_json(&registry::dump())?)?;
            Ok(EXIT_OK)
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

/// Compact JSON for suite reports, which embed every sampled matrix.
fn to_compact_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string(v)?;
    s.push('\n');
    Ok(s)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn fmt_margin(m: f64) -> String {
    serde_json::to_value(ExtF64(m))
        .map(|v| match v {
            serde_json::Value::String(s) => s,
            _ => format!("{m:.3e}"),
        })
        .unwrap_or_default()
}

fn print_summary(rows: &[SummaryRow]) {
    eprintln!(
        "{:<18} {:>7} {:>8} {:>7} {:>10} {:>12}  status",
        "id", "trials", "failures", "skipped", "violations", "worst"
    );
    for r in rows {
        eprintln!(
            "{:<18} {:>7} {:>8} {:>7} {:>10} {:>12}  {}",
            r.id,
            r.trials,
            r.failures,
            r.skipped,
            r.violations,
            fmt_margin(r.worst_margin),
            r.status
        );
    }
}

/// CSV with one row per selector: `id,trials,failures,worst_margin,status`.
pub fn csv_summary(rows: &[SummaryRow]) -> String {
    let mut s = String::from("id,trials,failures,worst_margin,status\n");
    for r in rows {
        let worst = if r.worst_margin.is_finite() {
            format!("{:e}", r.worst_margin)
        } else {
            fmt_margin(r.worst_margin)
        };
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.id, r.trials, r.failures, worst, r.status
        ));
    }
    s
}

fn write_report(report: &Report, format: Format, out: Option<&Path>) -> Result<i32> {
    print_summary(&report.summary);
    let text = match format {
        Format::Json => to_compact_json(report)?,
        Format::CsvSummary => csv_summary(&report.summary),
    };
    emit(out, &text)?;
    Ok(if report.all_expected() {
        EXIT_OK
    } else {
        EXIT_UNEXPECTED
    })
}

fn verify(a: VerifyArgs) -> Result<i32> {
    if let Some(path) = &a.replay {
        return replay(path, a.format, a.out.as_deref());
    }
    let tol = a.tol.tolerances()?;
    let dims = a.dims.checked()?;
    let selectors = expand_ids(&a.ids)?;
    let mut cfg = SuiteConfig::new(a.trials, dims.clone(), a.seed);
    cfg.tol = tol;
    cfg.record_wall_time = a.timings;
    let suite = run_suite(&selectors, &cfg)?;
    let report = Report {
        config: RunConfig {
            command: "verify".into(),
            ids: a.ids.clone(),
            selectors: selectors.iter().map(Selector::label).collect(),
            dims,
            trials: a.trials,
            seed: a.seed,
            tol: tol.tol,
            tol_det: tol.tol_det,
            strictness: tol.strictness,
            cond_target: cfg.cond_target,
            replay_of: None,
        },
        catalog_version: suite.catalog_version,
        outcomes: suite.outcomes,
        summary: suite.summary,
    };
    write_report(&report, a.format, a.out.as_deref())
}

/// Re-evaluates every stored outcome; any difference is unexpected.
fn replay(path: &Path, format: Format, out: Option<&Path>) -> Result<i32> {
    let stored: Report = read_json(path)?;
    if stored.catalog_version != CATALOG_VERSION {
        eprintln!(
            "warning: report was produced by catalog {}, this build has {CATALOG_VERSION}",
            stored.catalog_version
        );
    }
    let tol = stored.config.tolerances();
    tol.validate()?;
    let mut outcomes = Vec::with_capacity(stored.outcomes.len());
    let mut mismatches = 0usize;
    for o in &stored.outcomes {
        let mut again = evaluate(&o.instance(), &tol)?;
        again.wall_time = o.wall_time;
        if &again != o {
            mismatches += 1;
            eprintln!("mismatch: {} dim {} trial {}", o.id, o.dim, o.trial);
        }
        outcomes.push(again);
    }
    let mut summary = Vec::new();
    for label in &stored.config.selectors {
        let sel = Selector::parse(label)?;
        let mine: Vec<CheckOutcome> = outcomes.iter().filter(|o| &o.id == label).cloned().collect();
        summary.push(summarize(&sel, &mine, &tol));
    }
    let mut config = stored.config.clone();
    config.replay_of = Some(path.display().to_string());
    let report = Report {
        config,
        catalog_version: CATALOG_VERSION.into(),
        outcomes,
        summary,
    };
    eprintln!(
        "replayed {} outcomes: {} identical, {mismatches} differ",
        report.outcomes.len(),
        report.outcomes.len() - mismatches
    );
    let code = write_report(&report, format, out)?;
    Ok(if mismatches > 0 { EXIT_UNEXPECTED } else { code })
}

fn search_config(budget: u64, dims: Vec<usize>, seed: u64, hill_steps: u32, tol: Tolerances) -> SearchConfig {
    let mut c = SearchConfig::new(budget, dims, seed);
    c.hill_steps = hill_steps;
    c.tol = tol;
    c.cond_target = SUITE_COND;
    c
}

/// Expected search outcome, by the grade of the searched domain: refutations
/// must be found, proven and conjectural domains must survive, exploratory
/// domains are never judged.
fn search_exit(report: &SearchReport) -> Result<i32> {
    let sel = Selector::parse(&report.target_id)?;
    let expected = match sel.domain.grade {
        Grade::Refutation => report.violation_found,
        Grade::Proven | Grade::Conjectural => !report.violation_found,
        Grade::Exploratory => true,
    };
    Ok(if expected { EXIT_OK } else { EXIT_UNEXPECTED })
}

fn describe_search(report: &SearchReport) {
    eprintln!(
        "{}: {} restarts, best margin {} at restart {}; violation {}",
        report.target_id,
        report.trials_used,
        fmt_margin(report.best_margin),
        report.best_restart,
        if report.violation_found { "FOUND" } else { "not found" }
    );
}

fn search_cmd(a: SearchArgs) -> Result<i32> {
    let tol = a.tol.tolerances()?;
    let cfg = search_config(a.budget, a.dims.checked()?, a.seed, a.hill_steps, tol);
    let report = search(&a.id, &cfg)?;
    describe_search(&report);
    if report.violation_found && Selector::parse(&a.id)?.domain.grade == Grade::Conjectural {
        eprintln!("NOTE: a strict violation of a conjecture was found; see the report's best_instance");
    }
    emit(a.out.as_deref(), &to_json(&report)?)?;
    search_exit(&report)
}

fn print_outcome(o: &CheckOutcome) {
    println!("instance {} (dim {}, trial {})", o.id, o.dim, o.trial);
    if !o.params.is_empty() {
        let ps: Vec<String> = o.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        println!("  params: {}", ps.join(", "));
    }
    for input in &o.inputs {
        println!("  {} ({:?}, sha256 {}):", input.name, input.class, input.sha256);
        let m = &input.matrix;
        for i in 0..m.dim() {
            let row: Vec<String> = (0..m.dim())
                .map(|j| format!("{:+.17e}{:+.17e}i", m[(i, j)].re, m[(i, j)].im))
                .collect();
            println!("    [{}]", row.join(", "));
        }
    }
    for leg in &o.legs {
        let ms: Vec<String> = leg.margins.iter().map(|&m| fmt_margin(m)).collect();
        println!(
            "  leg {}{}: holds = {}, min margin {}",
            leg.name,
            if leg.asserted { "" } else { " (unasserted)" },
            leg.holds,
            fmt_margin(leg.min_margin)
        );
        println!("    per-k margins: [{}]", ms.join(", "));
    }
    println!("  min margin {}, violation = {}", fmt_margin(o.min_margin), o.violation);
}

fn reproduce(a: ReproduceArgs) -> Result<i32> {
    let tol = a.tol.tolerances()?;
    let sel = Selector::parse(&a.id)?;
    if sel.def.status != Status::ExampleRefutation {
        bail!(
            "reproduce expects an example refutation, '{}' has status {:?}",
            a.id,
            sel.def.status
        );
    }
    let report: SearchReport = match &a.fixture {
        Some(path) => {
            let r: SearchReport = read_json(path)?;
            if r.target_id != sel.label() {
                bail!(
                    "fixture {} targets '{}', not '{}'",
                    path.display(),
                    r.target_id,
                    sel.label()
                );
            }
            r
        }
        None => {
            if let Some(d) = a.dims.iter().find(|&&d| !(2..=HARD_MAX_DIM).contains(&d)) {
                bail!("dimension {d} outside [2, {HARD_MAX_DIM}]");
            }
            search(
                &a.id,
                &search_config(a.budget, a.dims.clone(), a.seed, a.hill_steps, tol),
            )?
        }
    };
    describe_search(&report);
    let outcome = verify_instance(&report, &tol)?;
    print_outcome(&outcome);
    if let Some(out) = &a.out {
        emit(Some(out), &to_json(&report)?)?;
    }
    Ok(if outcome.violation { EXIT_OK } else { EXIT_UNEXPECTED })
}

//! Command-line front end: `compute`, `verify`, `arith` and `cache`.
//!
//! [`run`] takes the argument list and two writers and returns the process
//! exit code, so the whole interface is testable in-process:
//!
//! | code | meaning                                         |
//! |------|-------------------------------------------------|
//! | 0    | success                                         |
//! | 1    | a verification check failed                     |
//! | 2    | usage or configuration error                    |

pub mod cache;
pub mod job;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::arith::{
    coset_index, coset_index_bruteforce, diagonal_coset_count, diagonal_coset_count_bruteforce,
    weight_equation_solutions, BRUTEFORCE_LIMIT,
};
use cache::{Cache, CacheKey, Lookup};
use job::{is_usage_error, JobSpec, Object, Route};
use table::Format;
use verify::{Check, Overrides, CHECKS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "PARAMODULAR_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "paramodular",
    version,
    about = "Exact Fourier expansions of the paramodular forms Delta_5, Delta_2, Delta_1, Delta_1/2"
)]
pub struct Cli {
    /// Worker threads for series multiplication (default: all cores).
    /// Output does not depend on this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a coefficient table.
    Compute(ComputeArgs),
    /// Run one named check, or `all`; prints `CHECK <name> PASS|FAIL <detail>`.
    Verify(VerifyArgs),
    /// Coset arithmetic with brute-force cross-checks.
    Arith {
        #[command(subcommand)]
        op: ArithOp,
    },
    /// Inspect or clean the on-disk cache.
    Cache {
        #[command(subcommand)]
        op: CacheOp,
        /// Cache directory to inspect.
        #[arg(long, env = CACHE_ENV, global = true)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub form: Object,
    /// Construction route; defaults to the first valid one for the form.
    #[arg(long)]
    pub route: Option<Route>,
    /// Truncation in whole powers of q. Exponents are stored in units of
    /// 1/24, so the internal bound is 24 times this value.
    #[arg(long, default_value_t = 2)]
    pub q_order: i64,
    /// Truncation in whole powers of s (internally multiplied by 24).
    #[arg(long, default_value_t = 2)]
    pub s_order: i64,
    /// Largest n of the f-table.
    #[arg(long, default_value_t = 3)]
    pub max_n: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the table here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Reuse and store tables here; off when neither this nor the variable is set.
    #[arg(long, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A check name or `all`.
    pub name: String,
    /// Override the q-truncation (whole powers of q) of every selected check.
    #[arg(long)]
    pub q_order: Option<i64>,
    /// Override the s-truncation (whole powers of s).
    #[arg(long)]
    pub s_order: Option<i64>,
    /// Override the f-table depth of the checks that build one.
    #[arg(long)]
    pub max_n: Option<i64>,
    /// Largest level for the brute-force coset counts.
    #[arg(long)]
    pub t_max: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum ArithOp {
    /// Index of the level-t subgroup.
    Index { t: u64 },
    /// Number of diagonal cosets at level t.
    DiagonalCount { t: u64 },
    /// Solutions (t, k) of the weight equation for multiplicity m.
    Weights { m: u64 },
}

#[derive(Debug, Subcommand)]
pub enum CacheOp {
    /// Remove stale, corrupt and partial files.
    Gc,
    /// Count entries and bytes.
    Stats,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    let pool = match cli.threads {
        None => Ok(Pool(None)),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map(|p| Pool(Some(p)))
            .map_err(|e| Failure::usage(format!("cannot start thread pool: {e}"))),
    };
    let result = pool.and_then(|pool| dispatch(&pool, cli.command, out, err));
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let code = run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::ExitCode::from(code as u8)
}

/// Where the heavy computations run: a dedicated pool when `--threads` is
/// given, the global one otherwise.
struct Pool(Option<rayon::ThreadPool>);

impl Pool {
    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.0 {
            Some(p) => p.install(f),
            None => f(),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        let code = if is_usage_error(&e) {
            EXIT_USAGE
        } else {
            EXIT_FAILED
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn dispatch(pool: &Pool, command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Compute(args) => compute(pool, args, out, err),
        Command::Verify(args) => verify(pool, args, out),
        Command::Arith { op } => arith(op, out),
        Command::Cache { op, cache_dir } => cache_cmd(op, cache_dir, out),
    }
}

fn compute(pool: &Pool, args: ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let job = JobSpec::new(
        args.form,
        args.route,
        args.q_order,
        args.s_order,
        args.max_n,
    )
    .map_err(Failure::usage)?;
    let render = || -> std::result::Result<String, Failure> {
        Ok(pool.install(|| job.compute())?.render(args.format))
    };
    let body = match &args.cache_dir {
        None => render()?,
        Some(dir) => {
            let cache = Cache::open(dir)?;
            let key = CacheKey::for_job(&job, args.format);
            match cache.lookup(&key)? {
                Lookup::Hit(body) => body,
                found => {
                    if let Lookup::Corrupt(why) = found {
                        writeln!(
                            err,
                            "warning: corrupt cache entry {} ({why}); recomputing",
                            cache.path(&key).display()
                        )?;
                    }
                    let body = render()?;
                    cache.store(&key, &body)?;
                    body
                }
            }
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn verify(pool: &Pool, args: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let selected: Vec<_> = if args.name == "all" {
        CHECKS.iter().collect()
    } else {
        match verify::find(&args.name) {
            Some(c) => vec![c],
            None => {
                let names: Vec<_> = CHECKS.iter().map(|c| c.name).collect();
                return Err(Failure::usage(format!(
                    "unknown check `{}`; known: all, {}",
                    args.name,
                    names.join(", ")
                )));
            }
        }
    };
    for (flag, v) in [("--q-order", args.q_order), ("--s-order", args.s_order)] {
        if v.is_some_and(|v| v < 1) {
            return Err(Failure::usage(format!("{flag} must be at least 1")));
        }
    }
    let overrides = Overrides {
        q_order: args.q_order,
        s_order: args.s_order,
        max_n: args.max_n,
        t_max: args.t_max,
    };
    report(pool, &selected, &overrides, out)
}

/// Runs `checks` in order, one report line each. Exit code 1 if any fails.
pub fn run_checks(
    checks: &[&Check],
    overrides: &Overrides,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match report(&Pool(None), checks, overrides, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn report(pool: &Pool, checks: &[&Check], overrides: &Overrides, out: &mut dyn Write) -> Outcome {
    let mut all_pass = true;
    for check in checks {
        let outcome = pool.install(|| check.run(overrides))?;
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        writeln!(out, "CHECK {} {verdict} {}", check.name, outcome.detail)?;
        all_pass &= outcome.pass;
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}

fn side_by_side(
    out: &mut dyn Write,
    t: u64,
    formula: fn(u64) -> u64,
    brute: fn(u64) -> crate::Result<u64>,
) -> Outcome {
    if t == 0 {
        return Err(Failure::usage("t must be positive"));
    }
    if t <= BRUTEFORCE_LIMIT {
        writeln!(out, "formula={} bruteforce={}", formula(t), brute(t)?)?;
    } else {
        writeln!(out, "formula={}", formula(t))?;
    }
    Ok(EXIT_OK)
}

fn arith(op: ArithOp, out: &mut dyn Write) -> Outcome {
    match op {
        ArithOp::Index { t } => side_by_side(out, t, coset_index, coset_index_bruteforce),
        ArithOp::DiagonalCount { t } => side_by_side(
            out,
            t,
            diagonal_coset_count,
            diagonal_coset_count_bruteforce,
        ),
        ArithOp::Weights { m } => {
            if m == 0 {
                return Err(Failure::usage("m must be positive"));
            }
            for (t, k) in weight_equation_solutions(m) {
                writeln!(out, "t={t} k={k}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn cache_cmd(op: CacheOp, dir: Option<PathBuf>, out: &mut dyn Write) -> Outcome {
    let dir = dir.ok_or_else(|| {
        Failure::usage(format!(
            "no cache directory: pass --cache-dir or set {CACHE_ENV}"
        ))
    })?;
    let cache = Cache::open(dir)?;
    match op {
        CacheOp::Gc => writeln!(out, "removed={}", cache.gc()?)?,
        CacheOp::Stats => {
            let s = cache.stats()?;
            writeln!(
                out,
                "entries={} bytes={} stale={} corrupt={} partial={}",
                s.entries, s.bytes, s.stale, s.corrupt, s.partial
            )?;
        }
    }
    Ok(EXIT_OK)
}

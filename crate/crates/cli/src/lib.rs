//! Command-line front end: compute characters, run verification sweeps,
//! render path families and count tableaux.

pub mod shape;

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use skewchar::formulas::character_with_n;
use skewchar::paths::{
    columnwise_endpoints, hookwise_endpoints, lgv_families, render_ascii, render_svg, tableau_to_paths,
    tableau_to_paths_hookwise, PathFamily,
};
use skewchar::tableaux::{check_shape, enumerate_tableaux};
use skewchar::verify::{self, SuiteReport};
use skewchar::{CharacterFamily, Error, LaurentPoly, Method, SkewShape};
use thiserror::Error;

pub use shape::{parse_shape, ShapeError};

#[derive(Debug, Parser)]
#[command(name = "skewchar", version, about = "Exact skew characters of GL, Sp, SO(2n+1) and O(2n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a skew character as a Laurent polynomial.
    Compute(ComputeArgs),
    /// Count the tableaux of a skew shape.
    Count(CountArgs),
    /// Render the lattice path families of a shape.
    Paths(PathsArgs),
    /// Run verification sweeps; exits 1 on any mismatch.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Target {
    /// schur, sp, so or o.
    #[arg(long)]
    pub family: CharacterFamily,
    /// OUTER[/INNER], e.g. 4,4,4,2,1/3,1.
    #[arg(long, value_parser = shape_arg)]
    pub shape: SkewShape,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub target: Target,
    /// tableaux, dual-jt, jt, giambelli or lgv.
    #[arg(long, default_value = "dual-jt")]
    pub method: Method,
    /// Determinant size (or number of column paths) instead of the default.
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub target: Target,
    /// Number of column paths (at least the first part of the outer shape).
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Read the tableaux along principal hooks instead of columns.
    #[arg(long)]
    pub hookwise: bool,
    /// Render every family of the signed expansion, not only the tableaux.
    #[arg(long)]
    pub all: bool,
    /// text (ASCII) or svg.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Directory receiving one file per family; stdout otherwise.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FourWay,
    Lgv,
    ClosedForms,
    Reflection,
    InversePairs,
    Weyl,
    Sanity,
    Involution,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Largest outer shape size in the shape sweeps.
    #[arg(long, default_value_t = 6)]
    pub max_cells: usize,
    /// Range of n, e.g. 1..2.
    #[arg(long, value_parser = range_arg, default_value = "1..2")]
    pub n: RangeInclusive<usize>,
    /// Range of m, e.g. 0..2.
    #[arg(long, value_parser = range_arg, default_value = "0..2")]
    pub m: RangeInclusive<usize>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Seed for the random evaluation points of the Weyl check.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn shape_arg(s: &str) -> Result<SkewShape, String> {
    parse_shape(s).map_err(|e| e.to_string())
}

/// `a..b` (inclusive) or a single `a`.
pub fn range_arg(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| usize::from_str(t.trim()).map_err(|_| format!("{t:?} is not a non-negative integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 2 for bad input, 3 for an internal invariant failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::NonExactDivision { .. } | Error::MalformedFamily(_) | Error::InvalidFamily(_)) => 3,
            CliError::Lib(Error::NoSite | Error::DegeneratePoint) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Vec<i32>,
    pub coeff: String,
}

/// The JSON record of one computed character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub family: String,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub method: String,
    pub terms: Vec<Term>,
}

impl CharacterRecord {
    pub fn new(t: &Target, method: Method, p: &LaurentPoly) -> Self {
        CharacterRecord {
            family: t.family.name().to_string(),
            lambda: t.shape.outer.parts().to_vec(),
            mu: t.shape.inner.parts().to_vec(),
            n: t.n,
            m: t.m,
            method: method.name().to_string(),
            // ascending lexicographic order on exponent vectors
            terms: p.terms().map(|(e, c)| Term { exp: e.exponents().to_vec(), coeff: c.to_string() }).collect(),
        }
    }

    pub fn polynomial(&self) -> Result<LaurentPoly, String> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != self.n {
                return Err(format!("exponent {:?} has the wrong length", t.exp));
            }
            let c = BigInt::from_str(&t.coeff).map_err(|_| format!("bad coefficient {:?}", t.coeff))?;
            terms.push((t.exp.clone(), c));
        }
        Ok(LaurentPoly::from_terms(self.n, terms))
    }
}

#[derive(Debug, Serialize)]
struct CountRecord<'a> {
    family: &'a str,
    lambda: &'a [usize],
    mu: &'a [usize],
    n: usize,
    m: usize,
    count: String,
}

#[derive(Debug, Serialize)]
struct SuiteRecord<'a> {
    suite: &'a str,
    passed: bool,
    checked: usize,
    failures: &'a [String],
}

/// Cap on the cells enumerated by the tableau oracle, from
/// `SKEWCHAR_MAX_CELLS`.
fn max_cells_cap() -> Result<Option<usize>, CliError> {
    match std::env::var("SKEWCHAR_MAX_CELLS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("SKEWCHAR_MAX_CELLS={v:?} is not a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

fn check_cap(cells: usize) -> Result<(), CliError> {
    match max_cells_cap()? {
        Some(cap) if cells > cap => {
            Err(CliError::Usage(format!("{cells} cells exceeds SKEWCHAR_MAX_CELLS = {cap}")))
        }
        _ => Ok(()),
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "stdout".into(), source }),
    }
}

fn no_svg(f: Format) -> Result<(), CliError> {
    if f == Format::Svg {
        return Err(CliError::Usage("--format svg only applies to the paths command".into()));
    }
    Ok(())
}

/// Runs one command, writing to `stdout` unless `--out` is given; returns the
/// exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a, stdout),
        Command::Count(a) => count(a, stdout),
        Command::Paths(a) => paths(a, stdout),
        Command::Verify(a) => verify_cmd(a, stdout),
    }
}

fn compute(a: &ComputeArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    no_svg(a.format)?;
    let t = &a.target;
    if matches!(a.method, Method::Tableaux | Method::LgvPaths) {
        check_cap(t.shape.size())?;
    }
    let p = character_with_n(t.family, &t.shape.outer, &t.shape.inner, t.n, t.m, a.method, a.big_n)?;
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string(&CharacterRecord::new(t, a.method, &p)).expect("serializable");
            s.push('\n');
            s
        }
        _ => format!("{p}\n"),
    };
    emit(&a.out, &text, stdout)?;
    Ok(0)
}

fn count(a: &CountArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    no_svg(a.format)?;
    let t = &a.target;
    check_cap(t.shape.size())?;
    let k = enumerate_tableaux(t.family, &t.shape, t.n, t.m)?.count();
    let text = match a.format {
        Format::Json => {
            let rec = CountRecord {
                family: t.family.name(),
                lambda: t.shape.outer.parts(),
                mu: t.shape.inner.parts(),
                n: t.n,
                m: t.m,
                count: k.to_string(),
            };
            format!("{}\n", serde_json::to_string(&rec).expect("serializable"))
        }
        _ => format!("{k}\n"),
    };
    emit(&a.out, &text, stdout)?;
    Ok(0)
}

fn paths(a: &PathsArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if a.format == Format::Json {
        return Err(CliError::Usage("paths renders text or svg".into()));
    }
    let t = &a.target;
    check_cap(t.shape.size())?;
    check_shape(t.family, &t.shape, t.n, t.m)?;
    if a.hookwise && t.family == CharacterFamily::Gl {
        return Err(CliError::Usage("the hook reading is defined for sp, so and o only".into()));
    }
    let big_n = a.big_n.unwrap_or(t.shape.outer.first_part());
    let limit = a.limit.unwrap_or(usize::MAX);
    let families: Vec<PathFamily> = if a.all {
        let ep = if a.hookwise {
            hookwise_endpoints(t.family, &t.shape, t.n, t.m)?
        } else {
            columnwise_endpoints(t.family, &t.shape, t.n, t.m, big_n)?
        };
        lgv_families(&ep.model, &ep.starts, &ep.ends).into_iter().take(limit).collect()
    } else {
        let mut v = Vec::new();
        for tab in enumerate_tableaux(t.family, &t.shape, t.n, t.m)?.take(limit) {
            v.push(if a.hookwise {
                tableau_to_paths_hookwise(t.family, &tab, t.n, t.m)?
            } else {
                tableau_to_paths(t.family, &tab, t.n, t.m, big_n)?
            });
        }
        v
    };
    let ext = if a.format == Format::Svg { "svg" } else { "txt" };
    let render = |pf: &PathFamily| if a.format == Format::Svg { render_svg(pf) } else { render_ascii(pf) };
    match &a.out {
        Some(dir) => {
            let io = |source| CliError::Io { path: dir.display().to_string(), source };
            fs::create_dir_all(dir).map_err(io)?;
            for (k, pf) in families.iter().enumerate() {
                let path = dir.join(format!("family-{:04}.{ext}", k + 1));
                fs::write(&path, render(pf)).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            }
            emit(&None, &format!("{} families written to {}\n", families.len(), dir.display()), stdout)?;
        }
        None => {
            let mut text = String::new();
            for (k, pf) in families.iter().enumerate() {
                if a.format == Format::Text {
                    text.push_str(&format!("# family {} sign {:+}\n", k + 1, pf.sign()));
                }
                text.push_str(&render(pf));
                text.push('\n');
            }
            emit(&None, &text, stdout)?;
        }
    }
    Ok(0)
}

fn suite_reports(a: &VerifyArgs) -> Vec<SuiteReport> {
    let all = a.suite == Suite::All;
    let want = |s: Suite| all || a.suite == s;
    let shapes = verify::partitions_up_to(a.max_cells);
    let every = || verify::cases(&CharacterFamily::ALL, &shapes, a.n.clone(), a.m.clone());
    let mut out = Vec::new();
    if want(Suite::FourWay) {
        out.push(verify::agreement("four-way", &every(), &[Method::DualJt, Method::Jt, Method::Giambelli]));
    }
    if want(Suite::Lgv) {
        out.push(verify::agreement("lgv", &every(), &[Method::LgvPaths]));
    }
    if want(Suite::ClosedForms) {
        out.push(verify::path_closed_forms(8, a.n.clone()));
    }
    if want(Suite::Reflection) {
        out.push(verify::reflection(10));
    }
    if want(Suite::InversePairs) {
        out.push(verify::inverse_pairs());
    }
    if want(Suite::Weyl) {
        out.push(verify::weyl(a.max_cells, *a.n.end(), 20, a.seed));
    }
    if want(Suite::Sanity) {
        out.push(verify::sanity(&every()));
    }
    if want(Suite::Involution) {
        out.push(verify::involution_pairing(a.max_cells, a.n.clone()));
    }
    out
}

fn verify_cmd(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    no_svg(a.format)?;
    check_cap(a.max_cells)?;
    if *a.n.start() == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let reports = match a.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be positive".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| suite_reports(a)),
        None => suite_reports(a),
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let text = match a.format {
        Format::Json => {
            let recs: Vec<SuiteRecord> = reports
                .iter()
                .map(|r| SuiteRecord { suite: &r.name, passed: r.passed(), checked: r.checked, failures: &r.failures })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&recs).expect("serializable"))
        }
        _ => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            if failed == 0 {
                s.push_str(&format!("all {} suites passed\n", reports.len()));
            } else {
                s.push_str(&format!("{failed} of {} suites failed\n", reports.len()));
            }
            s
        }
    };
    emit(&a.out, &text, stdout)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

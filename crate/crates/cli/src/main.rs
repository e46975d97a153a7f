//! `boolfun`: exact analysis of Boolean functions as multilinear
//! polynomials, from the command line.

mod cache;
mod report;
mod suites;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use boolfun::bounds::{
    cd_lower, cstar_upper, cstar_upper_best, largest_summand_above_half, to_decimal_string,
};
use boolfun::construct::{compose, iterate_selector, xi};
use boolfun::search::extremal_table;
use boolfun::TruthTable;

#[derive(Parser)]
#[command(name = "boolfun", version, about = "Exact analysis of Boolean functions as multilinear polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report degree, relevant variables, weights, maxonomials, and the
    /// minimum hitting set of one function.
    Analyze {
        /// A `bf:v1:...` string, or a path to a file holding one.
        input: String,
        /// Also compute exact block sensitivity (exponential; arity <= 16).
        #[arg(long)]
        bs: bool,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an inequality suite over an exhaustive table sweep; exit code 0
    /// iff every check passes.
    Verify {
        /// One of: claim-wi, lemma1-decomposition, hcube, hbs,
        /// npn-invariance, composition-multiplicativity,
        /// prop1-weight-report.
        suite: String,
        /// Largest arity swept (suite-specific default).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exhaustive per-degree maxima of R, W, h on `n` variables.
    Search {
        #[arg(long)]
        n: usize,
        /// Emit only the row for this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Worker count; the output is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cache directory (default `.boolfun-cache`).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Recompute even if a cached result exists.
        #[arg(long)]
        no_cache: bool,
    },
    /// Emit a construction in `bf:v1` format.
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Exact bound table for the junta-size constant.
    Bounds {
        /// Emit the per-cutoff CSV table before the summary.
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = 30)]
        dmax: u32,
        /// Significant digits in decimal renderings.
        #[arg(long, default_value_t = 4)]
        sig: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Level-d member of the recursive family on 3*2^(d-1)-2 variables.
    Xi {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read-once selector chain of depth d on 2^d-1 variables.
    SelectorChain {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Block composition f(g, ..., g) of two functions.
    Compose {
        /// Outer function: a file path or a literal `bf:v1` string.
        #[arg(long)]
        f: String,
        /// Inner function: a file path or a literal `bf:v1` string.
        #[arg(long)]
        g: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_table(input: &str) -> Result<TruthTable> {
    if input.starts_with("bf:") {
        Ok(input.parse::<TruthTable>()?)
    } else {
        let content = fs::read_to_string(input)
            .with_context(|| format!("reading table file `{input}`"))?;
        Ok(content.trim().parse::<TruthTable>()?)
    }
}

/// Write through a sibling temp file and rename, so readers never observe a
/// partial file.
fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, content).with_context(|| format!("writing `{}`", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into `{}`", path.display()))?;
    Ok(())
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run_search(
    n: usize,
    degree: Option<usize>,
    jobs: usize,
    out: Option<&Path>,
    cache_dir: Option<PathBuf>,
    no_cache: bool,
) -> Result<()> {
    let dir = cache_dir.unwrap_or_else(cache::default_dir);
    let key = cache::key(&[
        "search",
        concat!("version=", env!("CARGO_PKG_VERSION")),
        &format!("n={n}"),
        &format!("degree={degree:?}"),
    ]);
    if !no_cache {
        if let Some(cached) = cache::lookup(&dir, &key) {
            return emit(out, &cached);
        }
    }
    let record = extremal_table(n, jobs)?;
    let mut csv = String::from("n,degree,maxR,maxW_num,maxW_exp,maxH,witness\n");
    for row in &record.rows {
        if degree.is_some_and(|d| d != row.degree) {
            continue;
        }
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            record.n,
            row.degree,
            row.max_r,
            row.max_w.numerator(),
            row.max_w.exponent(),
            row.max_h,
            row.witness_r
        ));
    }
    if !no_cache {
        cache::store(&dir, &key, &csv).context("storing cache entry")?;
    }
    emit(out, &csv)
}

fn run_bounds(table: bool, dmax: u32, sig: usize, out: Option<&Path>) -> Result<()> {
    anyhow::ensure!(dmax >= 1, "--dmax must be at least 1");
    let mut text = String::new();
    if table {
        text.push_str("d,cd_lower,cd_lower_decimal,cstar_upper,cstar_upper_decimal\n");
        for d in 1..=dmax {
            let lower = cd_lower(d);
            let upper = cstar_upper(d);
            text.push_str(&format!(
                "{d},{lower},{},{upper},{}\n",
                to_decimal_string(&lower, sig),
                to_decimal_string(&upper, sig)
            ));
        }
    }
    let (best_d, best) = cstar_upper_best(dmax);
    text.push_str(&format!("min_d={best_d}\n"));
    text.push_str(&format!("min_value={best}\n"));
    text.push_str(&format!(
        "min_value_decimal={}\n",
        to_decimal_string(&best, sig)
    ));
    if let Some(threshold) = largest_summand_above_half(dmax) {
        text.push_str(&format!("last_summand_above_half_d={threshold}\n"));
    }
    let mut neighbors = Vec::new();
    for d in [best_d.checked_sub(1), best_d.checked_add(1)]
        .into_iter()
        .flatten()
    {
        if (1..=dmax).contains(&d) {
            let v = cstar_upper(d);
            text.push_str(&format!("value_d{d}={v}\n"));
            text.push_str(&format!(
                "value_d{d}_decimal={}\n",
                to_decimal_string(&v, sig)
            ));
            neighbors.push(format!("d={d} -> {}", to_decimal_string(&v, sig)));
        }
    }
    text.push_str(&format!(
        "note=the cutoff minimizing d/2 + tail(d) over 1..={dmax} is d={best_d} ({}); neighboring evaluations: {}\n",
        to_decimal_string(&best, sig),
        neighbors.join(", ")
    ));
    emit(out, &text)
}

fn real_main() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, bs, out } => {
            let tt = load_table(&input)?;
            let rep = report::analyze(&tt, bs)?;
            emit(out.as_deref(), &rep.to_string())?;
        }
        Command::Verify { suite, n } => {
            let rep = suites::run(&suite, n)?;
            print!("{}", rep.render());
            if !rep.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Search {
            n,
            degree,
            jobs,
            out,
            cache_dir,
            no_cache,
        } => run_search(n, degree, jobs, out.as_deref(), cache_dir, no_cache)?,
        Command::Construct { what } => match what {
            ConstructCommand::Xi { d, out } => {
                let f = xi(d)?;
                emit(out.as_deref(), &format!("{}\n", f.table()))?;
            }
            ConstructCommand::SelectorChain { d, out } => {
                let t = iterate_selector(d)?;
                emit(out.as_deref(), &format!("{t}\n"))?;
            }
            ConstructCommand::Compose { f, g, out } => {
                let outer = load_table(&f)?;
                let inner = load_table(&g)?;
                let t = compose(&outer, &inner)?;
                emit(out.as_deref(), &format!("{t}\n"))?;
            }
        },
        Command::Bounds {
            table,
            dmax,
            sig,
            out,
        } => run_bounds(table, dmax, sig, out.as_deref())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

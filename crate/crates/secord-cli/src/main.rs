//! Command-line front end: order queries, section listings, witnesses,
//! truth-table analysis, refutation reports, and a fast-vs-naive benchmark.
//!
//! Exit codes: 0 when the queried relation holds (or the command succeeded),
//! 1 when it fails, 2 on input or resource errors, 3 when the benchmark
//! catches the two checkers disagreeing.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use secord::{json as docs, order, random, refute, Error, Limits};

const EXIT_RELATION_FAILS: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_CONSISTENCY_ALARM: u8 = 3;

#[derive(Parser)]
#[command(name = "secord", version, about = "Section preorder toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: GlobalOptions,
}

#[derive(Args)]
struct GlobalOptions {
    /// Cap on the component product walked by section enumeration.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap_product: u64,
    /// Cap on the word width for truth-table sweeps.
    #[arg(long, global = true, default_value_t = 24)]
    max_width: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide X ⊑ Y, Y ⊑ X, and equivalence for a pair file.
    Check { pair_file: PathBuf },
    /// List the sections of a family file.
    Sections { family_file: PathBuf },
    /// Print the witness truth table for X ⊑ Y, if the order holds.
    Witness { pair_file: PathBuf },
    /// Analyze a truth-table file: monotonicity, contraction, permutation.
    Analyze { table_file: PathBuf },
    /// Scan the separating function against all arity-m placements.
    Refute {
        #[arg(short = 'm', long)]
        arity: usize,
        /// Width override instead of the default for the arity.
        #[arg(short = 'n', long)]
        width: Option<usize>,
    },
    /// Time fast_check against the enumeration oracle on seeded instances.
    Bench {
        /// Arity range, e.g. "3" or "2..4" (inclusive).
        #[arg(long, default_value = "3")]
        n: RangeArg,
        /// Ground-set cardinality range, e.g. "3" or "10..40".
        #[arg(long, default_value = "3")]
        c: RangeArg,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone)]
struct RangeArg {
    lo: u64,
    hi: u64,
}

impl std::str::FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |part: &str| {
            part.parse::<u64>()
                .map_err(|_| format!("invalid range bound {part:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo == 0 || hi < lo {
            return Err(format!("range {s:?} must be nonempty and start above 0"));
        }
        Ok(RangeArg { lo, hi })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        product_cap: cli.options.cap_product,
        sweep_width: cli.options.max_width,
    };
    let mut out = String::new();
    let status = run(&cli.command, &limits, cli.options.format, &mut out);
    let code = match status {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };
    match &cli.options.output {
        None => print!("{out}"),
        Some(path) => {
            if let Err(err) = fs::write(path, &out) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(EXIT_INPUT_ERROR);
            }
        }
    }
    ExitCode::from(code)
}

fn run(command: &Command, limits: &Limits, format: Format, out: &mut String) -> Result<u8, String> {
    match command {
        Command::Check { pair_file } => cmd_check(pair_file, limits, format, out),
        Command::Sections { family_file } => cmd_sections(family_file, limits, format, out),
        Command::Witness { pair_file } => cmd_witness(pair_file, limits, format, out),
        Command::Analyze { table_file } => cmd_analyze(table_file, limits, format, out),
        Command::Refute { arity, width } => cmd_refute(*arity, *width, limits, format, out),
        Command::Bench { n, c, trials, seed } => {
            cmd_bench(n, c, *trials, *seed, limits, format, out)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|err| format!("cannot read {}: {err}", path.display()))
}

fn explain(err: Error) -> String {
    err.to_string()
}

fn cmd_check(
    pair_file: &PathBuf,
    limits: &Limits,
    format: Format,
    out: &mut String,
) -> Result<u8, String> {
    let (x, y) = docs::parse_pair(&read_file(pair_file)?).map_err(explain)?;
    let forward = order::fast_check(&x, &y, limits).map_err(explain)?;
    let backward = order::fast_check(&y, &x, limits).map_err(explain)?;
    let sigma = order::equiv_check(&x, &y).map_err(explain)?;
    match format {
        Format::Text => {
            write!(out, "X ⊑ Y: {forward}, Y ⊑ X: {backward}, X ≡ Y: {}", sigma.is_some())
                .unwrap();
            if let Some(sigma) = &sigma {
                write!(out, " (σ = {sigma})").unwrap();
            }
            out.push('\n');
        }
        Format::Json => {
            let doc = json!({
                "x_le_y": forward,
                "y_le_x": backward,
                "equivalent": sigma.is_some(),
                "sigma": sigma.as_ref().map(|s| s.images()),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
    }
    Ok(if forward { 0 } else { EXIT_RELATION_FAILS })
}

fn cmd_sections(
    family_file: &PathBuf,
    limits: &Limits,
    format: Format,
    out: &mut String,
) -> Result<u8, String> {
    let family = docs::parse_family(&read_file(family_file)?).map_err(explain)?;
    let sections = family.enumerate_sections(limits).map_err(explain)?;
    match format {
        Format::Text => {
            for section in &sections {
                writeln!(out, "{}", section.display(family.ground())).unwrap();
            }
            writeln!(out, "total: {}", sections.len()).unwrap();
        }
        Format::Json => {
            let listed: Vec<Vec<&str>> = sections
                .iter()
                .map(|s| {
                    s.elements()
                        .iter()
                        .map(|&e| family.ground().label(e))
                        .collect()
                })
                .collect();
            let doc = json!({"count": sections.len(), "sections": listed});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
    }
    Ok(0)
}

fn cmd_witness(
    pair_file: &PathBuf,
    limits: &Limits,
    format: Format,
    out: &mut String,
) -> Result<u8, String> {
    let (x, y) = docs::parse_pair(&read_file(pair_file)?).map_err(explain)?;
    match order::witness(&x, &y, limits).map_err(explain)? {
        Some(f) => {
            writeln!(out, "{}", docs::witness_table_json(&f, limits).map_err(explain)?).unwrap();
            Ok(0)
        }
        None => {
            match format {
                Format::Text => writeln!(out, "no witness (X ⋢ Y)").unwrap(),
                Format::Json => writeln!(out, "{}", json!({"witness": null})).unwrap(),
            }
            Ok(EXIT_RELATION_FAILS)
        }
    }
}

fn cmd_analyze(
    table_file: &PathBuf,
    limits: &Limits,
    format: Format,
    out: &mut String,
) -> Result<u8, String> {
    let f = docs::parse_truth_table(&read_file(table_file)?).map_err(explain)?;
    let increasing = f.is_increasing(limits).map_err(explain)?;
    let contractive = f.is_contractive(limits).map_err(explain)?;
    let strictly = f.is_strictly_increasing(limits).map_err(explain)?;
    let permutation = if increasing && contractive {
        f.as_permutation(limits).map_err(explain)?
    } else {
        None
    };
    match format {
        Format::Text => {
            writeln!(out, "width: {}", f.width()).unwrap();
            writeln!(out, "increasing: {increasing}").unwrap();
            writeln!(out, "contractive: {contractive}").unwrap();
            writeln!(out, "strictly increasing: {strictly}").unwrap();
            match &permutation {
                Some(sigma) => writeln!(out, "permutation: {sigma}").unwrap(),
                None => writeln!(out, "permutation: none").unwrap(),
            }
        }
        Format::Json => {
            let doc = json!({
                "width": f.width(),
                "increasing": increasing,
                "contractive": contractive,
                "strictly_increasing": strictly,
                "permutation": permutation.as_ref().map(|s| s.images()),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
    }
    Ok(0)
}

fn cmd_refute(
    arity: usize,
    width: Option<usize>,
    limits: &Limits,
    format: Format,
    out: &mut String,
) -> Result<u8, String> {
    let report = refute::refute_arity(arity, width, limits).map_err(explain)?;
    match format {
        Format::Text => {
            writeln!(out, "m: {}", report.m).unwrap();
            writeln!(out, "n: {}", report.n).unwrap();
            writeln!(out, "pairs checked: {}", report.pairs_checked).unwrap();
            writeln!(out, "placements separated: {}", report.witnesses.len()).unwrap();
            writeln!(out, "failures: {}", report.failures.len()).unwrap();
            writeln!(out, "increasing: {}", report.increasing).unwrap();
            writeln!(out, "contractive: {}", report.contractive).unwrap();
            writeln!(out, "strictly increasing: {}", report.strictly_increasing).unwrap();
            writeln!(out, "holds: {}", report.holds()).unwrap();
        }
        Format::Json => writeln!(out, "{}", docs::report_json(&report)).unwrap(),
    }
    Ok(if report.holds() { 0 } else { EXIT_RELATION_FAILS })
}

struct BenchRow {
    n: u64,
    c: u64,
    trials: u64,
    fast: Duration,
    naive: Duration,
    agreements: u64,
    compared: u64,
    oracle_skipped: u64,
}

fn cmd_bench(
    n_range: &RangeArg,
    c_range: &RangeArg,
    trials: u64,
    seed: u64,
    limits: &Limits,
    format: Format,
    out: &mut String,
) -> Result<u8, String> {
    let mut rows = Vec::new();
    let mut disagreements = 0u64;
    for n in n_range.lo..=n_range.hi {
        if n as usize > limits.sweep_width {
            return Err(explain(Error::SweepWidthExceeded {
                width: n as usize,
                cap: limits.sweep_width,
            }));
        }
        for c in c_range.lo..=c_range.hi {
            let ground = random::numbered_ground(c as usize);
            // one deterministic stream per (n, c) cell
            let mut rng = random::instance_rng(seed, (n << 32) | c);
            let mut row = BenchRow {
                n,
                c,
                trials,
                fast: Duration::ZERO,
                naive: Duration::ZERO,
                agreements: 0,
                compared: 0,
                oracle_skipped: 0,
            };
            for _ in 0..trials {
                let x = random::random_family(&mut rng, &ground, n as usize);
                let y = random::random_family(&mut rng, &ground, n as usize);
                let started = Instant::now();
                let fast = order::fast_check(&x, &y, limits).map_err(explain)?;
                row.fast += started.elapsed();
                if x.product_size() > limits.product_cap as u128 {
                    row.oracle_skipped += 1;
                    continue;
                }
                let started = Instant::now();
                let naive = order::naive_check(&x, &y, limits).map_err(explain)?;
                row.naive += started.elapsed();
                row.compared += 1;
                if fast == naive {
                    row.agreements += 1;
                } else {
                    disagreements += 1;
                }
            }
            rows.push(row);
        }
    }
    match format {
        Format::Text => {
            for row in &rows {
                write!(
                    out,
                    "n={} c={} trials={} fast={:?} ",
                    row.n, row.c, row.trials, row.fast
                )
                .unwrap();
                if row.compared > 0 {
                    write!(out, "naive={:?} agree={}/{}", row.naive, row.agreements, row.compared)
                        .unwrap();
                } else {
                    write!(out, "naive=oracle-skipped").unwrap();
                }
                if row.oracle_skipped > 0 && row.compared > 0 {
                    write!(out, " skipped={}", row.oracle_skipped).unwrap();
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let listed: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "n": row.n,
                        "c": row.c,
                        "trials": row.trials,
                        "fast_ns": row.fast.as_nanos() as u64,
                        "naive_ns": row.naive.as_nanos() as u64,
                        "agreements": row.agreements,
                        "compared": row.compared,
                        "oracle_skipped": row.oracle_skipped,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&listed).unwrap()).unwrap();
        }
    }
    Ok(if disagreements > 0 {
        EXIT_CONSISTENCY_ALARM
    } else {
        0
    })
}

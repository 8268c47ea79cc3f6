//! `terncode` — construct ternary minimal codes from weight-class functions,
//! compute their exact weight tables, and verify minimality.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 budget refusal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use terncode::{
    ab_report, brute_tables, cwe_closed, generator_matrix, is_minimal_brute,
    is_minimal_spectral, parameters, run_battery, sweep, weight_distribution_closed, Budget,
    CweReport, Error, Family, LemmaTag, MinimalityRecord, WeightClassFunction,
    WeightDistributionReport,
};

#[derive(Parser)]
#[command(
    name = "terncode",
    version,
    about = "Exact constructor and verifier for ternary minimal linear codes \
             built from weight-class functions"
)]
struct Cli {
    /// Worker threads for parallel scans (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Clamp every brute-force budget cap to this m
    #[arg(long, global = true, value_name = "M")]
    max_brute_m: Option<u32>,

    /// TOML config file supplying defaults for the common flags
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print [n, dim, d], the extreme nonzero weights and the AB verdict
    Params(CodeArgs),
    /// Weight distribution, closed form; --brute cross-checks the oracle
    Wdist(TableArgs),
    /// Complete weight enumerator, closed form; --brute cross-checks
    Cwe(TableArgs),
    /// Minimality verdicts: spectral always, brute-force with --brute
    Minimality(TableArgs),
    /// Run the built-in verification battery and print its ledger
    VerifyPaper,
    /// Write the generator matrix in the plain text format
    ExportGen(ExportArgs),
    /// Emit the three inequality certificate sweeps as JSON
    Inequalities(SweepArgs),
    /// Sweep (family, m, k) and emit parameters plus verdicts as CSV
    Scan(ScanArgs),
}

#[derive(Args, Clone, Default)]
struct CodeArgs {
    /// Function family: g, gbar or f
    #[arg(long, value_name = "FAMILY")]
    family: Option<String>,

    /// Ambient dimension m
    #[arg(short, long)]
    m: Option<u32>,

    /// Weight level k
    #[arg(short, long)]
    k: Option<u32>,

    /// Sign classes for family f, comma separated (e.g. -S 1,2)
    #[arg(short = 'S', long = "sign-set", value_name = "LIST")]
    sign_set: Option<String>,

    /// Skip the guaranteed-range check (m ≥ 5, 2 ≤ k ≤ ⌊(m−1)/2⌋)
    #[arg(long)]
    unchecked: bool,

    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,

    /// Write the output to a file instead of stdout
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct TableArgs {
    #[command(flatten)]
    code: CodeArgs,

    /// Recompute by exhaustive enumeration and require exact agreement
    #[arg(long)]
    brute: bool,
}

#[derive(Args, Clone)]
struct ExportArgs {
    #[command(flatten)]
    code: CodeArgs,
}

#[derive(Args, Clone)]
struct SweepArgs {
    /// Largest m to sweep (≤ 200)
    #[arg(long, value_name = "M")]
    m_max: Option<u32>,

    /// Write the output to a file instead of stdout
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct ScanArgs {
    /// Smallest m to scan
    #[arg(long, value_name = "M", default_value_t = 5)]
    m_min: u32,

    /// Largest m to scan
    #[arg(long, value_name = "M")]
    m_max: Option<u32>,

    /// Write the output to a file instead of stdout
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

/// Optional TOML defaults mirroring the common flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    family: Option<String>,
    m: Option<u32>,
    k: Option<u32>,
    #[serde(rename = "S")]
    sign_set: Option<Vec<u32>>,
    format: Option<String>,
    jobs: Option<usize>,
    max_brute_m: Option<u32>,
    m_max: Option<u32>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::BudgetExceeded { .. } => 3,
            Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::ParameterRange(_)
            | Error::LinearlyCoincident { .. }
            | Error::Parse(_) => 2,
            Error::Inconsistency(_) | Error::Io(_) => 1,
        };
        Failure::new(code, err.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Failure {
        Failure::new(1, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let config = load_config(cli.config.as_deref())?;

    if let Some(jobs) = cli.jobs.or(config.jobs) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::new(2, format!("cannot size the worker pool: {e}")))?;
    }

    let mut budget = Budget::from_env();
    if let Some(m) = config.max_brute_m {
        budget = Budget::uniform(m);
    }
    if let Some(m) = cli.max_brute_m {
        budget = Budget::uniform(m);
    }

    match cli.command {
        Command::Params(args) => cmd_params(&args, &config, &budget),
        Command::Wdist(args) => cmd_wdist(&args, &config, &budget),
        Command::Cwe(args) => cmd_cwe(&args, &config, &budget),
        Command::Minimality(args) => cmd_minimality(&args, &config, &budget),
        Command::VerifyPaper => cmd_verify_paper(&budget),
        Command::ExportGen(args) => cmd_export_gen(&args, &config),
        Command::Inequalities(args) => cmd_inequalities(&args, &config),
        Command::Scan(args) => cmd_scan(&args, &config),
    }
}

fn load_config(path: Option<&Path>) -> Result<FileConfig, Failure> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Failure::new(2, format!("bad config file: {e}")))
}

/// Builds the requested weight-class function from flags plus config
/// defaults.
fn resolve_function(args: &CodeArgs, config: &FileConfig) -> Result<WeightClassFunction, Failure> {
    let family_text = args
        .family
        .clone()
        .or_else(|| config.family.clone())
        .ok_or_else(|| Failure::new(2, "missing --family (g, gbar or f)"))?;
    let family: Family = family_text
        .parse()
        .map_err(|e: Error| Failure::new(2, e.to_string()))?;
    if family == Family::Custom {
        return Err(Failure::new(
            2,
            "the CLI builds the named families only (g, gbar, f)",
        ));
    }
    let m = args
        .m
        .or(config.m)
        .ok_or_else(|| Failure::new(2, "missing -m"))?;
    let k = args
        .k
        .or(config.k)
        .ok_or_else(|| Failure::new(2, "missing -k"))?;
    let sign_set: Option<BTreeSet<u32>> = match (&args.sign_set, &config.sign_set) {
        (Some(text), _) => Some(parse_sign_set(text)?),
        (None, Some(list)) => Some(list.iter().copied().collect()),
        (None, None) => None,
    };
    let sign_set = if family == Family::F { sign_set } else { None };
    let built = if args.unchecked {
        WeightClassFunction::family_unchecked(family, m, k, sign_set)
    } else {
        WeightClassFunction::family(family, m, k, sign_set)
    };
    built.map_err(Failure::from)
}

fn parse_sign_set(text: &str) -> Result<BTreeSet<u32>, Failure> {
    text.split(',')
        .filter(|tok| !tok.trim().is_empty())
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Failure::new(2, format!("bad sign class {tok:?} in -S")))
        })
        .collect()
}

fn resolve_format(args: &CodeArgs, config: &FileConfig) -> Result<OutputFormat, Failure> {
    if let Some(format) = args.format {
        return Ok(format);
    }
    match config.format.as_deref() {
        None => Ok(OutputFormat::Table),
        Some("table") => Ok(OutputFormat::Table),
        Some("json") => Ok(OutputFormat::Json),
        Some(other) => Err(Failure::new(2, format!("bad format {other:?} in config"))),
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json_pretty<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Failure::new(1, format!("serialization failed: {e}")))
}

#[derive(Serialize)]
struct ParamsReport {
    family: Family,
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(rename = "S")]
    s: Vec<u32>,
    #[serde(with = "terncode::json::bigint_string")]
    n: BigInt,
    dim: u32,
    #[serde(with = "terncode::json::bigint_string")]
    d: BigInt,
    #[serde(with = "terncode::json::bigint_string")]
    w_min: BigInt,
    #[serde(with = "terncode::json::bigint_string")]
    w_max: BigInt,
    violates_ab: bool,
}

fn cmd_params(args: &CodeArgs, config: &FileConfig, _budget: &Budget) -> Result<ExitCode, Failure> {
    let f = resolve_function(args, config)?;
    let spec = parameters(&f)?;
    let ab = ab_report(&weight_distribution_closed(&f)?)?;
    let text = match resolve_format(args, config)? {
        OutputFormat::Json => to_json_pretty(&ParamsReport {
            family: f.family_tag(),
            m: f.m(),
            k: f.k(),
            s: f.sign_set().into_iter().flatten().copied().collect(),
            n: spec.n().clone(),
            dim: spec.dim(),
            d: spec.d().clone(),
            w_min: ab.w_min.clone(),
            w_max: ab.w_max.clone(),
            violates_ab: ab.violates_ab,
        })?,
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "{}: [{}, {}, {}]", f.label(), spec.n(), spec.dim(), spec.d()).unwrap();
            writeln!(out, "w_min = {}, w_max = {}", ab.w_min, ab.w_max).unwrap();
            writeln!(
                out,
                "Ashikhmin–Barg: {}",
                if ab.violates_ab {
                    "violated (3·w_min ≤ 2·w_max; code is outside the sufficient criterion)"
                } else {
                    "satisfied (w_min/w_max > 2/3)"
                }
            )
            .unwrap();
            out
        }
    };
    emit(args.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_wdist(args: &TableArgs, config: &FileConfig, budget: &Budget) -> Result<ExitCode, Failure> {
    let f = resolve_function(&args.code, config)?;
    let closed = weight_distribution_closed(&f)?;
    if args.brute {
        let (brute, _) = brute_tables(&f.to_table(), budget)?;
        if brute != closed {
            return Err(Error::Inconsistency(format!(
                "brute-force weight distribution disagrees with the closed form for {}",
                f.label()
            ))
            .into());
        }
    }
    let text = match resolve_format(&args.code, config)? {
        OutputFormat::Json => to_json_pretty(&WeightDistributionReport::new(&f, &closed))?,
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "weight multiplicity").unwrap();
            for (w, a) in closed.entries() {
                writeln!(out, "{w} {a}").unwrap();
            }
            out
        }
    };
    emit(args.code.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_cwe(args: &TableArgs, config: &FileConfig, budget: &Budget) -> Result<ExitCode, Failure> {
    let f = resolve_function(&args.code, config)?;
    let closed = cwe_closed(&f)?;
    if args.brute {
        let (_, brute) = brute_tables(&f.to_table(), budget)?;
        if brute != closed {
            return Err(Error::Inconsistency(format!(
                "brute-force complete weight enumerator disagrees with the closed form for {}",
                f.label()
            ))
            .into());
        }
    }
    let text = match resolve_format(&args.code, config)? {
        OutputFormat::Json => to_json_pretty(&CweReport::new(&closed))?,
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "t0 t1 t2 multiplicity").unwrap();
            for (counts, mult) in closed.terms() {
                writeln!(out, "{} {} {} {mult}", counts.t0, counts.t1, counts.t2).unwrap();
            }
            out
        }
    };
    emit(args.code.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_minimality(
    args: &TableArgs,
    config: &FileConfig,
    budget: &Budget,
) -> Result<ExitCode, Failure> {
    let f = resolve_function(&args.code, config)?;
    let ab = ab_report(&weight_distribution_closed(&f)?)?;
    let spectral = is_minimal_spectral(&f)?;
    let mut records = vec![MinimalityRecord::new(&spectral, &ab)];
    let mut disagreement = false;
    if args.brute {
        let brute = is_minimal_brute(&f, budget)?;
        disagreement = brute.minimal != spectral.minimal;
        records.push(MinimalityRecord::new(&brute, &ab));
    }
    let text = match resolve_format(&args.code, config)? {
        OutputFormat::Json => to_json_pretty(&records)?,
        OutputFormat::Table => {
            let mut out = String::new();
            for record in &records {
                writeln!(
                    out,
                    "{:?}: {}{}",
                    record.method,
                    if record.minimal { "minimal" } else { "NOT minimal" },
                    match record.witness {
                        Some(w) => format!(
                            " (witness: (u={},v#{}) covers (u={},v#{}))",
                            w[0][0], w[0][1], w[1][0], w[1][1]
                        ),
                        None => String::new(),
                    }
                )
                .unwrap();
            }
            writeln!(
                out,
                "w_min = {}, w_max = {}, AB violated: {}",
                ab.w_min, ab.w_max, ab.violates_ab
            )
            .unwrap();
            out
        }
    };
    emit(args.code.output.as_deref(), &text)?;
    if disagreement {
        return Err(Failure::new(
            1,
            format!(
                "spectral and brute-force minimality verdicts disagree for {}",
                f.label()
            ),
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_paper(budget: &Budget) -> Result<ExitCode, Failure> {
    let outcomes = run_battery(budget);
    let mut passed = 0usize;
    for outcome in &outcomes {
        println!(
            "[{:2}] {:55} {} — {}",
            outcome.index,
            outcome.name,
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.detail
        );
        if outcome.passed {
            passed += 1;
        }
    }
    println!("{passed}/{} criteria passed", outcomes.len());
    if passed == outcomes.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::new(1, "verification battery reported failures"))
    }
}

fn cmd_export_gen(args: &ExportArgs, config: &FileConfig) -> Result<ExitCode, Failure> {
    let f = resolve_function(&args.code, config)?;
    let path = args
        .code
        .output
        .as_deref()
        .ok_or_else(|| Failure::new(2, "export-gen requires -o FILE"))?;
    let matrix = generator_matrix(&f)?;
    std::fs::write(path, matrix.to_text())?;
    eprintln!(
        "wrote {} ({} × {} over F3)",
        path.display(),
        matrix.dim(),
        matrix.n()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_inequalities(args: &SweepArgs, config: &FileConfig) -> Result<ExitCode, Failure> {
    let m_max = args.m_max.or(config.m_max).unwrap_or(50);
    let mut reports = serde_json::Map::new();
    for tag in [
        LemmaTag::BinomGrowth,
        LemmaTag::GapPositive,
        LemmaTag::TailDominance,
    ] {
        let report = sweep(m_max, tag)?;
        reports.insert(
            tag.as_str().to_string(),
            serde_json::to_value(&report)
                .map_err(|e| Failure::new(1, format!("serialization failed: {e}")))?,
        );
    }
    let text = to_json_pretty(&reports)?;
    emit(args.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(args: &ScanArgs, config: &FileConfig) -> Result<ExitCode, Failure> {
    let m_max = args.m_max.or(config.m_max).unwrap_or(12);
    let m_min = args.m_min.max(5);
    let mut out = String::from(
        "family,m,k,n,dim,d,w_min,w_max,violates_ab,minimal_spectral\n",
    );
    for m in m_min..=m_max {
        for k in 2..=(m - 1) / 2 {
            for family in [Family::G, Family::Gbar, Family::F] {
                // every scanned quantity depends on S only through the real
                // Walsh spectrum, so S = {1} represents family f
                let s = (family == Family::F).then(|| BTreeSet::from([1u32]));
                let f = WeightClassFunction::family(family, m, k, s)?;
                let spec = parameters(&f)?;
                let ab = ab_report(&weight_distribution_closed(&f)?)?;
                let verdict = is_minimal_spectral(&f)?;
                writeln!(
                    out,
                    "{},{m},{k},{},{},{},{},{},{},{}",
                    family.as_str(),
                    spec.n(),
                    spec.dim(),
                    spec.d(),
                    ab.w_min,
                    ab.w_max,
                    ab.violates_ab,
                    verdict.minimal
                )
                .unwrap();
            }
        }
    }
    emit(args.output.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

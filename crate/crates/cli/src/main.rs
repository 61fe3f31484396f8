//! `klr`: endomorphisms, decomposability classification and verification suites for Specht
//! modules of bihooks.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use klr_core::combinatorics::{Bicharge, Bipartition};
use klr_core::decomp::{decomposability_verdict_with, DecompError, DecompPolicy, VerdictReport};
use klr_core::endo::{compute_endo_space_cached, EndoDump};
use klr_core::linalg::FieldSpec;
use klr_core::specht::{ModuleCache, SpechtModule};
use klr_core::suites::{find_suite, thread_pool, SuiteContext, SuiteParams, REGISTRY};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "klr",
    version,
    about = "Specht modules of cyclotomic KLR algebras indexed by bihooks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Endomorphism space and decomposability verdict of one module.
    Endo(Common),
    /// Verdicts for every bihook up to `--max-n`, or for `--lambda`.
    Classify(Common),
    /// Runs a verification suite.
    Verify(Common),
    /// Lists the registered suites.
    Suites,
}

#[derive(Debug, Args, Clone, Serialize)]
struct Common {
    /// Shape such as "3,1^2|2" (components separated by `|`).
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    e: Option<String>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char")]
    char: Option<u32>,
    /// Multicharge "k1,k2".
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    #[arg(long)]
    j: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "pool-size")]
    pool_size: Option<usize>,
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "cache-dir", env = "KLR_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Write rewrite traces (JSON lines) to stderr.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    threads: Option<usize>,
}

/// The validated configuration of a run, embedded in every report.
#[derive(Debug, Clone, Serialize)]
struct RunConfig {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<u8>,
    char: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    seed: u64,
    pool_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<String>,
    trace: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cache_dir: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

fn validate(command: &str, c: &Common) -> Result<RunConfig, Failure> {
    let e = match &c.e {
        Some(text) => {
            let e = Bicharge::parse_e(text).map_err(|err| Failure::usage(err.to_string()))?;
            Bicharge::new(e, &[0]).map_err(|err| Failure::usage(err.to_string()))?;
            Some(e as u8)
        }
        None => None,
    };
    let char = c.char.unwrap_or(0);
    if c.char.is_some() || command != "verify" {
        FieldSpec::new(char as u64).map_err(|err| Failure::usage(err.to_string()))?;
    }
    let kappa = c
        .kappa
        .as_deref()
        .map(Bicharge::parse_kappa)
        .transpose()
        .map_err(|err| Failure::usage(err.to_string()))?;
    if let Some(text) = &c.lambda {
        Bipartition::parse(text).map_err(|err| Failure::usage(err.to_string()))?;
    }
    if command == "verify" {
        let name = c
            .suite
            .as_deref()
            .ok_or_else(|| Failure::usage("verify requires --suite"))?;
        if find_suite(name).is_none() {
            let names: Vec<&str> = REGISTRY.iter().map(|s| s.name).collect();
            return Err(Failure::usage(format!(
                "unknown suite `{name}`; known suites: {}",
                names.join(", ")
            )));
        }
    }
    let policy = policy_of(c);
    Ok(RunConfig {
        command: command.to_string(),
        lambda: c.lambda.clone(),
        e,
        char,
        kappa,
        max_n: c.max_n,
        j: c.j,
        k: c.k,
        seed: policy.seed,
        pool_size: policy.pool_size,
        suite: c.suite.clone(),
        trace: c.trace,
        out: c.out.clone(),
        cache_dir: c.cache_dir.clone(),
    })
}

fn policy_of(c: &Common) -> DecompPolicy {
    let mut policy = DecompPolicy::default();
    if let Some(seed) = c.seed {
        policy.seed = seed;
    }
    if let Some(r) = c.pool_size {
        policy.pool_size = r;
    }
    policy
}

fn charge_of(cfg: &RunConfig, level: usize) -> Result<Bicharge, Failure> {
    let e = cfg.e.ok_or_else(|| Failure::usage("--e is required"))?;
    let charge = match &cfg.kappa {
        Some(k) => Bicharge::new(e as i64, k),
        None => Ok(Bicharge::zero(e, level)),
    }
    .map_err(|err| Failure::usage(err.to_string()))?;
    charge
        .check_level(level)
        .map_err(|err| Failure::usage(err.to_string()))?;
    Ok(charge)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|err| Failure::usage(format!("cannot write {}: {err}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}").map_err(|err| Failure::internal(err.to_string()))
        }
    }
}

fn decomp_failure(err: DecompError) -> Failure {
    match err {
        DecompError::Internal(_) => Failure::internal(err.to_string()),
        DecompError::Endo(_) => Failure::usage(err.to_string()),
    }
}

#[derive(Serialize)]
struct EndoReport {
    config: RunConfig,
    endomorphisms: EndoDump,
    verdict: VerdictReport,
}

fn cmd_endo(c: &Common, cfg: RunConfig) -> Result<(), Failure> {
    let text = cfg
        .lambda
        .as_deref()
        .ok_or_else(|| Failure::usage("endo requires --lambda"))?;
    let shape = Bipartition::parse(text).map_err(|err| Failure::usage(err.to_string()))?;
    let charge = charge_of(&cfg, shape.level())?;
    let field = FieldSpec::new(cfg.char as u64).map_err(|err| Failure::usage(err.to_string()))?;
    let mut module = SpechtModule::build(&shape, &charge, field).map_err(|err| Failure::usage(err.to_string()))?;
    if cfg.trace {
        module.engine.set_trace(Box::new(io::stderr()));
    }
    let cache = cfg.cache_dir.as_ref().map(ModuleCache::new);
    let policy = policy_of(c);
    let space = compute_endo_space_cached(&mut module, cache.as_ref());
    let outcome = decomposability_verdict_with(&mut module, &policy, cache.as_ref()).map_err(decomp_failure)?;
    let report = EndoReport {
        endomorphisms: EndoDump::new(&module, &space),
        verdict: VerdictReport::new(&module, &outcome, &policy),
        config: cfg.clone(),
    };
    let json = serde_json::to_string_pretty(&report).map_err(|err| Failure::internal(err.to_string()))?;
    write_out(cfg.out.as_deref(), &json)?;
    eprintln!(
        "{shape}: dim {}, dim End {}, {} ({})",
        outcome.dim,
        outcome.dim_end,
        outcome.verdict.name(),
        outcome.verdict.tier()
    );
    Ok(())
}

#[derive(Serialize)]
struct ClassifyRow {
    lambda: String,
    dim: u64,
    dim_end: usize,
    verdict: String,
    certificate: String,
    millis: u128,
}

#[derive(Serialize)]
struct ClassifyReport {
    config: RunConfig,
    rows: Vec<ClassifyRow>,
}

fn classify_one(
    shape: &Bipartition,
    charge: &Bicharge,
    field: FieldSpec,
    policy: &DecompPolicy,
    cache: Option<&ModuleCache>,
) -> Result<ClassifyRow, Failure> {
    let start = Instant::now();
    let mut module = SpechtModule::build(shape, charge, field).map_err(|err| Failure::usage(err.to_string()))?;
    let outcome = decomposability_verdict_with(&mut module, policy, cache).map_err(decomp_failure)?;
    Ok(ClassifyRow {
        lambda: shape.to_string(),
        dim: outcome.dim,
        dim_end: outcome.dim_end,
        verdict: outcome.verdict.name().to_string(),
        certificate: outcome.verdict.tier().to_string(),
        millis: start.elapsed().as_millis(),
    })
}

fn cmd_classify(c: &Common, cfg: RunConfig) -> Result<(), Failure> {
    use rayon::prelude::*;
    let shapes = match &cfg.lambda {
        Some(text) => vec![Bipartition::parse(text).map_err(|err| Failure::usage(err.to_string()))?],
        None => {
            let max_n = cfg
                .max_n
                .ok_or_else(|| Failure::usage("classify requires --lambda or --max-n"))?;
            (1..=max_n).flat_map(Bipartition::bihooks).collect()
        }
    };
    let charge = charge_of(&cfg, shapes.first().map(|s| s.level()).unwrap_or(2))?;
    let field = FieldSpec::new(cfg.char as u64).map_err(|err| Failure::usage(err.to_string()))?;
    let cache = cfg.cache_dir.as_ref().map(ModuleCache::new);
    let policy = policy_of(c);
    let rows: Vec<ClassifyRow> = shapes
        .par_iter()
        .map(|s| classify_one(s, &charge, field, &policy, cache.as_ref()))
        .collect::<Result<_, _>>()?;
    let mut csv = String::from("lambda,dim,dim_end,verdict,certificate,millis\n");
    for r in &rows {
        csv.push_str(&format!(
            "\"{}\",{},{},{},{},{}\n",
            r.lambda, r.dim, r.dim_end, r.verdict, r.certificate, r.millis
        ));
    }
    let report = ClassifyReport {
        config: cfg.clone(),
        rows,
    };
    let json = serde_json::to_string_pretty(&report).map_err(|err| Failure::internal(err.to_string()))?;
    match &cfg.out {
        Some(path) => {
            write_out(Some(path), &csv)?;
            write_out(Some(&path.with_extension("json")), &json)?;
        }
        None => write_out(None, csv.trim_end())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    config: RunConfig,
    #[serde(flatten)]
    report: klr_core::suites::Report,
}

fn cmd_verify(c: &Common, cfg: RunConfig) -> Result<(), Failure> {
    let name = cfg.suite.clone().expect("validated");
    let params = SuiteParams {
        e: cfg.e,
        char: c.char,
        kappa: cfg.kappa.clone(),
        max_n: cfg.max_n,
        j: cfg.j,
        k: cfg.k,
        lambda: cfg.lambda.clone(),
        seed: Some(cfg.seed),
        pool_size: Some(cfg.pool_size),
    };
    let ctx = SuiteContext::new(params).with_cache(cfg.cache_dir.as_ref().map(ModuleCache::new));
    let entry = find_suite(&name).expect("validated");
    let report = (entry.run)(&ctx).map_err(|err| Failure::usage(err.to_string()))?;
    for row in report.failures() {
        eprintln!(
            "{}: {} {} expected {}, computed {}",
            row.status.as_str(),
            report.suite,
            row.lambda,
            row.expected,
            row.computed
        );
    }
    eprintln!(
        "{}: {} instances, {}",
        report.suite,
        report.summary.total,
        if report.passed() { "pass" } else { "FAIL" }
    );
    let passed = report.passed();
    let json = serde_json::to_string_pretty(&VerifyReport {
        config: cfg.clone(),
        report,
    })
    .map_err(|err| Failure::internal(err.to_string()))?;
    write_out(cfg.out.as_deref(), &json)?;
    if passed {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_FAIL,
            message: format!("suite {name} failed"),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = match &cli.command {
        Command::Suites => {
            for s in REGISTRY {
                println!("{:<24} {}", s.name, s.about);
            }
            return ExitCode::SUCCESS;
        }
        Command::Endo(c) => ("endo", c),
        Command::Classify(c) => ("classify", c),
        Command::Verify(c) => ("verify", c),
    };
    let pool = thread_pool(common.threads);
    let result = pool.install(|| {
        let cfg = validate(name, common)?;
        let run = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| match name {
            "endo" => cmd_endo(common, cfg),
            "classify" => cmd_classify(common, cfg),
            _ => cmd_verify(common, cfg),
        }));
        run.unwrap_or_else(|_| Err(Failure::internal("internal invariant violated")))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("klr: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

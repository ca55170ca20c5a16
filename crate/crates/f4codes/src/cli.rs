//! Command-line interface. The binary is a thin shell around the library:
//! every subcommand parses arguments, calls library operations, and
//! renders text or JSON.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

use crate::catalog::{self, quantum_params, Tier};
use crate::circulant::{block_matrix, generator_matrix, CodeSpec};
use crate::code::{predict_type_prop1, AdditiveCode};
use crate::error::Error;
use crate::minweight::{
    count_words_of_weight, find_word_of_weight_at_most, min_weight_auto, min_weight_enumerate,
    min_weight_windowed, verify_certificate, verify_no_word_below, EngineConfig, VerifyOutcome,
    WeightCertificate,
};
use crate::search::{self, SearchConfig, SearchMode, SearchRecord, SpaceKind, TypeFilter};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::path::PathBuf;

/// Env var overriding the full-enumeration budget ("2^28" or a plain
/// integer).
pub const ENUM_BUDGET_ENV: &str = "F4CODES_ENUM_BUDGET";

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "f4codes",
    about = "Self-dual additive GF(4) codes from circulant pairs: build, verify, search",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CodeInput {
    /// Code-spec line, e.g. "name=C14II n=7 A=2,7 B=1,2,5".
    line: Option<String>,
    /// Read code-spec lines from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use a catalog entry by name.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args, Clone)]
struct EngineArgs {
    /// Worker threads (results are identical for any value).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Full-enumeration budget (max 2^rank walked).
    #[arg(long)]
    budget: Option<u64>,
}

impl EngineArgs {
    fn engine(&self) -> EngineConfig {
        let mut cfg = EngineConfig::default();
        if self.threads > 0 {
            cfg.threads = self.threads;
        }
        if let Ok(v) = std::env::var(ENUM_BUDGET_ENV) {
            if let Some(budget) = parse_budget(&v) {
                cfg.enum_budget = budget;
            }
        }
        if let Some(b) = self.budget {
            cfg.enum_budget = b;
        }
        cfg
    }
}

fn parse_budget(s: &str) -> Option<u64> {
    if let Some(exp) = s.strip_prefix("2^") {
        exp.parse::<u32>().ok().and_then(|e| 1u64.checked_shl(e))
    } else {
        s.parse().ok()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build generator matrices M(A,B) + wI and dump the rows.
    Build {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        json: bool,
    },
    /// Check self-duality and report the type.
    Check {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compute the exact minimum weight with a certificate.
    Minweight {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        engine: EngineArgs,
        /// Engine choice; auto picks enumeration under the budget.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Instead of the exact weight, prove no word below this floor
        /// exists (may finish much earlier).
        #[arg(long)]
        verify_floor: Option<u32>,
        /// Write the certificate to a file.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Count codewords of one exact weight.
    Count {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        engine: EngineArgs,
        /// The weight to count.
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        json: bool,
    },
    /// Classify a self-dual code as Type I or Type II.
    Classify {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
    /// Hunt for a codeword of weight at most the target.
    Findword {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        json: bool,
    },
    /// Search a circulant space for the largest minimum weight.
    Search {
        /// Code length (2n for pairs, n for --single).
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Search single-circulant codes A + wI instead of pairs.
        #[arg(long)]
        single: bool,
        #[arg(long, value_enum, default_value_t = Filter::Any)]
        type_filter: Filter,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Candidate budget (required for random mode).
        #[arg(long)]
        search_budget: Option<u64>,
        /// Early-reject floor.
        #[arg(long, default_value_t = 0)]
        d_min: u32,
        #[arg(long, default_value_t = 10_000)]
        checkpoint_interval: u64,
        /// Skip decimation-equivalent pairs.
        #[arg(long)]
        reduce: bool,
        /// Write checkpoints to this file (resumable with --resume).
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Resume from a checkpoint file.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
    /// Operate on the bundled catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog entries.
    List,
    /// Re-derive catalog claims from scratch.
    Verify {
        /// Verify a single entry.
        #[arg(long)]
        name: Option<String>,
        /// Verify every entry the tier covers.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "fast")]
        tier: String,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Enumerate,
    Windowed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    Any,
    I,
    Ii,
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_)
                | Error::BadPair(_)
                | Error::BadSupport(_)
                | Error::BadAdjacency(_)
                | Error::BadGenerators(_)
                | Error::LengthMismatch { .. }
                | Error::SpaceExceeded { .. } => EXIT_USAGE,
                Error::BudgetExceeded { .. } => {
                    eprintln!("hint: raise --budget / {ENUM_BUDGET_ENV}, or use --method windowed");
                    EXIT_USAGE
                }
                _ => EXIT_MISMATCH,
            }
        }
    }
}

fn load_specs(input: &CodeInput) -> crate::error::Result<Vec<CodeSpec>> {
    if let Some(name) = &input.name {
        let e = catalog::lookup(name)?;
        return Ok(vec![CodeSpec {
            name: e.name.to_string(),
            pair: e.pair(),
        }]);
    }
    if let Some(path) = &input.file {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let mut specs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            specs.push(
                CodeSpec::parse_line(line)
                    .map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), lineno + 1)))?,
            );
        }
        if specs.is_empty() {
            return Err(Error::Parse(format!(
                "no code-spec lines in {}",
                path.display()
            )));
        }
        return Ok(specs);
    }
    if let Some(line) = &input.line {
        return Ok(vec![CodeSpec::parse_line(line)?]);
    }
    Err(Error::Parse(
        "no input: give a code-spec line, --file, or --name".into(),
    ))
}

fn dispatch(cli: Cli) -> crate::error::Result<i32> {
    match cli.command {
        Command::Build { input, json } => {
            for spec in load_specs(&input)? {
                let gens = generator_matrix(&block_matrix(&spec.pair))?;
                if json {
                    let rows: Vec<String> = gens.iter().map(|g| g.to_alphabet_string()).collect();
                    println!(
                        "{}",
                        json!({
                            "name": spec.name,
                            "n": spec.pair.order(),
                            "length": spec.pair.code_length(),
                            "generators": rows,
                        })
                    );
                } else {
                    println!("{}", spec.to_line());
                    for g in &gens {
                        println!("{}", g.to_alphabet_string());
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check { input, engine, json } => {
            let cfg = engine.engine();
            let mut all_ok = true;
            for spec in load_specs(&input)? {
                let code = AdditiveCode::from_pair(&spec.pair)?;
                let self_dual = code.is_self_dual();
                let label = code.classify_type(cfg.enum_budget, cfg.threads)?;
                let by_prop = predict_type_prop1(&spec.pair);
                all_ok &= self_dual && label == by_prop;
                if json {
                    println!(
                        "{}",
                        json!({
                            "name": spec.name,
                            "n": spec.pair.order(),
                            "length": spec.pair.code_length(),
                            "self_dual": self_dual,
                            "type": label.to_string(),
                        })
                    );
                } else {
                    println!(
                        "name={} length={} self_dual={} type={}",
                        spec.name,
                        spec.pair.code_length(),
                        self_dual,
                        label
                    );
                }
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Minweight {
            input,
            engine,
            method,
            verify_floor,
            cert_out,
            json,
        } => {
            let cfg = engine.engine();
            for spec in load_specs(&input)? {
                let code = AdditiveCode::from_pair(&spec.pair)?;
                let cert: WeightCertificate = if let Some(floor) = verify_floor {
                    match verify_no_word_below(&code, floor, &cfg)? {
                        VerifyOutcome::Holds(c) => c,
                        VerifyOutcome::Refuted(w) => {
                            println!(
                                "name={} REFUTED: weight {} word below {floor}: {}",
                                spec.name,
                                w.weight(),
                                w.to_alphabet_string()
                            );
                            return Ok(EXIT_MISMATCH);
                        }
                    }
                } else {
                    match method {
                        Method::Auto => min_weight_auto(&code, &cfg)?,
                        Method::Enumerate => min_weight_enumerate(&code, &cfg)?,
                        Method::Windowed => min_weight_windowed(&code, &cfg)?,
                    }
                };
                verify_certificate(&code, &cert)?;
                if let Some(path) = &cert_out {
                    fs::write(path, cert.to_text()).map_err(|e| {
                        Error::Parse(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                if json {
                    println!(
                        "{}",
                        json!({
                            "name": spec.name,
                            "n": spec.pair.order(),
                            "length": spec.pair.code_length(),
                            "min_weight": cert.claimed_d,
                            "certificate": cert.to_text(),
                        })
                    );
                } else {
                    println!(
                        "name={} length={} d={}",
                        spec.name,
                        spec.pair.code_length(),
                        cert.claimed_d
                    );
                    print!("{}", cert.to_text());
                }
            }
            Ok(EXIT_OK)
        }
        Command::Count {
            input,
            engine,
            weight,
            json,
        } => {
            let cfg = engine.engine();
            for spec in load_specs(&input)? {
                let code = AdditiveCode::from_pair(&spec.pair)?;
                let report = count_words_of_weight(&code, weight, &cfg)?;
                if json {
                    println!(
                        "{}",
                        json!({
                            "name": spec.name,
                            "length": spec.pair.code_length(),
                            "counts": { report.weight.to_string(): report.count },
                            "exhaustive": report.exhaustive,
                        })
                    );
                } else {
                    println!(
                        "name={} length={} A_{}={} exhaustive={}",
                        spec.name,
                        spec.pair.code_length(),
                        report.weight,
                        report.count,
                        report.exhaustive
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify { input, engine, json } => {
            let cfg = engine.engine();
            for spec in load_specs(&input)? {
                let code = AdditiveCode::from_pair(&spec.pair)?;
                let label = code.classify_type(cfg.enum_budget, cfg.threads)?;
                if json {
                    println!(
                        "{}",
                        json!({
                            "name": spec.name,
                            "length": spec.pair.code_length(),
                            "type": label.to_string(),
                        })
                    );
                } else {
                    println!(
                        "name={} length={} type={}",
                        spec.name,
                        spec.pair.code_length(),
                        label
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Findword {
            input,
            engine,
            weight,
            json,
        } => {
            let cfg = engine.engine();
            let mut found_all = true;
            for spec in load_specs(&input)? {
                let code = AdditiveCode::from_pair(&spec.pair)?;
                let word = find_word_of_weight_at_most(&code, weight, &cfg);
                found_all &= word.is_some();
                if json {
                    println!(
                        "{}",
                        json!({
                            "name": spec.name,
                            "target": weight,
                            "found": word.as_ref().map(|w| w.to_alphabet_string()),
                            "found_weight": word.as_ref().map(|w| w.weight()),
                        })
                    );
                } else {
                    match word {
                        Some(w) => println!(
                            "name={} found weight {} word: {}",
                            spec.name,
                            w.weight(),
                            w.to_alphabet_string()
                        ),
                        None => {
                            println!("name={} no word of weight <= {weight} found", spec.name)
                        }
                    }
                }
            }
            Ok(if found_all { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Search {
            length,
            mode,
            single,
            type_filter,
            seed,
            search_budget,
            d_min,
            checkpoint_interval,
            reduce,
            checkpoint,
            resume,
            engine,
            json,
        } => {
            let mut cfg = SearchConfig::exhaustive(length);
            cfg.space = if single { SpaceKind::Single } else { SpaceKind::Pair };
            cfg.mode = match mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Random => SearchMode::Random,
            };
            cfg.type_filter = match type_filter {
                Filter::Any => TypeFilter::Any,
                Filter::I => TypeFilter::TypeI,
                Filter::Ii => TypeFilter::TypeII,
            };
            cfg.seed = seed;
            cfg.budget = search_budget;
            cfg.d_min = d_min;
            cfg.checkpoint_interval = checkpoint_interval;
            cfg.reduce_by_decimation = reduce;
            cfg.engine = engine.engine();
            let resume_record = match &resume {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
                    let (record, space) = SearchRecord::from_text(&text)?;
                    if space != cfg.space {
                        return Err(Error::Parse("checkpoint space does not match flags".into()));
                    }
                    Some(record)
                }
                None => None,
            };
            let record = search::search_with_progress(&cfg, resume_record, |r| {
                eprintln!("{}", r.progress_line());
                if let Some(path) = &checkpoint {
                    let _ = fs::write(path, r.to_text(&cfg));
                }
            })?;
            if json {
                let witnesses: Vec<String> = record
                    .witnesses
                    .iter()
                    .map(|w| match w {
                        search::Candidate::Pair(p) => format!(
                            "n={} A={} B={}",
                            p.order(),
                            p.supp_a().to_list_string(),
                            p.supp_b().to_list_string()
                        ),
                        search::Candidate::Single(s) => {
                            format!("n={} A={}", s.order(), s.to_list_string())
                        }
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "length": length,
                        "best_d": record.best_d,
                        "examined": record.candidates_examined,
                        "finished": record.finished,
                        "witnesses": witnesses,
                    })
                );
            } else {
                print!("{}", record.to_text(&cfg));
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for e in catalog::entries() {
                    println!(
                        "{} length={} d={} type={} source={}",
                        e.name,
                        e.code_length(),
                        e.claimed_d,
                        e.claimed_type.map_or("-".to_string(), |t| t.to_string()),
                        e.source
                    );
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Verify {
                name,
                all,
                tier,
                engine,
                json,
            } => {
                let tier: Tier = tier.parse()?;
                let cfg = engine.engine();
                let targets: Vec<&catalog::CatalogEntry> = if let Some(name) = &name {
                    vec![catalog::lookup(name)?]
                } else if all {
                    catalog::entries().iter().filter(|e| tier.covers(e)).collect()
                } else {
                    return Err(Error::Parse("catalog verify needs --name or --all".into()));
                };
                let mut all_pass = true;
                for entry in targets {
                    let report = catalog::verify_entry(entry, tier, &cfg)?;
                    all_pass &= report.pass;
                    if json {
                        let qp = if report.pass && report.certificate.witness.is_some() {
                            Some(quantum_params(&entry.code(), &report.certificate)?.to_string())
                        } else {
                            None
                        };
                        println!(
                            "{}",
                            json!({
                                "name": report.name,
                                "length": report.length,
                                "self_dual": report.self_dual,
                                "type": report.computed_type.to_string(),
                                "type_ok": report.type_ok,
                                "min_weight": report.computed_d,
                                "d_ok": report.d_ok,
                                "counts": report.counts.iter().map(|(w, cl, co, ok)| {
                                    json!({"weight": w, "claimed": cl, "computed": co, "ok": ok})
                                }).collect::<Vec<_>>(),
                                "quantum": qp,
                                "pass": report.pass,
                            })
                        );
                    } else {
                        let type_note = match report.type_ok {
                            Some(true) => "ok",
                            Some(false) => "MISMATCH",
                            None => "unclaimed",
                        };
                        println!(
                            "{}: length={} self_dual={} type={} ({}) d={} ({}) {}",
                            report.name,
                            report.length,
                            report.self_dual,
                            report.computed_type,
                            type_note,
                            report.computed_d,
                            if report.d_ok { "ok" } else { "MISMATCH" },
                            if report.pass { "PASS" } else { "FAIL" }
                        );
                        for (w, claimed, computed, ok) in &report.counts {
                            println!(
                                "  A_{w}: claimed={claimed} computed={computed} {}",
                                if *ok { "ok" } else { "MISMATCH" }
                            );
                        }
                    }
                }
                Ok(if all_pass { EXIT_OK } else { EXIT_MISMATCH })
            }
        },
    }
}

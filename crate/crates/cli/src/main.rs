mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;
use weakhopf::algebra::Element;
use weakhopf::auto::{AutoError, DiagonalParams, DiagramSymmetry};
use weakhopf::coeff::{Coeff, Rational};
use weakhopf::hopf::{antipode_t, counit, delta};
use weakhopf::report::Report;
use weakhopf::rewrite::{cache_info, RewriteError};
use weakhopf::session::{Check, CheckParams, EngineError, Session};
use weakhopf::syntax::{parse_element, parse_rational, ParseError};

use config::{ConfigError, FileConfig, FlagConfig, SessionConfig};

/// Exact normal forms and weak Hopf structure of w^d_q(g).
#[derive(Parser, Debug)]
#[command(name = "weakhopf", version)]
struct Cli {
    /// Cartan type: A1..A4, B2, B3, C3, D4, G2 (and other A/B/C/D ranks)
    #[arg(long = "type", global = true)]
    cartan_type: Option<String>,
    /// JSON file holding a Cartan matrix (array of rows)
    #[arg(long, global = true)]
    matrix: Option<PathBuf>,
    /// Type sequence `κ|κ̄`, e.g. `11|01` (default: all ones)
    #[arg(long, global = true)]
    dseq: Option<String>,
    /// Completion bound L (number of E/F letters)
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Rational value at which to also evaluate coefficients
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// JSON config file with the same keys as the flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct, factors in normal form
    Delta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Weak antipode T
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit ε
    Counit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification and print a pass/fail report
    Check {
        #[arg(value_enum)]
        what: CheckArg,
        /// Word length for sweeps over words
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Diagonal parameters a_1,...,a_n (automorphism check)
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Diagram permutation in one-line notation, e.g. `2,1` (automorphism check)
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Irreducible-word counts by multidegree and length
    Dims {
        #[arg(long)]
        max_len: usize,
        /// Use the J = 1 quotient
        #[arg(long)]
        quotient: bool,
    },
    /// Manage the rule cache
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckArg {
    Relations,
    Coalgebra,
    WeakAntipode,
    Grouplikes,
    Braid,
    BasisCounts,
    Rho,
    NonHopf,
    Automorphism,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CacheAction {
    Rebuild,
    Info,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("verification failed")]
    Failed,
}

impl From<RewriteError> for CliError {
    fn from(e: RewriteError) -> Self {
        CliError::Engine(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Config(c) => match c {
                ConfigError::Read { .. } => 1,
                ConfigError::Cartan(weakhopf::cartan::CartanError::UnknownType(_)) => 2,
                ConfigError::Cartan(_) => 1,
                _ => 2,
            },
            CliError::Engine(e) if e.is_overflow() => 3,
            CliError::Engine(EngineError::Auto(
                AutoError::NotPermutation(_) | AutoError::ZeroParameter(_) | AutoError::Length { .. },
            )) => 2,
            CliError::Engine(_) => 1,
            CliError::Failed => 4,
        }
    }
}

struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, text: &str, value: Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON serializes"));
        } else {
            println!("{text}");
        }
    }

    fn report(&self, r: &Report) -> Result<(), CliError> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("JSON serializes"));
        } else {
            print!("{}", r.to_text());
        }
        if r.pass() {
            Ok(())
        } else {
            Err(CliError::Failed)
        }
    }
}

fn evaluate(x: &Element, q: &Rational) -> Result<Element, CliError> {
    let mut out = Element::zero();
    for (w, c) in x.terms() {
        let v = c
            .eval_at(q)
            .map_err(|e| CliError::Usage(format!("cannot evaluate at q = {q}: {e}")))?;
        out.add_term(w.clone(), Coeff::from(v));
    }
    Ok(out)
}

fn parse_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(|t| Ok(parse_rational(t.trim())?)).collect()
}

fn parse_perm(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad permutation '{s}'"));
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let flags = FlagConfig {
        cartan_type: cli.cartan_type.clone(),
        matrix: cli.matrix.clone(),
        dseq: cli.dseq.clone(),
        bound: cli.bound,
        q: cli.q.clone(),
        cache_dir: cli.cache_dir.clone(),
        json: cli.json,
    };
    let cfg = SessionConfig::resolve(&flags, &file)?;
    let out = Output { json: cfg.json };
    let session = Session::new(&cfg.cartan, &cfg.dseq, cfg.bound, cfg.cache_dir.clone());
    let n = cfg.cartan.n;
    let instance = session.label();

    match cli.command {
        Command::Normalize { expr } => {
            let x = parse_element(&expr, n)?;
            let nf = session.base()?.normalize(&x)?;
            let mut v = json!({"instance": instance, "input": expr, "normal_form": nf.to_string()});
            let mut text = nf.to_string();
            if let Some(q) = &cfg.q {
                let e = evaluate(&nf, q)?;
                text.push_str(&format!("\nat q = {q}: {e}"));
                v["at_q"] = json!({"q": q.to_string(), "value": e.to_string()});
            }
            out.emit(&text, v);
        }
        Command::Delta { expr } => {
            let x = parse_element(&expr, n)?;
            let d = delta(&*session.base()?, &x)?;
            out.emit(
                &d.to_string(),
                json!({"instance": instance, "input": expr, "delta": d.to_string()}),
            );
        }
        Command::Antipode { expr } => {
            let x = parse_element(&expr, n)?;
            let t = antipode_t(&*session.base()?, &x)?;
            out.emit(
                &t.to_string(),
                json!({"instance": instance, "input": expr, "antipode": t.to_string()}),
            );
        }
        Command::Counit { expr } => {
            let x = parse_element(&expr, n)?;
            let c = counit(&x);
            let mut v = json!({"instance": instance, "input": expr, "counit": c.to_string()});
            let mut text = c.to_string();
            if let Some(q) = &cfg.q {
                let e = c
                    .eval_at(q)
                    .map_err(|e| CliError::Usage(format!("cannot evaluate at q = {q}: {e}")))?;
                text.push_str(&format!("\nat q = {q}: {e}"));
                v["at_q"] = json!({"q": q.to_string(), "value": e.to_string()});
            }
            out.emit(&text, v);
        }
        Command::Check { what, max_len, a, sigma } => {
            let params = CheckParams {
                word_len: max_len,
                ..CheckParams::default()
            };
            let check = match what {
                CheckArg::Relations => Check::Relations,
                CheckArg::Coalgebra => Check::Coalgebra,
                CheckArg::WeakAntipode => Check::WeakAntipode,
                CheckArg::Grouplikes => Check::Grouplikes,
                CheckArg::Braid => Check::Braid,
                CheckArg::BasisCounts => Check::BasisCounts,
                CheckArg::Rho => Check::Rho,
                CheckArg::NonHopf => Check::NonHopf,
                CheckArg::Automorphism => {
                    let a = match &a {
                        Some(s) => DiagonalParams::new(parse_list(s)?).map_err(EngineError::from)?,
                        None => DiagonalParams::ones(n),
                    };
                    if a.values().len() != n {
                        return Err(CliError::Usage(format!("--a needs {n} entries")));
                    }
                    let sigma = match &sigma {
                        Some(s) => Some(DiagramSymmetry::from_one_line(&parse_perm(s)?).map_err(EngineError::from)?),
                        None => None,
                    };
                    if let Some(s) = &sigma {
                        if s.perm.len() != n {
                            return Err(CliError::Usage(format!("--sigma needs {n} entries")));
                        }
                        let p = session.presentation();
                        let why = if !s.is_diagram_automorphism(&p.cartan) {
                            Some("σ does not preserve d_i a_ij".to_string())
                        } else if !s.preserves(&p.dseq) {
                            Some(format!("σ does not preserve the type sequence {}", p.dseq))
                        } else {
                            None
                        };
                        if why.is_some() {
                            let mut r = Report::new();
                            r.push("sigma is admissible", &instance, why);
                            return out.report(&r);
                        }
                    }
                    let r = session.automorphism_report(&a, sigma.as_ref(), max_len)?;
                    return out.report(&r);
                }
            };
            let r = session.run(check, &params)?;
            out.report(&r)?;
        }
        Command::Dims { max_len, quotient } => {
            let sys = if quotient {
                session.quotient()?
            } else {
                session.base()?
            };
            let counts = sys.graded_counts(max_len);
            let mut text = format!("{instance} {}: irreducible words up to length {max_len}\n", sys.variant().name());
            let mut rows = Vec::new();
            for ((deg, len), c) in &counts {
                text.push_str(&format!("degree {deg:?} length {len}: {c}\n"));
                rows.push(json!({"multidegree": deg, "length": len, "count": c}));
            }
            let total: u64 = counts.values().sum();
            text.push_str(&format!("total: {total}"));
            out.emit(
                &text,
                json!({"instance": instance, "variant": sys.variant().name(), "max_len": max_len, "counts": rows, "total": total}),
            );
        }
        Command::Cache { action } => {
            let Some(dir) = cfg.cache_dir.clone() else {
                return Err(CliError::Usage("cache commands need --cache-dir".into()));
            };
            match action {
                CacheAction::Rebuild => {
                    let paths = session.rebuild_cache()?;
                    let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
                    out.emit(&names.join("\n"), json!({"rebuilt": names}));
                }
                CacheAction::Info => {
                    let entries = cache_info(&dir).map_err(EngineError::from)?;
                    let text = if entries.is_empty() {
                        "cache is empty".to_string()
                    } else {
                        entries
                            .iter()
                            .map(|(f, k)| format!("{f}: {k} rules"))
                            .collect::<Vec<_>>()
                            .join("\n")
                    };
                    let rows: Vec<Value> = entries.iter().map(|(f, k)| json!({"file": f, "rules": k})).collect();
                    out.emit(&text, json!({"dir": dir.display().to_string(), "entries": rows}));
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(4),
        Err(e) => {
            let code = e.exit_code();
            if json {
                println!("{}", json!({"error": e.to_string(), "exit_code": code}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}

//! The `redisc` command-line tool: computes discriminants, repeated
//! discriminants and their certified factorizations, with an optional on-disk
//! cache for the expensive determinants.

pub mod args;
pub mod cache;
pub mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use rayon::prelude::*;
use redisc_core::{
    big_discriminant, factor_pipeline_from, verify_qhd_from_reports, verify_restriction_lemma,
    verify_specialized_forms, Error as CoreError, FactorizationReport, FamilySpec, LemmaReport, PipelineOptions,
    Polynomial, VarTable,
};

use args::{Cli, Command, Format, KSelection, MAX_N};
use cache::Cache;
use output::{LemmaJson, Naming, PolyJson, TheoremJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// A validated request.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: &'static str,
    pub n: usize,
    pub k: Option<KSelection>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
    pub letters: bool,
    pub timings: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::OutOfRange(_) | CoreError::DegreeZero { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

/// What a command produced: stdout text and whether every check passed.
struct Outcome {
    stdout: String,
    passed: bool,
}

impl JobConfig {
    fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        let c = cli.command.common();
        let cfg = JobConfig {
            command: cli.command.name(),
            n: c.n,
            k: cli.command.k(),
            format: c.format,
            cache_dir: c.cache_dir.clone(),
            seed: c.seed,
            letters: c.letters,
            timings: c.timings,
        };
        if !(2..=MAX_N).contains(&cfg.n) {
            return Err(Failure::Usage(format!("--n must be in [2, {MAX_N}], got {}", cfg.n)));
        }
        if let Some(KSelection::One(k)) = cfg.k {
            if !(1..=cfg.n).contains(&k) {
                return Err(Failure::Usage(format!("--k must be in [1, {}], got {k}", cfg.n)));
            }
        }
        let needs_three = !matches!(cli.command, Command::Discriminant(_) | Command::Ddisc(_));
        if needs_three && cfg.n < 3 {
            return Err(Failure::Usage(format!("{} needs n >= 3, got {}", cfg.command, cfg.n)));
        }
        Ok(cfg)
    }
}

/// Runs the tool and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let result = JobConfig::from_cli(&cli).and_then(|cfg| execute(&cli.command, &cfg));
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("redisc: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("redisc: internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

struct Context {
    fam: FamilySpec,
    cache: Cache,
    naming: Naming,
    opts: PipelineOptions,
    cfg: JobConfig,
}

impl Context {
    fn new(cfg: &JobConfig) -> Result<Self, Failure> {
        let fam = FamilySpec::new(cfg.n)?;
        let display = if cfg.letters {
            Some(VarTable::family_letters(cfg.n)?)
        } else {
            None
        };
        Ok(Context {
            fam,
            cache: Cache::new(cfg.cache_dir.clone()),
            naming: Naming::new(display),
            opts: PipelineOptions {
                seed: cfg.seed,
                ..PipelineOptions::default()
            },
            cfg: cfg.clone(),
        })
    }

    fn key(&self, object: &str, k: Option<usize>) -> String {
        let k = k.map_or_else(|| "-".to_string(), |k| k.to_string());
        format!("redisc {} {object} n={} k={k}", redisc_core::VERSION, self.fam.n())
    }

    fn cached(&self, object: &str, k: Option<usize>, f: impl FnOnce() -> redisc_core::Result<Polynomial>) -> Result<Polynomial, Failure> {
        Ok(self.cache.get_or_compute(&self.key(object, k), self.fam.table(), f)?)
    }

    fn discriminant(&self) -> Result<Polynomial, Failure> {
        self.cached("discriminant", None, || Ok(big_discriminant(&self.fam)))
    }

    fn ddisc(&self, k: usize) -> Result<Polynomial, Failure> {
        self.cached("ddisc", Some(k), || redisc_core::tilde_d(&self.fam, k))
    }

    fn timings(&self, entries: &[(&str, Instant, Instant)]) -> Option<BTreeMap<String, f64>> {
        self.cfg.timings.then(|| {
            entries
                .iter()
                .map(|(name, start, end)| (name.to_string(), (*end - *start).as_secs_f64() * 1e3))
                .collect()
        })
    }

    fn theorem(&self, k: usize) -> Result<(FactorizationReport, TheoremJson), Failure> {
        let t0 = Instant::now();
        let d = self.ddisc(k)?;
        let t1 = Instant::now();
        let rep = factor_pipeline_from(&self.fam, k, d, &self.opts)?;
        let t2 = Instant::now();
        let json = TheoremJson::new(&rep, &self.naming, self.timings(&[("ddisc", t0, t1), ("pipeline", t1, t2)]));
        Ok((rep, json))
    }

    fn render<T: serde::Serialize>(&self, items: &[T], text: impl Fn(&T) -> String) -> String {
        match self.cfg.format {
            Format::Json => {
                let mut s = if items.len() == 1 {
                    serde_json::to_string_pretty(&items[0])
                } else {
                    serde_json::to_string_pretty(items)
                }
                .expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => items.iter().map(text).collect::<Vec<_>>().join("\n"),
        }
    }
}

fn execute(cmd: &Command, cfg: &JobConfig) -> Result<Outcome, Failure> {
    let ctx = Context::new(cfg)?;
    let n = cfg.n;
    let ks = cfg.k.map(|k| k.resolve(n));
    let poly_json = |object: &'static str, k: Option<usize>, p: &Polynomial, start: Instant| PolyJson {
        object,
        n,
        k,
        terms: p.num_terms(),
        poly: ctx.naming.show(p),
        timings_ms: ctx.timings(&[(object, start, Instant::now())]),
    };
    match cmd {
        Command::Discriminant(_) => {
            let t0 = Instant::now();
            let r = ctx.discriminant()?;
            let item = poly_json("discriminant", None, &r, t0);
            Ok(Outcome {
                stdout: ctx.render(&[item], output::poly_text),
                passed: true,
            })
        }
        Command::Tk(_) | Command::Ddisc(_) => {
            let object = if matches!(cmd, Command::Tk(_)) { "tk" } else { "ddisc" };
            let items = ks
                .expect("k is required")
                .into_par_iter()
                .map(|k| {
                    let t0 = Instant::now();
                    let p = if object == "tk" {
                        ctx.cached("tk", Some(k), || ctx.fam.v_poly(k))?
                    } else {
                        ctx.ddisc(k)?
                    };
                    Ok(poly_json(object, Some(k), &p, t0))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(Outcome {
                stdout: ctx.render(&items, output::poly_text),
                passed: true,
            })
        }
        Command::VerifyTheorem(_) => {
            let items = ks
                .expect("k is required")
                .into_par_iter()
                .map(|k| ctx.theorem(k).map(|(_, j)| j))
                .collect::<Result<Vec<_>, Failure>>()?;
            let passed = items.iter().all(|j| j.checks.values().all(|&ok| ok));
            Ok(Outcome {
                stdout: ctx.render(&items, output::theorem_text),
                passed,
            })
        }
        Command::VerifyLemmas(_) => {
            let mut reports: Vec<LemmaReport> = vec![verify_restriction_lemma(n)?];
            let forms = (1..=n)
                .into_par_iter()
                .map(|k| verify_specialized_forms(&ctx.fam, k))
                .collect::<redisc_core::Result<Vec<_>>>()?;
            let mut merged = forms[0].clone();
            merged.cases = forms.into_iter().flat_map(|r| r.cases).collect();
            reports.push(merged);
            Ok(lemma_outcome(&ctx, &reports))
        }
        Command::VerifyQhd(_) => {
            let reports = (1..=n)
                .into_par_iter()
                .map(|k| ctx.theorem(k).map(|(r, _)| r))
                .collect::<Result<Vec<_>, Failure>>()?;
            let rep = verify_qhd_from_reports(&ctx.fam, &reports)?;
            Ok(lemma_outcome(&ctx, &[rep]))
        }
    }
}

fn lemma_outcome(ctx: &Context, reports: &[LemmaReport]) -> Outcome {
    let items: Vec<LemmaJson> = reports.iter().map(LemmaJson::from).collect();
    Outcome {
        stdout: ctx.render(&items, output::lemma_text),
        passed: reports.iter().all(LemmaReport::passed),
    }
}

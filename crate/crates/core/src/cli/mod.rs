//! Command-line front end: expression parsing, suite orchestration and
//! reports. The `qdt` binary is a thin wrapper around [`run`].

mod expr;
mod report;
mod suites;

use std::ffi::OsString;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use expr::{parse_element, parse_expression, Expression, ScalarLit};
pub use report::{emit_report, Report, ReportFormat, ReportParams};
pub use suites::{
    run_suite, Mutate, Suite, SuiteParams, CONFLUENCE_DEGREE, FDQUOT_DIM_N2_Q_I, GNS_TOLERANCE,
};

use crate::algebra::{build_finite_quotient, fdquot_lookup, AlgebraId, Element};
use crate::error::{Error, Result};
use crate::galois::CleavingConvention;
use crate::gns::{
    build_generator_operators, estimate_operator_norm, gns_expectation, LatticeWindow,
};
use crate::hopf::{
    antipode, coproduct, decompose_character, haar, star, verify_corep, verify_hopf_ideal,
    IrrepLabel,
};
use crate::scalars::{eval_scalar, reduce_cyclotomic, CyclotomicMode};

#[derive(Debug, Parser)]
#[command(
    name = "qdt",
    version,
    about = "Exact computations in the quantum double-torus Hopf algebra"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Algebra: AUq2, ADTq, AT2, AZ2, AT2q or BICROSS [default: ADTq]
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Degree bound of symbolic basis windows
    #[arg(long, global = true, default_value_t = 4)]
    pub max_deg: u32,
    /// Exponent range for cocycle, cleaving and bicross windows
    #[arg(long, global = true, default_value_t = 3)]
    pub range: i64,
    /// GNS lattice window N (sites |m|, |n| ≤ N)
    #[arg(long, global = true, default_value_t = 6)]
    pub window: i64,
    /// Evaluate at q = exp(2πiθ)
    #[arg(long = "q-theta", global = true, default_value_t = 0.31)]
    pub q_theta: f64,
    /// Reduce at a primitive M-th root of unity
    #[arg(long = "q-root", global = true, value_name = "M")]
    pub q_root: Option<u32>,
    /// Cleaving convention: corrected or printed
    #[arg(long, global = true, default_value = "corrected", value_parser = parse_convention)]
    pub convention: CleavingConvention,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub report: ReportFormat,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, hide = true)]
    pub mutate: Option<Mutate>,
    #[arg(long, global = true, default_value_t = 2024, hide = true)]
    pub seed: u64,
}

fn parse_convention(s: &str) -> std::result::Result<CleavingConvention, String> {
    CleavingConvention::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Δ of an expression
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// S of an expression
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Involution of an expression
    Star {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Haar state of an ADTq expression, exact and at θ
    Haar {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Character and corepresentation checks of an irrep label: chi(m), chiz(m), w(m,n)
    Character { label: String },
    /// Decomposes a character over irreps with |m| ≤ range, n ≤ max-deg
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Runs a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// GNS expectation and operator-norm estimate of an ADTq expression
    Gns {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Builds the finite quotient for index n at q^M = 1 (needs --q-root)
    Fdquot { n: u32 },
}

impl GlobalOpts {
    fn algebra(&self) -> Result<AlgebraId> {
        self.algebra
            .as_deref()
            .map_or(Ok(AlgebraId::ADTq), AlgebraId::parse)
    }

    fn mode(&self) -> Result<Option<CyclotomicMode>> {
        self.q_root.map(CyclotomicMode::new).transpose()
    }

    fn suite_params(&self) -> Result<SuiteParams> {
        Ok(SuiteParams {
            algebra: self.algebra.as_deref().map(AlgebraId::parse).transpose()?,
            max_deg: self.max_deg,
            range: self.range,
            window: self.window,
            theta: self.q_theta,
            q_root: self.q_root,
            convention: self.convention,
            mutate: self.mutate,
            seed: self.seed,
            ..SuiteParams::default()
        })
    }
}

/// Outcome of one command: printable output and whether all checks passed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

impl Outcome {
    fn value(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            passed: true,
        }
    }
}

fn reduce(e: &Element, mode: Option<CyclotomicMode>) -> Element {
    match mode {
        Some(m) => e.map_scalars(|c| reduce_cyclotomic(c, m)),
        None => e.clone(),
    }
}

fn execute(cmd: &Command, opts: &GlobalOpts) -> Result<Outcome> {
    let mode = opts.mode()?;
    let parse =
        |s: &str| -> Result<Element> { Ok(reduce(&parse_element(s, opts.algebra()?)?, mode)) };
    let adtq_only = |s: &str| -> Result<Element> {
        if opts.algebra()? != AlgebraId::ADTq {
            return Err(Error::InvalidParams("this command works in ADTq".into()));
        }
        parse_element(s, AlgebraId::ADTq)
    };
    Ok(match cmd {
        Command::Normalize { expr } => {
            let e = parse(expr)?;
            Outcome::value(
                e.to_string(),
                json!({"input": expr, "normal_form": e.to_string()}),
            )
        }
        Command::Coproduct { expr } => {
            let t = coproduct(&parse(expr)?)?;
            Outcome::value(
                t.to_string(),
                json!({"input": expr, "coproduct": t.to_string()}),
            )
        }
        Command::Antipode { expr } => {
            let e = reduce(&antipode(&parse(expr)?)?, mode);
            Outcome::value(
                e.to_string(),
                json!({"input": expr, "antipode": e.to_string()}),
            )
        }
        Command::Star { expr } => {
            let e = reduce(&star(&parse(expr)?)?, mode);
            Outcome::value(e.to_string(), json!({"input": expr, "star": e.to_string()}))
        }
        Command::Haar { expr } => {
            let h = haar(&adtq_only(expr)?)?;
            let v = eval_scalar(&h, opts.q_theta);
            Outcome::value(
                format!("{h}\n≈ {} + {}i at θ = {}", v.re, v.im, opts.q_theta),
                json!({"input": expr, "haar": h.to_string(), "theta": opts.q_theta, "value": [v.re, v.im]}),
            )
        }
        Command::Character { label } => {
            let l: IrrepLabel = label.parse()?;
            let w = l.corep();
            let verdict = verify_corep(&w, true)?;
            let chi = l.character();
            let entries: Vec<Vec<String>> = w
                .entries()
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect();
            let text = format!(
                "{l}: character {chi}\nmatrix {}\ncorepresentation {}, unitary {}",
                entries
                    .iter()
                    .map(|r| format!("[{}]", r.join(", ")))
                    .collect::<Vec<_>>()
                    .join(" "),
                if verdict.corep_law.is_none() && verdict.counit_law.is_none() {
                    "yes"
                } else {
                    "no"
                },
                if matches!(verdict.unitary, Some(None)) {
                    "yes"
                } else {
                    "no"
                },
            );
            Outcome {
                text,
                json: json!({"label": l.to_string(), "character": chi.to_string(), "matrix": entries, "passed": verdict.passed()}),
                passed: verdict.passed(),
            }
        }
        Command::Decompose { expr } => {
            let chi = adtq_only(expr)?;
            let labels = IrrepLabel::window(opts.range, opts.max_deg);
            let parts = decompose_character(&chi, &labels)?;
            let text = parts
                .iter()
                .map(|(l, c)| format!("{c}·{l}"))
                .collect::<Vec<_>>()
                .join(" + ");
            let js: Vec<_> = parts
                .iter()
                .map(|(l, c)| json!({"irrep": l.to_string(), "multiplicity": c.to_string()}))
                .collect();
            Outcome::value(
                if text.is_empty() { "0".into() } else { text },
                json!({"input": expr, "decomposition": js}),
            )
        }
        Command::Verify { suite } => {
            let report = run_suite(*suite, &opts.suite_params()?)?;
            Outcome {
                text: emit_report(&report, ReportFormat::Text),
                json: serde_json::to_value(&report).expect("report serializes"),
                passed: report.passed(),
            }
        }
        Command::Gns { expr } => {
            let e = adtq_only(expr)?;
            let ops = build_generator_operators(
                LatticeWindow::new(opts.window)?,
                opts.q_theta,
                opts.mutate == Some(Mutate::Pi),
            );
            let g = gns_expectation(&e, &ops)?;
            let norm = estimate_operator_norm(&e, &ops, 1e-10, 20_000)?;
            Outcome::value(
                format!(
                    "⟨Ω, π({e})Ω⟩ ≈ {} + {}i\n‖π({e})‖ ≈ {norm:.9} (window N = {})",
                    g.re, g.im, opts.window
                ),
                json!({"input": expr, "expectation": [g.re, g.im], "norm": norm, "window": opts.window, "theta": opts.q_theta}),
            )
        }
        Command::Fdquot { n } => {
            let Some(mode) = mode else {
                return Err(Error::InvalidParams("fdquot needs --q-root M".into()));
            };
            build_finite_quotient(*n, Some(mode))?;
            let fq = fdquot_lookup(*n, mode.order()).expect("just built");
            let checks = verify_hopf_ideal(*n, mode.order())?;
            let passed = checks.iter().all(|c| c.passed());
            let basis: Vec<String> = fq.basis().iter().map(|m| m.to_string()).collect();
            let mut text = format!("dimension {}\nbasis {}\n", fq.dimension(), basis.join(", "));
            for c in &checks {
                text.push_str(&format!(
                    "{} {}\n",
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.name
                ));
            }
            Outcome {
                text,
                json: json!({"n": n, "q_root": mode.order(), "dimension": fq.dimension(), "basis": basis, "checks": checks}),
                passed,
            }
        }
    })
}

/// Parses `args` and runs the command, printing to stdout/stderr.
/// Exit status: 0 pass, 1 check failure, 2 usage error.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.opts.jobs {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
    match execute(&cli.command, &cli.opts) {
        Ok(out) => {
            match cli.opts.report {
                ReportFormat::Text => print!(
                    "{}{}",
                    out.text,
                    if out.text.ends_with('\n') { "" } else { "\n" }
                ),
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("json"))
                }
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

// SPDX-License-Identifier: Apache-2.0

//! Command-line driver. `run` returns the process exit code: 0 on success,
//! 1 on a domain error, 2 on a usage or parse error.

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cf::{cf_expand, is_reduced, period_to_word, surd_of_cf, word_to_period, CF};
use crate::error::{Error, Result};
use crate::field::minimal_polynomial;
use crate::group::GenWord;
use crate::isp::{count_isps, enumerate_isps, isp_of_word};
use crate::json::{cf_to_json, ext_to_json, int_to_json, isp_to_json, surd_to_json, word_to_json};
use crate::rpf::{
    build_ansatz, build_symmetric_odd, build_union, from_json, verify, AnsatzOutcome, Relation, Rpf, Template,
    Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    SymmetricOdd,
    Union,
    Ansatz,
}

#[derive(Debug, Parser)]
#[command(name = "hecke-rpf", version, about = "Hecke groups, irreducible systems of poles and rational period functions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal polynomial of λ_p = 2cos(π/p).
    Minpoly {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        p: u32,
    },
    /// Number of ISPs with n positive poles, for n = 1..=max-n.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        p: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// All ISPs with n positive poles.
    #[command(group(ArgGroup::new("symmetry").args(["symmetric_only", "nonsymmetric_only"])))]
    Isps {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        p: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        symmetric_only: bool,
        #[arg(long)]
        nonsymmetric_only: bool,
        #[arg(long, default_value_t = 30)]
        decimal_digits: usize,
    },
    /// λ-continued fraction of a word's reduced point, or the surd of a given expansion.
    #[command(group(ArgGroup::new("input").required(true).args(["word", "period"])))]
    Cf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        p: u32,
        /// Generator word, comma-separated letters.
        #[arg(long)]
        word: Option<String>,
        /// Period entries, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        period: Option<String>,
        /// Preperiod entries, comma-separated.
        #[arg(long, allow_hyphen_values = true, requires = "period")]
        preperiod: Option<String>,
        #[arg(long, default_value_t = 30)]
        decimal_digits: usize,
    },
    /// Rational period function attached to an ISP, verified before printing.
    Rpf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        p: u32,
        #[arg(long)]
        word: String,
        /// Weight 2k, a positive even integer.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        weight: u32,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Check the two defining relations for an RPF given as JSON.
    Verify {
        #[arg(long)]
        file: std::path::PathBuf,
    },
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn emit(out: &mut dyn Write, s: impl std::fmt::Display) -> Result<()> {
    match writeln!(out, "{s}") {
        // a closed pipe (`| head`) just ends the output
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r.map_err(|e| Error::Internal(format!("write failed: {e}"))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
        .collect()
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Minpoly { p } => cmd_minpoly(*p, cli.output, out),
        Command::Count { p, max_n } => cmd_count(*p, *max_n, cli.output, out),
        Command::Isps { p, n, symmetric_only, nonsymmetric_only, decimal_digits } => {
            let filter = match (symmetric_only, nonsymmetric_only) {
                (true, _) => Some(true),
                (_, true) => Some(false),
                _ => None,
            };
            cmd_isps(*p, *n, filter, *decimal_digits, cli.output, out)
        }
        Command::Cf { p, word, period, preperiod, decimal_digits } => {
            cmd_cf(*p, word.as_deref(), period.as_deref(), preperiod.as_deref(), *decimal_digits, cli.output, out)
        }
        Command::Rpf { p, word, weight, mode } => cmd_rpf(*p, word, *weight, *mode, cli.output, out),
        Command::Verify { file } => cmd_verify(file, cli.output, out),
    }
}

fn cmd_minpoly(p: u32, output: Output, out: &mut dyn Write) -> Result<()> {
    let m = minimal_polynomial(p)?;
    let v = json!({ "p": p, "coeffs": m.coeffs.iter().map(int_to_json).collect::<Vec<_>>(), "poly": m.to_poly_string() });
    match output {
        Output::Json => emit(out, pretty(&v)),
        _ => {
            emit(out, m.to_poly_string())?;
            emit(out, v)
        }
    }
}

fn cmd_count(p: u32, max_n: u32, output: Output, out: &mut dyn Write) -> Result<()> {
    let rows = (1..=max_n).map(|n| Ok((n, count_isps(p, n)?))).collect::<Result<Vec<_>>>()?;
    match output {
        Output::Json => {
            let rows: Vec<Value> = rows.iter().map(|(n, c)| json!({ "n": n, "count": int_to_json(c) })).collect();
            emit(out, pretty(&json!({ "p": p, "rows": rows })))
        }
        _ => {
            emit(out, format!("n\tB_{p}(n)"))?;
            for (n, c) in rows {
                emit(out, format!("{n}\t{c}"))?;
            }
            Ok(())
        }
    }
}

fn cmd_isps(p: u32, n: u32, filter: Option<bool>, digits: usize, output: Output, out: &mut dyn Write) -> Result<()> {
    let isps: Vec<_> = enumerate_isps(p, n)?.into_iter().filter(|i| filter.is_none_or(|s| i.symmetric == s)).collect();
    match output {
        Output::Json => emit(out, pretty(&Value::Array(isps.iter().map(|i| isp_to_json(i, digits)).collect()))),
        _ => {
            emit(out, format!("{} ISPs in G_{p} with {n} positive poles", isps.len()))?;
            for i in &isps {
                let poles: Vec<String> = i.positives.iter().map(|a| a.to_decimal(digits)).collect();
                let sym = if i.symmetric { "symmetric".to_string() } else { format!("conjugate {}", i.conjugate_word) };
                emit(out, format!("{}\t{}\t{}", i.word, sym, poles.join(", ")))?;
            }
            Ok(())
        }
    }
}

fn cmd_cf(
    p: u32,
    word: Option<&str>,
    period: Option<&str>,
    preperiod: Option<&str>,
    digits: usize,
    output: Output,
    out: &mut dyn Write,
) -> Result<()> {
    let cf = match (word, period) {
        (Some(w), _) => CF::purely_periodic(p, word_to_period(&GenWord::parse(p, w)?)?),
        (None, Some(per)) => CF::new(p, preperiod.map(parse_ints).transpose()?.unwrap_or_default(), parse_ints(per)?),
        (None, None) => return Err(Error::Parse("need --word or --period".into())),
    };
    let alpha = surd_of_cf(&cf)?;
    let expanded = cf_expand(&alpha)?;
    let class = period_to_word(p, &expanded.period)?;
    let reduced = is_reduced(&alpha)?;
    match output {
        Output::Json => emit(
            out,
            pretty(&json!({
                "cf": cf_to_json(&expanded),
                "surd": surd_to_json(&alpha),
                "decimal": alpha.to_decimal(digits),
                "word": word_to_json(&class),
                "reduced": reduced,
            })),
        ),
        _ => {
            emit(out, format!("cf\t{expanded}"))?;
            emit(out, format!("surd\t{alpha}"))?;
            emit(out, format!("decimal\t{}", alpha.to_decimal(digits)))?;
            emit(out, format!("word\t{class}"))?;
            emit(out, format!("reduced\t{reduced}"))
        }
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Valid { points } => json!({ "valid": true, "points": points }),
        Verdict::Invalid { point, relation, value } => json!({
            "valid": false,
            "point": point.to_string(),
            "relation": relation_name(*relation),
            "residual": ext_to_json(value),
            "residual_decimal": value.to_decimal(20),
        }),
    }
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::T => "T",
        Relation::U => "U",
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Valid { points } => format!("valid ({points} exact sample points)"),
        Verdict::Invalid { point, relation, value } => format!(
            "invalid: relation {} fails at z = {point}, residual ≈ {}",
            relation_name(*relation),
            value.to_decimal(20)
        ),
    }
}

fn print_rpf(q: &Rpf, verdict: &Verdict, extra: Value, output: Output, out: &mut dyn Write) -> Result<()> {
    match output {
        Output::Json => {
            let mut v = json!({ "rpf": q.to_json(), "latex": q.to_latex(), "verdict": verdict_json(verdict) });
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            emit(out, pretty(&v))
        }
        Output::Latex => emit(out, q.to_latex()),
        Output::Text => {
            emit(out, format!("verdict\t{}", verdict_text(verdict)))?;
            emit(out, format!("latex\t{}", q.to_latex()))?;
            emit(out, q.to_json())
        }
    }
}

fn cmd_rpf(p: u32, word: &str, weight: u32, mode: Mode, output: Output, out: &mut dyn Write) -> Result<()> {
    if !weight.is_multiple_of(2) {
        return Err(Error::Parse(format!("weight {weight} is odd")));
    }
    let k = weight / 2;
    let isp = isp_of_word(&GenWord::parse(p, word)?)?;
    let mode = match mode {
        Mode::Auto if isp.symmetric && k % 2 == 1 => Mode::SymmetricOdd,
        Mode::Auto if !isp.symmetric => Mode::Union,
        Mode::Auto => Mode::Ansatz,
        m => m,
    };
    if output == Output::Text {
        emit(out, format!("word\t{}\t(G_{p}, weight {weight}, {mode:?})", isp.word))?;
    }
    let q = match mode {
        Mode::SymmetricOdd => build_symmetric_odd(k, &isp)?,
        Mode::Union => build_union(k, &isp)?,
        _ => {
            let template = if isp.symmetric { Template::Symmetric } else { Template::Nonsymmetric };
            match build_ansatz(k, &isp, template)? {
                AnsatzOutcome::Unique(q) => q,
                AnsatzOutcome::NoSolution => {
                    return emit(
                        out,
                        match output {
                            Output::Json => pretty(&json!({ "solution": null })),
                            _ => "no RPF exists for this (ISP, weight) under this template".to_string(),
                        },
                    );
                }
                AnsatzOutcome::SolutionFamily { particular, directions } => {
                    let dirs: Vec<Value> =
                        directions.iter().map(|d| Value::Array(d.iter().map(ext_to_json).collect())).collect();
                    let verdict = verify(&particular)?;
                    if output == Output::Text {
                        emit(out, format!("family\t{} free tail direction(s); free coefficients set to 0", dirs.len()))?;
                        for d in &directions {
                            let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                            emit(out, format!("direction\t({})", s.join(", ")))?;
                        }
                    }
                    return print_rpf(&particular, &verdict, json!({ "directions": dirs }), output, out);
                }
            }
        }
    };
    let verdict = verify(&q)?;
    print_rpf(&q, &verdict, json!({}), output, out)
}

fn cmd_verify(file: &std::path::Path, output: Output, out: &mut dyn Write) -> Result<()> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    // accept the bare RPF object or the object printed by `rpf --output json`
    let q = from_json(v.get("rpf").unwrap_or(&v))?;
    let verdict = verify(&q)?;
    match output {
        Output::Json => emit(out, pretty(&verdict_json(&verdict))),
        _ => emit(out, verdict_text(&verdict)),
    }
}

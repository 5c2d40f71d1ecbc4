//! Command-line front end.
//!
//! Every command reads one problem file (see [`crate::problem`]), or standard
//! input when the path is `-`. Exit status: `0` success, `1` a `compare`
//! mismatch, `2` unreadable or malformed input, `3` arithmetic overflow.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::conjugacy::{DecisionConfig, DecisionOutcome, QuotientLevel, TwistedConjugacy};
use crate::error::Error;
use crate::fox::{delta_derivative, fox_derivative};
use crate::freegroup::{Alphabet, Endomorphism, GroupRingElement, Word};
use crate::oracle::{build_regular_pair, default_epsilon, enumerate_coincidences, geometric_trace, CoincidenceSource};
use crate::problem::{parse_spec, ProblemSpec};
use crate::trace::{
    compare_traces_with, nielsen_bound, raw_trace, reduce_trace, reduce_trace_with, ReidemeisterTrace, Verdict,
};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "bouquet",
    version,
    about = "Coincidence Reidemeister traces for selfmaps of a bouquet of circles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub flags: Flags,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Flags {
    /// Longest conjugating element tried by the witness search
    #[arg(long, global = true, default_value_t = 6)]
    pub max_witness_len: usize,

    /// Deepest quotient used to separate classes
    #[arg(long, global = true, default_value = "2", value_parser = ["1", "2"])]
    pub nilpotent_level: String,

    /// Padding width for the geometric model, as `p/q`
    #[arg(long, global = true)]
    pub epsilon: Option<String>,

    /// Representations into small symmetric groups tried when separating
    /// classes (0 disables)
    #[arg(long, global = true, default_value_t = 4000)]
    pub finite_tuples: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Print only the main result line
    #[arg(long, global = true)]
    pub quiet: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            max_witness_len: 6,
            nilpotent_level: "2".into(),
            epsilon: None,
            finite_tuples: 4000,
            format: Format::Text,
            quiet: false,
        }
    }
}

impl Flags {
    pub fn decision_config(&self) -> DecisionConfig {
        DecisionConfig {
            max_witness_len: self.max_witness_len,
            nilpotent_level: if self.nilpotent_level == "1" {
                QuotientLevel::Abelian
            } else {
                QuotientLevel::Nilpotent2
            },
            finite_tuples: self.finite_tuples,
            ..DecisionConfig::default()
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Reduced coincidence Reidemeister trace
    Trace { spec: PathBuf },
    /// Bounds on the Nielsen coincidence number
    Nielsen { spec: PathBuf },
    /// Fox derivatives of every image word
    Fox { spec: PathBuf },
    /// Reversed derivatives of every image word
    Delta { spec: PathBuf },
    /// Decide whether two words are twisted conjugate
    Check { spec: PathBuf, alpha: String, beta: String },
    /// Coincidence points of the geometric model and its trace
    Oracle { spec: PathBuf },
    /// Algebraic and geometric traces side by side
    Compare { spec: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Trace { .. } => "trace",
            Command::Nielsen { .. } => "nielsen",
            Command::Fox { .. } => "fox",
            Command::Delta { .. } => "delta",
            Command::Check { .. } => "check",
            Command::Oracle { .. } => "oracle",
            Command::Compare { .. } => "compare",
        }
    }

    pub fn spec_path(&self) -> &PathBuf {
        match self {
            Command::Trace { spec }
            | Command::Nielsen { spec }
            | Command::Fox { spec }
            | Command::Delta { spec }
            | Command::Check { spec, .. }
            | Command::Oracle { spec }
            | Command::Compare { spec } => spec,
        }
    }
}

/// The finished output of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub exit_code: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn coefficient_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(k) => json!(k),
        None => json!(c.to_string()),
    }
}

fn word_str(al: &Alphabet, w: &Word) -> String {
    al.word(w).to_string()
}

fn element_json(al: &Alphabet, x: &GroupRingElement) -> Value {
    Value::Array(
        x.terms()
            .map(|(w, c)| json!([coefficient_json(c), word_str(al, w)]))
            .collect(),
    )
}

fn trace_json(al: &Alphabet, t: &ReidemeisterTrace) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|term| json!([coefficient_json(&term.coefficient), word_str(al, &term.representative)]))
        .collect();
    let unresolved: Vec<Value> = t
        .unresolved_pairs()
        .iter()
        .map(|&(i, j)| {
            json!([
                word_str(al, &t.terms()[i].representative),
                word_str(al, &t.terms()[j].representative)
            ])
        })
        .collect();
    json!({
        "terms": terms,
        "merge_status": merge_status_str(t),
        "unresolved_pairs": unresolved,
    })
}

fn merge_status_str(t: &ReidemeisterTrace) -> &'static str {
    if t.is_resolved() {
        "resolved"
    } else {
        "partially_resolved"
    }
}

fn trace_line(al: &Alphabet, t: &ReidemeisterTrace) -> String {
    format!("{}  ({})", t.display(al), t.merge_status())
}

fn spec_json(spec: &ProblemSpec) -> Value {
    let al = &spec.alphabet;
    let images = |e: &Endomorphism| {
        let mut m = Map::new();
        for (g, w) in e.images().iter().enumerate() {
            m.insert(al.name(g).to_string(), json!(word_str(al, w)));
        }
        Value::Object(m)
    };
    json!({
        "generators": al.names(),
        "phi": images(&spec.phi),
        "psi": images(&spec.psi),
    })
}

fn outcome_json(al: &Alphabet, o: &DecisionOutcome) -> Value {
    match o {
        DecisionOutcome::Equivalent { witness } => {
            json!({"outcome": "equivalent", "witness": word_str(al, witness)})
        }
        DecisionOutcome::Distinct { level } => {
            let level = match level {
                QuotientLevel::Finite => json!("finite"),
                QuotientLevel::Abelian => json!(1),
                QuotientLevel::Nilpotent2 => json!(2),
            };
            json!({"outcome": "distinct", "level": level})
        }
        DecisionOutcome::Unknown => json!({"outcome": "unknown"}),
    }
}

fn outcome_text(al: &Alphabet, o: &DecisionOutcome) -> String {
    match o {
        DecisionOutcome::Equivalent { witness } => {
            format!("equivalent (witness {})", word_str(al, witness))
        }
        DecisionOutcome::Distinct {
            level: QuotientLevel::Abelian,
        } => "distinct (level 1: abelianization)".to_string(),
        DecisionOutcome::Distinct {
            level: QuotientLevel::Nilpotent2,
        } => "distinct (level 2: class-2 nilpotent quotient)".to_string(),
        DecisionOutcome::Distinct {
            level: QuotientLevel::Finite,
        } => "distinct (finite permutation quotient)".to_string(),
        DecisionOutcome::Unknown => "unknown".to_string(),
    }
}

fn parse_epsilon(text: &str) -> crate::Result<BigRational> {
    BigRational::from_str(text.trim()).map_err(|_| Error::EpsilonOutOfRange {
        epsilon: text.to_string(),
        bound: "a rational p/q".to_string(),
    })
}

/// Runs one command on an already parsed problem.
pub fn run(command: &Command, spec: &ProblemSpec, flags: &Flags) -> crate::Result<Report> {
    let al = &spec.alphabet;
    let (phi, psi) = (&spec.phi, &spec.psi);
    let cfg = flags.decision_config();
    let mut text = String::new();
    let mut exit_code = EXIT_OK;
    let mut status = "ok";

    let result = match command {
        Command::Trace { .. } => {
            let t = reduce_trace(&raw_trace(phi, psi)?, phi, psi, &cfg)?;
            let _ = writeln!(text, "{}", trace_line(al, &t));
            if !flags.quiet {
                for &(i, j) in t.unresolved_pairs() {
                    let _ = writeln!(
                        text,
                        "unresolved: [{}] vs [{}]",
                        word_str(al, &t.terms()[i].representative),
                        word_str(al, &t.terms()[j].representative)
                    );
                }
            }
            trace_json(al, &t)
        }
        Command::Nielsen { .. } => {
            let t = reduce_trace(&raw_trace(phi, psi)?, phi, psi, &cfg)?;
            let (lo, hi) = nielsen_bound(&t);
            if lo == hi {
                let _ = writeln!(text, "N = {lo}");
            } else {
                let _ = writeln!(text, "{lo} <= N <= {hi}  (partially resolved)");
            }
            if !flags.quiet {
                let _ = writeln!(text, "trace: {}", trace_line(al, &t));
            }
            json!({"lower": lo, "upper": hi, "trace": trace_json(al, &t)})
        }
        Command::Fox { .. } | Command::Delta { .. } => {
            let fox = matches!(command, Command::Fox { .. });
            let (symbol, derive): (&str, fn(usize, &Word) -> GroupRingElement) = if fox {
                ("∂", fox_derivative)
            } else {
                ("Δ", delta_derivative)
            };
            let mut maps = Map::new();
            for (name, e) in [("phi", phi), ("psi", psi)] {
                let mut rows = Vec::new();
                for a in 0..al.rank() {
                    for b in 0..al.rank() {
                        let d = derive(a, e.image(b));
                        let _ = writeln!(
                            text,
                            "{symbol}_{} {name}({}) = {}",
                            al.name(a),
                            al.name(b),
                            al.element(&d)
                        );
                        rows.push(json!({
                            "generator": al.name(a),
                            "image_of": al.name(b),
                            "value": element_json(al, &d),
                        }));
                    }
                }
                maps.insert(name.to_string(), Value::Array(rows));
            }
            Value::Object(maps)
        }
        Command::Check { alpha, beta, .. } => {
            let a = al.parse_word(alpha)?;
            let b = al.parse_word(beta)?;
            let tc = TwistedConjugacy::new(phi, psi, cfg)?;
            let outcome = tc.decide(&a, &b)?;
            let _ = writeln!(text, "{}", outcome_text(al, &outcome));
            outcome_json(al, &outcome)
        }
        Command::Oracle { .. } => {
            let eps = match &flags.epsilon {
                Some(s) => parse_epsilon(s)?,
                None => default_epsilon(phi, psi)?,
            };
            let pair = build_regular_pair(phi, psi, &eps)?;
            let points = enumerate_coincidences(&pair);
            let geo = geometric_trace(&pair);
            let reduced = reduce_trace(&geo, phi, psi, &cfg)?;
            if !flags.quiet {
                let _ = writeln!(text, "epsilon = {eps}");
                let _ = writeln!(text, "circle coordinate index class");
            }
            let mut rows = Vec::new();
            for c in &points {
                let circle = match c.source {
                    CoincidenceSource::Wedge => "wedge".to_string(),
                    CoincidenceSource::Intervals { .. } => al.name(c.circle).to_string(),
                };
                if !flags.quiet {
                    let _ = writeln!(
                        text,
                        "{circle} {} {:+} {}",
                        c.coordinate,
                        c.index,
                        word_str(al, &c.class_word)
                    );
                }
                rows.push(json!({
                    "circle": circle,
                    "coordinate": c.coordinate.to_string(),
                    "index": c.index,
                    "class": word_str(al, &c.class_word),
                }));
            }
            if !flags.quiet {
                let _ = writeln!(text, "geometric trace: {}", al.element(&geo));
                let _ = writeln!(text, "intervals:");
                text.push_str(&pair.interval_table(al));
            }
            let _ = writeln!(text, "reduced: {}", trace_line(al, &reduced));
            json!({
                "epsilon": eps.to_string(),
                "coincidences": rows,
                "geometric_trace": element_json(al, &geo),
                "reduced": trace_json(al, &reduced),
                "intervals": pair.interval_table(al).lines().collect::<Vec<_>>(),
            })
        }
        Command::Compare { .. } => {
            let eps = match &flags.epsilon {
                Some(s) => parse_epsilon(s)?,
                None => default_epsilon(phi, psi)?,
            };
            let pair = build_regular_pair(phi, psi, &eps)?;
            let tc = TwistedConjugacy::new(phi, psi, cfg)?;
            let (algebraic, _) = reduce_trace_with(&raw_trace(phi, psi)?, &tc)?;
            let (geometric, _) = reduce_trace_with(&geometric_trace(&pair), &tc)?;
            let cmp = compare_traces_with(&algebraic, &geometric, &tc)?;
            if !flags.quiet {
                let _ = writeln!(text, "algebraic: {}", trace_line(al, &algebraic));
                let _ = writeln!(text, "geometric: {}", trace_line(al, &geometric));
            }
            let _ = writeln!(text, "verdict: {}", cmp.verdict);
            if cmp.verdict == Verdict::Mismatch {
                exit_code = EXIT_MISMATCH;
                status = "mismatch";
            }
            json!({
                "algebraic": trace_json(al, &algebraic),
                "geometric": trace_json(al, &geometric),
                "verdict": cmp.verdict.to_string(),
                "unknown_pairs": cmp.unknown_pairs,
            })
        }
    };

    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command.name(),
        "spec": spec_json(spec),
        "result": result,
        "status": status,
    });
    Ok(Report { exit_code, text, json })
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Overflow(_) => EXIT_OVERFLOW,
        _ => EXIT_INPUT,
    }
}

fn error_report(command: &Command, exit_code: i32, message: String, position: Option<(usize, usize)>) -> Report {
    let mut err = json!({"message": message});
    if let Some((line, column)) = position {
        err["line"] = json!(line);
        err["column"] = json!(column);
    }
    Report {
        exit_code,
        text: format!("error: {message}\n"),
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "command": command.name(),
            "status": "error",
            "error": err,
        }),
    }
}

/// Reads the problem from `text`, runs the command and never fails: errors
/// become a report with the matching exit code.
pub fn run_text(command: &Command, input: &str, flags: &Flags) -> Report {
    match parse_spec(input).and_then(|spec| run(command, &spec, flags)) {
        Ok(r) => r,
        Err(e) => {
            let position = match &e {
                Error::Parse { line, column, .. } => Some((*line, *column)),
                _ => None,
            };
            error_report(command, error_exit_code(&e), e.to_string(), position)
        }
    }
}

/// Entry point for the binary: returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let path = cli.command.spec_path();
    let input = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    let report = match input {
        Ok(text) => run_text(&cli.command, &text, &cli.flags),
        Err(e) => {
            let message = format!("cannot read {}: {e}", path.display());
            error_report(&cli.command, EXIT_INPUT, message, None)
        }
    };
    let out = report.render(cli.flags.format);
    if report.exit_code == EXIT_INPUT || report.exit_code == EXIT_OVERFLOW {
        if cli.flags.format == Format::Json {
            print!("{out}");
        } else {
            eprint!("{out}");
        }
    } else {
        print!("{out}");
    }
    report.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "generators: a b c
phi: a -> a c b^-1
phi: b -> a b
phi: c -> b
psi: a -> a^-1 c b^-1
psi: b -> c
psi: c -> b^-1 a
";

    fn cmd(name: &str) -> Command {
        let spec = PathBuf::from("-");
        match name {
            "trace" => Command::Trace { spec },
            "nielsen" => Command::Nielsen { spec },
            "fox" => Command::Fox { spec },
            "delta" => Command::Delta { spec },
            "oracle" => Command::Oracle { spec },
            "compare" => Command::Compare { spec },
            _ => unreachable!(),
        }
    }

    #[test]
    fn example_trace_line() {
        let r = run_text(&cmd("trace"), EXAMPLE, &Flags::default());
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.text, "-1·[a] -3·[a^2] -1·[a c b^-1]  (resolved)\n");
        assert_eq!(
            r.json["result"]["terms"],
            json!([[-1, "a"], [-3, "a^2"], [-1, "a c b^-1"]])
        );
        assert_eq!(r.json["schema_version"], json!(SCHEMA_VERSION));
    }

    #[test]
    fn circle_nielsen() {
        let r = run_text(
            &cmd("nielsen"),
            "generators: a\nphi: a -> a^3\npsi: a -> a\n",
            &Flags::default(),
        );
        assert!(r.text.starts_with("N = 2\n"));
        assert_eq!(r.json["result"]["lower"], json!(2));
    }

    #[test]
    fn identity_compare_matches() {
        let r = run_text(&cmd("compare"), "generators: a\nphi: a -> a\n", &Flags::default());
        assert_eq!(r.exit_code, 0);
        assert!(r.text.contains("algebraic: 0  (resolved)"));
        assert!(r.text.contains("geometric: 0  (resolved)"));
        assert!(r.text.ends_with("verdict: match\n"));
    }

    #[test]
    fn parse_errors_exit_2() {
        let r = run_text(&cmd("trace"), "generators: a\nphi: a -> q\n", &Flags::default());
        assert_eq!(r.exit_code, EXIT_INPUT);
        assert_eq!(r.json["error"]["line"], json!(2));
        assert_eq!(r.json["status"], json!("error"));
    }

    #[test]
    fn bad_epsilon_is_an_input_error() {
        let flags = Flags {
            epsilon: Some("1/2".into()),
            ..Flags::default()
        };
        assert_eq!(run_text(&cmd("oracle"), EXAMPLE, &flags).exit_code, EXIT_INPUT);
        let flags = Flags {
            epsilon: Some("x".into()),
            ..Flags::default()
        };
        assert_eq!(run_text(&cmd("compare"), EXAMPLE, &flags).exit_code, EXIT_INPUT);
    }

    #[test]
    fn check_reports_witness_and_level() {
        let flags = Flags::default();
        let check = |a: &str, b: &str| {
            run_text(
                &Command::Check {
                    spec: PathBuf::from("-"),
                    alpha: a.into(),
                    beta: b.into(),
                },
                EXAMPLE,
                &flags,
            )
        };
        assert!(check("a^2", "b a^-1 b").text.starts_with("equivalent (witness "));
        assert_eq!(
            check("a^2", "a^-1 c b^-1").json["result"],
            json!({"outcome": "distinct", "level": 2})
        );
        assert_eq!(check("a", "a^2").json["result"]["level"], json!(1));
    }

    #[test]
    fn fox_table_covers_all_pairs() {
        let r = run_text(&cmd("fox"), EXAMPLE, &Flags::default());
        assert_eq!(r.text.lines().count(), 18);
        assert!(r.text.contains("∂_a phi(a) = 1\n"));
        let d = run_text(&cmd("delta"), EXAMPLE, &Flags::default());
        assert!(d.text.contains("Δ_a psi(a) = -a^-1 c b^-1\n"));
    }

    #[test]
    fn reports_are_deterministic() {
        for name in ["trace", "nielsen", "fox", "delta", "oracle", "compare"] {
            let a = run_text(&cmd(name), EXAMPLE, &Flags::default());
            let b = run_text(&cmd(name), EXAMPLE, &Flags::default());
            assert_eq!(a.render(Format::Json), b.render(Format::Json));
            assert_eq!(a.text, b.text);
        }
    }
}

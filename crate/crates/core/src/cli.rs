//! Command-line front end.
//!
//! Every subcommand produces a [`CliReport`], rendered either as text or as
//! one JSON document. The binary in `src/bin/fibform.rs` only parses
//! arguments, prints and exits with [`CliReport::exit_code`].

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::cfinite::{to_recurrence, Direction};
use crate::decide::{is_integer_sequence, IntegralityVerdict};
use crate::exact::Rational;
use crate::oeis::{self, FixtureSet, OeisError, OeisHit};
use crate::oracles::{self, OracleError};
use crate::parser::{format_poly, parse, print, ParseError};
use crate::seqform::FibExpr;
use crate::synth::{solve_template, theorem_construct, SynthError, Template, Theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NON_INTEGER: i32 = 3;
pub const EXIT_NETWORK: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "fibform", version, about = "Exact Fibonacci-polynomial sequence toolkit")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Range {
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub from: i64,
    #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
    pub to: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print n and w_n for n in [from, to].
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        range: Range,
    },
    /// Reduce to P0(n)F(n) + P1(n)F(n-1) + e + f(-1)^n.
    Canon {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Characteristic polynomial, recurrence and initial values.
    Rec {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also run the recurrence this many steps forward and backward.
        #[arg(long, default_value_t = 0)]
        extend: usize,
    },
    /// Decide integrality on all of Z (exit code 3 when not integral).
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Fit a template to initial values w_0, w_1, ...
    Synth {
        #[arg(long)]
        p0_deg: Option<usize>,
        #[arg(long)]
        p1_deg: Option<usize>,
        /// Include a constant term e.
        #[arg(long = "const")]
        constant: bool,
        /// Include an alternating term f(-1)^n.
        #[arg(long)]
        alt: bool,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<String>,
    },
    /// Build a closed-form family member from integer parameters.
    ///
    /// 1: --d and --z z1,z2,z3. 2: --f and --z z1..z5. 3: --e and --z z1..z4.
    /// 4: --w w0..w5.
    Theorem {
        number: u8,
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        e: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        f: Option<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        z: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        w: Vec<String>,
    },
    /// Look a prefix up in the bundled fixtures, or live with --online.
    Oeis {
        /// Comma-separated terms, at least four.
        #[arg(allow_hyphen_values = true)]
        prefix: String,
        /// Also requires FIBFORM_ONLINE=1 in the environment.
        #[arg(long)]
        online: bool,
        #[arg(long, default_value_t = 10)]
        timeout: u64,
        /// Directory with index.txt and b-files, replacing the bundled set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Brute-force counts: compositions, inversions or leonardo.
    Oracle {
        kind: OracleKind,
        #[command(flatten)]
        range: Range,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleKind {
    Compositions,
    Inversions,
    Leonardo,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Canonical {
    pub p0: String,
    pub p1: String,
    pub e: String,
    pub f: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexedValue {
    pub n: i64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// `"INTEGER"` or `"NON-INTEGER"`.
    pub kind: String,
    pub certificate: Option<Vec<String>>,
    pub witness: Option<IndexedValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hit {
    pub a_number: String,
    pub offset: i64,
    pub match_start: usize,
    pub first_index: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    /// Byte offset into the expression, for parse errors.
    pub offset: Option<usize>,
}

/// Outcome of one invocation. Every field is always serialized (`null` when
/// the command does not produce it), so the JSON schema is fixed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CliReport {
    pub command: String,
    pub exit_code: i32,
    pub expression: Option<String>,
    pub canonical: Option<Canonical>,
    pub values: Option<Vec<IndexedValue>>,
    pub order: Option<usize>,
    pub char_poly: Option<String>,
    pub recurrence: Option<Vec<String>>,
    pub initial: Option<Vec<String>>,
    pub extended_forward: Option<Vec<String>>,
    pub extended_backward: Option<Vec<String>>,
    pub verdict: Option<Verdict>,
    pub coefficients: Option<Vec<NamedValue>>,
    pub hits: Option<Vec<Hit>>,
    pub counts: Option<Vec<IndexedValue>>,
    pub error: Option<ErrorInfo>,
}

/// Failure carried out of a command together with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    info: ErrorInfo,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, info: ErrorInfo { kind: "usage".into(), message: message.into(), offset: None } }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            code: EXIT_USAGE,
            info: ErrorInfo { kind: "parse".into(), message: e.to_string(), offset: Some(e.offset) },
        }
    }
}

impl From<SynthError> for Failure {
    fn from(e: SynthError) -> Self {
        let kind = match e {
            SynthError::Degenerate => "degenerate",
            _ => "usage",
        };
        Failure { code: EXIT_USAGE, info: ErrorInfo { kind: kind.into(), message: e.to_string(), offset: None } }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<OeisError> for Failure {
    fn from(e: OeisError) -> Self {
        let (code, kind) = match &e {
            OeisError::PrefixTooShort(_) => (EXIT_USAGE, "usage"),
            OeisError::NetworkDisabled => (EXIT_NETWORK, "network-disabled"),
            OeisError::Timeout(_) => (EXIT_NETWORK, "timeout"),
            OeisError::Transport(_) => (EXIT_NETWORK, "transport"),
            OeisError::Malformed(_) => (EXIT_NETWORK, "malformed-response"),
            OeisError::BadANumber(_) | OeisError::BFile { .. } | OeisError::Fixture(_) | OeisError::Io(_) => {
                (EXIT_USAGE, "fixtures")
            }
        };
        Failure { code, info: ErrorInfo { kind: kind.into(), message: e.to_string(), offset: None } }
    }
}

fn parse_ints(items: &[String], what: &str) -> Result<Vec<BigInt>, Failure> {
    items
        .iter()
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| Failure::usage(format!("{what}: {s:?} is not an integer"))))
        .collect()
}

fn parse_rationals(items: &[String], what: &str) -> Result<Vec<Rational>, Failure> {
    items
        .iter()
        .map(|s| s.trim().parse::<Rational>().map_err(|_| Failure::usage(format!("{what}: {s:?} is not a rational"))))
        .collect()
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// `w(n) = 2*w(n-1) + w(n-2) - 2*w(n-3) - w(n-4)`
pub fn format_recurrence(coeffs: &[BigInt]) -> String {
    use num_traits::{One, Signed, Zero};
    let mut rhs = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = format!("w(n-{})", i + 1);
        let mag = c.abs();
        let body = if mag.is_one() { term } else { format!("{mag}*{term}") };
        match (rhs.is_empty(), c.is_negative()) {
            (true, false) => rhs.push_str(&body),
            (true, true) => rhs.push_str(&format!("-{body}")),
            (false, false) => rhs.push_str(&format!(" + {body}")),
            (false, true) => rhs.push_str(&format!(" - {body}")),
        }
    }
    if rhs.is_empty() {
        rhs.push('0');
    }
    format!("w(n) = {rhs}")
}

fn cmd_eval(expr: &str, range: &Range) -> Result<CliReport, Failure> {
    if range.from > range.to {
        return Err(Failure::usage(format!("--from {} exceeds --to {}", range.from, range.to)));
    }
    let e = parse(expr)?;
    let values = (range.from..=range.to).map(|n| IndexedValue { n, value: e.evaluate(n).to_string() }).collect();
    Ok(CliReport { expression: Some(print(&e)), values: Some(values), ..Default::default() })
}

fn cmd_canon(expr: &str) -> Result<CliReport, Failure> {
    let e = parse(expr)?;
    let c = e.canonicalize();
    Ok(CliReport {
        expression: Some(print(&c.to_expr())),
        canonical: Some(Canonical {
            p0: format_poly(&c.p0, "n"),
            p1: format_poly(&c.p1, "n"),
            e: c.const_e.to_string(),
            f: c.alt_f.to_string(),
        }),
        ..Default::default()
    })
}

fn cmd_rec(expr: &str, extend: usize) -> Result<CliReport, Failure> {
    let e = parse(expr)?;
    let rec = to_recurrence(&e);
    let (fwd, back) = if extend > 0 {
        let f = rec.extend(extend, Direction::Forward).map_err(|x| Failure::usage(x.to_string()))?;
        let b = rec.extend(extend, Direction::Backward).map_err(|x| Failure::usage(x.to_string()))?;
        (Some(strings(&f)), Some(strings(&b)))
    } else {
        (None, None)
    };
    Ok(CliReport {
        expression: Some(print(&e)),
        order: Some(rec.order),
        char_poly: Some(format_poly(&rec.char_poly.to_rational(), "x")),
        recurrence: Some(strings(&rec.coeffs)),
        initial: Some(strings(&rec.initial)),
        extended_forward: fwd,
        extended_backward: back,
        ..Default::default()
    })
}

fn cmd_check(expr: &str) -> Result<CliReport, Failure> {
    let e = parse(expr)?;
    let (verdict, code) = match is_integer_sequence(&e) {
        IntegralityVerdict::Integral { certificate } => (
            Verdict { kind: "INTEGER".into(), certificate: Some(strings(&certificate)), witness: None },
            EXIT_OK,
        ),
        IntegralityVerdict::NonIntegral { witness, value } => (
            Verdict {
                kind: "NON-INTEGER".into(),
                certificate: None,
                witness: Some(IndexedValue { n: witness, value: value.to_string() }),
            },
            EXIT_NON_INTEGER,
        ),
    };
    Ok(CliReport { exit_code: code, expression: Some(print(&e)), verdict: Some(verdict), ..Default::default() })
}

fn synth_report(expr: FibExpr, coefficients: Vec<(String, Rational)>) -> CliReport {
    CliReport {
        expression: Some(print(&expr)),
        coefficients: Some(
            coefficients.into_iter().map(|(name, v)| NamedValue { name, value: v.to_string() }).collect(),
        ),
        ..Default::default()
    }
}

fn cmd_synth(template: Template, values: &[String]) -> Result<CliReport, Failure> {
    let values = parse_rationals(values, "--values")?;
    let sol = solve_template(&template, &values)?;
    Ok(synth_report(sol.expr, sol.coefficients))
}

fn cmd_theorem(
    number: u8,
    heads: [(&str, Option<i64>); 3],
    z: &[String],
    w: &[String],
) -> Result<CliReport, Failure> {
    let th = Theorem::from_number(number).ok_or_else(|| Failure::usage(format!("no theorem {number}; use 1-4")))?;
    let wanted = match th {
        Theorem::LinearLinear => Some("d"),
        Theorem::QuadraticQuadratic => Some("f"),
        Theorem::QuadraticLinear => Some("e"),
        Theorem::LinearAlternating => None,
    };
    for (name, v) in heads {
        if v.is_some() && Some(name) != wanted {
            return Err(Failure::usage(format!("--{name} does not apply to theorem {number}")));
        }
    }
    let params = match wanted {
        Some(name) => {
            if !w.is_empty() {
                return Err(Failure::usage(format!("theorem {number} takes --{name} and --z, not --w")));
            }
            let head = heads
                .iter()
                .find(|(n, _)| *n == name)
                .and_then(|(_, v)| *v)
                .ok_or_else(|| Failure::usage(format!("theorem {number} needs --{name}")))?;
            let mut p = vec![BigInt::from(head)];
            p.extend(parse_ints(z, "--z")?);
            p
        }
        None => {
            if !z.is_empty() {
                return Err(Failure::usage("theorem 4 takes --w w0,...,w5"));
            }
            parse_ints(w, "--w")?
        }
    };
    let expr = theorem_construct(th, &params)?;
    let c = expr.canonicalize();
    let t = th.template();
    let mut coeffs = Vec::new();
    for (poly, deg) in [(&c.p0, t.deg_p0), (&c.p1, t.deg_p1)] {
        if let Some(d) = deg {
            for k in (0..=d).rev() {
                coeffs.push(poly.coeff(k));
            }
        }
    }
    if t.has_const {
        coeffs.push(c.const_e.clone());
    }
    if t.has_alt {
        coeffs.push(c.alt_f.clone());
    }
    Ok(synth_report(expr, t.slot_names().into_iter().zip(coeffs).collect()))
}

fn hit(h: &OeisHit) -> Hit {
    Hit {
        a_number: h.entry.a_number.clone(),
        offset: h.entry.offset,
        match_start: h.match_start,
        first_index: h.first_index(),
    }
}

fn cmd_oeis(prefix: &str, online: bool, timeout: u64, fixtures: Option<&PathBuf>) -> Result<CliReport, Failure> {
    let items: Vec<String> = prefix.split(',').map(str::to_string).collect();
    let terms = parse_ints(&items, "prefix")?;
    let hits = if online {
        oeis::search_remote(&terms, Duration::from_secs(timeout))?
    } else {
        let set = match fixtures {
            Some(dir) => FixtureSet::load_dir(dir)?,
            None => FixtureSet::bundled(),
        };
        oeis::search_local(&terms, &set)?
    };
    Ok(CliReport { hits: Some(hits.iter().map(hit).collect()), ..Default::default() })
}

fn cmd_oracle(kind: OracleKind, range: &Range) -> Result<CliReport, Failure> {
    if range.from < 0 || range.from > range.to {
        return Err(Failure::usage("oracle range must satisfy 0 <= from <= to"));
    }
    let mut counts = Vec::new();
    for n in range.from..=range.to {
        let k = u32::try_from(n).map_err(|_| Failure::usage(format!("n = {n} is too large")))?;
        let v = match kind {
            OracleKind::Compositions => oracles::compositions_parts_count(k)?,
            OracleKind::Inversions => oracles::fibonacci_word_inversions(k)?,
            OracleKind::Leonardo => oracles::leonardo(k),
        };
        counts.push(IndexedValue { n, value: v.to_string() });
    }
    Ok(CliReport { counts: Some(counts), ..Default::default() })
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Canon { .. } => "canon",
            Command::Rec { .. } => "rec",
            Command::Check { .. } => "check",
            Command::Synth { .. } => "synth",
            Command::Theorem { .. } => "theorem",
            Command::Oeis { .. } => "oeis",
            Command::Oracle { .. } => "oracle",
        }
    }
}

/// Execute a parsed command line.
pub fn execute(command: &Command) -> CliReport {
    let result = match command {
        Command::Eval { expr, range } => cmd_eval(expr, range),
        Command::Canon { expr } => cmd_canon(expr),
        Command::Rec { expr, extend } => cmd_rec(expr, *extend),
        Command::Check { expr } => cmd_check(expr),
        Command::Synth { p0_deg, p1_deg, constant, alt, values } => cmd_synth(
            Template { deg_p0: *p0_deg, deg_p1: *p1_deg, has_const: *constant, has_alt: *alt },
            values,
        ),
        Command::Theorem { number, d, e, f, z, w } => {
            cmd_theorem(*number, [("d", *d), ("e", *e), ("f", *f)], z, w)
        }
        Command::Oeis { prefix, online, timeout, fixtures } => {
            cmd_oeis(prefix, *online, *timeout, fixtures.as_ref())
        }
        Command::Oracle { kind, range } => cmd_oracle(*kind, range),
    };
    let mut report = result.unwrap_or_else(|f| CliReport { exit_code: f.code, error: Some(f.info), ..Default::default() });
    report.command = command.name().to_string();
    report
}

/// Parse `args` (including the program name) and execute. Help and version
/// requests come back as `Err` with exit code 0.
pub fn run<I, T>(args: I) -> Result<CliReport, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Ok(execute(&Cli::try_parse_from(args)?.command))
}

impl CliReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields serialize")
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = Vec::new();
        if let Some(err) = &self.error {
            lines.push(format!("error ({}): {}", err.kind, err.message));
            return lines.join("\n");
        }
        if let Some(c) = &self.canonical {
            lines.push(format!("P0: {}", c.p0));
            lines.push(format!("P1: {}", c.p1));
            lines.push(format!("e: {}", c.e));
            lines.push(format!("f: {}", c.f));
        }
        if let Some(values) = &self.values {
            lines.extend(values.iter().map(|v| format!("{} {}", v.n, v.value)));
        }
        if let (Some(order), Some(cp), Some(rec), Some(init)) =
            (self.order, &self.char_poly, &self.recurrence, &self.initial)
        {
            lines.push(format!("order: {order}"));
            lines.push(format!("characteristic polynomial: {cp}"));
            lines.push(format!("coefficients: {}", rec.join(", ")));
            let coeffs: Vec<BigInt> = rec.iter().map(|c| c.parse().expect("integer coefficient")).collect();
            lines.push(format_recurrence(&coeffs));
            lines.push(format!("initial values: {}", init.join(", ")));
            if let Some(fwd) = &self.extended_forward {
                lines.push(format!("forward: {}", fwd.join(", ")));
            }
            if let Some(back) = &self.extended_backward {
                lines.push(format!("backward: {}", back.join(", ")));
            }
        }
        if let Some(v) = &self.verdict {
            lines.push(v.kind.clone());
            if let Some(cert) = &v.certificate {
                lines.push(format!("certificate: {}", cert.join(", ")));
            }
            if let Some(w) = &v.witness {
                lines.push(format!("witness: n = {}, value {}", w.n, w.value));
            }
        }
        if let Some(coeffs) = &self.coefficients {
            if let Some(e) = &self.expression {
                lines.push(e.clone());
            }
            lines.extend(coeffs.iter().map(|c| format!("{} = {}", c.name, c.value)));
        }
        if let Some(hits) = &self.hits {
            if hits.is_empty() {
                lines.push("no match".into());
            }
            lines.extend(hits.iter().map(|h| format!("{} (match at n = {})", h.a_number, h.first_index)));
        }
        if let Some(counts) = &self.counts {
            lines.extend(counts.iter().map(|c| format!("{} {}", c.n, c.value)));
        }
        lines.join("\n")
    }
}

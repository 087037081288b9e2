//! Command implementations behind the `quatseq` binary. Each command returns
//! a [`CommandResult`]; `main` only prints it and exits with its code.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quatseq::catalog::{self, format_quad, format_sequence, parse_pair, parse_quad};
use quatseq::constructions::{self, NegconSet, Receipt};
use quatseq::correlation::{
    array_orthogonality_violation, odd_perfection_violation, perfect_array_violation,
    perfection_violation, QMatrix,
};
use quatseq::designs::{
    golay_violation, nega_williamson_violation, q8_property_violation, williamson_type_violation,
    williamson_violation, NegaSymmetry,
};
use quatseq::search::{self, SearchKind, SearchSpec, Symmetry};
use quatseq::{Alphabet, Error, QSeq, Quad};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "QUATSEQ_THREADS";

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub report: String,
    pub json: Option<Value>,
}

impl CommandResult {
    fn new(exit_code: i32, report: String, json: Value) -> Self {
        CommandResult {
            exit_code,
            report,
            json: Some(json),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let message = message.into();
        CommandResult {
            exit_code: EXIT_USAGE,
            json: Some(json!({ "error": message })),
            report: format!("error: {message}\n"),
        }
    }

    /// Maps library errors onto exit codes: failed preconditions and
    /// verifications are property failures, everything else is usage.
    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Precondition { .. } | Error::VerificationFailed { .. } => EXIT_PROPERTY,
            _ => EXIT_USAGE,
        };
        CommandResult {
            exit_code: code,
            json: Some(json!({ "error": e.to_string() })),
            report: format!("error: {e}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "quatseq",
    version,
    about = "Perfect quaternion sequences and Williamson designs"
)]
pub struct Cli {
    /// Print the JSON payload instead of the text report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a property of a sequence, pair or quad.
    Verify(VerifyArgs),
    /// Run a construction and print its receipt.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Exhaustive search at small lengths.
    Search(SearchArgs),
    /// Catalog operations.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Perfect,
    OddPerfect,
    Golay,
    Williamson,
    WilliamsonType,
    NegaWilliamson,
    Q8Property,
    ArrayOrthogonality,
    PerfectArray,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryArg {
    Any,
    Symmetric,
    Palindromic,
    Antipalindromic,
}

impl From<SymmetryArg> for Symmetry {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::Any => Symmetry::Any,
            SymmetryArg::Symmetric => Symmetry::Symmetric,
            SymmetryArg::Palindromic => Symmetry::Palindromic,
            SymmetryArg::Antipalindromic => Symmetry::Antipalindromic,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub property: Property,
    /// Symmetry class for nega-williamson.
    #[arg(long, value_enum, default_value = "any")]
    pub symmetry: SymmetryArg,
    /// Column count for the array properties.
    #[arg(long, default_value_t = 4)]
    pub cols: usize,
    /// Inline text, a file path, or `-` for standard input.
    #[arg(allow_hyphen_values = true)]
    pub input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<SetArg> for NegconSet {
    fn from(s: SetArg) -> Self {
        match s {
            SetArg::One => NegconSet::First,
            SetArg::Two => NegconSet::Second,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductMode {
    Periodic,
    Odd,
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// Symmetric perfect Q8-sequence of length 2^t.
    Power2 {
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value = "1")]
        set: SetArg,
    },
    /// Even-length Williamson doubling.
    Main {
        #[arg(long, allow_hyphen_values = true)]
        williamson: String,
        #[arg(long, allow_hyphen_values = true)]
        nega: String,
    },
    /// Odd-length Williamson doubling from unshifted designs.
    OddVariant {
        #[arg(long, allow_hyphen_values = true)]
        williamson: String,
        #[arg(long, allow_hyphen_values = true)]
        nega: String,
    },
    /// Palindromic nega-Williamson quad from a Golay pair.
    Negcon {
        #[arg(long, allow_hyphen_values = true)]
        golay: String,
        #[arg(long, value_enum, default_value = "1")]
        set: SetArg,
    },
    /// Palindromic odd perfect Q8-sequence from a Golay pair.
    OddPerfect {
        #[arg(long, allow_hyphen_values = true)]
        golay: String,
    },
    /// Periodic or odd product of two sequences with coprime lengths.
    Product {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value = "periodic")]
        mode: ProductMode,
    },
    /// Row-major matrix of a sequence, with its array orthogonality.
    Matrix {
        /// A sequence, or `power2:T` for the pipeline output of length 2^T
        /// built with the second nega-Williamson set.
        #[arg(long, allow_hyphen_values = true)]
        perfect: String,
        #[arg(long, default_value_t = 4)]
        cols: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Perfect,
    OddPerfect,
    Golay,
    Williamson,
    WilliamsonType,
    NegaWilliamson,
    PalNegaWilliamson,
    AntipalNegaWilliamson,
    PeriodicComplementary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlphabetArg {
    #[value(name = "pm")]
    PlusMinus,
    #[value(name = "q8")]
    Q8,
    #[value(name = "q+")]
    QPlus,
    #[value(name = "hurwitz")]
    Hurwitz,
}

impl From<AlphabetArg> for Alphabet {
    fn from(a: AlphabetArg) -> Self {
        match a {
            AlphabetArg::PlusMinus => Alphabet::PlusMinus,
            AlphabetArg::Q8 => Alphabet::Q8,
            AlphabetArg::QPlus => Alphabet::QPlus,
            AlphabetArg::Hurwitz => Alphabet::Hurwitz,
        }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub length: usize,
    /// Entry alphabet for sequence kinds.
    #[arg(long, value_enum, default_value = "q8")]
    pub alphabet: AlphabetArg,
    #[arg(long, value_enum)]
    pub symmetry: Option<SymmetryArg>,
    /// Require the Q8-property (quad kinds).
    #[arg(long)]
    pub q8: bool,
    /// Print at most this many results; the count stays exact.
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Verify every entry of a catalog file (the built-in one if omitted).
    Verify { file: Option<String> },
}

/// Worker threads requested through [`THREADS_ENV`], if set and valid.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

pub fn run(cli: &Cli) -> CommandResult {
    match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(c) => cmd_construct(c),
        Command::Search(args) => cmd_search(args),
        Command::Catalog(CatalogCommand::Verify { file }) => cmd_catalog(file.as_deref()),
    }
}

/// Reads `-` from stdin, an existing path from disk, and anything else as
/// inline text. `#` comments and line breaks in files are dropped.
pub fn read_input(arg: &str) -> Result<String, String> {
    let raw = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))?
    } else {
        return Ok(arg.trim().to_string());
    };
    Ok(raw
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("")
        .trim()
        .to_string())
}

/// Compact text, or a JSON array of doubled-coordinate tuples.
fn read_sequence(arg: &str) -> Result<QSeq, CommandResult> {
    let text = read_input(arg).map_err(CommandResult::usage)?;
    if text.starts_with('[') {
        let value: Value =
            serde_json::from_str(&text).map_err(|e| CommandResult::usage(e.to_string()))?;
        catalog::sequence_from_json(&value).map_err(CommandResult::from_error)
    } else {
        catalog::parse_sequence(&text).map_err(CommandResult::from_error)
    }
}

fn read_pair(arg: &str) -> Result<(QSeq, QSeq), CommandResult> {
    let text = read_input(arg).map_err(CommandResult::usage)?;
    parse_pair(&text).map_err(CommandResult::from_error)
}

fn read_quad(arg: &str) -> Result<Quad, CommandResult> {
    let text = read_input(arg).map_err(CommandResult::usage)?;
    parse_quad(&text).map_err(CommandResult::from_error)
}

fn seq_text(s: &QSeq) -> String {
    format_sequence(s).unwrap_or_else(|_| catalog::sequence_to_json(s).to_string())
}

fn property_name(p: Property) -> &'static str {
    match p {
        Property::Perfect => "perfect",
        Property::OddPerfect => "odd-perfect",
        Property::Golay => "golay",
        Property::Williamson => "williamson",
        Property::WilliamsonType => "williamson-type",
        Property::NegaWilliamson => "nega-williamson",
        Property::Q8Property => "q8-property",
        Property::ArrayOrthogonality => "array-orthogonality",
        Property::PerfectArray => "perfect-array",
    }
}

fn matrix_of(s: &QSeq, cols: usize) -> Result<QMatrix, CommandResult> {
    if cols == 0 || !s.len().is_multiple_of(cols) {
        return Err(CommandResult::usage(format!(
            "length {} is not a multiple of {cols}",
            s.len()
        )));
    }
    QMatrix::from_row_major(s.len() / cols, cols, s.entries().to_vec())
        .map_err(CommandResult::from_error)
}

fn nega_symmetry(s: SymmetryArg) -> Result<NegaSymmetry, CommandResult> {
    match s {
        SymmetryArg::Any => Ok(NegaSymmetry::Any),
        SymmetryArg::Palindromic => Ok(NegaSymmetry::Palindromic),
        SymmetryArg::Antipalindromic => Ok(NegaSymmetry::Antipalindromic),
        SymmetryArg::Symmetric => Err(CommandResult::usage(
            "nega-williamson takes any, palindromic or antipalindromic",
        )),
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> CommandResult {
    match verify_inner(args) {
        Ok(r) | Err(r) => r,
    }
}

fn verify_inner(args: &VerifyArgs) -> Result<CommandResult, CommandResult> {
    let name = property_name(args.property);
    // (length, first violation)
    let (length, violation): (usize, Option<String>) = match args.property {
        Property::Perfect => {
            let s = read_sequence(&args.input)?;
            (
                s.len(),
                perfection_violation(&s).map(|(t, v)| format!("R({t}) = {v}")),
            )
        }
        Property::OddPerfect => {
            let s = read_sequence(&args.input)?;
            (
                s.len(),
                odd_perfection_violation(&s).map(|(t, v)| format!("R̂({t}) = {v}")),
            )
        }
        Property::Golay => {
            let (a, b) = read_pair(&args.input)?;
            let v = golay_violation(&a, &b).map_err(CommandResult::from_error)?;
            (a.len(), v.map(|v| v.to_string()))
        }
        Property::Williamson => {
            let q = read_quad(&args.input)?;
            (q.len(), williamson_violation(&q).map(|v| v.to_string()))
        }
        Property::WilliamsonType => {
            let q = read_quad(&args.input)?;
            (
                q.len(),
                williamson_type_violation(&q).map(|v| v.to_string()),
            )
        }
        Property::NegaWilliamson => {
            let q = read_quad(&args.input)?;
            let sym = nega_symmetry(args.symmetry)?;
            (
                q.len(),
                nega_williamson_violation(&q, sym).map(|v| v.to_string()),
            )
        }
        Property::Q8Property => {
            let q = read_quad(&args.input)?;
            (q.len(), q8_property_violation(&q).map(|v| v.to_string()))
        }
        Property::ArrayOrthogonality => {
            let s = read_sequence(&args.input)?;
            let m = matrix_of(&s, args.cols)?;
            let v = array_orthogonality_violation(&m).map_err(CommandResult::from_error)?;
            (s.len(), v.map(|v| format!("{v:?}")))
        }
        Property::PerfectArray => {
            let s = read_sequence(&args.input)?;
            let m = matrix_of(&s, args.cols)?;
            (
                s.len(),
                perfect_array_violation(&m).map(|((t, u), v)| format!("R({t}, {u}) = {v}")),
            )
        }
    };
    let passed = violation.is_none();
    let report = match &violation {
        None => format!("PASS {name} (length {length})\n"),
        Some(v) => format!("FAIL {name} (length {length}): {v}\n"),
    };
    let payload =
        json!({ "property": name, "length": length, "passed": passed, "violation": violation });
    Ok(CommandResult::new(
        if passed { EXIT_OK } else { EXIT_PROPERTY },
        report,
        payload,
    ))
}

fn render_receipt<T: serde::Serialize>(r: &Receipt<T>, output_lines: &[String]) -> CommandResult {
    let mut report = String::new();
    let _ = writeln!(report, "construction: {}", r.construction);
    for i in &r.inputs {
        let _ = writeln!(report, "input: {i}");
    }
    let _ = writeln!(report, "verified: {}", r.verified.join(", "));
    for n in &r.notes {
        let _ = writeln!(report, "note: {n}");
    }
    for line in output_lines {
        let _ = writeln!(report, "{line}");
    }
    let payload = serde_json::to_value(r).unwrap_or(Value::Null);
    CommandResult::new(EXIT_OK, report, payload)
}

pub fn cmd_construct(c: &ConstructCommand) -> CommandResult {
    match construct_inner(c) {
        Ok(r) | Err(r) => r,
    }
}

fn quad_receipt(r: Result<Receipt<Quad>, Error>) -> Result<CommandResult, CommandResult> {
    let r = r.map_err(CommandResult::from_error)?;
    let line = format!("output: {}", format_quad(&r.output));
    Ok(render_receipt(&r, &[line]))
}

fn seq_receipt(r: Result<Receipt<QSeq>, Error>) -> Result<CommandResult, CommandResult> {
    let r = r.map_err(CommandResult::from_error)?;
    let line = format!("output: {}", seq_text(&r.output));
    Ok(render_receipt(&r, &[line]))
}

fn construct_inner(c: &ConstructCommand) -> Result<CommandResult, CommandResult> {
    match c {
        ConstructCommand::Power2 { t, set } => {
            let r = constructions::power_of_two(*t, (*set).into())
                .map_err(CommandResult::from_error)?;
            let lines = [
                format!("williamson: {}", format_quad(&r.output.williamson)),
                format!("output: {}", seq_text(&r.output.perfect)),
            ];
            Ok(render_receipt(&r, &lines))
        }
        ConstructCommand::Main { williamson, nega } => quad_receipt(constructions::double_even(
            &read_quad(williamson)?,
            &read_quad(nega)?,
        )),
        ConstructCommand::OddVariant { williamson, nega } => quad_receipt(
            constructions::double_odd_from_designs(&read_quad(williamson)?, &read_quad(nega)?),
        ),
        ConstructCommand::Negcon { golay, set } => {
            let (a, b) = read_pair(golay)?;
            quad_receipt(constructions::negcon_from_golay(&a, &b, (*set).into()))
        }
        ConstructCommand::OddPerfect { golay } => {
            let (a, b) = read_pair(golay)?;
            seq_receipt(constructions::odd_perfect_from_golay(&a, &b))
        }
        ConstructCommand::Product { x, y, mode } => {
            let (x, y) = (read_sequence(x)?, read_sequence(y)?);
            seq_receipt(match mode {
                ProductMode::Periodic => constructions::periodic_product(&x, &y),
                ProductMode::Odd => constructions::odd_product(&x, &y),
            })
        }
        ConstructCommand::Matrix { perfect, cols } => {
            let p = match perfect.strip_prefix("power2:") {
                Some(t) => {
                    let t: u32 = t
                        .parse()
                        .map_err(|_| CommandResult::usage(format!("bad exponent `{t}`")))?;
                    constructions::power_of_two(t, NegconSet::Second)
                        .map_err(CommandResult::from_error)?
                        .output
                        .perfect
                }
                None => read_sequence(perfect)?,
            };
            let r =
                constructions::matrix_from_perfect(&p, *cols).map_err(CommandResult::from_error)?;
            let mut lines = vec![format!("sequence: {}", seq_text(&p))];
            lines.extend(
                (0..r.output.cols())
                    .map(|c| format!("column {c}: {}", seq_text(&r.output.column(c)))),
            );
            Ok(render_receipt(&r, &lines))
        }
    }
}

pub fn cmd_search(args: &SearchArgs) -> CommandResult {
    let (kind, forced_symmetry) = match args.kind {
        KindArg::Perfect => (SearchKind::Perfect, None),
        KindArg::OddPerfect => (SearchKind::OddPerfect, None),
        KindArg::Golay => (SearchKind::Golay, None),
        KindArg::Williamson => (SearchKind::Williamson, None),
        KindArg::WilliamsonType => (SearchKind::WilliamsonType, None),
        KindArg::NegaWilliamson => (SearchKind::NegaWilliamson, None),
        KindArg::PalNegaWilliamson => (SearchKind::NegaWilliamson, Some(Symmetry::Palindromic)),
        KindArg::AntipalNegaWilliamson => {
            (SearchKind::NegaWilliamson, Some(Symmetry::Antipalindromic))
        }
        KindArg::PeriodicComplementary => (SearchKind::PeriodicComplementary, None),
    };
    let mut spec = if matches!(kind, SearchKind::Perfect | SearchKind::OddPerfect) {
        SearchSpec::sequences(kind, args.length, args.alphabet.into())
    } else {
        SearchSpec::quads(kind, args.length)
    };
    if let Some(s) = forced_symmetry.or(args.symmetry.map(Into::into)) {
        spec = spec.with_symmetry(s);
    }
    spec = spec.with_q8(args.q8).with_cap(args.cap);
    let outcome = match search::enumerate(&spec) {
        Ok(o) => o,
        Err(e) => return CommandResult::from_error(e),
    };
    let mut report = String::new();
    for item in &outcome.results {
        let _ = writeln!(report, "{item}");
    }
    let _ = writeln!(report, "count: {}", outcome.count);
    let payload = json!({
        "spec": spec,
        "count": outcome.count,
        "truncated": outcome.truncated,
        "results": outcome.results.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
    });
    CommandResult::new(EXIT_OK, report, payload)
}

pub fn cmd_catalog(file: Option<&str>) -> CommandResult {
    let text = match file {
        None => catalog::BUILTIN_CATALOG.to_string(),
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return CommandResult::usage(format!("reading {path}: {e}")),
        },
    };
    let report_data = catalog::verify_catalog(&text);
    let mut report = String::new();
    for e in &report_data.parse_errors {
        let _ = writeln!(report, "line {}: parse error: {}", e.line, e.message);
    }
    for e in &report_data.entries {
        if e.passed() {
            let _ = writeln!(report, "{:<6} {:>3}  pass", e.name, e.length);
        } else {
            let _ = writeln!(
                report,
                "{:<6} {:>3}  FAIL  {}",
                e.name,
                e.length,
                e.failures.join("; ")
            );
        }
    }
    let total = report_data.entries.len();
    let passed = report_data.entries.iter().filter(|e| e.passed()).count();
    let _ = writeln!(
        report,
        "{total} entries, {passed} passed, {} failed",
        report_data.failed_count()
    );
    let code = if report_data.passed() {
        EXIT_OK
    } else {
        EXIT_PROPERTY
    };
    let payload = serde_json::to_value(&report_data).unwrap_or(Value::Null);
    CommandResult::new(code, report, payload)
}

//! Argument parsing, evaluation and rendering for the `symchar` binary.
//!
//! [`parse`] turns an argument vector into a [`Query`], [`run`] evaluates it
//! into an [`Outcome`]. Both are pure apart from the optional table cache.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use symchar_core::characters::{
    branch, murnaghan_littlewood, newell_littlewood, parse_rational_label, rational_mul,
    thibon_inner, Labeled, RationalLabeled,
};
use symchar_core::convolution::{
    check_algebra_hom, check_cocycle2, check_frobenius, check_laplace,
};
use symchar_core::fgl::{coproduct_from_fgl, fgl_log, loop_n};
use symchar_core::hash::HashSpecDesc;
use symchar_core::inner::{character_table, inner_mul, set_table_cache_dir};
use symchar_core::partition::parse_partition;
use symchar_core::series::series_terms;
use symchar_core::sym::tensor;
use symchar_core::vertex::{bernstein_chain, commutation_witness};
use symchar_core::{
    BranchRule, CoMul, Cochain1, Coeff, Error, Fgl1, FglKind, HashProduct, Kind, Pairing,
    Partition, SeriesId, SymFunc, TensorSymFunc, TruncPoly, Witness,
};

/// The JSON schema every `--json` document validates against.
pub const OUTPUT_SCHEMA: &str = include_str!("../schema/output.schema.json");

pub const DEFAULT_MAX_WEIGHT: u32 = 20;

/// Degree at which user-supplied hash specs are validated before use.
const SPEC_CHECK_DEGREE: u32 = 4;

#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(
    name = "symchar",
    version,
    about = "Character decompositions through symmetric functions"
)]
pub struct Query {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest weight, degree or cap accepted before aborting.
    #[arg(long, global = true, env = "SYMCHAR_MAX_WEIGHT", default_value_t = DEFAULT_MAX_WEIGHT)]
    pub max_weight: u32,

    /// Directory for persisted character tables.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Decompose a product of two characters.
    Decompose {
        #[arg(long, value_enum)]
        product: Product,
        lhs: String,
        rhs: String,
    },
    /// Branch a GL character to a subgroup, or back.
    Branch {
        #[arg(value_parser = parse_rule)]
        rule: BranchRule,
        partition: String,
    },
    /// Print a Schur-function series degree by degree.
    Series {
        #[arg(value_parser = parse_series)]
        id: SeriesId,
        #[arg(long, default_value_t = 6)]
        cap: u32,
    },
    /// Run a bounded property check on a pairing or cochain.
    Check {
        #[arg(value_enum)]
        property: Property,
        name: String,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
    },
    /// Evaluate a hash product on two Schur functions.
    Hash {
        /// A shipped name or an inline JSON description.
        #[arg(long)]
        spec: String,
        lhs: String,
        rhs: String,
    },
    #[command(subcommand)]
    Vertex(VertexCommand),
    #[command(subcommand)]
    Fgl(FglCommand),
    /// Character table of the symmetric group.
    Table { n: u32 },
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum VertexCommand {
    /// Build `s_λ` from the vacuum with Bernstein operators.
    Schur { partition: String },
    /// Verify `L^⊥(z) M(w) = (1 - zw) M(w) L^⊥(z)` up to the cap.
    CheckCommutation {
        #[arg(long, default_value_t = 4)]
        cap: u32,
    },
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum FglCommand {
    /// The `[n]`-series of a formal group law.
    #[command(allow_negative_numbers = true)]
    Loop {
        law: String,
        n: i64,
        #[arg(long, default_value_t = 6)]
        cap: u32,
    },
    /// The logarithm of a formal group law.
    Log {
        law: String,
        #[arg(long, default_value_t = 6)]
        cap: u32,
    },
    /// The coproduct of `s_λ` induced by a formal group law.
    Coproduct {
        #[arg(value_parser = parse_fgl_kind)]
        kind: FglKind,
        partition: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Outer,
    Kronecker,
    NewellLittlewoodO,
    NewellLittlewoodSp,
    Thibon,
    Reduced,
    Rational,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Laplace,
    Cocycle2,
    Frobenius,
    Alghom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn parse_rule(s: &str) -> Result<BranchRule, Error> {
    s.parse()
}

fn parse_series(s: &str) -> Result<SeriesId, Error> {
    s.parse()
}

fn parse_fgl_kind(s: &str) -> Result<FglKind, Error> {
    s.parse()
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned()
}

impl Query {
    pub fn output_format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }

    /// The canonical argument vector, without the program name.
    pub fn to_argv(&self) -> Vec<String> {
        let mut v: Vec<String> = Vec::new();
        let mut push = |s: &str| v.push(s.to_owned());
        match &self.command {
            Command::Decompose { product, lhs, rhs } => {
                push("decompose");
                push("--product");
                push(&value_name(*product));
                push(lhs);
                push(rhs);
            }
            Command::Branch { rule, partition } => {
                push("branch");
                push(rule.as_str());
                push(partition);
            }
            Command::Series { id, cap } => {
                push("series");
                push(&id.to_string());
                push("--cap");
                push(&cap.to_string());
            }
            Command::Check {
                property,
                name,
                max_degree,
            } => {
                push("check");
                push(&value_name(*property));
                push(name);
                push("--max-degree");
                push(&max_degree.to_string());
            }
            Command::Hash { spec, lhs, rhs } => {
                push("hash");
                push("--spec");
                push(spec);
                push(lhs);
                push(rhs);
            }
            Command::Vertex(VertexCommand::Schur { partition }) => {
                push("vertex");
                push("schur");
                push(partition);
            }
            Command::Vertex(VertexCommand::CheckCommutation { cap }) => {
                push("vertex");
                push("check-commutation");
                push("--cap");
                push(&cap.to_string());
            }
            Command::Fgl(FglCommand::Loop { law, n, cap }) => {
                push("fgl");
                push("loop");
                push(law);
                push(&n.to_string());
                push("--cap");
                push(&cap.to_string());
            }
            Command::Fgl(FglCommand::Log { law, cap }) => {
                push("fgl");
                push("log");
                push(law);
                push("--cap");
                push(&cap.to_string());
            }
            Command::Fgl(FglCommand::Coproduct { kind, partition }) => {
                push("fgl");
                push("coproduct");
                push(match kind {
                    FglKind::Additive => "additive",
                    FglKind::Multiplicative => "multiplicative",
                });
                push(partition);
            }
            Command::Table { n } => {
                push("table");
                push(&n.to_string());
            }
        }
        if self.json {
            push("--json");
        }
        push("--max-weight");
        push(&self.max_weight.to_string());
        if let Some(dir) = &self.cache_dir {
            v.push("--cache-dir".into());
            v.push(dir.display().to_string());
        }
        v
    }
}

/// Parses `argv` including the program name.
pub fn parse<I, T>(argv: I) -> Result<Query, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Query::try_parse_from(argv)
}

/// Exit status of a query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    Bound = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        let status = match e {
            Error::WeightBound { .. } => Status::Bound,
            _ => Status::Usage,
        };
        Self {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status,
        }
    }
}

/// A computed answer before rendering.
struct Report {
    text: String,
    terms: Vec<Value>,
    meta: serde_json::Map<String, Value>,
    status: Status,
}

impl Report {
    fn new(text: String, terms: Vec<Value>, cap: Option<u32>) -> Self {
        let mut meta = serde_json::Map::new();
        meta.insert("cap".into(), json!(cap));
        Self {
            text,
            terms,
            meta,
            status: Status::Ok,
        }
    }

    fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.meta.insert(
            key.into(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }
}

pub fn run(q: &Query) -> Outcome {
    if let Some(dir) = &q.cache_dir {
        set_table_cache_dir(Some(dir));
    }
    let report = match evaluate(q) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e),
    };
    let stdout = match q.output_format() {
        Format::Text => {
            let mut t = report.text;
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
        Format::Json => {
            let doc = json!({ "terms": report.terms, "meta": report.meta });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        status: report.status,
    }
}

struct Guard(u32);

impl Guard {
    fn weight(&self, w: u64) -> Result<(), Error> {
        if w > self.0 as u64 {
            return Err(Error::WeightBound {
                weight: w,
                max: self.0,
            });
        }
        Ok(())
    }

    fn partition(&self, s: &str) -> Result<Partition, Error> {
        parse_partition(s, self.0)
    }

    fn rational(&self, s: &str) -> Result<(Partition, Partition), Error> {
        let (a, b) = parse_rational_label(s, self.0)?;
        self.weight(a.weight() as u64 + b.weight() as u64)?;
        Ok((a, b))
    }
}

fn term_json(kind: Kind, p: &Partition, c: Coeff) -> Value {
    json!({ "label": { "kind": kind.as_str(), "partition": p }, "coeff": c })
}

fn pair_json(kind: &str, a: &Partition, b: &Partition, c: Coeff) -> Value {
    json!({ "label": { "kind": kind, "partition": a, "contra": b }, "coeff": c })
}

fn sym_terms(f: &SymFunc, kind: Kind) -> Vec<Value> {
    f.iter().rev().map(|(p, c)| term_json(kind, p, c)).collect()
}

fn tensor_terms(f: &TensorSymFunc, kind: &str) -> Vec<Value> {
    f.iter()
        .rev()
        .map(|((a, b), c)| pair_json(kind, a, b, c))
        .collect()
}

fn labeled(f: &SymFunc, kind: Kind, cap: Option<u32>) -> Report {
    Report::new(Labeled(f, kind).to_string(), sym_terms(f, kind), cap)
}

fn evaluate(q: &Query) -> Result<Report, Error> {
    let guard = Guard(q.max_weight);
    match &q.command {
        Command::Decompose { product, lhs, rhs } => decompose(&guard, *product, lhs, rhs),
        Command::Branch { rule, partition } => {
            let p = guard.partition(partition)?;
            let out = branch(&SymFunc::basis(p), *rule);
            Ok(labeled(&out, rule.target(), None).with("rule", rule.as_str()))
        }
        Command::Series { id, cap } => {
            guard.weight(*cap as u64)?;
            let s = series_terms(*id, *cap);
            let mut text = String::new();
            let mut terms = Vec::new();
            for (d, f) in s.terms().iter().enumerate() {
                writeln!(text, "{d}: {}", Labeled(f, Kind::Gl)).expect("string write");
                terms.extend(sym_terms(f, Kind::Gl));
            }
            Ok(Report::new(text, terms, Some(*cap)).with("series", id.to_string()))
        }
        Command::Check {
            property,
            name,
            max_degree,
        } => check(&guard, *property, name, *max_degree),
        Command::Hash { spec, lhs, rhs } => {
            let (x, y) = (guard.partition(lhs)?, guard.partition(rhs)?);
            guard.weight(x.weight() as u64 + y.weight() as u64)?;
            let h = if spec.trim_start().starts_with('{') {
                let desc: HashSpecDesc = serde_json::from_str(spec)
                    .map_err(|e| Error::Parse(format!("hash spec `{spec}`: {e}")))?;
                HashProduct::build(&desc, SPEC_CHECK_DEGREE)?
            } else {
                HashProduct::named(spec)?
            };
            let out = h.apply(&SymFunc::basis(x), &SymFunc::basis(y));
            Ok(labeled(&out, Kind::Gl, None).with("spec", h.name()))
        }
        Command::Vertex(VertexCommand::Schur { partition }) => {
            let p = guard.partition(partition)?;
            let built = bernstein_chain(&p);
            let diff = &built - &SymFunc::basis(p);
            let mut r = labeled(&built, Kind::Gl, None);
            writeln!(r.text, "\ndiff: {}", Labeled(&diff, Kind::Gl)).expect("string write");
            if !diff.is_zero() {
                r.status = Status::CheckFailed;
            }
            Ok(r.with("matches", diff.is_zero()))
        }
        Command::Vertex(VertexCommand::CheckCommutation { cap }) => {
            guard.weight(*cap as u64)?;
            let w = commutation_witness(*cap);
            let text = match &w {
                None => format!("pass: commutation relation up to cap {cap}"),
                Some(p) => format!("FAIL: commutation relation at s[{p}]"),
            };
            let mut r = Report::new(text, Vec::new(), Some(*cap)).with("passed", w.is_none());
            if let Some(p) = w {
                r = r.with("witness", json!({ "law": "commutation", "args": [p] }));
                r.status = Status::CheckFailed;
            }
            Ok(r)
        }
        Command::Fgl(FglCommand::Loop { law, n, cap }) => {
            guard.weight(*cap as u64)?;
            let f = Fgl1::named(law, *cap)?;
            Ok(poly_report(&loop_n(&f, *n), *cap).with("law", law))
        }
        Command::Fgl(FglCommand::Log { law, cap }) => {
            guard.weight(*cap as u64)?;
            let f = Fgl1::named(law, *cap)?;
            Ok(poly_report(&fgl_log(&f)?, *cap).with("law", law))
        }
        Command::Fgl(FglCommand::Coproduct { kind, partition }) => {
            let p = guard.partition(partition)?;
            let d = coproduct_from_fgl(*kind, &SymFunc::basis(p));
            Ok(Report::new(
                tensor_text(&d),
                tensor_terms(&d, "tensor"),
                None,
            ))
        }
        Command::Table { n } => {
            guard.weight(*n as u64)?;
            Ok(table(*n))
        }
    }
}

fn decompose(guard: &Guard, product: Product, lhs: &str, rhs: &str) -> Result<Report, Error> {
    if product == Product::Rational {
        let (a, b) = (guard.rational(lhs)?, guard.rational(rhs)?);
        let total = [&a.0, &a.1, &b.0, &b.1]
            .iter()
            .map(|p| p.weight() as u64)
            .sum();
        guard.weight(total)?;
        let out = rational_mul(&tensor(a.0, a.1), &tensor(b.0, b.1));
        let text = RationalLabeled(&out).to_string();
        return Ok(Report::new(text, tensor_terms(&out, "rational"), None)
            .with("product", value_name(product)));
    }
    let (x, y) = (guard.partition(lhs)?, guard.partition(rhs)?);
    guard.weight(x.weight() as u64 + y.weight() as u64)?;
    let (x, y) = (SymFunc::basis(x), SymFunc::basis(y));
    let (out, kind) = match product {
        Product::Outer => (symchar_core::sym::outer_mul(&x, &y), Kind::Gl),
        Product::Kronecker => (inner_mul(&x, &y), Kind::Gl),
        Product::NewellLittlewoodO => (newell_littlewood(&x, &y), Kind::O),
        Product::NewellLittlewoodSp => (newell_littlewood(&x, &y), Kind::Sp),
        Product::Thibon => (thibon_inner(&x, &y), Kind::Thibon),
        Product::Reduced => (murnaghan_littlewood(&x, &y), Kind::Reduced),
        Product::Rational => unreachable!("handled above"),
    };
    Ok(labeled(&out, kind, None).with("product", value_name(product)))
}

fn check(guard: &Guard, property: Property, name: &str, d: u32) -> Result<Report, Error> {
    guard.weight(d as u64)?;
    let result = match property {
        Property::Alghom => check_algebra_hom(&Cochain1::by_name(name)?, d),
        Property::Laplace => check_laplace(&Pairing::by_name(name)?, d),
        Property::Cocycle2 => check_cocycle2(&Pairing::by_name(name)?, d),
        Property::Frobenius => {
            let a = Pairing::by_name(name)?;
            check_frobenius(&a, &CoMul::adjoint(&a), d)
        }
    };
    let prop = value_name(property);
    let mut r = Report::new(String::new(), Vec::new(), Some(d))
        .with("check", &prop)
        .with("name", name)
        .with("passed", result.is_ok());
    match result {
        Ok(()) => r.text = format!("pass: {prop}({name}) up to degree {d}"),
        Err(w) => {
            r.text = format!("FAIL: {prop}({name})\nwitness: {w}");
            r = r.with("witness", witness_json(&w));
            r.status = Status::CheckFailed;
        }
    }
    Ok(r)
}

fn witness_json(w: &Witness) -> Value {
    json!({ "law": w.law, "args": w.args, "lhs": w.lhs, "rhs": w.rhs })
}

fn tensor_text(d: &TensorSymFunc) -> String {
    let mut s = String::new();
    let terms: Vec<(String, Coeff)> = d
        .iter()
        .rev()
        .map(|((a, b), c)| (format!("s[{a}] ⊗ s[{b}]"), c))
        .collect();
    for (i, (label, c)) in terms.iter().enumerate() {
        let sign = if *c < 0 { "-" } else { "+" };
        if i == 0 {
            if *c < 0 {
                s.push('-');
            }
        } else {
            write!(s, " {sign} ").expect("string write");
        }
        match c.unsigned_abs() {
            1 => s.push_str(label),
            a => write!(s, "{a}*{label}").expect("string write"),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn poly_report(p: &TruncPoly, cap: u32) -> Report {
    let coeffs: Vec<Value> = (0..=cap)
        .map(|k| (k, p.coeff1(k)))
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!({ "degree": k, "value": c.to_string() }))
        .collect();
    Report::new(p.to_string(), Vec::new(), Some(cap))
        .with("polynomial", p.to_string())
        .with("coefficients", coeffs)
}

fn table(n: u32) -> Report {
    let t = character_table(n);
    let labels: Vec<String> = t.labels().iter().map(|p| format!("[{p}]")).collect();
    let cells: Vec<Vec<String>> = (0..labels.len())
        .map(|i| t.row(i).iter().map(i64::to_string).collect())
        .collect();
    let head = labels.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].len())
                .chain([labels[j].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut text = format!("{:head$}", "");
    for (l, w) in labels.iter().zip(&widths) {
        write!(text, "  {l:>w$}").expect("string write");
    }
    for (l, row) in labels.iter().zip(&cells) {
        write!(text, "\n{l:<head$}").expect("string write");
        for (v, w) in row.iter().zip(&widths) {
            write!(text, "  {v:>w$}").expect("string write");
        }
    }
    let rows: Vec<Value> = t
        .labels()
        .iter()
        .enumerate()
        .map(|(i, p)| json!({ "lambda": p, "values": t.row(i) }))
        .collect();
    Report::new(text, Vec::new(), None)
        .with("n", n)
        .with("columns", t.labels())
        .with("rows", rows)
}

//! Command-line front end: argument parsing, command dispatch and output
//! rendering. `main.rs` only forwards to [`run`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use apdecomp::gf::{self, Field, FieldDecomposition, FieldSearchMode};
use apdecomp::lifting::{lift_decompositions, lift_to_prime_power, LiftReport};
use apdecomp::search::{find_ap, key_set};
use apdecomp::tables::{TableRegistry, TableReport};
use apdecomp::theorems::{ConstructionRegistry, TheoremOutcome};
use apdecomp::{ApDecomposition, Error, Modulus};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const VERSION: &str = concat!("apdecomp ", env!("CARGO_PKG_VERSION"));

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "apdecomp", version, about = "Decompositions of U_n and GF(q)^x with generators in arithmetic progression")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Record wall-clock runtime in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All decompositions of U_n, one per reversal pair.
    Find {
        n: u64,
        /// Include decompositions with one trivial factor.
        #[arg(long)]
        weak: bool,
        /// Four-term progressions instead of three.
        #[arg(long)]
        four: bool,
    },
    /// Reproduce a reference table and diff it against the embedded data.
    Table {
        /// Table id; `apdecomp list` shows them.
        which: String,
        #[arg(long)]
        limit: Option<u64>,
        /// Show only the comparison with the reference data.
        #[arg(long)]
        diff_paper: bool,
    },
    /// Lift every decomposition of U_n to U_np, or to U_p^alpha when n = p.
    Lift {
        n: u64,
        p: u64,
        #[arg(long)]
        alpha: Option<u32>,
        /// Lift only this decomposition, given by its generators.
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<u64>>,
    },
    /// Decompositions of the multiplicative group of GF(p^k).
    Gf {
        p: u64,
        k: u32,
        /// Defining polynomial, constant term first.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<i64>>,
        /// Every decomposition rather than one per order list.
        #[arg(long)]
        all: bool,
    },
    /// Run one named construction on n.
    Theorem { family: String, n: u64 },
    /// Table ids and construction names.
    List,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindResult {
    pub n: u64,
    pub phi: u64,
    pub lambda: u64,
    pub xi: u64,
    pub terms: usize,
    pub weak_included: bool,
    pub decompositions: Vec<ApDecomposition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainResult {
    pub source: ApDecomposition,
    pub lifted: Option<ApDecomposition>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftResult {
    pub n: u64,
    pub p: u64,
    pub alpha: Option<u32>,
    /// The modulus lifted to.
    pub target: u64,
    pub reports: Vec<LiftReport>,
    pub chains: Vec<ChainResult>,
    /// Every lifted decomposition once, in canonical orientation.
    pub distinct: Vec<ApDecomposition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfResult {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    pub poly: Vec<u64>,
    pub mode: FieldSearchMode,
    pub decompositions: Vec<FieldDecomposition>,
    pub order_lists: Vec<[u64; 3]>,
    /// Reference decompositions for this field, each checked against a
    /// full search. Empty for a user-supplied polynomial.
    pub reference: Vec<ReferenceCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceCheck {
    pub decomposition: FieldDecomposition,
    pub found: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub family: String,
    pub summary: String,
    pub n: u64,
    pub outcomes: Vec<TheoremOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Listing {
    pub tables: Vec<String>,
    pub constructions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Find(FindResult),
    Table(TableReport),
    Lift(LiftResult),
    Gf(GfResult),
    Theorem(TheoremResult),
    List(Listing),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub version: String,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Payload,
    /// Present only with `--timing`, so default output is reproducible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<f64>,
}

/// What the process should print and exit with.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

pub fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) | CliError::Core(Error::OutOfRange { .. }) => EXIT_USAGE,
        CliError::Core(Error::InvariantViolation(_)) => EXIT_INVARIANT,
        CliError::Core(_) => EXIT_PRECONDITION,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: EXIT_USAGE,
            }
        }
    };
    let started = Instant::now();
    let result = pool.install(|| execute(&cli.command));
    match result {
        Ok(env) => {
            let mut env = env;
            if cli.timing {
                env.runtime_ms = Some(started.elapsed().as_secs_f64() * 1e3);
            }
            let flags = RenderFlags {
                diff_only: matches!(cli.command, Command::Table { diff_paper: true, .. }),
            };
            Outcome {
                stdout: render(&env, cli.format, flags),
                stderr: String::new(),
                code: EXIT_OK,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn modulus(n: u64) -> Result<Modulus, CliError> {
    Modulus::new(n).map_err(|e| CliError::Usage(format!("invalid modulus {n}: {e}")))
}

fn envelope(command: &str, parameters: Value, result: Payload) -> ReportEnvelope {
    let parameters = match parameters {
        Value::Object(m) => m.into_iter().collect(),
        _ => BTreeMap::new(),
    };
    ReportEnvelope {
        version: VERSION.into(),
        command: command.into(),
        parameters,
        result,
        runtime_ms: None,
    }
}

pub fn execute(cmd: &Command) -> Result<ReportEnvelope, CliError> {
    match cmd {
        Command::Find { n, weak, four } => {
            let m = modulus(*n)?;
            let terms = if *four { 4 } else { 3 };
            let r = FindResult {
                n: *n,
                phi: m.phi(),
                lambda: m.lambda(),
                xi: m.xi(),
                terms,
                weak_included: *weak,
                decompositions: find_ap(&m, terms, *weak),
            };
            Ok(envelope("find", json!({"n": n, "weak": weak, "four": four}), Payload::Find(r)))
        }
        Command::Table { which, limit, diff_paper } => {
            let reg = TableRegistry::default();
            let Some(t) = reg.get(which) else {
                let ids: Vec<&str> = reg.ids().collect();
                return Err(CliError::Usage(format!(
                    "unknown table {which:?}; known: {}",
                    ids.join(", ")
                )));
            };
            let limit = limit.unwrap_or_else(|| t.default_limit());
            let r = t.build(limit)?;
            Ok(envelope(
                "table",
                json!({"which": which, "limit": limit, "diff_paper": diff_paper}),
                Payload::Table(r),
            ))
        }
        Command::Lift { n, p, alpha, gens } => {
            let r = lift(*n, *p, *alpha, gens.as_deref())?;
            Ok(envelope(
                "lift",
                json!({"n": n, "p": p, "alpha": alpha, "gens": gens}),
                Payload::Lift(r),
            ))
        }
        Command::Gf { p, k, poly, all } => {
            let f = Field::new(*p, *k, poly.as_deref())?;
            let mode = if *all {
                FieldSearchMode::All
            } else {
                FieldSearchMode::OnePerOrderList
            };
            let decompositions = gf::find_3ap_field(&f, mode);
            let builtin = gf::conway_polynomial(*p, *k).is_some_and(|c| c == f.poly());
            let reference = if builtin { reference_checks(&f) } else { Vec::new() };
            let r = GfResult {
                reference,
                p: *p,
                k: *k,
                q: f.q(),
                poly: f.poly().to_vec(),
                mode,
                order_lists: gf::order_lists(&decompositions).into_iter().collect(),
                decompositions,
            };
            Ok(envelope("gf", json!({"p": p, "k": k, "poly": poly, "all": all}), Payload::Gf(r)))
        }
        Command::Theorem { family, n } => {
            let reg = ConstructionRegistry::default();
            let Some(c) = reg.get(family) else {
                let names: Vec<&str> = reg.names().collect();
                return Err(CliError::Usage(format!(
                    "unknown construction {family:?}; known: {}",
                    names.join(", ")
                )));
            };
            let m = modulus(*n)?;
            let r = TheoremResult {
                family: family.clone(),
                summary: c.summary().into(),
                n: *n,
                outcomes: c.apply(&m)?,
            };
            Ok(envelope("theorem", json!({"family": family, "n": n}), Payload::Theorem(r)))
        }
        Command::List => {
            let r = Listing {
                tables: TableRegistry::default().ids().map(String::from).collect(),
                constructions: ConstructionRegistry::default().names().map(String::from).collect(),
            };
            Ok(envelope("list", json!({}), Payload::List(r)))
        }
    }
}

fn reference_checks(f: &Field) -> Vec<ReferenceCheck> {
    let all = gf::find_3ap_field(f, FieldSearchMode::All);
    apdecomp::golden::FIELD_DECOMPOSITIONS
        .iter()
        .filter(|row| row.p == f.p() && row.k == f.k())
        .filter_map(|row| {
            let e = [row.factors[0].0, row.factors[1].0, row.factors[2].0];
            let d = FieldDecomposition::from_exponents(f, e)?;
            let found = d.is_ap(f) && all.contains(&d.canonical(f));
            Some(ReferenceCheck { decomposition: d, found })
        })
        .collect()
}

fn lift(n: u64, p: u64, alpha: Option<u32>, gens: Option<&[u64]>) -> apdecomp::Result<LiftResult> {
    let m = Modulus::new(n)?;
    let sources = match gens {
        Some(g) => vec![ApDecomposition::from_generators(&m, g)?],
        None => find_ap(&m, 3, true),
    };
    let mut reports = Vec::new();
    let mut chains = Vec::new();
    let mut lifted = Vec::new();
    let target = match alpha {
        Some(a) => {
            if n != p {
                return Err(Error::Precondition(format!(
                    "--alpha lifts U_p to U_p^alpha, so n must equal p (got n = {n}, p = {p})"
                )));
            }
            let t = p.checked_pow(a).ok_or(Error::OutOfRange {
                value: u64::MAX,
                limit: apdecomp::arith::MAX_MODULUS,
            })?;
            for s in sources {
                match lift_to_prime_power(&s, a) {
                    Ok(d) => {
                        lifted.push(d.clone());
                        chains.push(ChainResult { source: s, lifted: Some(d), error: None });
                    }
                    Err(e @ Error::InvariantViolation(_)) => return Err(e),
                    Err(e) => chains.push(ChainResult {
                        source: s,
                        lifted: None,
                        error: Some(e.to_string()),
                    }),
                }
            }
            t
        }
        None => {
            for s in sources {
                let r = lift_decompositions(&s, p)?;
                lifted.extend(r.results.iter().cloned());
                reports.push(r);
            }
            n * p
        }
    };
    let mut seen = std::collections::HashSet::new();
    let mut distinct: Vec<ApDecomposition> = lifted
        .into_iter()
        .map(|d| apdecomp::search::canonicalize(&d))
        .filter(|d| seen.insert(d.key()))
        .collect();
    distinct.sort_by_key(|d| (d.diff, d.first));
    debug_assert_eq!(key_set(&distinct).len(), distinct.len());
    Ok(LiftResult { n, p, alpha, target, reports, chains, distinct })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderFlags {
    pub diff_only: bool,
}

pub fn render(env: &ReportEnvelope, format: Format, flags: RenderFlags) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(env).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => render_text(env, flags),
        Format::Csv => render_csv(env),
    }
}

fn strength(d: &ApDecomposition) -> &'static str {
    if d.is_weak() {
        "weak"
    } else {
        "strong"
    }
}

fn render_text(env: &ReportEnvelope, flags: RenderFlags) -> String {
    let mut o = String::new();
    match &env.result {
        Payload::Find(r) => {
            let _ = writeln!(o, "U_{}: phi = {}, lambda = {}, xi = {}", r.n, r.phi, r.lambda, r.xi);
            let _ = writeln!(
                o,
                "{} decomposition(s) with {} generators in AP{}",
                r.decompositions.len(),
                r.terms,
                if r.weak_included { ", weak included" } else { "" }
            );
            for d in &r.decompositions {
                let _ = writeln!(o, "{d}  [x = {}, k = {}, {}]", d.first, d.diff, strength(d));
            }
        }
        Payload::Table(t) => {
            let _ = writeln!(o, "table {}: {} (limit {})", t.id, t.title, t.limit);
            if !flags.diff_only {
                let _ = writeln!(o, "{}", t.columns.join(" | "));
                for row in &t.rows {
                    let _ = writeln!(o, "{}", row.join(" | ").trim_end());
                }
            }
            for (k, v) in &t.summary {
                let _ = writeln!(o, "{k}: {v}");
            }
            if !t.compared {
                let _ = writeln!(o, "reference: no data for this limit");
            } else if t.diffs.is_empty() {
                let _ = writeln!(o, "reference: match");
            } else {
                let _ = writeln!(o, "reference: {} difference(s)", t.diffs.len());
                for d in &t.diffs {
                    let _ = writeln!(o, "  {d}");
                }
            }
        }
        Payload::Lift(r) => {
            let _ = writeln!(o, "lifting U_{} to U_{}", r.n, r.target);
            for rep in &r.reports {
                let _ = writeln!(o, "source {}  [{}, {}]", rep.source, strength(&rep.source), rep.case.label());
                if rep.special_lifts.iter().any(Option::is_some) {
                    let _ = writeln!(o, "  special lifts: {}", opt_list(&rep.special_lifts));
                }
                if let Some(in_ap) = rep.spurious_in_ap {
                    let _ = writeln!(
                        o,
                        "  spurious lifts: {} ({})",
                        opt_list(&rep.spurious_lifts),
                        if in_ap { "in AP" } else { "not in AP" }
                    );
                }
                if let Some(p) = rep.productive {
                    let _ = writeln!(o, "  {}", if p { "productive" } else { "unproductive" });
                }
                for d in &rep.results {
                    let _ = writeln!(o, "  -> {d}  [{}]", strength(d));
                }
            }
            for c in &r.chains {
                match (&c.lifted, &c.error) {
                    (Some(d), _) => {
                        let _ = writeln!(o, "{} -> {d}  [{}]", c.source, strength(d));
                    }
                    (None, Some(e)) => {
                        let _ = writeln!(o, "{} -> none: {e}", c.source);
                    }
                    (None, None) => {}
                }
            }
            let strong = r.distinct.iter().filter(|d| !d.is_weak()).count();
            let _ = writeln!(
                o,
                "{} distinct lift(s): {} strong, {} weak",
                r.distinct.len(),
                strong,
                r.distinct.len() - strong
            );
        }
        Payload::Gf(r) => {
            let poly: Vec<String> = r.poly.iter().map(u64::to_string).collect();
            let _ = writeln!(o, "GF({}^{}), q = {}, polynomial [{}] (constant term first)", r.p, r.k, r.q, poly.join(", "));
            let _ = writeln!(o, "{} decomposition(s), z a root of the polynomial", r.decompositions.len());
            for d in &r.decompositions {
                let _ = writeln!(o, "{d}  elements {:?}", d.elements);
            }
            for c in &r.reference {
                let verdict = if c.found { "found" } else { "NOT found" };
                let _ = writeln!(o, "reference {}: {verdict}", c.decomposition);
            }
        }
        Payload::Theorem(r) => {
            let _ = writeln!(o, "{} ({}) at n = {}", r.family, r.summary, r.n);
            for t in &r.outcomes {
                match &t.witness {
                    Some(w) => {
                        let _ = write!(o, "{w}");
                        if let (Some(root), Some(ord)) = (t.root, t.root_order) {
                            let _ = write!(o, "  [{root:?}, order {ord}]");
                        } else if let Some(ord) = t.root_order {
                            let _ = write!(o, "  [root order {ord}]");
                        }
                        let _ = writeln!(o);
                    }
                    None => {
                        let _ = writeln!(o, "{:?}: {}", t.applicability, t.diagnostics.join("; "));
                    }
                }
            }
        }
        Payload::List(l) => {
            let _ = writeln!(o, "tables: {}", l.tables.join(" "));
            let _ = writeln!(o, "constructions: {}", l.constructions.join(" "));
        }
    }
    if let Some(ms) = env.runtime_ms {
        let _ = writeln!(o, "runtime: {ms:.1} ms");
    }
    o
}

fn opt_list(v: &[Option<u64>]) -> String {
    v.iter()
        .map(|x| x.map_or("-".to_string(), |x| x.to_string()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn decomposition_record(d: &ApDecomposition) -> Vec<String> {
    let mut rec = vec![d.n.to_string(), d.first.to_string(), d.diff.to_string(), strength(d).into()];
    for f in &d.factors {
        rec.push(f.generator.to_string());
        rec.push(f.order.to_string());
    }
    rec
}

fn decomposition_header(len: usize) -> Vec<String> {
    let mut h: Vec<String> = ["n", "x", "k", "strength"].iter().map(|s| s.to_string()).collect();
    for i in 1..=len {
        h.push(format!("g{i}"));
        h.push(format!("o{i}"));
    }
    h
}

fn render_csv(env: &ReportEnvelope) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    let mut put = |rec: Vec<String>| {
        w.write_record(&rec).expect("in-memory write");
    };
    match &env.result {
        Payload::Find(r) => {
            put(decomposition_header(r.terms));
            for d in &r.decompositions {
                put(decomposition_record(d));
            }
        }
        Payload::Table(t) => {
            put(t.columns.clone());
            for row in &t.rows {
                put(row.clone());
            }
        }
        Payload::Lift(r) => {
            put(decomposition_header(3));
            for d in &r.distinct {
                put(decomposition_record(d));
            }
        }
        Payload::Gf(r) => {
            put(["p", "k", "e1", "o1", "e2", "o2", "e3", "o3"].iter().map(|s| s.to_string()).collect());
            for d in &r.decompositions {
                let mut rec = vec![r.p.to_string(), r.k.to_string()];
                for i in 0..3 {
                    rec.push(d.exponents[i].to_string());
                    rec.push(d.orders[i].to_string());
                }
                put(rec);
            }
        }
        Payload::Theorem(r) => {
            put(decomposition_header(3));
            for d in r.outcomes.iter().filter_map(|t| t.witness.as_ref()) {
                put(decomposition_record(d));
            }
        }
        Payload::List(l) => {
            put(vec!["kind".into(), "name".into()]);
            for t in &l.tables {
                put(vec!["table".into(), t.clone()]);
            }
            for c in &l.constructions {
                put(vec!["construction".into(), c.clone()]);
            }
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("apdecomp").chain(args.iter().copied()))
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&CliError::Usage("x".into())), EXIT_USAGE);
        assert_eq!(
            exit_code(&CliError::Core(Error::InvariantViolation("x".into()))),
            EXIT_INVARIANT
        );
        assert_eq!(exit_code(&CliError::Core(Error::Characteristic2)), EXIT_PRECONDITION);
        assert_eq!(
            exit_code(&CliError::Core(Error::OutOfRange { value: 1, limit: 0 })),
            EXIT_USAGE
        );
    }

    #[test]
    fn parse_failures_go_to_stderr() {
        let o = run_args(&["find"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stdout.is_empty() && !o.stderr.is_empty());
        let o = run_args(&["--version"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("0.1.0"));
    }

    #[test]
    fn timing_is_opt_in() {
        let o = run_args(&["--format", "json", "find", "7", "--weak"]);
        assert!(!o.stdout.contains("runtime_ms"));
        let o = run_args(&["--format", "json", "--timing", "find", "7", "--weak"]);
        assert!(o.stdout.contains("runtime_ms"));
    }

    #[test]
    fn csv_has_one_record_per_decomposition() {
        let o = run_args(&["--format", "csv", "find", "12"]);
        assert_eq!(o.stdout, "n,x,k,strength,g1,o1,g2,o2,g3,o3\n");
        let o = run_args(&["--format", "csv", "find", "7", "--weak"]);
        assert_eq!(o.stdout.lines().nth(1), Some("7,4,2,weak,4,3,6,2,1,1"));
        assert_eq!(o.stdout.lines().count(), 2);
    }
}

//! The `braid3` command line: parsing, normal forms, syllables, bounds,
//! exhaustive enumeration and the numerical audits.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analytic_blocks::{
    audit_block_constants, audit_upper_bound_arithmetic, audit_vsl_bounds, ellip_k, fm, glue_word, seeded_glue_words,
    GluingAudit, QuadratureSpec, DEFAULT_AUDIT_SAMPLES, DEFAULT_AUDIT_SEED,
};
use crate::braid_words::{
    cyclic_reduce, cyclic_syllable_decompose, parse_braid, parse_pure_word, script_l, syllable_decompose, BraidSymbol,
    BraidWord, CyclicFreeWord, CyclicSyllables, FreeWord, Generator, SyllableDecomposition,
};
use crate::invariant_bounds::{
    braid_bounds_thm3, class_bounds_thm2, consistency_check, bounds_for_word, BoundaryCondition, Verdict,
};
use crate::matrix_oracles::{entropy_exact, psl2_image};
use crate::normal_form::{normalize, permutation};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "BRAID3_SEED";

const DEFAULT_GRID_STEP: f64 = 1.0 / 180.0;
const DEFAULT_ELLIPTIC_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Parse,
    Normalize,
    Syllables,
    Bounds,
    Entropy,
    Enumerate,
    Audit,
    Glue,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "braid3", version, about = "Syllable invariants and extremal-length bounds for 3-braids")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Braid word over s1, s2, d, e.g. "s1^3 s2^-2".
    #[arg(long)]
    pub word: Option<String>,
    /// Word in a1, a2, e.g. "a1^2 a2^-1".
    #[arg(long)]
    pub pure_word: Option<String>,
    /// tr, pb, tr_pb, pb_tr or conjugacy.
    #[arg(long)]
    pub boundary: Option<String>,
    #[arg(long, default_value_t = 6)]
    pub max_degree: u64,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = DEFAULT_AUDIT_SEED)]
    pub seed: u64,
    /// Tolerance of the elliptic-integral identity checked by `audit`.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Run the consistency checks (enumerate).
    #[arg(long)]
    pub check: bool,
    /// Grid spacing for `glue`.
    #[arg(long)]
    pub grid_step: Option<f64>,
    /// Samples per lemma and parameter for `audit`.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::QuadratureFailure(_) | Error::NewtonDivergence(_) | Error::Pole(_) | Error::NonFinite(_) => {
            EXIT_CHECK_FAILED
        }
        _ => EXIT_USAGE,
    }
}

/// Output of one command: the JSON document, its table rendering, and whether
/// every check it ran passed.
struct Outcome {
    value: Value,
    table: String,
    ok: bool,
}

impl Outcome {
    fn new(value: Value, table: String) -> Self {
        Outcome { value, table, ok: true }
    }
}

/// Rounds every float to 15 significant digits.
fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap();
            let r: f64 = format!("{x:.14e}").parse().unwrap_or(x);
            json!(r)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn fmt_num(x: f64) -> String {
    format!("{}", format!("{x:.14e}").parse::<f64>().unwrap_or(x))
}

fn table(rows: &[(&str, String)]) -> String {
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<w$}  {v}");
    }
    s
}

fn need_braid(c: &CliConfig) -> Result<BraidWord, Failure> {
    match &c.word {
        Some(w) => Ok(parse_braid(w)?),
        None => Err(Failure::Usage("this command needs --word".into())),
    }
}

fn need_pure(c: &CliConfig) -> Result<FreeWord, Failure> {
    match &c.pure_word {
        Some(w) => Ok(parse_pure_word(w)?),
        None => Err(Failure::Usage("this command needs --pure-word".into())),
    }
}

fn boundary(c: &CliConfig, default: BoundaryCondition) -> Result<BoundaryCondition, Failure> {
    match &c.boundary {
        None => Ok(default),
        Some(s) => BoundaryCondition::parse(s).ok_or_else(|| Failure::Usage(format!("unknown boundary '{s}'"))),
    }
}

fn one_of_word_or_pure(c: &CliConfig) -> Result<(), Failure> {
    match (&c.word, &c.pure_word) {
        (Some(_), Some(_)) => Err(Failure::Usage("give --word or --pure-word, not both".into())),
        (None, None) => Err(Failure::Usage("this command needs --word or --pure-word".into())),
        _ => Ok(()),
    }
}

/// The image of a braid word in `PB₃/⟨Δ²⟩`, when it is written in the
/// squares `σ_j^{2e}` and even powers of `Δ`.
pub fn pure_image(b: &BraidWord) -> Option<FreeWord> {
    let mut pairs = Vec::new();
    for l in b.letters() {
        if l.exp % 2 != 0 {
            return None;
        }
        match l.symbol {
            BraidSymbol::S1 => pairs.push((Generator::One, l.exp / 2)),
            BraidSymbol::S2 => pairs.push((Generator::Two, l.exp / 2)),
            BraidSymbol::Delta => {}
        }
    }
    Some(FreeWord::from_pairs(pairs))
}

/// One representative (the canonical rotation) of every cyclically reduced
/// word over `a₁^{±1}, a₂^{±1}` of total degree `1..=max_degree`, sorted by
/// degree and then by blocks.
pub fn enumerate_words(max_degree: u64) -> Vec<CyclicFreeWord> {
    const LETTERS: [(Generator, i64); 4] =
        [(Generator::One, 1), (Generator::One, -1), (Generator::Two, 1), (Generator::Two, -1)];
    let mut seen = BTreeSet::new();
    let mut word: Vec<usize> = Vec::new();
    fn inverse(a: usize, b: usize) -> bool {
        a / 2 == b / 2 && a != b
    }
    fn rec(max: usize, word: &mut Vec<usize>, seen: &mut BTreeSet<(u64, CyclicFreeWord)>) {
        if !word.is_empty() && !inverse(word[0], word[word.len() - 1]) {
            let w = FreeWord::from_pairs(word.iter().map(|&i| LETTERS[i]));
            let cw = cyclic_reduce(&w);
            seen.insert((cw.total_degree(), cw));
        }
        if word.len() == max {
            return;
        }
        for i in 0..4 {
            if word.last().is_some_and(|&p| inverse(p, i)) {
                continue;
            }
            word.push(i);
            rec(max, word, seen);
            word.pop();
        }
    }
    rec(max_degree as usize, &mut word, &mut seen);
    seen.into_iter().map(|(_, w)| w).collect()
}

fn decomposition_value(dec: &SyllableDecomposition) -> Value {
    let syl: Vec<Value> = dec
        .syllables
        .iter()
        .enumerate()
        .map(|(i, s)| {
            json!({
                "kind": to_value(&s.kind),
                "degree": s.degree,
                "word": FreeWord::from_pairs(dec.syllable_blocks(i).iter().map(|b| (b.gen, b.exp))).render(),
            })
        })
        .collect();
    json!({
        "word": dec.word.render(),
        "cyclic": dec.cyclic,
        "syllables": syl,
        "degrees": dec.degrees(),
        "L": script_l(dec),
        "exceptional": Value::Null,
    })
}

fn cmd_parse(c: &CliConfig) -> Result<Outcome, Failure> {
    one_of_word_or_pure(c)?;
    if c.word.is_some() {
        let b = need_braid(c)?;
        let pure = pure_image(&b);
        let v = json!({
            "kind": "braid",
            "word": b.render(),
            "letters": b.letters().len(),
            "exponent_sum": b.exponent_sum(),
            "permutation": permutation(&b).name(),
            "pure_word": pure.as_ref().map(|w| w.render()),
        });
        let t = table(&[
            ("braid", b.render()),
            ("letters", b.letters().len().to_string()),
            ("exponent sum", b.exponent_sum().to_string()),
            ("permutation", permutation(&b).name().to_string()),
            ("pure word", pure.map(|w| w.render()).unwrap_or_else(|| "-".into())),
        ]);
        Ok(Outcome::new(v, t))
    } else {
        let w = need_pure(c)?;
        let cw = cyclic_reduce(&w);
        let v = json!({
            "kind": "pure",
            "word": w.render(),
            "blocks": w.len(),
            "total_degree": w.total_degree(),
            "exponent_sum": w.exponent_sum(),
            "cyclic_word": cw.render(),
        });
        let t = table(&[
            ("word", w.render()),
            ("blocks", w.len().to_string()),
            ("total degree", w.total_degree().to_string()),
            ("exponent sum", w.exponent_sum().to_string()),
            ("cyclic word", cw.render()),
        ]);
        Ok(Outcome::new(v, t))
    }
}

fn cmd_normalize(c: &CliConfig) -> Result<Outcome, Failure> {
    let b = need_braid(c)?;
    let nf = normalize(&b);
    let theta = crate::normal_form::theta(&nf).ok();
    let v = json!({
        "word": b.render(),
        "normal_form": nf.render(),
        "delta_exponent": nf.delta_exponent(),
        "theta_word": theta.as_ref().map(|w| w.render()),
        "permutation": permutation(&b).name(),
    });
    let t = table(&[
        ("braid", b.render()),
        ("normal form", nf.render()),
        ("delta exponent", nf.delta_exponent().to_string()),
        ("theta", theta.map(|w| w.render()).unwrap_or_else(|| "-".into())),
    ]);
    Ok(Outcome::new(v, t))
}

fn cmd_syllables(c: &CliConfig) -> Result<Outcome, Failure> {
    let w = need_pure(c)?;
    let cyclic = boundary(c, BoundaryCondition::TrTr)? == BoundaryCondition::Conjugacy;
    let v = if cyclic {
        match cyclic_syllable_decompose(&cyclic_reduce(&w))? {
            CyclicSyllables::Regular(dec) => decomposition_value(&dec),
            CyclicSyllables::Exceptional(e) => json!({
                "word": cyclic_reduce(&w).render(),
                "cyclic": true,
                "syllables": [],
                "degrees": [],
                "L": 0.0,
                "exceptional": e.to_string(),
            }),
        }
    } else {
        decomposition_value(&syllable_decompose(&w)?)
    };
    let mut rows = vec![("word", v["word"].as_str().unwrap_or("").to_string())];
    if let Some(e) = v["exceptional"].as_str() {
        rows.push(("exceptional", e.to_string()));
    }
    let syl: Vec<String> = v["syllables"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|s| format!("[{}] d={} {}", s["kind"].as_str().unwrap_or(""), s["degree"], s["word"].as_str().unwrap_or("")))
                .collect()
        })
        .unwrap_or_default();
    rows.push(("syllables", syl.join(", ")));
    rows.push(("L", fmt_num(v["L"].as_f64().unwrap_or(0.0))));
    let t = table(&rows);
    Ok(Outcome::new(v, t))
}

fn cmd_bounds(c: &CliConfig) -> Result<Outcome, Failure> {
    one_of_word_or_pure(c)?;
    if c.word.is_some() {
        let bc = boundary(c, BoundaryCondition::TrTr)?;
        if bc != BoundaryCondition::TrTr {
            return Err(Error::UnsupportedCombination(format!("braid bounds with boundary {bc}")).into());
        }
        let b = need_braid(c)?;
        let bb = braid_bounds_thm3(&b);
        let r = &bb.report;
        let v = json!({
            "word": b.render(),
            "normal_form": bb.normal_form.render(),
            "theta_word": bb.theta_word.as_ref().map(|w| w.render()),
            "L": r.l,
            "lambda_lower": r.lambda_lower,
            "lambda_upper": r.lambda_upper,
            "exceptional": to_value(&r.exceptional),
        });
        let t = table(&[
            ("braid", b.render()),
            ("normal form", bb.normal_form.render()),
            ("theta", bb.theta_word.as_ref().map(|w| w.render()).unwrap_or_else(|| "-".into())),
            ("L", fmt_num(r.l)),
            ("lambda", format!("[{}, {}]", fmt_num(r.lambda_lower), fmt_num(r.lambda_upper))),
            ("exceptional", r.exceptional.as_ref().map(|e| e.reason.clone()).unwrap_or_else(|| "-".into())),
        ]);
        Ok(Outcome::new(v, t))
    } else {
        let w = need_pure(c)?;
        let bc = boundary(c, BoundaryCondition::TrTr)?;
        let r = bounds_for_word(&w, bc)?;
        let t = table(&[
            ("word", r.word.clone()),
            ("boundary", bc.name().to_string()),
            ("L", fmt_num(r.l)),
            ("lambda", format!("[{}, {}]", fmt_num(r.lambda_lower), fmt_num(r.lambda_upper))),
            ("nt class", r.nt_class.to_string()),
            ("exceptional", r.exceptional.as_ref().map(|e| e.reason.clone()).unwrap_or_else(|| "-".into())),
        ]);
        Ok(Outcome::new(to_value(&r), t))
    }
}

fn cmd_entropy(c: &CliConfig) -> Result<Outcome, Failure> {
    one_of_word_or_pure(c)?;
    let (input, w) = if c.word.is_some() {
        let b = need_braid(c)?;
        let w = pure_image(&b).ok_or_else(|| {
            Error::NotApplicable(format!("{} is not written in squares of the generators and even powers of d", b.render()))
        })?;
        (b.render(), w)
    } else {
        let w = need_pure(c)?;
        (w.render(), w)
    };
    let r = class_bounds_thm2(&cyclic_reduce(&w))?;
    let verdict = consistency_check(&r);
    let trace = psl2_image(&w).trace().to_string();
    let h = r.entropy_exact.unwrap_or_else(|| entropy_exact(&w));
    let lo = r.entropy_lower.unwrap_or(0.0);
    let hi = r.entropy_upper.unwrap_or(0.0);
    let v = json!({
        "word": input,
        "class": cyclic_reduce(&w).render(),
        "trace": trace,
        "nt_class": to_value(&r.nt_class),
        "L": r.l,
        "entropy_exact": h,
        "entropy_lower": lo,
        "entropy_upper": hi,
        "exceptional": to_value(&r.exceptional),
        "verdict": verdict.to_string(),
    });
    let t = table(&[
        ("word", input.clone()),
        ("class", cyclic_reduce(&w).render()),
        ("trace", trace.clone()),
        ("nt class", r.nt_class.to_string()),
        ("L", fmt_num(r.l)),
        ("entropy", fmt_num(h)),
        ("bounds", format!("[{}, {}]", fmt_num(lo), fmt_num(hi))),
        ("verdict", verdict.to_string()),
    ]);
    Ok(Outcome { value: v, table: t, ok: verdict == Verdict::Pass })
}

fn cmd_enumerate(c: &CliConfig) -> Result<Outcome, Failure> {
    if c.max_degree == 0 {
        return Err(Failure::Usage("--max-degree must be at least 1".into()));
    }
    let words = enumerate_words(c.max_degree);
    if !c.check {
        let list: Vec<Value> =
            words.iter().map(|w| json!({"degree": w.total_degree(), "word": w.render()})).collect();
        let mut t = String::new();
        for w in &words {
            let _ = writeln!(t, "{:>3}  {}", w.total_degree(), w.render());
        }
        let _ = writeln!(t, "{} classes", words.len());
        return Ok(Outcome::new(json!({"max_degree": c.max_degree, "count": words.len(), "classes": list}), t));
    }
    let mut failed = Vec::new();
    for w in &words {
        let r = class_bounds_thm2(w)?;
        if consistency_check(&r) == Verdict::Fail {
            failed.push(w.render());
        }
    }
    let t = format!("{} classes checked, {} failures\n", words.len(), failed.len());
    let v = json!({"max_degree": c.max_degree, "classes": words.len(), "failures": failed.len(), "failed": failed});
    Ok(Outcome { value: v, table: t, ok: failed.is_empty() })
}

fn cmd_audit(c: &CliConfig) -> Result<Outcome, Failure> {
    let ms: Vec<f64> = (2..=20).map(f64::from).collect();
    let samples = c.samples.unwrap_or(DEFAULT_AUDIT_SAMPLES);
    let constants = audit_block_constants(&ms, samples, c.seed)?;
    let vsl = audit_vsl_bounds(1..=c.max_degree.max(8))?;
    let arith = audit_upper_bound_arithmetic();
    let tol = c.tolerance.unwrap_or(DEFAULT_ELLIPTIC_TOL);
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Usage(format!("--tolerance must be positive, got {tol}")));
    }
    let mut elliptic = Vec::new();
    for m in [2.0, 5.0, 10.0, 20.0] {
        let f = fm(num_complex::Complex64::new(0.0, m), m, &QuadratureSpec::default())?;
        let via_quadrature = (m + 1.0) * f.im;
        let via_agm = ellip_k(m / (m + 1.0))?;
        elliptic.push(json!({
            "M": m,
            "quadrature": via_quadrature,
            "agm": via_agm,
            "difference": (via_quadrature - via_agm).abs(),
            "passed": (via_quadrature - via_agm).abs() < tol,
        }));
    }
    let elliptic_ok = elliptic.iter().all(|e| e["passed"] == json!(true));
    let ok = constants.passed && vsl.passed && arith.passed && elliptic_ok;
    let mut t = String::new();
    let pf = |b: bool| if b { "PASS" } else { "FAIL" };
    let _ = writeln!(t, "constants (seed {}, {} samples per case)", c.seed, samples);
    for a in &constants.audits {
        let _ = writeln!(t, "  {:<32} {:>5}  max {:<20} margin {:<12} {}", a.label, a.parameter, fmt_num(a.max_value), format!("{:.3e}", a.margin), pf(a.passed));
    }
    let _ = writeln!(t, "  anchor normalization error {:.2e}", constants.anchor_max_error);
    let _ = writeln!(t, "vertical side lengths");
    for v in &vsl.checks {
        let _ = writeln!(t, "  {:<12} d={:<3} vsl {:<20} bound {:<20} {}", format!("{:?}", v.kind), v.degree, fmt_num(v.vsl), fmt_num(v.bound), pf(v.passed));
    }
    let _ = writeln!(t, "arithmetic");
    for a in &arith.checks {
        let tag = if a.counted { pf(a.holds) } else if a.holds { "note" } else { "MISPRINT" };
        let _ = writeln!(t, "  {:<14} {:<9} margin {:<12} {}", a.name, tag, format!("{:.3e}", a.margin), a.statement);
    }
    let _ = writeln!(t, "elliptic identity (tol {tol:e}): {}", pf(elliptic_ok));
    let _ = writeln!(t, "overall: {}", pf(ok));
    let v = json!({
        "constants": to_value(&constants),
        "vsl": to_value(&vsl),
        "arithmetic": to_value(&arith),
        "elliptic": elliptic,
        "passed": ok,
    });
    Ok(Outcome { value: v, table: t, ok })
}

fn cmd_glue(c: &CliConfig) -> Result<Outcome, Failure> {
    let step = c.grid_step.unwrap_or(DEFAULT_GRID_STEP);
    let words = match &c.pure_word {
        Some(_) => vec![need_pure(c)?],
        None => {
            let mut ws = vec![parse_pure_word("a1^2 a2^-2")?];
            ws.extend(seeded_glue_words(c.seed, 2));
            ws
        }
    };
    let audits: Vec<GluingAudit> = words.iter().map(|w| glue_word(w, step)).collect::<Result<_, _>>()?;
    let ok = audits.iter().all(|a| a.passed);
    let mut t = String::new();
    for a in &audits {
        let _ = writeln!(
            t,
            "{:<32} sup|mu| {:<20} qc {:<20} margin {:<20} {}",
            a.word.render(),
            fmt_num(a.sup_mu),
            fmt_num(a.qc_dilatation),
            fmt_num(a.margin),
            if a.passed { "PASS" } else { "FAIL" }
        );
    }
    Ok(Outcome { value: json!({"grid_step": step, "audits": to_value(&audits), "passed": ok}), table: t, ok })
}

fn dispatch(c: &CliConfig) -> Result<Outcome, Failure> {
    match c.command {
        Command::Parse => cmd_parse(c),
        Command::Normalize => cmd_normalize(c),
        Command::Syllables => cmd_syllables(c),
        Command::Bounds => cmd_bounds(c),
        Command::Entropy => cmd_entropy(c),
        Command::Enumerate => cmd_enumerate(c),
        Command::Audit => cmd_audit(c),
        Command::Glue => cmd_glue(c),
    }
}

/// Applies `BRAID3_SEED` on top of the parsed flags.
pub fn apply_env(mut c: CliConfig) -> Result<CliConfig, String> {
    if let Ok(s) = std::env::var(SEED_ENV) {
        c.seed = s.trim().parse().map_err(|_| format!("{SEED_ENV}={s} is not an unsigned integer"))?;
    }
    Ok(c)
}

/// Runs one command, writing the report to `out` (or `--out`) and
/// diagnostics to `err`. Returns the exit code.
pub fn run(c: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match dispatch(c) {
        Ok(o) => o,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            return EXIT_USAGE;
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let text = if c.json {
        let mut s = serde_json::to_string_pretty(&round_json(outcome.value)).expect("json");
        s.push('\n');
        s
    } else {
        outcome.table
    };
    let written = match &c.out {
        Some(p) => std::fs::write(p, &text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(m) = written {
        let _ = writeln!(err, "error: {m}");
        return EXIT_USAGE;
    }
    if outcome.ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match apply_env(parsed) {
        Ok(c) => run(&c, out, err),
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
    }
}

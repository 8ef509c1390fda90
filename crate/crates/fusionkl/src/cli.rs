//! Command-line front end: tensor products, structure reports, functor
//! images, level classification, diagram-calculus checks, numerical
//! verification, and the acceptance self-test, with JSON (default) or plain
//! table output.
//!
//! Labels are written either as shorthand tokens (`V2`, `L5`, `P7`, `Vco3`
//! on the affine side; `T4`, `Lq3`, `Pq2`, `Wq4` on the quantum side),
//! possibly combined as `2*P4 + L3`, or as JSON objects using the documented
//! schemas. The `FUSIONKL_MAX_INDEX` environment variable (default 200) caps
//! accepted label indices and bounds the tilting-flag consistency check that
//! runs before quantum computations.

use crate::klcat::{self, KLKind, KLLabel, KLObject};
use crate::klfunctor;
use crate::kzverify;
use crate::level::{classify_level, make_level, BraidingVariant, Level, TwistSign};
use crate::qgroup::{self, QKind, QLabel, QObject};
use crate::tlskein::{self, TLElement};
use crate::{acceptance, cyclotomic};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::BigUint;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "fusionkl",
    about = "Exact fusion rules for affine sl2 at admissible levels and tilting modules of quantum sl2",
    version
)]
struct Cli {
    /// Level as p/q, e.g. --level 3/1
    #[arg(long, global = true, value_parser = parse_level)]
    level: Option<Level>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tensor product of two objects (same side)
    Tensor {
        /// First factor (token, sum of tokens, or JSON)
        a: String,
        /// Second factor
        b: String,
    },
    /// Composition factors of an object
    Factors { object: String },
    /// Loewy layers of a single affine label
    Loewy { label: String },
    /// Dimension of the morphism space from a projective/tilting label
    Hom { source: String, target: String },
    /// Image of an affine object under the quantum-side functor
    Functor { object: String },
    /// Canonical form of a level and its braided-structure variant
    Classify,
    /// Temperley-Lieb diagram-calculus reports
    Tl {
        #[command(subcommand)]
        what: TlWhat,
    },
    /// Knizhnik-Zamolodchikov numerical verification (runs over the default
    /// level set when --level is omitted)
    Kz {
        #[command(subcommand)]
        what: KzWhat,
    },
    /// Run the full acceptance suite
    Selftest,
}

#[derive(Subcommand)]
enum TlWhat {
    /// The loop value (intrinsic dimension of the generator)
    Delta,
    /// The Jones-Wenzl projector on N strands
    Jw { n: u64 },
    /// Enumerate hexagon-compatible braiding coefficient pairs
    Braidcheck,
    /// The braiding and coevaluation scalars for all variants
    Scalars,
}

#[derive(Subcommand)]
enum KzWhat {
    /// Residuals of the four basis solutions at nine sample points
    Residuals,
    /// The connection constant along both routes
    Connection,
}

fn parse_level(s: &str) -> Result<Level, String> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| format!("expected p/q, got `{s}`"))?;
    let p: i64 = p.trim().parse().map_err(|e| format!("bad p: {e}"))?;
    let q: i64 = q.trim().parse().map_err(|e| format!("bad q: {e}"))?;
    make_level(p, q).map_err(|e| e.to_string())
}

fn max_index() -> u64 {
    std::env::var("FUSIONKL_MAX_INDEX")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200)
}

/// Either side's object, as parsed from a payload.
enum AnyObject {
    Affine(KLObject),
    Quantum(QObject),
}

enum AnyLabel {
    Affine(KLLabel),
    Quantum(QLabel),
}

fn parse_token_label(tok: &str, lv: Level) -> Result<AnyLabel, String> {
    let tok = tok.trim();
    let take = |prefix: &str| -> Option<i64> {
        tok.strip_prefix(prefix)
            .and_then(|rest| rest.parse::<i64>().ok())
    };
    let cap = max_index() as i64;
    let check = |idx: i64| -> Result<i64, String> {
        if idx > cap {
            Err(format!("index {idx} exceeds FUSIONKL_MAX_INDEX = {cap}"))
        } else {
            Ok(idx)
        }
    };
    // longer prefixes first
    if let Some(k) = take("Vco") {
        return Ok(AnyLabel::Affine(
            klcat::canonicalize(KLKind::CoVerma, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("Lq") {
        return Ok(AnyLabel::Quantum(
            qgroup::q_canonicalize(QKind::SimpleQ, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("Pq") {
        return Ok(AnyLabel::Quantum(
            qgroup::q_canonicalize(QKind::ProjQ, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("Wq") {
        return Ok(AnyLabel::Quantum(
            qgroup::q_canonicalize(QKind::WeylQ, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("Tq").or_else(|| take("T")) {
        return Ok(AnyLabel::Quantum(
            qgroup::q_canonicalize(QKind::TiltQ, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("V") {
        return Ok(AnyLabel::Affine(
            klcat::canonicalize(KLKind::Verma, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("L") {
        return Ok(AnyLabel::Affine(
            klcat::canonicalize(KLKind::Simple, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(k) = take("P") {
        return Ok(AnyLabel::Affine(
            klcat::canonicalize(KLKind::Proj, check(k)?, lv).map_err(|e| e.to_string())?,
        ));
    }
    Err(format!("unrecognized label token `{tok}`"))
}

/// Lenient JSON input: the level field is optional and defaults to --level.
#[derive(serde::Deserialize)]
struct LooseKL {
    level: Option<Level>,
    terms: Vec<klcat::json::KLTermJson>,
}

#[derive(serde::Deserialize)]
struct LooseQ {
    level: Option<Level>,
    terms: Vec<qgroup::json::QTermJson>,
}

fn parse_object(payload: &str, lv: Level) -> Result<AnyObject, String> {
    let payload = payload.trim();
    if payload.starts_with('{') {
        // decide the side by the field names present
        if payload.contains("\"lambda\"") {
            let loose: LooseQ =
                serde_json::from_str(payload).map_err(|e| format!("bad quantum JSON: {e}"))?;
            let level = loose.level.unwrap_or(lv);
            if level != lv {
                return Err(format!("payload level {level} does not match --level {lv}"));
            }
            let cap = max_index();
            let mut o = QObject::zero(lv);
            for t in loose.terms {
                if t.lambda > cap {
                    return Err(format!(
                        "weight {} exceeds FUSIONKL_MAX_INDEX = {cap}",
                        t.lambda
                    ));
                }
                let lab = qgroup::q_canonicalize(t.kind, t.lambda as i64, lv)
                    .map_err(|e| e.to_string())?;
                o.add_label(lab, &t.mult);
            }
            return Ok(AnyObject::Quantum(o));
        }
        let loose: LooseKL =
            serde_json::from_str(payload).map_err(|e| format!("bad affine JSON: {e}"))?;
        let level = loose.level.unwrap_or(lv);
        if level != lv {
            return Err(format!("payload level {level} does not match --level {lv}"));
        }
        let cap = max_index();
        let mut o = KLObject::zero(lv);
        for t in loose.terms {
            if t.r > cap {
                return Err(format!("index {} exceeds FUSIONKL_MAX_INDEX = {cap}", t.r));
            }
            let lab = klcat::canonicalize(t.kind, t.r as i64, lv).map_err(|e| e.to_string())?;
            o.add_label(lab, &t.mult);
        }
        return Ok(AnyObject::Affine(o));
    }
    // token sum: term (+ term)*, term = [mult *] token
    let mut affine: Option<KLObject> = None;
    let mut quantum: Option<QObject> = None;
    for term in payload.split('+') {
        let term = term.trim();
        let (mult, tok) = match term.split_once('*') {
            Some((m, t)) => (
                m.trim()
                    .parse::<BigUint>()
                    .map_err(|e| format!("bad multiplicity `{m}`: {e}"))?,
                t,
            ),
            None => (BigUint::from(1u32), term),
        };
        match parse_token_label(tok, lv)? {
            AnyLabel::Affine(l) => {
                if quantum.is_some() {
                    return Err("cannot mix affine and quantum labels in one object".into());
                }
                affine
                    .get_or_insert_with(|| KLObject::zero(lv))
                    .add_label(l, &mult);
            }
            AnyLabel::Quantum(l) => {
                if affine.is_some() {
                    return Err("cannot mix affine and quantum labels in one object".into());
                }
                quantum
                    .get_or_insert_with(|| QObject::zero(lv))
                    .add_label(l, &mult);
            }
        }
    }
    match (affine, quantum) {
        (Some(o), None) => Ok(AnyObject::Affine(o)),
        (None, Some(o)) => Ok(AnyObject::Quantum(o)),
        _ => Err("empty object payload".into()),
    }
}

fn mult_json(m: &BigUint) -> serde_json::Value {
    match u64::try_from(m) {
        Ok(n) => json!(n),
        Err(_) => json!(m.to_string()),
    }
}

fn kl_object_json(o: &KLObject) -> serde_json::Value {
    serde_json::to_value(klcat::json::KLObjectJson::from(o)).expect("serializable")
}

fn q_object_json(o: &QObject) -> serde_json::Value {
    serde_json::to_value(qgroup::json::QObjectJson::from(o)).expect("serializable")
}

fn kl_object_table(o: &KLObject) -> String {
    if o.is_zero() {
        return "0".into();
    }
    o.terms()
        .map(|(l, m)| {
            if m == &BigUint::from(1u32) {
                l.to_string()
            } else {
                format!("{m}*{l}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn q_object_table(o: &QObject) -> String {
    if o.is_zero() {
        return "0".into();
    }
    o.terms()
        .map(|(l, m)| {
            if m == &BigUint::from(1u32) {
                l.to_string()
            } else {
                format!("{m}*{l}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn gr_json(v: &klcat::GrVector, key: &str) -> serde_json::Value {
    json!(v
        .0
        .iter()
        .map(|(idx, m)| json!({ key: idx, "mult": mult_json(m) }))
        .collect::<Vec<_>>())
}

fn emit(format: Format, value: serde_json::Value, table: String) {
    match format {
        Format::Json => println!("{value}"),
        Format::Table => println!("{table}"),
    }
}

fn require_level(level: Option<Level>) -> Result<Level, String> {
    level.ok_or_else(|| "this command needs --level p/q".to_string())
}

/// Bound for the tilting-flag consistency self-check run before quantum
/// computations.
fn weyl_check(lv: Level) -> Result<(), String> {
    qgroup::weyl_consistency_check(lv, max_index().min(200)).map_err(|e| e.to_string())
}

fn run_command(level: Option<Level>, format: Format, cmd: Command) -> Result<(), String> {
    match cmd {
        Command::Tensor { a, b } => {
            let lv = require_level(level)?;
            let a = parse_object(&a, lv)?;
            let b = parse_object(&b, lv)?;
            match (a, b) {
                (AnyObject::Affine(a), AnyObject::Affine(b)) => {
                    let prod = klcat::tensor(&a, &b).map_err(|e| e.to_string())?;
                    emit(format, kl_object_json(&prod), kl_object_table(&prod));
                }
                (AnyObject::Quantum(a), AnyObject::Quantum(b)) => {
                    weyl_check(lv)?;
                    let prod = qgroup::tilt_tensor(&a, &b).map_err(|e| e.to_string())?;
                    emit(format, q_object_json(&prod), q_object_table(&prod));
                }
                _ => return Err("tensor factors must come from the same side".into()),
            }
        }
        Command::Factors { object } => {
            let lv = require_level(level)?;
            match parse_object(&object, lv)? {
                AnyObject::Affine(o) => {
                    let mut v = klcat::GrVector::zero();
                    for (l, m) in o.terms() {
                        v.accumulate(&klcat::composition_factors(l), m);
                    }
                    let table = v
                        .0
                        .iter()
                        .map(|(i, m)| format!("L{i} x {m}"))
                        .collect::<Vec<_>>()
                        .join("\n");
                    emit(format, gr_json(&v, "r"), table);
                }
                AnyObject::Quantum(o) => {
                    let v = o.factors();
                    let table = v
                        .0
                        .iter()
                        .map(|(i, m)| format!("Lq{i} x {m}"))
                        .collect::<Vec<_>>()
                        .join("\n");
                    emit(format, gr_json(&v, "lambda"), table);
                }
            }
        }
        Command::Loewy { label } => {
            let lv = require_level(level)?;
            let AnyLabel::Affine(l) = parse_token_label(&label, lv)? else {
                return Err("loewy layers are reported for affine labels".into());
            };
            let data = klcat::loewy(&l);
            let table = data
                .layers
                .iter()
                .map(|layer| {
                    layer
                        .iter()
                        .map(|i| format!("L{i}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(
                format,
                json!({"label": l.to_string(), "layers": data.layers}),
                table,
            );
        }
        Command::Hom { source, target } => {
            let lv = require_level(level)?;
            match (parse_token_label(&source, lv)?, parse_object(&target, lv)?) {
                (AnyLabel::Affine(a), AnyObject::Affine(w)) => {
                    let dim = klcat::hom_dim_from_proj(&a, &w).map_err(|e| e.to_string())?;
                    emit(
                        format,
                        json!({"dim": mult_json(&dim)}),
                        format!("dim hom({a}, ...) = {dim}"),
                    );
                }
                (AnyLabel::Quantum(a), AnyObject::Quantum(w)) => {
                    weyl_check(lv)?;
                    let dim = qgroup::q_hom_dim(&a, &w).map_err(|e| e.to_string())?;
                    emit(
                        format,
                        json!({"dim": mult_json(&dim)}),
                        format!("dim hom({a}, ...) = {dim}"),
                    );
                }
                _ => return Err("hom arguments must come from the same side".into()),
            }
        }
        Command::Functor { object } => {
            let lv = require_level(level)?;
            let AnyObject::Affine(o) = parse_object(&object, lv)? else {
                return Err("the functor takes affine objects".into());
            };
            let img = klfunctor::functor_object(&o);
            let tilting = img.tilting_part.as_ref().map(q_object_json);
            let table = match &img.tilting_part {
                Some(t) => q_object_table(t),
                None => img
                    .gr_part
                    .0
                    .iter()
                    .map(|(i, m)| format!("[Lq{i}] x {m}"))
                    .collect::<Vec<_>>()
                    .join(" + "),
            };
            emit(
                format,
                json!({
                    "tilting": tilting,
                    "grothendieck": gr_json(&img.gr_part, "lambda"),
                }),
                if table.is_empty() { "0".into() } else { table },
            );
        }
        Command::Classify => {
            let lv = require_level(level)?;
            let (canonical, variant) =
                classify_level(lv.p() as i64, lv.q() as i64).map_err(|e| e.to_string())?;
            emit(
                format,
                json!({
                    "canonical": {"p": canonical.p(), "q": canonical.q()},
                    "variant": variant.flavor.to_string(),
                    "twist": variant.sign.to_string(),
                }),
                format!(
                    "{} -> {} with the {} braiding, twist {}",
                    lv, canonical, variant.flavor, variant.sign
                ),
            );
        }
        Command::Tl { what } => run_tl(require_level(level)?, format, what)?,
        Command::Kz { what } => run_kz(level, format, what)?,
        Command::Selftest => {
            let results = acceptance::run_all();
            let mut failed = 0usize;
            for r in &results {
                println!("{}", r.line());
                if !r.passed {
                    failed += 1;
                }
            }
            println!(
                "selftest: {} passed, {} failed",
                results.len() - failed,
                failed
            );
            if failed > 0 {
                return Err(format!("{failed} acceptance criteria failed"));
            }
        }
    }
    Ok(())
}

fn tl_element_json(e: &TLElement) -> serde_json::Value {
    json!({
        "strands": e.bottom(),
        "terms": e
            .combo()
            .map(|(d, c)| {
                json!({
                    "diagram": {"n": d.bottom(), "chords": d.chords()},
                    "coeff": c.to_string(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn run_tl(lv: Level, format: Format, what: TlWhat) -> Result<(), String> {
    match what {
        TlWhat::Delta => {
            let d = tlskein::cup_cap_pairing(lv);
            emit(format, json!({"delta": d.to_string()}), format!("delta = {d}"));
        }
        TlWhat::Jw { n } => {
            let jw = tlskein::jones_wenzl(lv, n).map_err(|e| e.to_string())?;
            let table = jw
                .combo()
                .map(|(d, c)| format!("{c}  on  {:?}", d.chords()))
                .collect::<Vec<_>>()
                .join("\n");
            emit(format, tl_element_json(&jw), table);
        }
        TlWhat::Braidcheck => {
            let order = lv.root_order() as i64;
            let mut pairs = vec![];
            for s in 0..order {
                for t in 0..order {
                    let a = cyclotomic::cyc_root(lv, s);
                    let b = cyclotomic::cyc_root(lv, t);
                    if tlskein::check_braid_relation(lv, &a, &b) {
                        pairs.push(json!({
                            "a": a.to_string(),
                            "b": b.to_string(),
                            "a_exponent": s,
                            "b_exponent": t,
                        }));
                    }
                }
            }
            let count = pairs.len();
            emit(
                format,
                json!({"pairs": pairs, "count": count}),
                format!("{count} hexagon-compatible coefficient pairs"),
            );
        }
        TlWhat::Scalars => {
            let mut variants = vec![];
            let mut table = String::new();
            for v in BraidingVariant::all() {
                if v.sign != TwistSign::Plus {
                    continue; // the skein element depends on the flavor only
                }
                let (a, b) = tlskein::braid_coefficients(lv, v);
                let c = tlskein::r_compose_i_scalar(lv, v);
                table.push_str(&format!(
                    "{}: R = ({a})*Id + ({b})*e1, R.cup = ({c}).cup\n",
                    v.flavor
                ));
                variants.push(json!({
                    "flavor": v.flavor.to_string(),
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "r_cup_scalar": c.to_string(),
                }));
            }
            emit(
                format,
                json!({
                    "delta": tlskein::cup_cap_pairing(lv).to_string(),
                    "variants": variants,
                }),
                table,
            );
        }
    }
    Ok(())
}

fn run_kz(level: Option<Level>, format: Format, what: KzWhat) -> Result<(), String> {
    let levels = match level {
        Some(lv) => vec![lv],
        None => kzverify::report_levels(),
    };
    let mut records = vec![];
    for lv in levels {
        let mut batch = match what {
            KzWhat::Residuals => kzverify::residual_report(lv).map_err(|e| e.to_string())?,
            KzWhat::Connection => kzverify::connection_report(lv).map_err(|e| e.to_string())?,
        };
        records.append(&mut batch);
    }
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_value(&records).expect("records serialize")
        ),
        Format::Table => {
            for r in &records {
                println!(
                    "{} {}: expected {:+.9e}, computed {:+.9e}, tol {:.0e} -> {}",
                    r.case,
                    r.quantity,
                    r.expected,
                    r.computed,
                    r.tolerance,
                    if r.pass { "pass" } else { "FAIL" }
                );
            }
        }
    }
    if records.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err("verification records out of tolerance".into())
    }
}

/// Entry point: parses arguments and dispatches; returns the process exit
/// code (0 success, 1 computation error, 2 usage error).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.level, cli.format, cli.command) {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("{}", json!({ "error": msg }));
            1
        }
    }
}

//! Command-line front end. Every verb reads one JSON document; extra input
//! files are merged into it key by key, so `nijenhuis algebra.json n.json`
//! works when `n.json` is `{"operator": [[...]]}`.
//!
//! Keys understood across verbs:
//! `dim`/`product1`/`product2` (the algebra), `rep` (a representation object
//! or the string `"regular"`), `operator`, `omega1`/`omega2`,
//! `omega1_prime`/`omega2_prime`, `order`/`terms1`/`terms2`/`base`,
//! `base_dim`/`fiber_dim`, `section`, `cocycle`, `cocycle2`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{mc_equations, semidirect, validate_compatible, validate_rep, CompatiblePreLie, CompatibleRep, IdentityReport};
use crate::cohomology::TotalComplex;
use crate::deformation::{
    equivalence_check, formal_check, identity_plus_tn_check, infinitesimal_check, nijenhuis_check, nijenhuis_is_homomorphism,
    nijenhuis_on_pencils, rigidity_probe, trivial_from_nijenhuis, FormalDeformation, FormalReport,
};
use crate::error::{Error, Result};
use crate::extension::{build_extension, build_isomorphism, classify, cohomologous_check, extract_from_section, Section};
use crate::io::{self, AlgebraJson, CochainJson, CocycleJson, ExtensionJson, FormalJson, MatrixJson, RepJson};
use crate::linalg::Matrix;

pub const DEFAULT_MAX_DIM: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "copre", version, about = "Exact computations for compatible pre-Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Check both pre-Lie identities, compatibility and an optional representation.
    Validate { inputs: Vec<PathBuf> },
    /// Cohomology of the total complex, adjoint or with coefficients in `rep`.
    Cohomology {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        inputs: Vec<PathBuf>,
    },
    /// Nijenhuis check of `operator` and the deformed structure.
    Nijenhuis { inputs: Vec<PathBuf> },
    /// Infinitesimal deformation checks, equivalence, or the trivial deformation of `operator`.
    DeformCheck { inputs: Vec<PathBuf> },
    /// Order-by-order trivialization of a truncated formal deformation.
    Rigidity {
        #[arg(long)]
        order: Option<usize>,
        inputs: Vec<PathBuf>,
    },
    /// Build an abelian extension from a cocycle, or read one back through a section.
    Extend { inputs: Vec<PathBuf> },
    /// Second cohomology classifying abelian extensions by `rep`.
    Classify { inputs: Vec<PathBuf> },
    /// The three Maurer–Cartan equations for the product pair.
    McCheck { inputs: Vec<PathBuf> },
}

struct Outcome {
    passed: bool,
    report: Map<String, Value>,
}

impl Outcome {
    fn new(passed: bool, report: Value) -> Self {
        let Value::Object(report) = report else { unreachable!("reports are objects") };
        Outcome { passed, report }
    }
}

/// Parses `args` (program name first), runs the verb and writes the report.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok((digest, outcome)) => {
            let mut report = Map::new();
            report.insert("input_digest".into(), Value::String(digest));
            report.insert("passed".into(), Value::Bool(outcome.passed));
            report.extend(outcome.report);
            let _ = match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(report)).expect("serializable")),
                Format::Text => write!(out, "{}", render_text(&report)),
            };
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Dimension(_) | Error::Json(_) | Error::Io(_) | Error::BlockSignature(_) => 2,
        _ => 1,
    }
}

fn render_text(report: &Map<String, Value>) -> String {
    let mut s = String::new();
    for (k, v) in report {
        let shown = match v {
            Value::String(t) => t.clone(),
            other => other.to_string(),
        };
        s.push_str(&format!("{k}: {shown}\n"));
    }
    s
}

fn max_dim() -> Result<usize> {
    match std::env::var("COPRE_MAX_DIM") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("COPRE_MAX_DIM = {v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn check_size(total: usize) -> Result<()> {
    let cap = max_dim()?;
    if total > cap {
        return Err(Error::Dimension(format!("d+m = {total} exceeds COPRE_MAX_DIM = {cap}")));
    }
    Ok(())
}

struct Doc {
    root: Map<String, Value>,
}

impl Doc {
    fn load(paths: &[PathBuf]) -> Result<(String, Doc)> {
        if paths.is_empty() {
            return Err(Error::Parse("no input file given".into()));
        }
        let mut hasher = Sha256::new();
        let mut root = Map::new();
        for p in paths {
            let bytes = std::fs::read(p).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", p.display()))))?;
            hasher.update(&bytes);
            let v: Value = serde_json::from_slice(&bytes).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            let Value::Object(m) = v else {
                return Err(Error::Parse(format!("{}: top level must be an object", p.display())));
            };
            for (k, v) in m {
                if root.contains_key(&k) {
                    return Err(Error::Parse(format!("{}: key `{k}` already given by an earlier file", p.display())));
                }
                root.insert(k, v);
            }
        }
        Ok((hex::encode(hasher.finalize()), Doc { root }))
    }

    fn has(&self, key: &str) -> bool {
        self.root.contains_key(key)
    }

    fn get<T: DeserializeOwned>(&self, key: &str) -> Result<Option<T>> {
        self.root
            .get(key)
            .map(|v| {
                serde_path_to_error::deserialize(v).map_err(|e| Error::Parse(format!("at `{}`: {}", field_path(key, &e.path().to_string()), e.inner())))
            })
            .transpose()
    }

    fn require<T: DeserializeOwned>(&self, key: &str) -> Result<T> {
        self.get(key)?.ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
    }

    fn whole<T: DeserializeOwned>(&self, what: &str) -> Result<T> {
        serde_path_to_error::deserialize(&Value::Object(self.root.clone()))
            .map_err(|e| Error::Parse(format!("{what} at `{}`: {}", e.path(), e.inner())))
    }

    fn algebra(&self) -> Result<CompatiblePreLie> {
        let a: AlgebraJson = self.whole("algebra")?;
        let a = io::algebra_from_json(&a)?;
        check_size(a.dim())?;
        Ok(a)
    }

    fn rep(&self, a: &CompatiblePreLie) -> Result<Option<CompatibleRep>> {
        match self.root.get("rep") {
            None => Ok(None),
            Some(Value::String(s)) if s == "regular" => Ok(Some(CompatibleRep::regular(a))),
            Some(_) => {
                let r: RepJson = self.require("rep")?;
                check_size(a.dim() + r.dim_v)?;
                io::rep_from_json(&r, a.dim()).map(Some)
            }
        }
    }

    fn matrix(&self, key: &str) -> Result<Matrix> {
        let m: MatrixJson = self.require(key)?;
        io::matrix_from_json(&m, key)
    }
}

fn field_path(key: &str, inner: &str) -> String {
    match inner {
        "." => key.to_string(),
        p if p.starts_with('[') => format!("{key}{p}"),
        p => format!("{key}.{p}"),
    }
}

fn one_based(t: &[usize]) -> Vec<usize> {
    t.iter().map(|i| i + 1).collect()
}

fn identity_json(r: &IdentityReport) -> Value {
    json!({
        "identity": r.identity,
        "passed": r.passed(),
        "failures": r.failures.len(),
        "witness": r.witness().map(one_based),
    })
}

fn failures_json(f: &[Vec<usize>]) -> Value {
    json!({ "passed": f.is_empty(), "failures": f.len(), "witness": f.first().map(|w| one_based(w)) })
}

fn formal_json(r: &FormalReport) -> Value {
    Value::Array(
        r.orders
            .iter()
            .map(|o| {
                json!({
                    "order": o.order,
                    "first": o.first,
                    "second": o.second,
                    "mixed": o.mixed,
                    "remainder_consistent": o.remainder_consistent,
                })
            })
            .collect(),
    )
}

fn precondition(a: &CompatiblePreLie) -> Result<()> {
    let r = validate_compatible(a);
    if r.passed() {
        Ok(())
    } else {
        Err(Error::InvalidAlgebra(r.summary()))
    }
}

fn execute(cli: Cli) -> Result<(String, Outcome)> {
    let paths = match &cli.verb {
        Verb::Validate { inputs }
        | Verb::Cohomology { inputs, .. }
        | Verb::Nijenhuis { inputs }
        | Verb::DeformCheck { inputs }
        | Verb::Rigidity { inputs, .. }
        | Verb::Extend { inputs }
        | Verb::Classify { inputs }
        | Verb::McCheck { inputs } => inputs.clone(),
    };
    let (digest, doc) = Doc::load(&paths)?;
    let outcome = match cli.verb {
        Verb::Validate { .. } => validate(&doc)?,
        Verb::Cohomology { degree, .. } => cohomology(&doc, degree)?,
        Verb::Nijenhuis { .. } => nijenhuis(&doc)?,
        Verb::DeformCheck { .. } => deform_check(&doc)?,
        Verb::Rigidity { order, .. } => rigidity(&doc, order)?,
        Verb::Extend { .. } => extend(&doc)?,
        Verb::Classify { .. } => classification(&doc)?,
        Verb::McCheck { .. } => mc_check(&doc)?,
    };
    Ok((digest, outcome))
}

fn validate(doc: &Doc) -> Result<Outcome> {
    let a = doc.algebra()?;
    let r = validate_compatible(&a);
    let mut report = json!({
        "pre_lie_1": r.pre_lie_1.passed(),
        "pre_lie_2": r.pre_lie_2.passed(),
        "compatible": r.passed(),
        "checks": [identity_json(&r.pre_lie_1), identity_json(&r.pre_lie_2), identity_json(&r.compatibility)],
    });
    let mut passed = r.passed();
    if let Some(rep) = doc.rep(&a)? {
        let rr = validate_rep(&a, &rep)?;
        passed &= rr.passed();
        report["representation"] = Value::Bool(rr.passed());
        report["representation_checks"] = rr.checks.iter().map(identity_json).collect();
    }
    Ok(Outcome::new(passed, report))
}

fn cohomology(doc: &Doc, degree: usize) -> Result<Outcome> {
    let a = doc.algebra()?;
    precondition(&a)?;
    let (complex, coefficients) = match doc.rep(&a)? {
        Some(r) => (TotalComplex::with_coefficients(&a, &r)?, "representation"),
        None => (TotalComplex::adjoint(&a), "adjoint"),
    };
    if degree == 0 {
        return Err(Error::Parse("--degree must be at least 1".into()));
    }
    let r = complex.cohomology(degree);
    let mut report = serde_json::to_value(io::cohomology_to_json(&r))?;
    report["coefficients"] = Value::String(coefficients.into());
    Ok(Outcome::new(true, report))
}

fn nijenhuis(doc: &Doc) -> Result<Outcome> {
    let a = doc.algebra()?;
    let n = doc.matrix("operator")?;
    let r = nijenhuis_check(&a, &n)?;
    let mut report = json!({
        "nijenhuis": r.passed(),
        "checks": [identity_json(&r.first), identity_json(&r.second)],
        "pencils": nijenhuis_on_pencils(&a, &n),
    });
    if r.passed() {
        let deformed = crate::deformation::deformed_structure(&a, &n)?;
        report["deformed"] = serde_json::to_value(io::algebra_to_json(&deformed))?;
        report["deformed_compatible"] = Value::Bool(validate_compatible(&deformed).passed());
        report["homomorphism"] = Value::Bool(nijenhuis_is_homomorphism(&a, &n)?);
    }
    Ok(Outcome::new(r.passed(), report))
}

fn omega_pair(doc: &Doc, a: &CompatiblePreLie, k1: &str, k2: &str) -> Result<(crate::algebra::Product, crate::algebra::Product)> {
    let d = a.dim();
    let w1: CochainJson = doc.require(k1)?;
    let w2: CochainJson = doc.require(k2)?;
    Ok((io::product_from_cochain_json(&w1, d, k1)?, io::product_from_cochain_json(&w2, d, k2)?))
}

fn deform_check(doc: &Doc) -> Result<Outcome> {
    let a = doc.algebra()?;
    precondition(&a)?;
    if !doc.has("omega1") {
        let n = doc.matrix("operator")?;
        let def = trivial_from_nijenhuis(&a, &n)?;
        let inf = infinitesimal_check(&a, &def.omega1, &def.omega2)?;
        let hom = identity_plus_tn_check(&def, &n)?;
        let passed = inf.generates && hom.passed();
        let report = json!({
            "mode": "trivial",
            "omega1": io::cochain_to_json(&def.omega1.to_cochain()),
            "omega2": io::cochain_to_json(&def.omega2.to_cochain()),
            "is_cocycle": inf.is_cocycle,
            "is_self_compatible": inf.is_self_compatible,
            "generates": inf.generates,
            "identity_plus_tn": hom.coefficients.iter().map(identity_json).collect::<Vec<_>>(),
        });
        return Ok(Outcome::new(passed, report));
    }
    let (w1, w2) = omega_pair(doc, &a, "omega1", "omega2")?;
    let inf = infinitesimal_check(&a, &w1, &w2)?;
    let mut passed = inf.generates;
    let mut report = json!({
        "mode": "infinitesimal",
        "is_cocycle": inf.is_cocycle,
        "is_self_compatible": inf.is_self_compatible,
        "generates": inf.generates,
    });
    if doc.has("omega1_prime") {
        let (v1, v2) = omega_pair(doc, &a, "omega1_prime", "omega2_prime")?;
        let n = doc.matrix("operator")?;
        let source = infinitesimal_check(&a, &v1, &v2)?;
        let eq = equivalence_check(&a, (&w1, &w2), (&v1, &v2), &n)?;
        passed &= source.generates && eq.passed();
        report["mode"] = Value::String("equivalence".into());
        report["source_generates"] = Value::Bool(source.generates);
        report["equivalent"] = Value::Bool(eq.passed());
        report["equations"] = eq.equations.iter().map(identity_json).collect();
    }
    Ok(Outcome::new(passed, report))
}

fn rigidity(doc: &Doc, order: Option<usize>) -> Result<Outcome> {
    let base = match doc.get::<AlgebraJson>("base")? {
        Some(b) => io::algebra_from_json(&b)?,
        None if doc.has("dim") => doc.algebra()?,
        None => return Err(Error::Parse("missing field `base`".into())),
    };
    check_size(base.dim())?;
    precondition(&base)?;
    let f: FormalJson = doc.whole("formal deformation")?;
    let mut fd = io::formal_from_json(&f, base)?;
    if let Some(k) = order {
        if k == 0 || k > fd.order() {
            return Err(Error::Parse(format!("--order {k} must lie in 1..={}", fd.order())));
        }
        fd = FormalDeformation::new(fd.base.clone(), fd.terms1[..k].to_vec(), fd.terms2[..k].to_vec())?;
    }
    let formal = formal_check(&fd);
    if !formal.passed() {
        let report = json!({ "formal": formal_json(&formal), "trivialized_to_order": Value::Null });
        return Ok(Outcome::new(false, report));
    }
    let r = rigidity_probe(&fd)?;
    let obstruction = r.obstruction.as_ref().map(|o| {
        json!({
            "order": o.order,
            "cocycle": io::tuple_to_json(&o.cocycle),
            "class": o.class.iter().map(crate::linalg::format_rational).collect::<Vec<_>>(),
        })
    });
    let report = json!({
        "order": fd.order(),
        "formal": formal_json(&formal),
        "trivialized_to_order": r.trivialized_to_order,
        "obstruction": obstruction,
        "gauges": r.gauges.iter().map(|(n, phi)| json!({"order": n, "phi": io::matrix_to_json(phi)})).collect::<Vec<_>>(),
        "result": io::formal_to_json(&r.result, false),
    });
    Ok(Outcome::new(r.obstruction.is_none(), report))
}

fn extend(doc: &Doc) -> Result<Outcome> {
    if doc.has("base_dim") {
        let e: ExtensionJson = doc.whole("extension")?;
        check_size(e.base_dim + e.fiber_dim)?;
        let ext = io::extension_from_json(&e)?;
        let section = match doc.get::<MatrixJson>("section")? {
            Some(m) => Section::new(io::matrix_from_json(&m, "section")?, ext.base_dim(), ext.fiber_dim())?,
            None => Section::canonical(ext.base_dim(), ext.fiber_dim()),
        };
        let (rep, cocycle) = extract_from_section(&ext, &section)?;
        let report = json!({
            "mode": "extract",
            "rep": io::rep_to_json(&rep),
            "cocycle": io::cocycle_to_json(&cocycle),
        });
        return Ok(Outcome::new(true, report));
    }
    let a = doc.algebra()?;
    precondition(&a)?;
    let r = doc.rep(&a)?.ok_or_else(|| Error::Parse("missing field `rep`".into()))?;
    let (d, m) = (a.dim(), r.rep_dim());
    let c1: CocycleJson = doc.require("cocycle")?;
    let c1 = io::cocycle_from_json(&c1, d, m)?;
    let ext = build_extension(&a, &r, &c1)?;
    let mut report = json!({ "mode": "build", "extension": io::extension_to_json(&ext) });
    let mut passed = true;
    if let Some(c2) = doc.get::<CocycleJson>("cocycle2")? {
        let c2 = io::cocycle_from_json(&c2, d, m)?;
        match cohomologous_check(&a, &r, &c1, &c2)? {
            Some(phi) => {
                let iso = build_isomorphism(&a, &r, &c1, &c2, &phi)?;
                report["cohomologous"] = Value::Bool(true);
                report["phi"] = serde_json::to_value(io::matrix_to_json(&phi))?;
                report["zeta"] = serde_json::to_value(io::matrix_to_json(&iso.zeta))?;
                report["isomorphism"] = Value::Bool(iso.passed());
                passed = iso.passed();
            }
            None => {
                report["cohomologous"] = Value::Bool(false);
                passed = false;
            }
        }
    }
    Ok(Outcome::new(passed, report))
}

fn classification(doc: &Doc) -> Result<Outcome> {
    let a = doc.algebra()?;
    precondition(&a)?;
    let r = doc.rep(&a)?.ok_or_else(|| Error::Parse("missing field `rep`".into()))?;
    let h2 = classify(&a, &r)?;
    let mut report = serde_json::to_value(io::cohomology_to_json(&h2))?;
    if let Some(c) = doc.get::<CocycleJson>("cocycle")? {
        let c = io::cocycle_from_json(&c, a.dim(), r.rep_dim())?;
        let coords = h2.class_coordinates(&c.as_tuple()).ok_or_else(|| Error::NotCocycle("cocycle".into()))?;
        report["class"] = coords.iter().map(|q| Value::String(crate::linalg::format_rational(q))).collect();
    }
    Ok(Outcome::new(true, report))
}

fn mc_check(doc: &Doc) -> Result<Outcome> {
    let a = doc.algebra()?;
    let mc = mc_equations(&a);
    let mut passed = mc.passed();
    let mut report = json!({
        "bracket_11": failures_json(&mc.bracket_11),
        "bracket_22": failures_json(&mc.bracket_22),
        "bracket_12": failures_json(&mc.bracket_12),
    });
    if let Some(r) = doc.rep(&a)? {
        let lifted = mc_equations(&semidirect(&a, &r)?);
        passed &= lifted.passed();
        report["lifted"] = json!({
            "bracket_11": failures_json(&lifted.bracket_11),
            "bracket_22": failures_json(&lifted.bracket_22),
            "bracket_12": failures_json(&lifted.bracket_12),
        });
    }
    Ok(Outcome::new(passed, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_verb_exits_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["copre", "frobnicate", "x.json"], &mut out, &mut err), 2);
    }

    #[test]
    fn error_classes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::NotNijenhuis("x".into())), 1);
    }
}

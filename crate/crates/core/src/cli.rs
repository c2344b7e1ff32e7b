//! The `gradalg` command line. [`run`] is the whole program minus process
//! plumbing, so tests drive it in-process.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::OnceLock;

use clap::error::{ContextKind, ContextValue, ErrorKind};
use clap::{Parser, Subcommand};
use jsonschema::JSONSchema;
use serde::Serialize;

use crate::bk::{bk_algebra, canonical_grading, min_generators, recognize_bk, validate_bk, BkData, Validation};
use crate::bruteforce::{irreducible_bruteforce, Irreducibility};
use crate::constructions::{
    affine_modification, bn_algebra, jacobian_tangent_dim, origin, samuel_extend, BnData, ModificationSpec, SamuelSpec,
};
use crate::error::Error;
use crate::exec::Execution;
use crate::graded::{
    classify_action, hilbert_dims, hilbert_series_coefficients, homogeneity, ActionClass, Homogeneity, PresentedAlgebra,
    WeightVector,
};
use crate::grading::{contains_weight, homogeneity_system, solve_grading_cone, GENERATOR_HOMOGENEOUS_CAVEAT};
use crate::parse::parse_poly;
use crate::poly::{Poly, Ring};
use crate::presentation::{format_presentation, parse_presentation};
use crate::scalar::FieldSpec;
use crate::signature::compute_signature_sequence;

const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Parser, Debug)]
#[command(name = "gradalg", version, about = "Exact analysis of graded algebras given by generators and relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weights making every relation homogeneous, and whether a positive one exists.
    Grading {
        file: PathBuf,
        /// Extra weight vector to test, e.g. `--check=6,-6,3,2`.
        #[arg(long, allow_hyphen_values = true)]
        check: Vec<String>,
    },
    /// Signature sequence of a positively graded presentation.
    Signature {
        file: PathBuf,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Dimensions of the graded pieces in degrees 0..=upto.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        upto: i64,
    },
    /// Jacobian rank and tangent-space dimension at a rational point.
    Tangent {
        file: PathBuf,
        /// Comma-separated coordinates; the origin when omitted.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Validate data `(a, b, c_i, λ_i)` and describe the surface it defines.
    Bk {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long, default_value = "")]
        c: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Build a new presentation file.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Exhaustive irreducibility test over a small prime field.
    Irreducible {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
        /// Largest degree of a factor term; the degree of `elem` by default.
        #[arg(long)]
        bound: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// `A[Z]/(Z^c - F)`.
    Samuel {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        c: u32,
        #[arg(long, default_value = "Z")]
        var: String,
    },
    /// `A[Z_1..Z_n]/(f Z_i - a_i)`.
    Modify {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        /// Names of the new variables; `Z1, Z2, …` by default.
        #[arg(long = "var")]
        vars: Vec<String>,
    },
    /// The threefold `B_n` for `p(x)` and exponent lists `a`, `b`.
    Bn {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
    location: Option<String>,
}

impl Failure {
    fn input(message: impl Into<String>, location: impl Into<String>) -> Failure {
        Failure {
            kind: "input",
            message: message.into(),
            location: Some(location.into()),
        }
    }

    fn internal(message: impl Into<String>) -> Failure {
        Failure {
            kind: "internal",
            message: message.into(),
            location: None,
        }
    }

    fn exit_code(&self) -> i32 {
        match self.kind {
            "internal" => 2,
            _ => 1,
        }
    }
}

/// Tags a library error with the flag or file it came from.
fn at(location: impl Into<String>) -> impl FnOnce(Error) -> Failure {
    let location = location.into();
    move |e| match e {
        Error::Invariant(m) => Failure::internal(m),
        Error::Parse { message, position } => Failure::input(message, format!("{location}, column {}", position + 1)),
        other => Failure::input(other.to_string(), location),
    }
}

#[derive(Serialize)]
struct PresentationInput {
    file: String,
    field: String,
    vars: Vec<String>,
    weights: Option<Vec<i64>>,
    relations: Vec<String>,
}

#[derive(Serialize)]
struct BkEcho {
    field: String,
    a: i64,
    b: i64,
    c: Vec<i64>,
    lambdas: Vec<String>,
}

impl From<&BkData> for BkEcho {
    fn from(d: &BkData) -> Self {
        BkEcho {
            field: d.field.to_string(),
            a: d.a,
            b: d.b,
            c: d.c.clone(),
            lambdas: d.lambdas.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Input {
    Presentation(PresentationInput),
    Bk(BkEcho),
}

#[derive(Serialize)]
struct Certificate {
    variable_multipliers: Vec<String>,
    equation_multipliers: Vec<String>,
    statement: String,
}

#[derive(Serialize)]
struct Checked {
    weight: Vec<i64>,
    in_cone: bool,
    action: Option<ActionClass>,
}

#[derive(Serialize)]
struct GradingReport {
    equations: Vec<Vec<i64>>,
    basis: Vec<Vec<i64>>,
    basis_actions: Vec<ActionClass>,
    dimension: usize,
    has_positive: bool,
    sample: Option<Vec<i64>>,
    sample_action: Option<ActionClass>,
    certificate: Option<Certificate>,
    checked: Vec<Checked>,
}

#[derive(Serialize)]
struct SignatureReport {
    bound: i64,
    elements: Vec<String>,
    degrees: Vec<i64>,
    complete_up_to: i64,
    complete: bool,
}

#[derive(Serialize)]
struct TangentReport {
    point: Vec<String>,
    jacobian: Vec<Vec<String>>,
    rank: usize,
    dim: usize,
}

#[derive(Serialize)]
struct HilbertReport {
    upto: i64,
    dims: Vec<usize>,
}

#[derive(Serialize)]
struct ClassificationReport {
    family: &'static str,
    data: BkEcho,
    valid: bool,
    reasons: Vec<String>,
    n_total: Option<i64>,
    weights: Option<Vec<i64>>,
    min_generators: Option<usize>,
    presentation: Option<String>,
}

#[derive(Serialize)]
struct IrreducibilityReport {
    element: String,
    bound: i64,
    verdict: &'static str,
    factors: Option<Vec<String>>,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    input: Input,
    grading: Option<GradingReport>,
    signature: Option<SignatureReport>,
    tangent: Option<TangentReport>,
    hilbert: Option<HilbertReport>,
    classification: Option<ClassificationReport>,
    irreducibility: Option<IrreducibilityReport>,
    caveats: Vec<String>,
}

impl Report {
    fn new(command: &'static str, input: Input) -> Report {
        Report {
            command,
            input,
            grading: None,
            signature: None,
            tangent: None,
            hilbert: None,
            classification: None,
            irreducibility: None,
            caveats: Vec::new(),
        }
    }
}

enum Output {
    Json(Box<Report>),
    Text(String),
}

fn schema() -> &'static JSONSchema {
    static S: OnceLock<JSONSchema> = OnceLock::new();
    S.get_or_init(|| {
        let v: serde_json::Value = serde_json::from_str(SCHEMA).expect("schema is valid JSON");
        JSONSchema::compile(&v).expect("schema compiles")
    })
}

/// Serializes `value` and checks it against the report schema.
fn emit<T: Serialize>(value: &T) -> Result<String, Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::internal(e.to_string()))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::internal(e.to_string()))?;
    if let Err(errors) = schema().validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        return Err(Failure::internal(format!("report violates the schema: {}", msgs.join("; "))));
    }
    Ok(text + "\n")
}

fn failure_json(f: &Failure) -> String {
    #[derive(Serialize)]
    struct Body<'a> {
        kind: &'a str,
        message: &'a str,
        location: Option<&'a str>,
        exit_code: i32,
    }
    #[derive(Serialize)]
    struct Wrapper<'a> {
        error: Body<'a>,
    }
    let w = Wrapper {
        error: Body {
            kind: f.kind,
            message: &f.message,
            location: f.location.as_deref(),
            exit_code: f.exit_code(),
        },
    };
    emit(&w).unwrap_or_else(|e| format!("{{\"error\":{{\"kind\":\"internal\",\"message\":{:?},\"location\":null,\"exit_code\":2}}}}\n", e.message))
}

/// Runs one invocation; returns the exit code and everything destined for
/// standard output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (0, e.render().to_string());
        }
        Err(e) => {
            let location = [ContextKind::InvalidArg, ContextKind::InvalidSubcommand]
                .iter()
                .find_map(|k| match e.get(*k) {
                    Some(ContextValue::String(s)) => Some(s.clone()),
                    Some(ContextValue::Strings(v)) => Some(v.join(", ")),
                    _ => None,
                });
            let rendered = e.render().to_string();
            let message = rendered
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ")
                .to_string();
            let f = Failure {
                kind: "usage",
                message,
                location,
            };
            return (1, failure_json(&f));
        }
    };
    let result = dispatch(cli.command).and_then(|out| match out {
        Output::Json(r) => emit(&r),
        Output::Text(t) => Ok(t),
    });
    match result {
        Ok(text) => (0, text),
        Err(f) => (f.exit_code(), failure_json(&f)),
    }
}

fn load(path: &PathBuf) -> Result<(PresentedAlgebra, PresentationInput), Failure> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read file: {e}"), &shown))?;
    let alg = parse_presentation(&text).map_err(|e| {
        let loc = if e.line == 0 {
            shown.clone()
        } else {
            format!("{shown}:{}:{}", e.line, e.column)
        };
        Failure::input(e.message.clone(), loc)
    })?;
    let input = PresentationInput {
        file: shown,
        field: alg.ring().field().to_string(),
        vars: alg.ring().vars().to_vec(),
        weights: alg.weights().map(|w| w.as_slice().to_vec()),
        relations: alg.relations().iter().map(ToString::to_string).collect(),
    };
    Ok((alg, input))
}

fn parse_list<T: std::str::FromStr>(text: &str, flag: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::input(format!("bad list entry `{s}`"), flag)))
        .collect()
}

fn parse_field(text: &str, flag: &str) -> Result<FieldSpec, Failure> {
    text.parse().map_err(at(flag))
}

fn classification(data: &BkData) -> (ClassificationReport, Vec<String>) {
    let mut caveats = Vec::new();
    let (valid, reasons) = match validate_bk(data) {
        Validation::Valid => (true, Vec::new()),
        Validation::Invalid(r) => (false, r),
    };
    let mut rep = ClassificationReport {
        family: "B(k)",
        data: data.into(),
        valid,
        reasons,
        n_total: None,
        weights: None,
        min_generators: None,
        presentation: None,
    };
    if valid {
        if let Ok(g) = canonical_grading(data) {
            rep.n_total = Some(g.n_total);
            rep.weights = Some(g.weights.as_slice().to_vec());
        }
        if let Ok(alg) = bk_algebra(data) {
            rep.presentation = Some(format_presentation(&alg, &[]));
        }
        match min_generators(data) {
            Ok(m) => rep.min_generators = Some(m),
            Err(e) => caveats.push(format!("minimum generator count not certified: {e}")),
        }
    }
    (rep, caveats)
}

fn attach_classification(report: &mut Report, alg: &PresentedAlgebra) {
    if let Some(data) = recognize_bk(alg) {
        let (c, cav) = classification(&data);
        report.classification = Some(c);
        report.caveats.extend(cav);
    }
}

fn action(w: &WeightVector) -> Option<ActionClass> {
    classify_action(w).ok()
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Grading { file, check } => {
            let (alg, input) = load(&file)?;
            let sys = homogeneity_system(&alg);
            let cone = solve_grading_cone(&sys).map_err(at(file.display().to_string()))?;
            let mut candidates: Vec<WeightVector> = alg.weights().cloned().into_iter().collect();
            for c in &check {
                candidates.push(WeightVector::new(parse_list(c, "--check")?));
            }
            let checked = candidates
                .iter()
                .map(|w| {
                    Ok(Checked {
                        weight: w.as_slice().to_vec(),
                        in_cone: contains_weight(&cone, w).map_err(at("--check"))?,
                        action: action(w),
                    })
                })
                .collect::<Result<_, Failure>>()?;
            let certificate = cone.certificate.as_ref().map(|c| Certificate {
                variable_multipliers: c.variable_multipliers.iter().map(ToString::to_string).collect(),
                equation_multipliers: c.equation_multipliers.iter().map(ToString::to_string).collect(),
                statement: c.describe(&sys.vars),
            });
            let mut report = Report::new("grading", Input::Presentation(input));
            if !cone.has_positive {
                report.caveats.push(GENERATOR_HOMOGENEOUS_CAVEAT.to_string());
            }
            report.grading = Some(GradingReport {
                equations: sys.equations.clone(),
                basis: cone.basis.iter().map(|b| b.as_slice().to_vec()).collect(),
                basis_actions: cone.basis.iter().filter_map(action).collect(),
                dimension: cone.dimension,
                has_positive: cone.has_positive,
                sample: cone.sample_positive.as_ref().map(|w| w.as_slice().to_vec()),
                sample_action: cone.sample_positive.as_ref().and_then(action),
                certificate,
                checked,
            });
            attach_classification(&mut report, &alg);
            Ok(Output::Json(Box::new(report)))
        }
        Command::Signature { file, bound } => {
            let (alg, input) = load(&file)?;
            let bound = match bound {
                Some(b) => b,
                None => {
                    let w = alg
                        .weights()
                        .ok_or_else(|| Failure::input("the file has no `weights:` line", file.display().to_string()))?;
                    let rel: i64 = alg.relation_degrees().iter().sum();
                    rel.max(w.as_slice().iter().copied().max().unwrap_or(0))
                }
            };
            let seq = compute_signature_sequence(&alg, bound).map_err(at("--bound"))?;
            let mut report = Report::new("signature", Input::Presentation(input));
            if !seq.complete {
                report.caveats.push(format!(
                    "sequence searched only up to degree {bound}; elements of higher degree may be missing"
                ));
            }
            report.signature = Some(SignatureReport {
                bound,
                elements: seq.elements.iter().map(ToString::to_string).collect(),
                degrees: seq.degrees.clone(),
                complete_up_to: seq.complete_up_to,
                complete: seq.complete,
            });
            attach_classification(&mut report, &alg);
            Ok(Output::Json(Box::new(report)))
        }
        Command::Hilbert { file, upto } => {
            let (alg, input) = load(&file)?;
            if upto < 0 {
                return Err(Failure::input("--upto must be non-negative", "--upto"));
            }
            let dims = hilbert_dims(&alg, upto, Execution::Auto).map_err(at(file.display().to_string()))?;
            let series = hilbert_series_coefficients(&alg, upto).map_err(at(file.display().to_string()))?;
            if dims.iter().zip(&series).any(|(&d, &s)| d as i128 != s) {
                return Err(Failure::internal("graded piece counts disagree with the Hilbert series"));
            }
            let mut report = Report::new("hilbert", Input::Presentation(input));
            report.hilbert = Some(HilbertReport { upto, dims });
            attach_classification(&mut report, &alg);
            Ok(Output::Json(Box::new(report)))
        }
        Command::Tangent { file, at: point } => {
            let (alg, input) = load(&file)?;
            let field = alg.ring().field();
            let pt = match point {
                None => origin(&alg),
                Some(text) => text
                    .split(',')
                    .map(|s| field.parse_scalar(s.trim()).map_err(at("--at")))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let rep = jacobian_tangent_dim(&alg, &pt).map_err(at("--at"))?;
            let mut report = Report::new("tangent", Input::Presentation(input));
            report.tangent = Some(TangentReport {
                point: rep.point.iter().map(ToString::to_string).collect(),
                jacobian: rep.matrix.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
                rank: rep.rank,
                dim: rep.tangent_dim,
            });
            attach_classification(&mut report, &alg);
            Ok(Output::Json(Box::new(report)))
        }
        Command::Bk { a, b, c, lambda, field } => {
            let field = parse_field(&field, "--field")?;
            let c: Vec<i64> = parse_list(&c, "--c")?;
            let lambdas = lambda
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| field.parse_scalar(s).map_err(at("--lambda")))
                .collect::<Result<Vec<_>, _>>()?;
            let data = BkData { field, a, b, c, lambdas };
            let (rep, caveats) = classification(&data);
            let mut report = Report::new("bk", Input::Bk((&data).into()));
            report.classification = Some(rep);
            report.caveats = caveats;
            Ok(Output::Json(Box::new(report)))
        }
        Command::Construct { kind } => construct(kind).map(Output::Text),
        Command::Irreducible { file, elem, bound } => {
            let (alg, input) = load(&file)?;
            let f = parse_poly(&elem, alg.ring()).map_err(at("--elem"))?;
            let w = alg
                .weights()
                .ok_or_else(|| Failure::input("the file has no `weights:` line", file.display().to_string()))?;
            let top = f
                .terms()
                .map(|(m, _)| m.weighted_degree(w.as_slice()))
                .max()
                .unwrap_or(0);
            let homogeneous = matches!(homogeneity(&f, w), Ok(Homogeneity::Homogeneous(_)));
            let bound = bound.unwrap_or(top);
            let verdict = irreducible_bruteforce(&alg, &f, bound, Execution::Auto).map_err(at("--elem"))?;
            let mut report = Report::new("irreducible", Input::Presentation(input));
            report.caveats.push(
                "exhaustive search assumes a graded domain whose units are the nonzero constants".to_string(),
            );
            if !homogeneous {
                report.caveats.push(format!(
                    "verdict covers factors whose terms have degree at most {bound}"
                ));
            }
            report.irreducibility = Some(IrreducibilityReport {
                element: f.to_string(),
                bound,
                verdict: if verdict.is_irreducible() { "irreducible" } else { "factored" },
                factors: match verdict {
                    Irreducibility::Irreducible => None,
                    Irreducibility::Factored(u, v) => Some(vec![u.to_string(), v.to_string()]),
                },
            });
            attach_classification(&mut report, &alg);
            Ok(Output::Json(Box::new(report)))
        }
    }
}

fn construct(kind: Construct) -> Result<String, Failure> {
    let built = match kind {
        Construct::Samuel { file, f, c, var } => {
            let (alg, _) = load(&file)?;
            let f = parse_poly(&f, alg.ring()).map_err(at("--f"))?;
            samuel_extend(&SamuelSpec { base: alg, f, c, var }).map_err(at("--f"))?
        }
        Construct::Modify { file, f, gens, vars } => {
            let (alg, _) = load(&file)?;
            let f = parse_poly(&f, alg.ring()).map_err(at("--f"))?;
            let ideal_gens = gens
                .iter()
                .map(|g| parse_poly(g, alg.ring()).map_err(at("--gen")))
                .collect::<Result<Vec<_>, _>>()?;
            let new_vars = if vars.is_empty() {
                (1..=gens.len()).map(|i| format!("Z{i}")).collect()
            } else {
                vars
            };
            affine_modification(&ModificationSpec {
                base: alg,
                f,
                ideal_gens,
                new_vars,
            })
            .map_err(at("--gen"))?
        }
        Construct::Bn { p, a, b, field } => {
            let field = parse_field(&field, "--field")?;
            let xr = Ring::new(field, ["x"]).map_err(at("--p"))?;
            let poly: Poly = parse_poly(&p, &xr).map_err(at("--p"))?;
            let deg = poly.degree_in(0) as usize;
            let mut p_coeffs = vec![field.zero(); deg + 1];
            for (m, c) in poly.terms() {
                p_coeffs[m.exponents()[0] as usize] = c.clone();
            }
            let data = BnData {
                field,
                p_coeffs,
                a: parse_list(&a, "--a")?,
                b: parse_list(&b, "--b")?,
            };
            bn_algebra(&data).map_err(at("--a"))?
        }
    };
    Ok(format_presentation(&built.algebra, &built.notes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(name: &str, text: &str) -> String {
        let dir = std::env::temp_dir().join(format!("gradalg-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    }

    fn json(args: &[&str]) -> (i32, serde_json::Value) {
        let (code, out) = run(std::iter::once("gradalg").chain(args.iter().copied()));
        (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
    }

    #[test]
    fn grading_russell() {
        let f = write("russell.ring", "field: Q\nvars: x y z t\nrel: x + x^2*y + z^2 + t^3\n");
        let (code, v) = json(&["grading", &f, "--check=6,-6,3,2"]);
        assert_eq!(code, 0);
        let g = &v["grading"];
        assert_eq!(g["has_positive"], false);
        assert_eq!(g["basis"][0], serde_json::json!([6, -6, 3, 2]));
        assert_eq!(g["checked"][0]["in_cone"], true);
        assert_eq!(g["checked"][0]["action"]["kind"], "Hyperbolic");
        assert_eq!(v["caveats"][0], GENERATOR_HOMOGENEOUS_CAVEAT);
    }

    #[test]
    fn signature_and_classification() {
        let f = write("bk532.ring", "field: Q\nvars: x y z\nweights: 6 10 15\nrel: x^5 + y^3 + z^2\n");
        let (code, v) = json(&["signature", &f, "--bound", "30"]);
        assert_eq!(code, 0);
        assert_eq!(v["signature"]["elements"], serde_json::json!(["x", "y", "z"]));
        assert_eq!(v["signature"]["degrees"], serde_json::json!([6, 10, 15]));
        assert_eq!(v["signature"]["complete"], true);
        assert_eq!(v["classification"]["min_generators"], 3);
    }

    #[test]
    fn errors_and_codes() {
        let (code, v) = json(&["frobnicate"]);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], "usage");
        let f = write("bad.ring", "field: Q\nvars: x\nrel: x + q\n");
        let (code, v) = json(&["grading", &f]);
        assert_eq!(code, 1);
        assert!(v["error"]["location"].as_str().unwrap().ends_with(":3:10"));
        let (code, v) = json(&["bk", "--a", "6", "--b", "4", "--c", "2", "--lambda", "1"]);
        assert_eq!(code, 0);
        assert_eq!(v["classification"]["valid"], false);
        let (code, _) = json(&["hilbert", "/nonexistent/file.ring", "--upto", "3"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn construct_round_trips() {
        let (code, out) = run(["gradalg", "construct", "bn", "--p", "x", "--a", "2,2", "--b", "3,3"]);
        assert_eq!(code, 0, "{out}");
        let alg = parse_presentation(&out).unwrap();
        assert_eq!(alg.relations().len(), 2);
        assert_eq!(format_presentation(&alg, &[]), out);
    }
}

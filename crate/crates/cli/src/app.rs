use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use erlab_core::decomp::{all_decompositions, common_inner_max, decompose_at_degree};
use erlab_core::experiments::{
    construct_additive, construct_multiplicative, construct_parabola, construct_parabola_with_target,
    distance_set_squared, purdy_classify, ConstructionResult, LineConfiguration, PurdyInstance,
    PurdyParameters,
};
use erlab_core::incidence::{
    enumerate_rich_lines, graph_points_2var, graph_points_3var, grid_points, st_report,
    vanishing_check, Axis,
};
use erlab_core::poly::{MultiPoly, Scalar, UniPoly};
use erlab_core::recovery::{
    analyze, recover_additive_2var, recover_additive_3var, recover_multiplicative_2var,
    recover_multiplicative_3var, AdditiveWitness, FormReport, MultiplicativeWitness,
};
use erlab_core::structure::FormVerdict;
use serde_json::{json, Value};

use crate::grid::parse_axis;
use crate::parse::{parse_poly, ParseError};

#[derive(Debug, Parser)]
#[command(name = "erlab", version, about = "Special-form detection and incidence counting with exact rationals")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Record wall-clock time in the JSON report (otherwise null, for reproducible output).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Differential tests and both recoveries for f in x, y[, z].
    Analyze {
        #[arg(long)]
        f: String,
    },
    /// Decompositions of a univariate polynomial, or the common inner
    /// function of several.
    Decompose {
        #[arg(long, required = true)]
        f: Vec<String>,
        /// Only try this inner degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Recover p(k(x)+l(y)[+m(z)]) or P(K(x)L(y)[M(z)]).
    Recover {
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value_t = Form::Any)]
        form: Form,
    },
    /// Count graph points of f over a cartesian product.
    GridCount(GridCountArgs),
    /// Rich lines of the grid A×B.
    RichLines {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        k: usize,
        /// List every line.
        #[arg(long)]
        list: bool,
    },
    /// Extremal constructions.
    Construct(ConstructArgs),
    /// Distinct distances between points on two lines.
    Purdy {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Size of the first parameter set [1, n].
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Size of the second parameter set (defaults to n).
        #[arg(long)]
        n2: Option<usize>,
        /// Use points at parameters √s (requires lambda = 0).
        #[arg(long)]
        squared: bool,
    },
    /// Zero count of F(y, z) on B×C against 2·deg(F)·m.
    VanishCheck {
        #[arg(long)]
        f: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "C")]
        c: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Additive,
    Multiplicative,
    Any,
}

#[derive(Debug, Args)]
pub struct GridCountArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long = "A")]
    pub a: String,
    #[arg(long = "B")]
    pub b: String,
    #[arg(long = "C")]
    pub c: String,
    /// Target set for three-variable f.
    #[arg(long = "D")]
    pub d: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["additive", "multiplicative", "parabola"])))]
pub struct ConstructArgs {
    #[arg(long)]
    pub additive: bool,
    #[arg(long)]
    pub multiplicative: bool,
    #[arg(long)]
    pub parabola: bool,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Override the target set of the parabola construction.
    #[arg(long = "D")]
    pub d: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] erlab_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// A finished command: JSON result, text rendering and exit code.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub negative: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        u8::from(self.negative)
    }

    pub fn to_json(&self, timing_ms: Option<f64>) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "timing_ms": timing_ms,
        })
    }
}

fn s(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

fn uni_json(p: &UniPoly) -> Value {
    json!({
        "text": p.to_string(),
        "var": p.var().to_string(),
        "coefficients": p.coeffs().iter().map(s).collect::<Vec<_>>(),
    })
}

fn axis_json(a: &Axis) -> Value {
    Value::Array(a.values().iter().map(s).collect())
}

fn poly(src: &str) -> Result<MultiPoly, CliError> {
    Ok(parse_poly(src)?)
}

fn axis(src: &str) -> Result<Axis, CliError> {
    parse_axis(src).map_err(CliError::Usage)
}

fn verdict_json(v: &FormVerdict) -> Value {
    match v {
        FormVerdict::SpecialForm => json!({ "label": v.label() }),
        FormVerdict::NotSpecialForm { witness } if witness.is_zero() => json!({ "label": v.label() }),
        FormVerdict::NotSpecialForm { witness } => {
            json!({ "label": v.label(), "numerator": witness.to_string() })
        }
        FormVerdict::Degenerate { reason } => json!({ "label": v.label(), "reason": reason }),
    }
}

fn additive_json(w: &AdditiveWitness) -> Value {
    json!({
        "p": uni_json(&w.p),
        "k": uni_json(&w.k),
        "l": uni_json(&w.l),
        "m": w.m.as_ref().map(uni_json),
        "composition": w.compose().to_string(),
    })
}

fn multiplicative_json(w: &MultiplicativeWitness) -> Value {
    json!({
        "p": uni_json(&w.p),
        "k": uni_json(&w.k),
        "l": uni_json(&w.l),
        "m": w.m.as_ref().map(uni_json),
        "exponent_gcd": w.exponent_gcd,
        "mu": w.mu.iter().map(|(m, mu)| json!([m, mu])).collect::<Vec<_>>(),
        "composition": w.compose().to_string(),
    })
}

fn additive_text(w: &AdditiveWitness) -> String {
    let mut out = format!("  additive: p(t) = {}, k(x) = {}, l(y) = {}", w.p, w.k, w.l);
    if let Some(m) = &w.m {
        out += &format!(", m(z) = {m}");
    }
    out
}

fn multiplicative_text(w: &MultiplicativeWitness) -> String {
    let mut out = format!("  multiplicative: P(t) = {}, K(x) = {}, L(y) = {}", w.p, w.k, w.l);
    if let Some(m) = &w.m {
        out += &format!(", M(z) = {m}");
    }
    out
}

fn report_json(r: &FormReport) -> Value {
    json!({
        "polynomial": r.f.to_string(),
        "arity": r.arity,
        "tests": r.tests.iter().map(|t| json!({
            "name": t.name(),
            "pair": format!("{},{}", t.u, t.v),
            "verdict": verdict_json(&t.verdict),
        })).collect::<Vec<_>>(),
        "verdict": verdict_json(&r.verdict()),
        "has_special_form": r.has_special_form(),
        "additive": r.additive.as_ref().map(additive_json),
        "multiplicative": r.multiplicative.as_ref().map(multiplicative_json),
        "consistent": r.consistent,
        "notes": r.notes,
    })
}

fn report_text(r: &FormReport) -> String {
    let mut lines = vec![format!("f = {}", r.f)];
    for t in &r.tests {
        lines.push(format!("  {}: {}", t.name(), t.verdict));
    }
    match (&r.additive, &r.multiplicative) {
        (None, None) => lines.push("  no special form".into()),
        (a, m) => {
            lines.extend(a.iter().map(additive_text));
            lines.extend(m.iter().map(multiplicative_text));
        }
    }
    for n in &r.notes {
        lines.push(format!("  note: {n}"));
    }
    lines.join("\n")
}

fn construction(r: &ConstructionResult) -> (Value, String) {
    let names = ["A", "B", "C", "D"];
    let axes: serde_json::Map<String, Value> = r
        .axes
        .iter()
        .zip(names)
        .map(|(a, n)| (n.to_string(), axis_json(a)))
        .collect();
    let value = json!({
        "construction": r.name,
        "polynomial": r.f.to_string(),
        "axes": axes,
        "count": r.count,
        "bound": s(&r.bound),
        "pass": r.pass,
        "analysis": r.analysis.as_ref().map(report_json),
    });
    let mut text = format!(
        "{} construction, f = {}\n  count {} vs bound {}: {}",
        r.name,
        r.f,
        r.count,
        r.bound,
        if r.pass { "pass" } else { "FAIL" }
    );
    if let Some(a) = &r.analysis {
        text += "\n";
        text += &report_text(a);
    }
    (value, text)
}

fn single_var_uni(p: &MultiPoly) -> Result<UniPoly, CliError> {
    let vars = p.vars();
    let var = match vars[..] {
        [v] => v,
        [] => return Err(CliError::Usage(format!("{p} is constant"))),
        _ => return Err(CliError::Usage(format!("{p} is not univariate"))),
    };
    Ok(UniPoly::from_multi(p, var).expect("single variable"))
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Analyze { f } => {
            let p = poly(f)?;
            let r = analyze(&p)?;
            Ok(Outcome {
                command: "analyze",
                inputs: json!({ "f": p.to_string() }),
                result: report_json(&r),
                text: report_text(&r),
                negative: !r.has_special_form(),
            })
        }
        Command::Decompose { f, degree } => {
            let polys = f
                .iter()
                .map(|src| poly(src).and_then(|p| single_var_uni(&p)))
                .collect::<Result<Vec<_>, _>>()?;
            let inputs = json!({
                "f": polys.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "degree": degree,
            });
            if polys.len() > 1 {
                if degree.is_some() {
                    return Err(CliError::Usage("--degree applies to a single polynomial".into()));
                }
                let var = polys[0].var();
                if polys.iter().any(|p| p.var() != var) {
                    return Err(CliError::Usage("all polynomials must use the same variable".into()));
                }
                let fam = common_inner_max(&polys)?;
                let nontrivial = fam.inner.degree() > Some(1);
                let mut text = format!("common inner: {}", fam.inner);
                for (p, o) in polys.iter().zip(&fam.outers) {
                    text += &format!("\n  {p} = ({o}) o k");
                }
                return Ok(Outcome {
                    command: "decompose",
                    inputs,
                    result: json!({
                        "inner": uni_json(&fam.inner),
                        "outers": fam.outers.iter().map(uni_json).collect::<Vec<_>>(),
                    }),
                    text,
                    negative: !nontrivial,
                });
            }
            let p = &polys[0];
            let ds = match degree {
                Some(e) => decompose_at_degree(p, *e)?.into_iter().collect(),
                None => all_decompositions(p),
            };
            let mut text = format!("f = {p}: {} decomposition(s)", ds.len());
            for d in &ds {
                text += &format!("\n  outer {}  inner {}", d.outer, d.inner);
            }
            Ok(Outcome {
                command: "decompose",
                inputs,
                result: json!({
                    "decompositions": ds.iter().map(|d| json!({
                        "outer": uni_json(&d.outer),
                        "inner": uni_json(&d.inner),
                    })).collect::<Vec<_>>(),
                }),
                text,
                negative: ds.is_empty(),
            })
        }
        Command::Recover { f, form } => {
            let p = poly(f)?;
            if p.is_constant() {
                return Err(CliError::Usage("f must be nonconstant".into()));
            }
            let three = p.contains_var(erlab_core::poly::Var::Z);
            let want_add = matches!(form, Form::Additive | Form::Any);
            let want_mul = matches!(form, Form::Multiplicative | Form::Any);
            let add = want_add
                .then(|| if three { recover_additive_3var(&p) } else { recover_additive_2var(&p) })
                .flatten();
            let mul = want_mul
                .then(|| if three { recover_multiplicative_3var(&p) } else { recover_multiplicative_2var(&p) })
                .flatten();
            let mut lines = vec![format!("f = {p}")];
            lines.extend(add.iter().map(additive_text));
            lines.extend(mul.iter().map(multiplicative_text));
            if add.is_none() && mul.is_none() {
                lines.push("  no witness recovered".into());
            }
            Ok(Outcome {
                command: "recover",
                inputs: json!({
                    "f": p.to_string(),
                    "form": format!("{form:?}").to_lowercase(),
                }),
                result: json!({
                    "additive": add.as_ref().map(additive_json),
                    "multiplicative": mul.as_ref().map(multiplicative_json),
                }),
                text: lines.join("\n"),
                negative: add.is_none() && mul.is_none(),
            })
        }
        Command::GridCount(args) => {
            let p = poly(&args.f)?;
            let (a, b, c) = (axis(&args.a)?, axis(&args.b)?, axis(&args.c)?);
            let mut inputs = json!({
                "f": p.to_string(),
                "A": axis_json(&a),
                "B": axis_json(&b),
                "C": axis_json(&c),
            });
            let count = match &args.d {
                Some(d) => {
                    let d = axis(d)?;
                    inputs["D"] = axis_json(&d);
                    graph_points_3var(&p, &a, &b, &c, &d)?
                }
                None => graph_points_2var(&p, &a, &b, &c)?,
            };
            Ok(Outcome {
                command: "grid-count",
                inputs,
                result: json!({ "count": count }),
                text: format!("graph points of {p}: {count}"),
                negative: false,
            })
        }
        Command::RichLines { a, b, k, list } => {
            let (a, b) = (axis(a)?, axis(b)?);
            let pts = grid_points(a.values(), b.values());
            let rep = st_report(&pts, *k)?;
            let mut result = json!({
                "points": rep.points,
                "k": rep.k,
                "lines": rep.lines,
                "histogram": rep.histogram.iter()
                    .map(|(r, n)| (r.to_string(), json!(n)))
                    .collect::<serde_json::Map<_, _>>(),
                "bound": s(&rep.bound),
                "ratio": s(&rep.ratio),
            });
            let mut text = format!(
                "{} points, {} lines with at least {} points; N^2/k^3 + N/k = {}, ratio {}",
                rep.points, rep.lines, rep.k, rep.bound, rep.ratio
            );
            if *list {
                let lines = enumerate_rich_lines(&pts, *k)?;
                result["line_list"] = lines
                    .iter()
                    .map(|l| json!({ "line": l.line.to_string(), "count": l.richness() }))
                    .collect();
                for l in &lines {
                    text += &format!("\n  {}  ({} points)", l.line, l.richness());
                }
            }
            Ok(Outcome {
                command: "rich-lines",
                inputs: json!({ "A": axis_json(&a), "B": axis_json(&b), "k": k }),
                result,
                text,
                negative: false,
            })
        }
        Command::Construct(args) => {
            let size = |name: &str, v: Option<usize>| {
                v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this construction")))
            };
            let r = if args.additive {
                construct_additive(size("n", args.n)?)?
            } else if args.multiplicative {
                construct_multiplicative(size("n", args.n)?)?
            } else {
                let k = size("k", args.k)?;
                match &args.d {
                    Some(d) => construct_parabola_with_target(k, axis(d)?)?,
                    None => construct_parabola(k)?,
                }
            };
            let (result, text) = construction(&r);
            Ok(Outcome {
                command: "construct",
                inputs: json!({
                    "kind": r.name,
                    "n": args.n,
                    "k": args.k,
                    "D": args.d,
                }),
                result,
                text,
                negative: !r.pass,
            })
        }
        Command::Purdy { lambda, n, n2, squared } => {
            let lam: Scalar = match parse_poly(lambda)?.constant_value() {
                Some(v) => v,
                None => return Err(CliError::Usage(format!("lambda '{lambda}' is not a constant"))),
            };
            let n2 = n2.unwrap_or(*n);
            let (x1, x2) = (Axis::range(1, *n as i64), Axis::range(1, n2 as i64));
            let params = if *squared {
                PurdyParameters::Squared { s1: x1, s2: x2 }
            } else {
                PurdyParameters::Direct { x1, x2 }
            };
            let inst = PurdyInstance::new(lam.clone(), params)?;
            let verdict = purdy_classify(&lam)?;
            let distances = distance_set_squared(&inst).len();
            Ok(Outcome {
                command: "purdy",
                inputs: json!({ "lambda": s(&lam), "n": n, "n2": n2, "squared": squared }),
                result: json!({
                    "configuration": verdict.configuration.to_string(),
                    "form": verdict_json(&verdict.form),
                    "distinct_squared_distances": distances,
                }),
                text: format!(
                    "lambda = {lam}: {} ({}); {distances} distinct squared distances",
                    verdict.configuration, verdict.form
                ),
                negative: verdict.configuration == LineConfiguration::Neither,
            })
        }
        Command::VanishCheck { f, b, c } => {
            let p = poly(f)?;
            let (b, c) = (axis(b)?, axis(c)?);
            let rep = vanishing_check(&p, &b, &c)?;
            Ok(Outcome {
                command: "vanish-check",
                inputs: json!({ "f": p.to_string(), "B": axis_json(&b), "C": axis_json(&c) }),
                result: json!({
                    "zeros": rep.zeros,
                    "threshold": rep.threshold,
                    "must_be_zero": rep.must_be_zero,
                }),
                text: format!(
                    "{} zeros on the grid, threshold {}: {}",
                    rep.zeros,
                    rep.threshold,
                    if rep.must_be_zero { "F must be identically zero" } else { "silent" }
                ),
                negative: false,
            })
        }
    }
}

/// Runs a parsed command line and renders it. Returns the text to print and
/// the exit code.
pub fn execute(cli: &Cli) -> Result<(String, u8), CliError> {
    let start = Instant::now();
    let out = run(&cli.command)?;
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let rendered = if cli.json {
        let v = out.to_json(cli.timing.then_some(elapsed));
        serde_json::to_string_pretty(&v).expect("serializable")
    } else {
        out.text.clone()
    };
    Ok((rendered, out.exit_code()))
}

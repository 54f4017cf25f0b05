//! One function per subcommand.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Value};

use semidirect::quasiring::{reconstruct, star_counterexamples, GroupKind, SemidirectGroup};
use semidirect::report::to_json_string;
use semidirect::sample::trial_rng;
use semidirect::serial::{element_json, lorentz_json, scalar_json, t_json, vec4_json};
use semidirect::spacetime::{lorentz_from_sl2, mat_to_vec, mink_norm, vec_to_mat, SpinPoincareElement, Vec4};
use semidirect::verify::{run_suite, Suite};
use semidirect::{pauli_spec, AlgebraElement, StarDElement, TElement};

use crate::expr::{self, eval, eval_alg, eval_group, Expr, GroupExpr, Value as ExprValue};
use crate::CliError;

/// Version tag carried by every JSON document the CLI prints.
pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Text for stdout and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn parse_expr(src: &str) -> Result<Expr, CliError> {
    expr::parse(src).map_err(|err| CliError::Parse {
        src: src.to_string(),
        err,
    })
}

fn parse_group(src: &str) -> Result<GroupExpr, CliError> {
    match parse_expr(src)? {
        Expr::Group(g) => Ok(g),
        _ => Err(CliError::Usage(format!("`{src}` is not a group element"))),
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(SCHEMA));
    }
    v
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--tol must be positive, got {tol}")))
    }
}

/// Runs a verification suite. With `output` the report goes to that file
/// and stdout carries only a one-line summary.
pub fn verify_cmd(
    suite: &str,
    seed: u64,
    trials: usize,
    tol: f64,
    output: Option<&Path>,
    format: Format,
) -> Result<Output, CliError> {
    let suite: Suite = suite.parse()?;
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    check_tol(tol)?;
    let report = run_suite(suite, seed, trials, tol)?;
    let text = match format {
        Format::Json => report.to_json_string(),
        Format::Text => report.to_text(),
    };
    let code = if report.passed() { 0 } else { 1 };
    let stdout = match output {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            let failed = report.failures().count();
            format!(
                "{}: {} checks, {} failed; report written to {}\n",
                report.suite,
                report.checks.len(),
                failed,
                path.display()
            )
        }
        None => text,
    };
    Ok(Output { stdout, code })
}

/// Image of a determinant-one 2x2 matrix in the Lorentz group.
pub fn lorentz_cmd(matrix: &str, tol: f64) -> Result<Output, CliError> {
    check_tol(tol)?;
    let alg = expr::parse_alg(matrix).map_err(|err| CliError::Parse {
        src: matrix.to_string(),
        err,
    })?;
    let m = eval_alg(&pauli_spec(), &alg)?.to_matrix()?;
    let det = m.det();
    if (det - Complex64::new(1.0, 0.0)).norm() > tol {
        return Err(CliError::Usage(format!(
            "matrix has determinant {det}, expected 1 (tolerance {tol:e})"
        )));
    }
    let l = lorentz_from_sl2(&m, tol)?;
    let doc = json!({
        "det": scalar_json(det),
        "lorentz": lorentz_json(&l),
        "metric_residual": l.metric_residual(),
    });
    Ok(Output::ok(to_json_string(&with_schema(doc))))
}

pub fn group_kind(name: &str) -> Result<GroupKind, CliError> {
    match name {
        "D" => Ok(GroupKind::D),
        "T" => Ok(GroupKind::T),
        "starD" => Ok(GroupKind::StarD),
        _ => Err(CliError::Usage(format!(
            "unknown group `{name}`, expected D, T or starD"
        ))),
    }
}

/// Default number of random generators per group.
pub fn default_generators(kind: GroupKind) -> usize {
    match kind {
        GroupKind::D => 8,
        GroupKind::T | GroupKind::StarD => 20,
    }
}

/// Reads one group expression per line; blank lines and `#` comments are
/// skipped.
fn read_generators(path: &Path, group: &SemidirectGroup, tol: f64) -> Result<Vec<TElement>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let g = eval_group(group.spec(), &parse_group(line)?)?;
        if !group.contains(&g, tol) {
            return Err(CliError::Usage(format!(
                "{}:{}: `{line}` is not an element of {}",
                path.display(),
                n + 1,
                group.kind()
            )));
        }
        out.push(g);
    }
    Ok(out)
}

/// Reconstructs an algebra from inner automorphisms of `D`, `T~` or `D*`
/// over the Pauli algebra.
///
/// For `D` the result is compared with the Pauli algebra; for `T~` the
/// span must be all of `End(A)`, dimension 16. For `D*` the report also
/// carries the witnesses showing that `l -> [l]` is neither additive nor
/// complex linear there.
pub fn reconstruct_cmd(
    group: &str,
    generators: Option<&Path>,
    random: Option<usize>,
    seed: u64,
    tol: f64,
) -> Result<Output, CliError> {
    check_tol(tol)?;
    let kind = group_kind(group)?;
    let spec = pauli_spec();
    let g = SemidirectGroup::new(kind, spec.clone())?;
    let gens = match generators {
        Some(path) => read_generators(path, &g, tol)?,
        None => {
            let k = random.unwrap_or_else(|| default_generators(kind));
            let mut rng = trial_rng(seed, 0);
            (0..k).map(|_| g.random_element(&mut rng)).collect()
        }
    };
    if gens.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    let target = (kind == GroupKind::D).then_some(&spec);
    let mut doc = json!({ "group": kind.to_string(), "seed": seed, "tol": tol });
    let mut ok = match reconstruct(&g, &gens, target, tol) {
        Ok(r) => {
            let ok = match (&r.comparison, kind) {
                (Some(cmp), _) => cmp.isomorphic,
                (None, GroupKind::T) => r.span_dim == 16,
                (None, _) => true,
            };
            doc["result"] = r.to_json();
            ok
        }
        Err(e @ semidirect::Error::NotClosed { .. }) => {
            doc["result"] = json!({ "error": e.to_string() });
            false
        }
        Err(e) => return Err(e.into()),
    };
    if kind == GroupKind::StarD {
        let witnesses = star_counterexamples(tol)?;
        ok &= witnesses.passed();
        doc["witnesses"] = witnesses.to_json()["checks"].clone();
    }
    doc["verdict"] = json!(if ok { "pass" } else { "fail" });
    Ok(Output {
        stdout: to_json_string(&with_schema(doc)),
        code: if ok { 0 } else { 1 },
    })
}

/// Evaluates an expression over the Pauli algebra.
pub fn eval_cmd(src: &str, format: Format) -> Result<Output, CliError> {
    let expr = parse_expr(src)?;
    let value = eval(&expr)?;
    let stdout = match format {
        Format::Json => {
            let v = match &value {
                ExprValue::Group(t) => t_json(t),
                ExprValue::Element(e) => element_value_json(e),
            };
            to_json_string(&with_schema(json!({ "expr": expr.to_string(), "value": v })))
        }
        Format::Text => match &value {
            ExprValue::Group(t) => format!(
                "B = {}\nL = {}\nR = {}\n",
                element_text(t.translation()),
                element_text(t.left()),
                element_text(t.right())
            ),
            ExprValue::Element(e) => format!("{}\n", element_text(e)),
        },
    };
    Ok(Output::ok(stdout))
}

fn element_value_json(e: &AlgebraElement) -> Value {
    json!({
        "kind": "element",
        "matrix": element_json(e),
        "coords": e.coords().iter().map(|z| scalar_json(*z)).collect::<Vec<_>>(),
    })
}

/// `c0*sigma0 + c1*sigma1 + ...`, omitting zero coordinates.
fn element_text(e: &AlgebraElement) -> String {
    let mut out = String::new();
    for (k, z) in e.coords().iter().enumerate() {
        if *z == Complex64::new(0.0, 0.0) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let _ = write!(out, "({})*sigma{k}", expr::complex_literal(*z));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Applies a group element to a four-vector.
///
/// An element of the form `(H, G, G*^-1)` with `det G = 1` is a spinor
/// Poincare transformation and needs a real vector. Any other element acts
/// through `X -> L X R^-1 + B` on `X = sum v_i sigma_i`.
pub fn transform_cmd(element: &str, vector: &str, tol: f64) -> Result<Output, CliError> {
    check_tol(tol)?;
    let spec = pauli_spec();
    let t = eval_group(&spec, &parse_group(element)?)?;
    let c = expr::parse_vec4(vector).map_err(|err| CliError::Parse {
        src: vector.to_string(),
        err,
    })?;
    let v = Vec4::from_components(c);
    let spinor = StarDElement::from_triple(&t, tol)
        .ok()
        .map(|s| -> Result<_, CliError> {
            let lin = s.linear().to_matrix()?;
            Ok(((lin.det() - Complex64::new(1.0, 0.0)).norm() <= tol)
                .then_some((s.hermitian().to_matrix()?, lin)))
        })
        .transpose()?
        .flatten();
    let (action, image, origin) = match spinor {
        Some((h, lin)) => {
            if !v.is_real() {
                return Err(CliError::Usage(
                    "a spinor Poincare element acts on real four-vectors only".into(),
                ));
            }
            let p = SpinPoincareElement::new(h, lin, tol)?;
            ("spinor", p.apply(&v)?, p.apply(&Vec4::real(0.0, 0.0, 0.0, 0.0))?)
        }
        None => {
            let act = |w: &Vec4| -> Result<Vec4, CliError> {
                let x = AlgebraElement::from_matrix(&spec, &vec_to_mat(w))?;
                let y = t.apply(&x)?.to_matrix()?;
                let out = mat_to_vec(&y)?;
                Ok(if out.components().iter().all(|z| z.im == 0.0) {
                    let r = out.real_parts();
                    Vec4::real(r[0], r[1], r[2], r[3])
                } else {
                    out
                })
            };
            ("affine", act(&v)?, act(&Vec4::real(0.0, 0.0, 0.0, 0.0))?)
        }
    };
    let moved = image - origin;
    let residual = (mink_norm(&moved) - mink_norm(&v)).norm();
    let doc = json!({
        "action": action,
        "input": vec4_json(&v),
        "image": vec4_json(&image),
        "interval_residual": residual,
    });
    Ok(Output::ok(to_json_string(&with_schema(doc))))
}

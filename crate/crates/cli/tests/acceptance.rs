//! Acceptance criteria 1 to 10 at seed 42, 1000 trials, tolerance 1e-9.
//!
//! Every criterion prints one `PASS` or `FAIL` line; the test fails if any
//! criterion does. Each criterion combines the corresponding verification
//! suite with an independent recomputation of its headline values.

use std::io::Write;
use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;
use semidirect::algebra::pauli_matrices;
use semidirect::quasiring::{
    ad_endo, check_quasiring, reconstruct, span_dimension, GroupKind, LinearEndo, SemidirectGroup,
};
use semidirect::sample::trial_rng;
use semidirect::spacetime::{lorentz_from_sl2, SpinPoincareElement, Vec4};
use semidirect::verify::{run_suite, Suite};
use semidirect::{pauli_spec, AlgebraElement, SquareMatrix, VerificationReport};

const SEED: u64 = 42;
const TRIALS: usize = 1000;
const TOL: f64 = 1e-9;
/// Trees per group for the quasi-ring criterion; each is evaluated at five
/// points.
const QUASIRING_TREES: usize = 500;

/// Literal values of `cosh 1` and `sinh 1`.
const COSH_1: f64 = 1.5430806348152437;
const SINH_1: f64 = 1.1752011936438014;

type Outcome = Result<(), Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(s: Suite) -> VerificationReport {
    run_suite(s, SEED, TRIALS, TOL).unwrap_or_else(|e| panic!("suite {s} did not run: {e}"))
}

/// Failures of the report, plus any `required` check that is missing.
fn report_failures(report: &VerificationReport, required: &[&str]) -> Vec<String> {
    let mut out: Vec<String> = report
        .failures()
        .map(|c| {
            format!(
                "{}/{}: max_error {:e} > tol {:e}",
                report.suite, c.name, c.max_error, c.tol
            )
        })
        .collect();
    for name in required {
        if report.check(name).is_none() {
            out.push(format!("{}: missing check {name}", report.suite));
        }
    }
    out
}

fn require_tol(report: &VerificationReport, name: &str, tol: f64, out: &mut Vec<String>) {
    match report.check(name) {
        Some(c) if c.tol <= tol && c.max_error <= tol => {}
        Some(c) => out.push(format!(
            "{name}: max_error {:e} at tol {:e}, need {tol:e}",
            c.max_error, c.tol
        )),
        None => out.push(format!("missing check {name}")),
    }
}

fn outcome(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

fn criterion_1() -> Outcome {
    let r = suite(Suite::GroupAxioms);
    outcome(report_failures(
        &r,
        &[
            "D_associativity",
            "D_identity",
            "D_inverse",
            "T_associativity",
            "T_identity",
            "T_inverse",
        ],
    ))
}

fn criterion_2() -> Outcome {
    let r = suite(Suite::MatrixReps);
    let mut f = report_failures(
        &r,
        &[
            "D_rep_homomorphism",
            "D_affine_rep_homomorphism",
            "T_rep_homomorphism",
            "spin_rep_homomorphism",
        ],
    );
    require_tol(&r, "spin_rep_matches_T_rep", 1e-12, &mut f);
    outcome(f)
}

fn criterion_3() -> Outcome {
    let r = suite(Suite::StarInvolution);
    outcome(report_failures(
        &r,
        &[
            "star_star_is_identity",
            "star_is_multiplicative",
            "starD_elements_are_fixed",
        ],
    ))
}

fn criterion_4() -> Outcome {
    let r = suite(Suite::Minkowski);
    let mut f = report_failures(&r, &["sl2_action_preserves_norm"]);
    require_tol(&r, "det_is_minkowski_norm", 1e-12, &mut f);
    outcome(f)
}

fn criterion_5() -> Outcome {
    let r = suite(Suite::LorentzCover);
    let mut f = report_failures(
        &r,
        &[
            "preserves_metric",
            "determinant_is_one",
            "orthochronous",
            "sign_is_kernel",
            "boost_unit_rapidity",
        ],
    );
    // independent recomputation against the literal constants
    let expected = [COSH_1, 0.0, 0.0, SINH_1];
    let image = SpinPoincareElement::boost(3, 1.0)
        .and_then(|b| b.apply(&Vec4::real(1.0, 0.0, 0.0, 0.0)))
        .map(|v| v.real_parts());
    match image {
        Ok(v) => {
            let err = v
                .iter()
                .zip(expected)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if err > TOL {
                f.push(format!("boost image {v:?} differs from {expected:?} by {err:e}"));
            }
        }
        Err(e) => f.push(format!("boost failed: {e}")),
    }
    let half = 0.5f64.exp();
    let m = SquareMatrix::diagonal(&[Complex64::new(half, 0.0), Complex64::new(1.0 / half, 0.0)]);
    match lorentz_from_sl2(&m, TOL) {
        Ok(l) => {
            let err = (l.entry(0, 0) - COSH_1).abs().max((l.entry(3, 0) - SINH_1).abs());
            if err > TOL {
                f.push(format!(
                    "diag(e^1/2, e^-1/2) gives L00 {} and L30 {}",
                    l.entry(0, 0),
                    l.entry(3, 0)
                ));
            }
        }
        Err(e) => f.push(format!("lorentz_from_sl2 failed: {e}")),
    }
    outcome(f)
}

fn criterion_6() -> Outcome {
    let r = suite(Suite::So4c);
    outcome(report_failures(&r, &["preserves_complex_metric", "homomorphism"]))
}

fn criterion_7() -> Outcome {
    let mut f = Vec::new();
    for kind in [GroupKind::D, GroupKind::T, GroupKind::StarD] {
        let group = SemidirectGroup::new(kind, pauli_spec()).expect("group");
        match check_quasiring(&group, QUASIRING_TREES, SEED, TOL) {
            Ok(r) => f.extend(
                report_failures(
                    &r,
                    &[
                        "rdistr",
                        "ldistr",
                        "comm_cond_images_commute",
                        "comm_cond_smile_is_endomorphism",
                        "comm_cond_smile_commutes",
                        "smile_with_pointwise_inverse_is_trivial",
                        "scalar_sum",
                        "scalar_smile",
                    ],
                )
                .into_iter()
                .map(|s| format!("{kind}: {s}")),
            ),
            Err(e) => f.push(format!("{kind}: {e}")),
        }
    }
    outcome(f)
}

/// Oracle for the Pauli structure constants: `c_ijk = tr(s_i s_j s_k) / 2`.
fn pauli_constant(i: usize, j: usize, k: usize) -> Complex64 {
    let s = pauli_matrices();
    (&(&s[i] * &s[j]) * &s[k]).trace() * 0.5
}

fn criterion_8() -> Outcome {
    let mut f = report_failures(
        &suite(Suite::RestoreD),
        &[
            "pauli_generators_span_dim_4",
            "pauli_generators_structure_constants",
            "random_generators_isomorphic",
            "sl2_generators_isomorphic",
        ],
    );
    f.extend(report_failures(&suite(Suite::RestoreT), &["span_dim_16"]));

    let spec = pauli_spec();
    let d = SemidirectGroup::new(GroupKind::D, spec.clone()).expect("D");
    let gens: Vec<_> = (0..4)
        .map(|i| d.lift(&AlgebraElement::basis(&spec, i)).expect("lift"))
        .collect();
    match reconstruct(&d, &gens, Some(&spec), TOL) {
        Ok(r) if r.dim() == 4 => {
            let mut dev = 0.0f64;
            for i in 0..4 {
                for j in 0..4 {
                    for k in 0..4 {
                        dev = dev.max((r.c(i, j, k) - pauli_constant(i, j, k)).norm());
                    }
                }
            }
            if dev > TOL {
                f.push(format!("structure constants deviate by {dev:e}"));
            }
        }
        Ok(r) => f.push(format!("D reconstruction has dimension {}", r.dim())),
        Err(e) => f.push(format!("D reconstruction failed: {e}")),
    }

    let t = SemidirectGroup::new(GroupKind::T, spec).expect("T");
    let mut rng = trial_rng(SEED, 0);
    let gens: Vec<_> = (0..20).map(|_| t.random_element(&mut rng)).collect();
    match span_dimension(&t, &gens) {
        Ok(16) => {}
        other => f.push(format!("span dimension of T is {other:?}, expected 16")),
    }
    outcome(f)
}

/// Operator-norm gap between two endomorphisms.
fn gap(a: &LinearEndo, b: &LinearEndo) -> f64 {
    a.smile(&b.negate()).expect("same space").operator_norm()
}

fn criterion_9() -> Outcome {
    let mut f = report_failures(
        &suite(Suite::StarCounterexamples),
        &["starD_additive_gap_exceeds_half", "starD_scalar_gap_exceeds_half"],
    );
    let spec = pauli_spec();
    let star_d = SemidirectGroup::new(GroupKind::StarD, spec.clone()).expect("starD");
    let endo = |l: AlgebraElement| ad_endo(&star_d, &star_d.lift(&l).expect("lift")).expect("endo");
    let one = AlgebraElement::unit(&spec);
    let i = Complex64::new(0.0, 1.0);
    let e_one = endo(one.clone());
    let e_two = endo(one.scale(Complex64::new(2.0, 0.0)).expect("scale"));
    let e_i = endo(one.scale(i).expect("scale"));

    // [1] smile [1] is twice the identity, [2] is four times it
    let additive = gap(&e_one.smile(&e_one).expect("smile"), &e_two);
    if (additive - 2.0).abs() > TOL || additive < 0.5 {
        f.push(format!("additive gap {additive}, expected 2"));
    }
    // [i1] fixes every Hermitian b, while i[1] would send b to ib
    let b = AlgebraElement::unit(&spec)
        .add(&AlgebraElement::basis(&spec, 3))
        .expect("add");
    let image = star_d
        .translation_coords(&b)
        .and_then(|c| e_i.apply(&c))
        .and_then(|c| star_d.translation_from_coords(&c))
        .expect("apply");
    if image.rel_diff(&b) > TOL {
        f.push(format!("[i1] moves b to {image:?}"));
    }
    let ib = b.scale(i).expect("scale");
    let scalar_gap = ib.sub(&image).expect("sub").max_abs() / b.max_abs();
    if (scalar_gap - 2f64.sqrt()).abs() > TOL || scalar_gap < 0.5 {
        f.push(format!("scalar gap {scalar_gap}, expected sqrt 2"));
    }
    outcome(f)
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_semidirect"))
            .args(["verify", "all", "--seed", "42"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let mut f = Vec::new();
    if a.status.code() != Some(0) || b.status.code() != Some(0) {
        f.push(format!(
            "exit codes {:?} and {:?}",
            a.status.code(),
            b.status.code()
        ));
    }
    if a.stdout != b.stdout {
        f.push("reports differ between runs".into());
    }
    if a.stdout.is_empty() {
        f.push("empty report".into());
    }
    outcome(f)
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("group axioms of D and T", criterion_1),
        ("matrix representations", criterion_2),
        ("star involution", criterion_3),
        ("Minkowski determinant", criterion_4),
        ("Lorentz double cover", criterion_5),
        ("complex orthogonal group", criterion_6),
        ("quasi-ring laws", criterion_7),
        ("restoration of the Pauli algebra", criterion_8),
        ("restoration fails for starD", criterion_9),
        ("CLI determinism", criterion_10),
    ];
    // written to the stderr handle directly so the lines show even when
    // the harness captures test output
    let mut log = std::io::stderr();
    let mut failed = Vec::new();
    for (n, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(log, "criterion {:>2} {verdict} ({title}, {secs:.2}s)", n + 1);
        if let Err(reasons) = result {
            for r in reasons {
                let _ = writeln!(log, "    {r}");
            }
            failed.push(n + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

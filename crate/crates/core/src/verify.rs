//! Named verification suites, each a batch of randomized identity checks
//! returning a [`VerificationReport`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{pauli_spec, AlgebraElement, Scalar};
use crate::error::{Error, Result};
use crate::group::{DElement, RightTwist, StarDElement, TElement};
use crate::quasiring::{
    ad_endo, check_quasiring, reconstruct, span_dimension, star_counterexamples, GroupKind, SemidirectGroup,
};
use crate::report::{Accumulator, Check, VerificationReport};
use crate::sample::{self, trial_rng};
use crate::serial::{d_json, matrix_json, spin_json, t_json, vec4_json};
use crate::spacetime::{
    lorentz_from_sl2, metric_residual, mhm_action, mink_norm, so4c_from_pair, vec_to_mat,
    SpinPoincareElement, Vec4,
};

/// `cosh 1` and `sinh 1`, the image of `(1, 0, 0, 0)` under a unit-rapidity boost.
pub const COSH_1: f64 = 1.5430806348152437;
pub const SINH_1: f64 = 1.1752011936438014;

/// Tolerance for identities that involve no inversion or long products.
pub const EXACT_TOL: f64 = 1e-12;

/// Generators drawn per trial when reconstructing from `D` and `T~`.
const D_GENERATORS: usize = 8;
const T_GENERATORS: usize = 20;
const T_REDRAWS: usize = 3;
/// Trials of `T~` reconstruction that also check closure of the full span.
const T_CLOSURE_TRIALS: usize = 5;
/// Smallest gap accepted as a genuine violation of a law.
const GAP_FLOOR: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    GroupAxioms,
    MatrixReps,
    StarInvolution,
    Minkowski,
    LorentzCover,
    So4c,
    Quasiring,
    RestoreD,
    RestoreT,
    StarCounterexamples,
    All,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::GroupAxioms,
        Suite::MatrixReps,
        Suite::StarInvolution,
        Suite::Minkowski,
        Suite::LorentzCover,
        Suite::So4c,
        Suite::Quasiring,
        Suite::RestoreD,
        Suite::RestoreT,
        Suite::StarCounterexamples,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group-axioms",
            Suite::MatrixReps => "matrix-reps",
            Suite::StarInvolution => "star-involution",
            Suite::Minkowski => "minkowski",
            Suite::LorentzCover => "lorentz-cover",
            Suite::So4c => "so4c",
            Suite::Quasiring => "quasiring",
            Suite::RestoreD => "restore-D",
            Suite::RestoreT => "restore-T",
            Suite::StarCounterexamples => "star-counterexamples",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite '{s}'")))
    }
}

pub fn run_suite(suite: Suite, seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    match suite {
        Suite::GroupAxioms => group_axioms(seed, trials, tol),
        Suite::MatrixReps => matrix_reps(seed, trials, tol),
        Suite::StarInvolution => star_involution(seed, trials, tol),
        Suite::Minkowski => minkowski(seed, trials, tol),
        Suite::LorentzCover => lorentz_cover(seed, trials, tol),
        Suite::So4c => so4c(seed, trials, tol),
        Suite::Quasiring => quasiring(seed, trials, tol),
        Suite::RestoreD => restore_d(seed, trials, tol),
        Suite::RestoreT => restore_t(seed, trials, tol),
        Suite::StarCounterexamples => star_suite(seed, trials, tol),
        Suite::All => {
            let mut report = VerificationReport::new("all", seed, trials, tol);
            for s in Suite::ALL.iter().copied().filter(|s| *s != Suite::All) {
                report.absorb(run_suite(s, seed, trials, tol)?);
            }
            Ok(report)
        }
    }
}

fn record(acc: &mut Accumulator, outcome: Result<f64>, witness: impl FnOnce() -> Value) {
    match outcome {
        Ok(err) => acc.record(err, witness),
        Err(e) => acc.record_failure(e.to_string()),
    }
}

fn finish(name: &str, seed: u64, trials: usize, tol: f64, accs: Vec<Accumulator>) -> VerificationReport {
    let mut report = VerificationReport::new(name, seed, trials, tol);
    for acc in accs {
        report.push(acc.finish());
    }
    report
}

fn random_d(rng: &mut impl rand::Rng, spec: &std::sync::Arc<crate::algebra::AlgebraSpec>) -> DElement {
    DElement::new(sample::element(rng, spec), sample::invertible(rng, spec)).expect("invertible sample")
}

fn random_t(rng: &mut impl rand::Rng, spec: &std::sync::Arc<crate::algebra::AlgebraSpec>) -> TElement {
    TElement::new(
        sample::element(rng, spec),
        sample::invertible(rng, spec),
        sample::invertible(rng, spec),
    )
    .expect("invertible sample")
}

fn random_spin(rng: &mut impl rand::Rng) -> SpinPoincareElement {
    let v = sample::real_vec4(rng);
    SpinPoincareElement::new(vec_to_mat(&v), sample::sl2(rng), EXACT_TOL).expect("hermitian and unimodular")
}

fn group_axioms(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let names = [
        "D_associativity",
        "D_identity",
        "D_inverse",
        "T_associativity",
        "T_identity",
        "T_inverse",
        "T_adjoint_twist_associativity",
        "T_adjoint_twist_inverse",
    ];
    let mut accs: Vec<_> = names.iter().map(|n| Accumulator::new(*n, tol)).collect();
    let d_id = DElement::identity(&spec);
    let t_id = TElement::identity(&spec);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let (x, y, z) = (
            random_d(&mut rng, &spec),
            random_d(&mut rng, &spec),
            random_d(&mut rng, &spec),
        );
        let w = || json!({ "x": d_json(&x), "y": d_json(&y), "z": d_json(&z) });
        let assoc = (|| Ok(x.compose(&y)?.compose(&z)?.rel_diff(&x.compose(&y.compose(&z)?)?)))();
        record(&mut accs[0], assoc, w);
        let ident = (|| Ok(d_id.compose(&x)?.rel_diff(&x).max(x.compose(&d_id)?.rel_diff(&x))))();
        record(&mut accs[1], ident, w);
        let inv = (|| {
            let xi = x.inverse()?;
            Ok(x.compose(&xi)?
                .rel_diff(&d_id)
                .max(xi.compose(&x)?.rel_diff(&d_id)))
        })();
        record(&mut accs[2], inv, w);

        let (a, b, c) = (
            random_t(&mut rng, &spec),
            random_t(&mut rng, &spec),
            random_t(&mut rng, &spec),
        );
        let w = || json!({ "x": t_json(&a), "y": t_json(&b), "z": t_json(&c) });
        let assoc = (|| Ok(a.compose(&b)?.compose(&c)?.rel_diff(&a.compose(&b.compose(&c)?)?)))();
        record(&mut accs[3], assoc, w);
        let ident = (|| Ok(t_id.compose(&a)?.rel_diff(&a).max(a.compose(&t_id)?.rel_diff(&a))))();
        record(&mut accs[4], ident, w);
        let inv = (|| {
            let ai = a.inverse()?;
            Ok(a.compose(&ai)?
                .rel_diff(&t_id)
                .max(ai.compose(&a)?.rel_diff(&t_id)))
        })();
        record(&mut accs[5], inv, w);
        let tw = RightTwist::Adjoint;
        let assoc = (|| {
            let lhs = a.compose_with(&b, tw)?.compose_with(&c, tw)?;
            Ok(lhs.rel_diff(&a.compose_with(&b.compose_with(&c, tw)?, tw)?))
        })();
        record(&mut accs[6], assoc, w);
        let inv = (|| {
            let ai = a.inverse_with(tw)?;
            Ok(a.compose_with(&ai, tw)?
                .rel_diff(&t_id)
                .max(ai.compose_with(&a, tw)?.rel_diff(&t_id)))
        })();
        record(&mut accs[7], inv, w);
    }
    Ok(finish("group-axioms", seed, trials, tol, accs))
}

fn matrix_reps(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let mut d_rep = Accumulator::new("D_rep_homomorphism", tol);
    let mut d_affine = Accumulator::new("D_affine_rep_homomorphism", tol);
    let mut d_action = Accumulator::new("D_action_compatible", tol);
    let mut t_rep = Accumulator::new("T_rep_homomorphism", tol);
    let mut t_faithful = Accumulator::new("T_rep_round_trip", tol);
    let mut t_action = Accumulator::new("T_action_compatible", tol);
    let mut spin_rep = Accumulator::new("spin_rep_homomorphism", tol);
    let mut spin_vs_t = Accumulator::new("spin_rep_matches_T_rep", EXACT_TOL);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let (x, y) = (random_d(&mut rng, &spec), random_d(&mut rng, &spec));
        let a = sample::element(&mut rng, &spec);
        let w = || json!({ "x": d_json(&x), "y": d_json(&y) });
        let xy = x.compose(&y)?;
        record(
            &mut d_rep,
            (|| Ok(xy.matrix_rep()?.rel_diff(&(&x.matrix_rep()? * &y.matrix_rep()?))))(),
            w,
        );
        d_affine.record(xy.affine_rep().rel_diff(&(&x.affine_rep() * &y.affine_rep())), w);
        record(
            &mut d_action,
            (|| Ok(xy.apply(&a)?.rel_diff(&x.apply(&y.apply(&a)?)?)))(),
            w,
        );

        let (s, t) = (random_t(&mut rng, &spec), random_t(&mut rng, &spec));
        let w = || json!({ "x": t_json(&s), "y": t_json(&t) });
        let st = s.compose(&t)?;
        record(
            &mut t_rep,
            (|| Ok(st.matrix_rep()?.rel_diff(&(&s.matrix_rep()? * &t.matrix_rep()?))))(),
            w,
        );
        record(
            &mut t_faithful,
            (|| Ok(TElement::from_matrix_rep(&spec, &s.matrix_rep()?)?.rel_diff(&s)))(),
            w,
        );
        record(
            &mut t_action,
            (|| Ok(st.apply(&a)?.rel_diff(&s.apply(&t.apply(&a)?)?)))(),
            w,
        );

        let (p, q) = (random_spin(&mut rng), random_spin(&mut rng));
        let w = || json!({ "x": spin_json(&p), "y": spin_json(&q) });
        record(
            &mut spin_rep,
            (|| {
                Ok(p.compose(&q)
                    .matrix_rep()?
                    .rel_diff(&(&p.matrix_rep()? * &q.matrix_rep()?)))
            })(),
            w,
        );
        record(
            &mut spin_vs_t,
            (|| Ok(p.matrix_rep()?.rel_diff(&p.to_triple(&spec)?.matrix_rep()?)))(),
            w,
        );
    }
    Ok(finish(
        "matrix-reps",
        seed,
        trials,
        tol,
        vec![
            d_rep, d_affine, d_action, t_rep, t_faithful, t_action, spin_rep, spin_vs_t,
        ],
    ))
}

fn star_involution(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let star_d = SemidirectGroup::new(GroupKind::StarD, spec.clone())?;
    let mut twice = Accumulator::new("star_star_is_identity", tol);
    let mut multiplicative = Accumulator::new("star_is_multiplicative", tol);
    let mut fixed = Accumulator::new("starD_elements_are_fixed", tol);
    let mut closed = Accumulator::new("starD_closed_under_products", tol);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let (x, y) = (random_t(&mut rng, &spec), random_t(&mut rng, &spec));
        let w = || json!({ "x": t_json(&x), "y": t_json(&y) });
        record(&mut twice, (|| Ok(x.star()?.star()?.rel_diff(&x)))(), w);
        record(
            &mut multiplicative,
            (|| Ok(x.compose(&y)?.star()?.rel_diff(&x.star()?.compose(&y.star()?)?)))(),
            w,
        );
        let (g, h) = (star_d.random_element(&mut rng), star_d.random_element(&mut rng));
        let w = || json!({ "x": t_json(&g), "y": t_json(&h) });
        record(
            &mut fixed,
            (|| {
                let embedded = StarDElement::from_triple(&g, tol)?.embed()?;
                Ok(embedded.star()?.rel_diff(&embedded))
            })(),
            w,
        );
        record(
            &mut closed,
            (|| {
                let gh = g.compose(&h)?;
                let back = StarDElement::from_triple(&gh, tol)?.embed()?;
                Ok(gh.star()?.rel_diff(&gh).max(back.rel_diff(&gh)))
            })(),
            w,
        );
    }
    Ok(finish(
        "star-involution",
        seed,
        trials,
        tol,
        vec![twice, multiplicative, fixed, closed],
    ))
}

fn minkowski(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let mut det = Accumulator::new("det_is_minkowski_norm", EXACT_TOL);
    let mut preserved = Accumulator::new("sl2_action_preserves_norm", tol);
    let mut hermitian = Accumulator::new("sl2_action_preserves_hermiticity", tol);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let v = sample::complex_vec4(&mut rng);
        let norm = mink_norm(&v);
        det.record(
            (vec_to_mat(&v).det() - norm).norm() / norm.norm().max(1.0),
            || json!({ "v": vec4_json(&v) }),
        );
        let u = sample::real_vec4(&mut rng);
        let m = sample::sl2(&mut rng);
        let w = || json!({ "v": vec4_json(&u), "M": matrix_json(&m) });
        let h = vec_to_mat(&u);
        match mhm_action(&m, &h, tol) {
            Ok(image) => {
                let before = mink_norm(&u);
                preserved.record((image.det() - before).norm() / before.norm().max(1.0), w);
                hermitian.record(image.hermitian_defect() / image.max_abs().max(1.0), w);
            }
            Err(e) => {
                preserved.record_failure(e.to_string());
                hermitian.record_failure(e.to_string());
            }
        }
    }
    Ok(finish(
        "minkowski",
        seed,
        trials,
        tol,
        vec![det, preserved, hermitian],
    ))
}

fn lorentz_cover(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let mut metric = Accumulator::new("preserves_metric", tol);
    let mut det = Accumulator::new("determinant_is_one", tol);
    let mut orthochronous = Accumulator::new("orthochronous", tol);
    let mut kernel = Accumulator::new("sign_is_kernel", tol);
    let mut homomorphism = Accumulator::new("homomorphism", tol);
    let mut action = Accumulator::new("spin_action_matches_lorentz", tol);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let (m1, m2) = (sample::sl2(&mut rng), sample::sl2(&mut rng));
        let w = || json!({ "M1": matrix_json(&m1), "M2": matrix_json(&m2) });
        let outcome = (|| {
            let l1 = lorentz_from_sl2(&m1, tol)?;
            let l2 = lorentz_from_sl2(&m2, tol)?;
            let neg = lorentz_from_sl2(&(-&m1), tol)?;
            let prod = lorentz_from_sl2(&(&m1 * &m2), tol)?;
            Ok::<_, Error>((l1, l1.rel_diff(&neg), prod.rel_diff(&l1.mul(&l2))))
        })();
        match outcome {
            Ok((l1, neg, hom)) => {
                metric.record(l1.metric_residual(), w);
                det.record((l1.det() - 1.0).abs(), w);
                orthochronous.record((1.0 - l1.entry(0, 0)).max(0.0), w);
                kernel.record(neg, w);
                homomorphism.record(hom, w);
            }
            Err(e) => {
                for acc in [
                    &mut metric,
                    &mut det,
                    &mut orthochronous,
                    &mut kernel,
                    &mut homomorphism,
                ] {
                    acc.record_failure(e.to_string());
                }
            }
        }
        let p = random_spin(&mut rng);
        let v = sample::real_vec4(&mut rng);
        record(
            &mut action,
            (|| {
                let l = p.lorentz(tol)?;
                let h = crate::spacetime::mat_to_real_vec(p.translation(), tol)?;
                Ok(p.apply(&v)?.rel_diff(&(l.apply(&v) + h)))
            })(),
            || json!({ "g": spin_json(&p), "v": vec4_json(&v) }),
        );
    }
    let mut report = finish(
        "lorentz-cover",
        seed,
        trials,
        tol,
        vec![metric, det, orthochronous, kernel, homomorphism, action],
    );
    let boosted = SpinPoincareElement::boost(3, 1.0)?.apply(&Vec4::real(1.0, 0.0, 0.0, 0.0))?;
    let expected = Vec4::real(COSH_1, 0.0, 0.0, SINH_1);
    let err = boosted
        .components()
        .iter()
        .zip(expected.components())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    report.push(Check::new(
        "boost_unit_rapidity",
        tol,
        err,
        Some(json!({ "image": vec4_json(&boosted), "expected": vec4_json(&expected) })),
    ));
    Ok(report)
}

fn so4c(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let mut metric = Accumulator::new("preserves_complex_metric", tol);
    let mut homomorphism = Accumulator::new("homomorphism", tol);
    let mut det = Accumulator::new("determinant_is_one", tol);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let (l1, r1) = (sample::sl2(&mut rng), sample::sl2(&mut rng));
        let (l2, r2) = (sample::sl2(&mut rng), sample::sl2(&mut rng));
        let w = || {
            json!({
                "L1": matrix_json(&l1), "R1": matrix_json(&r1),
                "L2": matrix_json(&l2), "R2": matrix_json(&r2),
            })
        };
        let outcome = (|| {
            let o1 = so4c_from_pair(&l1, &r1, tol)?;
            let o2 = so4c_from_pair(&l2, &r2, tol)?;
            let o12 = so4c_from_pair(&(&l1 * &l2), &(&r1 * &r2), tol)?;
            let scale = o1.max_abs().max(1.0).powi(2);
            Ok::<_, Error>((
                metric_residual(&o1) / scale,
                o12.rel_diff(&(&o1 * &o2)),
                (o1.det() - Complex64::new(1.0, 0.0)).norm(),
            ))
        })();
        match outcome {
            Ok((m, h, d)) => {
                metric.record(m, w);
                homomorphism.record(h, w);
                det.record(d, w);
            }
            Err(e) => {
                for acc in [&mut metric, &mut homomorphism, &mut det] {
                    acc.record_failure(e.to_string());
                }
            }
        }
    }
    Ok(finish("so4c", seed, trials, tol, vec![metric, homomorphism, det]))
}

fn quasiring(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let mut report = VerificationReport::new("quasiring", seed, trials, tol);
    // D carries the full trial count; T~ and starD run a tenth as a cross-check
    for (kind, n) in [
        (GroupKind::D, trials),
        (GroupKind::T, (trials / 10).max(1)),
        (GroupKind::StarD, (trials / 10).max(1)),
    ] {
        let group = SemidirectGroup::new(kind, spec.clone())?;
        let mut sub = check_quasiring(&group, n, seed, tol)?;
        sub.suite = kind.to_string();
        report.absorb(sub);
    }
    Ok(report)
}

fn restore_d(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let d = SemidirectGroup::new(GroupKind::D, spec.clone())?;
    let d_sl = SemidirectGroup::new(GroupKind::D, spec.clone())?.unimodular()?;
    let mut report = VerificationReport::new("restore-D", seed, trials, tol);

    // generators sigma_0..sigma_3: the recovered constants are the Pauli ones
    let gens = (0..4)
        .map(|i| d.lift(&AlgebraElement::basis(&spec, i)))
        .collect::<Result<Vec<_>>>()?;
    let r = reconstruct(&d, &gens, Some(&spec), tol)?;
    report.push(Check::new(
        "pauli_generators_span_dim_4",
        0.0,
        (r.dim() as f64 - 4.0).abs(),
        Some(json!({ "span_dim": r.dim() })),
    ));
    let deviation = if r.dim() == 4 {
        r.constants
            .iter()
            .zip(spec.constants())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    report.push(Check::new(
        "pauli_generators_structure_constants",
        tol,
        deviation,
        None,
    ));

    let mut random_dim = Accumulator::new("random_generators_span_dim_4", 0.0);
    let mut random_dev = Accumulator::new("random_generators_isomorphic", tol);
    let mut sl_dim = Accumulator::new("sl2_generators_span_dim_4", 0.0);
    let mut sl_dev = Accumulator::new("sl2_generators_isomorphic", tol);
    let mut laml = Accumulator::new("scalar_lift_law", tol);
    let mut addl = Accumulator::new("additive_lift_law", tol);
    let mut mult = Accumulator::new("lift_is_multiplicative", tol);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        for (group, dim_acc, dev_acc) in [
            (&d, &mut random_dim, &mut random_dev),
            (&d_sl, &mut sl_dim, &mut sl_dev),
        ] {
            let gens: Vec<_> = (0..D_GENERATORS)
                .map(|_| group.random_element(&mut rng))
                .collect();
            let w = || json!({ "generators": gens.iter().map(t_json).collect::<Vec<_>>() });
            match reconstruct(group, &gens, Some(&spec), tol) {
                Ok(r) => {
                    dim_acc.record((r.dim() as f64 - 4.0).abs(), w);
                    let dev = r
                        .comparison
                        .as_ref()
                        .map(|c| c.max_deviation.max(c.embedding_residual))
                        .unwrap_or(f64::INFINITY);
                    dev_acc.record(dev, w);
                }
                Err(e) => {
                    dim_acc.record_failure(e.to_string());
                    dev_acc.record_failure(e.to_string());
                }
            }
        }
        let l1 = d.random_linear(&mut rng);
        let l2 = d.random_linear(&mut rng);
        let lambda = sample::nonzero_scalar(&mut rng, spec.field());
        let w = || {
            json!({
                "l1": crate::serial::element_json(&l1),
                "l2": crate::serial::element_json(&l2),
                "lambda": crate::serial::scalar_json(lambda),
            })
        };
        let bracket = |l: &AlgebraElement| ad_endo(&d, &d.lift(l)?);
        record(
            &mut laml,
            (|| {
                Ok(bracket(&l1)?
                    .scale(lambda)?
                    .rel_diff(&bracket(&l1.scale(lambda)?)?))
            })(),
            w,
        );
        let sum = l1.add(&l2)?;
        if sample_is_invertible(&sum) {
            record(
                &mut addl,
                (|| Ok(bracket(&l1)?.smile(&bracket(&l2)?)?.rel_diff(&bracket(&sum)?)))(),
                w,
            );
        }
        record(
            &mut mult,
            (|| {
                Ok(bracket(&l1)?
                    .compose(&bracket(&l2)?)?
                    .rel_diff(&bracket(&l1.mul(&l2)?)?))
            })(),
            w,
        );
    }
    for acc in [random_dim, random_dev, sl_dim, sl_dev, laml, addl, mult] {
        report.push(acc.finish());
    }
    Ok(report)
}

fn sample_is_invertible(x: &AlgebraElement) -> bool {
    x.left_mult_matrix().lu().min_pivot_ratio >= 1e-2
}

fn restore_t(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let t = SemidirectGroup::new(GroupKind::T, spec.clone())?;
    let full = (spec.dim() * spec.dim()) as f64;
    let mut dim = Accumulator::new("span_dim_16", 0.0);
    let mut closure = Accumulator::new("span_closed_under_composition", tol);
    let mut mult = Accumulator::new("bracket_is_multiplicative", tol);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let mut attempts = Vec::new();
        let mut best = 0;
        for _ in 0..=T_REDRAWS {
            let gens: Vec<_> = (0..T_GENERATORS).map(|_| t.random_element(&mut rng)).collect();
            match span_dimension(&t, &gens) {
                Ok(k) => {
                    best = k;
                    attempts.push(gens);
                    if k as f64 == full {
                        break;
                    }
                }
                Err(e) => {
                    dim.record_failure(e.to_string());
                    break;
                }
            }
        }
        dim.record(
            (full - best as f64).abs(),
            || json!({ "trial": trial, "span_dim": best }),
        );
        if trial < T_CLOSURE_TRIALS {
            if let Some(gens) = attempts.last() {
                match reconstruct(&t, gens, None, tol) {
                    Ok(r) => closure.record(r.closure_residual, || json!({ "trial": trial })),
                    Err(e) => closure.record_failure(e.to_string()),
                }
            }
        }
        let (x, y) = (t.random_element(&mut rng), t.random_element(&mut rng));
        record(
            &mut mult,
            (|| {
                let xy = TElement::new(
                    AlgebraElement::zero(&spec),
                    x.left().mul(y.left())?,
                    x.right().mul(y.right())?,
                )?;
                Ok(ad_endo(&t, &x)?
                    .compose(&ad_endo(&t, &y)?)?
                    .rel_diff(&ad_endo(&t, &xy)?))
            })(),
            || json!({ "x": t_json(&x), "y": t_json(&y) }),
        );
    }
    Ok(finish("restore-T", seed, trials, tol, vec![dim, closure, mult]))
}

fn star_suite(seed: u64, trials: usize, tol: f64) -> Result<VerificationReport> {
    let mut report = star_counterexamples(tol)?;
    report.seed = seed;
    report.trials = trials;
    let additive = star_gap(Scalar::new(2.0, 0.0))?;
    let scalar = star_scalar_gap()?;
    report.push(Check::new(
        "starD_additive_gap_exceeds_half",
        tol,
        (GAP_FLOOR - additive).max(0.0),
        Some(json!({ "gap": additive })),
    ));
    report.push(Check::new(
        "starD_scalar_gap_exceeds_half",
        tol,
        (GAP_FLOOR - scalar).max(0.0),
        Some(json!({ "gap": scalar })),
    ));
    Ok(report)
}

/// `‖[1] ⌣ [1] − [c·1]‖` on the Hermitian translations of starD.
fn star_gap(c: Scalar) -> Result<f64> {
    let spec = pauli_spec();
    let g = SemidirectGroup::new(GroupKind::StarD, spec.clone())?;
    let one = AlgebraElement::unit(&spec);
    let e = ad_endo(&g, &g.lift(&one)?)?;
    let f = ad_endo(&g, &g.lift(&one.scale(c)?)?)?;
    Ok(e.smile(&e)?.smile(&f.negate())?.operator_norm())
}

/// `‖i[1] − [i·1]‖` for the complexified map `b -> g b g*`.
fn star_scalar_gap() -> Result<f64> {
    let spec = pauli_spec();
    let i = Scalar::new(0.0, 1.0);
    let n = spec.dim();
    let map = |g: &AlgebraElement| -> Result<crate::matrix::SquareMatrix> {
        let gs = g.star()?;
        let cols = (0..n)
            .map(|j| {
                Ok(g.mul(&AlgebraElement::basis(&spec, j))?
                    .mul(&gs)?
                    .coords()
                    .to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(crate::matrix::SquareMatrix::from_columns(&cols))
    };
    let one = AlgebraElement::unit(&spec);
    let lhs = map(&one)?.scale(i);
    let rhs = map(&one.scale(i)?)?;
    Ok((&lhs - &rhs).operator_norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL.iter().copied().filter(|s| *s != Suite::All) {
            let report = run_suite(s, 3, 20, 1e-9).unwrap();
            assert!(report.passed(), "{}", report.to_text());
        }
    }

    #[test]
    fn zero_trials_rejected() {
        assert_eq!(run_suite(Suite::Minkowski, 0, 0, 1e-9), Err(Error::NoTrials));
    }

    #[test]
    fn frozen_hyperbolic_values() {
        assert!((1.0f64.cosh() - COSH_1).abs() < 1e-15);
        assert!((1.0f64.sinh() - SINH_1).abs() < 1e-15);
    }
}

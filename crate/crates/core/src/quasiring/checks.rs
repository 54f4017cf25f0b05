use serde_json::{json, Value};

use super::endo::{ad_endo, endo_scalar, LinearEndo};
use super::function::GroupFn;
use super::{Group, GroupKind, SemidirectGroup};
use crate::algebra::{pauli_spec, AlgebraElement, Field, Scalar};
use crate::error::{Error, Result};
use crate::group::TElement;
use crate::matrix::SquareMatrix;
use crate::report::{Accumulator, Check, VerificationReport};
use crate::sample::{self, trial_rng};
use crate::serial::{scalar_json, t_json};

const TREE_DEPTH: usize = 3;
const POINTS_PER_TREE: usize = 5;
/// Smallest gap the negative control must show to count as a violation.
const VIOLATION_FLOOR: f64 = 1e-3;

fn scaled_shift(b: &AlgebraElement, lambda: Scalar) -> Result<TElement> {
    Ok(TElement::shift(b.scale(lambda)?))
}

/// Randomised check of the quasi-ring laws of smile and composition.
///
/// Every trial draws fresh trees `f, g, h`, an endomorphism tree `e`, and
/// [`POINTS_PER_TREE`] group points and translations from its own stream.
pub fn check_quasiring(
    group: &SemidirectGroup,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let mut rdistr = Accumulator::new("rdistr", tol);
    let mut ldistr = Accumulator::new("ldistr", tol);
    let mut comm_images = Accumulator::new("comm_cond_images_commute", tol);
    let mut comm_endo = Accumulator::new("comm_cond_smile_is_endomorphism", tol);
    let mut comm_sym = Accumulator::new("comm_cond_smile_commutes", tol);
    let mut negation = Accumulator::new("smile_with_pointwise_inverse_is_trivial", tol);
    let mut unit = Accumulator::new("smile_with_trivial_is_neutral", tol);
    let mut scalar_sum = Accumulator::new("scalar_sum", tol);
    let mut scalar_smile = Accumulator::new("scalar_smile", tol);
    let mut scalar_sum_endo = Accumulator::new("scalar_sum_on_endomorphisms", tol);
    let mut scalar_smile_endo = Accumulator::new("scalar_smile_on_endomorphisms", tol);
    let mut control_gap = f64::INFINITY;
    let mut control_witness = Value::Null;

    let field = group.translation_field();
    let trivial = GroupFn::trivial(group);

    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let mut draw = |r: &mut dyn rand::RngCore| {
            let mut r = r;
            group.random_element(&mut r)
        };
        let f = GroupFn::random(group, TREE_DEPTH, &mut rng, &mut draw);
        let g = GroupFn::random(group, TREE_DEPTH, &mut rng, &mut draw);
        let h = GroupFn::random(group, TREE_DEPTH, &mut rng, &mut draw);
        let e = GroupFn::random_endomorphism(group, TREE_DEPTH, &mut rng, &mut draw);
        // endomorphisms that map translations to translations
        let p = GroupFn::random_endomorphism(group, TREE_DEPTH, &mut rng, &mut draw);
        let q = GroupFn::random_endomorphism(group, TREE_DEPTH, &mut rng, &mut draw);
        let constant = GroupFn::constant(group, group.random_element(&mut rng));
        let alpha = sample::nonzero_scalar(&mut rng, field);
        let beta = sample::nonzero_scalar(&mut rng, field);

        let fg = f.smile(&g)?;
        let rd_lhs = fg.compose(&h)?;
        let rd_rhs = f.compose(&h)?.smile(&g.compose(&h)?)?;
        let ld_lhs = e.compose(&fg)?;
        let ld_rhs = e.compose(&f)?.smile(&e.compose(&g)?)?;
        let neg = f.smile(&f.pointwise_inverse())?;
        let with_unit = f.smile(&trivial)?;
        let pq = p.smile(&q)?;
        let qp = q.smile(&p)?;
        let ctl_lhs = constant.compose(&fg)?;
        let ctl_rhs = constant.compose(&f)?.smile(&constant.compose(&g)?)?;

        let tree_witness = |x: &TElement| {
            json!({
                "trial": trial,
                "f": f.to_json(),
                "g": g.to_json(),
                "h": h.to_json(),
                "e": e.to_json(),
                "x": t_json(x),
            })
        };

        for _ in 0..POINTS_PER_TREE {
            let x = group.random_element(&mut rng);
            compare(group, &mut rdistr, &rd_lhs, &rd_rhs, &x, &tree_witness);
            compare(group, &mut ldistr, &ld_lhs, &ld_rhs, &x, &tree_witness);
            compare(group, &mut negation, &neg, &trivial, &x, &tree_witness);
            compare(group, &mut unit, &with_unit, &f, &x, &tree_witness);
            match (ctl_lhs.eval(&x), ctl_rhs.eval(&x)) {
                (Ok(a), Ok(b)) => {
                    let gap = group.distance(&a, &b);
                    if gap < control_gap {
                        control_gap = gap;
                        control_witness = tree_witness(&x);
                    }
                }
                (Err(err), _) | (_, Err(err)) => {
                    control_gap = 0.0;
                    control_witness = Value::String(err.to_string());
                }
            }

            let b1 = group.random_translation_vector(&mut rng);
            let b2 = group.random_translation_vector(&mut rng);
            let pair_witness = || {
                json!({
                    "trial": trial,
                    "p": p.to_json(),
                    "q": q.to_json(),
                    "b1": crate::serial::element_json(&b1),
                    "b2": crate::serial::element_json(&b2),
                    "alpha": scalar_json(alpha),
                    "beta": scalar_json(beta),
                })
            };
            let outcome = comm_cond(group, &p, &q, &pq, &qp, &b1, &b2);
            match outcome {
                Ok((images, endo, sym)) => {
                    comm_images.record(images, pair_witness);
                    comm_endo.record(endo, pair_witness);
                    comm_sym.record(sym, pair_witness);
                }
                Err(err) => {
                    comm_images.record_failure(err.to_string());
                    comm_endo.record_failure(err.to_string());
                    comm_sym.record_failure(err.to_string());
                }
            }
            match scalar_laws(group, &p, &q, &pq, &b1, alpha, beta) {
                Ok((sum, smile)) => {
                    scalar_sum.record(sum, pair_witness);
                    scalar_smile.record(smile, pair_witness);
                }
                Err(err) => {
                    scalar_sum.record_failure(err.to_string());
                    scalar_smile.record_failure(err.to_string());
                }
            }
        }

        // the same identities on the matrices of inner automorphisms
        let l1 = group.random_element(&mut rng);
        let l2 = group.random_element(&mut rng);
        match endo_scalar_laws(group, &l1, &l2, alpha, beta) {
            Ok((sum, smile)) => {
                let w = || json!({ "trial": trial, "g1": t_json(&l1), "g2": t_json(&l2) });
                scalar_sum_endo.record(sum, w);
                scalar_smile_endo.record(smile, w);
            }
            Err(err) => {
                scalar_sum_endo.record_failure(err.to_string());
                scalar_smile_endo.record_failure(err.to_string());
            }
        }
    }

    let mut report = VerificationReport::new("quasiring", seed, trials, tol);
    for acc in [
        rdistr,
        ldistr,
        comm_images,
        comm_endo,
        comm_sym,
        negation,
        unit,
        scalar_sum,
        scalar_smile,
        scalar_sum_endo,
        scalar_smile_endo,
    ] {
        report.push(acc.finish());
    }
    // negative control: a constant map is not an endomorphism and must
    // break left distributivity at every sampled point
    report.push(Check::new(
        "ldistr_fails_for_constant_map",
        tol,
        (VIOLATION_FLOOR - control_gap).max(0.0),
        Some(json!({ "min_gap": control_gap, "worst": control_witness })),
    ));
    Ok(report)
}

fn compare(
    group: &SemidirectGroup,
    acc: &mut Accumulator,
    lhs: &GroupFn<SemidirectGroup>,
    rhs: &GroupFn<SemidirectGroup>,
    x: &TElement,
    witness: &impl Fn(&TElement) -> Value,
) {
    match (lhs.eval(x), rhs.eval(x)) {
        (Ok(a), Ok(b)) => acc.record(group.distance(&a, &b), || witness(x)),
        (Err(err), _) | (_, Err(err)) => acc.record_failure(err.to_string()),
    }
}

/// Returns the errors of: images of `p` and `q` commute; `p ⌣ q` is
/// multiplicative on translations; `p ⌣ q = q ⌣ p` on translations.
fn comm_cond(
    group: &SemidirectGroup,
    p: &GroupFn<SemidirectGroup>,
    q: &GroupFn<SemidirectGroup>,
    pq: &GroupFn<SemidirectGroup>,
    qp: &GroupFn<SemidirectGroup>,
    b1: &AlgebraElement,
    b2: &AlgebraElement,
) -> Result<(f64, f64, f64)> {
    let x = TElement::shift(b1.clone());
    let y = TElement::shift(b2.clone());
    let px = p.eval(&x)?;
    let qy = q.eval(&y)?;
    let images = group.distance(&group.operate(&px, &qy)?, &group.operate(&qy, &px)?);
    let xy = group.operate(&x, &y)?;
    let endo = group.distance(&pq.eval(&xy)?, &group.operate(&pq.eval(&x)?, &pq.eval(&y)?)?);
    let sym = group.distance(&pq.eval(&x)?, &qp.eval(&x)?);
    Ok((images, endo, sym))
}

/// `(αf)⌣(βf) = (α+β)f` and `(αf)⌣(αg) = α(f⌣g)` at the translation `b`,
/// with `(λf)(b) = f(λb)`.
fn scalar_laws(
    group: &SemidirectGroup,
    f: &GroupFn<SemidirectGroup>,
    g: &GroupFn<SemidirectGroup>,
    fg: &GroupFn<SemidirectGroup>,
    b: &AlgebraElement,
    alpha: Scalar,
    beta: Scalar,
) -> Result<(f64, f64)> {
    let at_alpha = scaled_shift(b, alpha)?;
    let at_beta = scaled_shift(b, beta)?;
    let sum_lhs = group.operate(&f.eval(&at_alpha)?, &f.eval(&at_beta)?)?;
    let sum_rhs = f.eval(&scaled_shift(b, alpha + beta)?)?;
    let smile_lhs = group.operate(&f.eval(&at_alpha)?, &g.eval(&at_alpha)?)?;
    let smile_rhs = fg.eval(&at_alpha)?;
    Ok((
        group.distance(&sum_lhs, &sum_rhs),
        group.distance(&smile_lhs, &smile_rhs),
    ))
}

fn endo_scalar_laws(
    group: &SemidirectGroup,
    g1: &TElement,
    g2: &TElement,
    alpha: Scalar,
    beta: Scalar,
) -> Result<(f64, f64)> {
    let f = ad_endo(group, g1)?;
    let g = ad_endo(group, g2)?;
    let sum_lhs = endo_scalar(group, alpha, &f)?.smile(&endo_scalar(group, beta, &f)?)?;
    let sum_rhs = endo_scalar(group, alpha + beta, &f)?;
    let smile_lhs = endo_scalar(group, alpha, &f)?.smile(&endo_scalar(group, alpha, &g)?)?;
    let smile_rhs = endo_scalar(group, alpha, &f.smile(&g)?)?;
    Ok((sum_lhs.rel_diff(&sum_rhs), smile_lhs.rel_diff(&smile_rhs)))
}

/// `b -> g b g*` on the complex span of the Hermitian basis, i.e. on all of
/// the Pauli algebra. It is complex-linear, so complex scalars can be fed in
/// to exhibit the failure of `λ[l] = [λl]`.
fn complexified_star_endo(g: &AlgebraElement) -> Result<SquareMatrix> {
    let spec = g.spec();
    let g_star = g.star()?;
    let columns = (0..spec.dim())
        .map(|j| {
            let b = AlgebraElement::basis(spec, j);
            Ok(g.mul(&b)?.mul(&g_star)?.coords().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SquareMatrix::from_columns(&columns))
}

fn gap_check(name: &str, tol: f64, gap: f64, expected: f64) -> Check {
    Check::new(
        name,
        tol,
        (gap - expected).abs(),
        Some(json!({ "gap": gap, "expected": expected })),
    )
}

/// Explicit witnesses that smile and scalar action on the star-fixed group
/// of the Pauli algebra do not reproduce the algebra, with the same laws
/// holding in `D` of the Pauli algebra as a positive control.
pub fn star_counterexamples(tol: f64) -> Result<VerificationReport> {
    let spec = pauli_spec();
    let star_d = SemidirectGroup::new(GroupKind::StarD, spec.clone())?;
    let d = SemidirectGroup::new(GroupKind::D, spec.clone())?;
    let one = AlgebraElement::unit(&spec);
    let two = one.scale(Scalar::new(2.0, 0.0))?;
    let i = Scalar::new(0.0, 1.0);
    let mut report = VerificationReport::new("star-counterexamples", 0, 1, tol);

    // ([1] ⌣ [1])(b) = 2b but [1 + 1](b) = 4b, evaluated in the group
    let conj_one = GroupFn::conjugation(&star_d, star_d.lift(&one)?);
    let conj_two = GroupFn::conjugation(&star_d, star_d.lift(&two)?);
    let smile = conj_one.smile(&conj_one)?;
    let b = spec_element(&spec, [1.0, 0.0, 0.0, 1.0]);
    let x = star_d.translation(b.clone())?;
    let smiled = smile.eval(&x)?;
    let summed = conj_two.eval(&x)?;
    let twice = b.scale(Scalar::new(2.0, 0.0))?;
    let four = b.scale(Scalar::new(4.0, 0.0))?;
    report.push(Check::new(
        "starD_smile_of_units_doubles",
        tol,
        smiled.translation().rel_diff(&twice),
        Some(t_json(&smiled)),
    ));
    report.push(Check::new(
        "starD_sum_of_units_quadruples",
        tol,
        summed.translation().rel_diff(&four),
        Some(t_json(&summed)),
    ));
    let e_one = ad_endo(&star_d, &star_d.lift(&one)?)?;
    let e_two = ad_endo(&star_d, &star_d.lift(&two)?)?;
    let add_gap = e_one.smile(&e_one)?.smile(&e_two.negate())?.operator_norm();
    report.push(gap_check("starD_additive_gap_is_two", tol, add_gap, 2.0));

    // i[1] is i times the identity while [i1] is b -> (i)b(i)* = b
    let field_rejects = matches!(endo_scalar(&star_d, i, &e_one), Err(Error::FieldMismatch(_)));
    report.push(Check::new(
        "starD_rejects_complex_scalars",
        tol,
        if field_rejects { 0.0 } else { 1.0 },
        None,
    ));
    let scaled_first = complexified_star_endo(&one)?.scale(i);
    let scaled_inside = complexified_star_endo(&one.scale(i)?)?;
    let id = SquareMatrix::identity(spec.dim());
    report.push(Check::new(
        "starD_scalar_witness_i_times_unit",
        tol,
        scaled_first.rel_diff(&id.scale(i)),
        None,
    ));
    report.push(Check::new(
        "starD_scalar_witness_unit_times_i",
        tol,
        scaled_inside.rel_diff(&id),
        None,
    ));
    let scalar_gap = (&scaled_first - &scaled_inside).operator_norm();
    report.push(gap_check(
        "starD_scalar_gap_is_sqrt2",
        tol,
        scalar_gap,
        std::f64::consts::SQRT_2,
    ));
    // what does hold: [μl] = |μ|²[l]
    let mu = Scalar::new(0.6, -1.3);
    let l = spec_element(&spec, [1.0, 0.5, -0.25, 0.0]);
    let lhs = ad_endo(&star_d, &star_d.lift(&l.scale(mu)?)?)?;
    let rhs = ad_endo(&star_d, &star_d.lift(&l)?)?.scale(Scalar::new(mu.norm_sqr(), 0.0))?;
    report.push(Check::new(
        "starD_modulus_squared_law",
        tol,
        lhs.rel_diff(&rhs),
        None,
    ));

    // positive controls in D
    let sigma0 = AlgebraElement::basis(&spec, 0);
    let sigma1 = AlgebraElement::basis(&spec, 1);
    let sigma2 = AlgebraElement::basis(&spec, 2);
    let mut worst_scalar = 0.0f64;
    for (lambda, l) in [
        (Scalar::new(2.0, 0.0), sigma0.clone()),
        (Scalar::new(0.3, 0.7), sigma1.add(&two)?),
        (i, sigma0.clone()),
    ] {
        let lhs = endo_scalar(&d, lambda, &ad_endo(&d, &d.lift(&l)?)?)?;
        let rhs = ad_endo(&d, &d.lift(&l.scale(lambda)?)?)?;
        worst_scalar = worst_scalar.max(lhs.rel_diff(&rhs));
    }
    report.push(Check::new("D_scalar_law_holds", tol, worst_scalar, None));
    let lhs = ad_endo(&d, &d.lift(&sigma1)?)?.smile(&ad_endo(&d, &d.lift(&sigma2)?)?)?;
    let rhs = ad_endo(&d, &d.lift(&sigma1.add(&sigma2)?)?)?;
    report.push(Check::new("D_additive_law_holds", tol, lhs.rel_diff(&rhs), None));
    let one_d = ad_endo(&d, &d.lift(&one)?)?;
    let sum_d = one_d.smile(&one_d)?;
    report.push(Check::new(
        "D_smile_of_units_is_two",
        tol,
        sum_d.rel_diff(&ad_endo(&d, &d.lift(&two)?)?),
        None,
    ));
    debug_assert_eq!(
        LinearEndo::identity(Field::Real, 4).dim(),
        star_d.translation_dim()
    );
    Ok(report)
}

fn spec_element(spec: &std::sync::Arc<crate::algebra::AlgebraSpec>, coords: [f64; 4]) -> AlgebraElement {
    AlgebraElement::new(spec, coords.iter().map(|&c| Scalar::new(c, 0.0)).collect())
        .expect("finite coordinates")
}

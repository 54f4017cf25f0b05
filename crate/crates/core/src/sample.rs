//! Seeded random sampling of algebra and group elements.
//!
//! Every trial draws from its own ChaCha stream derived from
//! `(seed, trial index)`, so results do not depend on evaluation order.

use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, AlgebraSpec, Field, Scalar};
use crate::matrix::SquareMatrix;

/// Smallest relative pivot accepted when sampling invertible elements, so
/// that random inverses stay well inside the comparison tolerance.
const CONDITION_FLOOR: f64 = 1e-2;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform in the unit square (real part only for real fields).
pub fn scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    let re = rng.gen_range(-1.0..1.0);
    match field {
        Field::Real => Complex64::new(re, 0.0),
        Field::Complex => Complex64::new(re, rng.gen_range(-1.0..1.0)),
    }
}

pub fn nonzero_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let z = scalar(rng, field);
        if z.norm() > 0.1 {
            return z;
        }
    }
}

pub fn element(rng: &mut impl Rng, spec: &Arc<AlgebraSpec>) -> AlgebraElement {
    let coords = (0..spec.dim()).map(|_| scalar(rng, spec.field())).collect();
    AlgebraElement::new(spec, coords).expect("sampled coordinates are finite")
}

fn well_conditioned(x: &AlgebraElement) -> bool {
    x.left_mult_matrix().lu().min_pivot_ratio >= CONDITION_FLOOR
}

pub fn invertible(rng: &mut impl Rng, spec: &Arc<AlgebraSpec>) -> AlgebraElement {
    loop {
        let x = element(rng, spec);
        if well_conditioned(&x) {
            return x;
        }
    }
}

/// Random unitary `n x n` matrix: Gram-Schmidt on random complex columns.
pub fn unitary(rng: &mut impl Rng, n: usize) -> SquareMatrix {
    loop {
        let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut v: Vec<Complex64> = (0..n).map(|_| scalar(rng, Field::Complex)).collect();
            for q in &columns {
                let c: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, qi) in v.iter_mut().zip(q) {
                    *x -= c * qi;
                }
            }
            let norm = crate::matrix::vec_norm(&v);
            if norm < 0.1 {
                break;
            }
            columns.push(v.iter().map(|z| z / norm).collect());
        }
        if columns.len() == n {
            return SquareMatrix::from_columns(&columns);
        }
    }
}

/// Invertible element whose matrix has singular values in
/// `[1/SPREAD, SPREAD]`, so that long products and their inverses stay
/// accurate. Algebras whose matrix form is not the full matrix algebra over
/// the complex numbers fall back to [`invertible`].
pub fn bounded_invertible(rng: &mut impl Rng, spec: &Arc<AlgebraSpec>) -> AlgebraElement {
    const SPREAD: f64 = 2.0;
    let Some(n) = spec.matrix_size() else {
        return invertible(rng, spec);
    };
    let u = unitary(rng, n);
    let v = unitary(rng, n);
    let s: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(SPREAD.powf(rng.gen_range(-1.0..1.0)), 0.0))
        .collect();
    let m = &(&u * &SquareMatrix::diagonal(&s)) * &v.adjoint();
    // real algebras and proper subalgebras of the matrices reject most
    // such draws; use plain rejection sampling for them
    AlgebraElement::from_matrix(spec, &m).unwrap_or_else(|_| invertible(rng, spec))
}

/// Invertible element of a 2x2 matrix algebra rescaled to determinant 1.
pub fn unimodular(rng: &mut impl Rng, spec: &Arc<AlgebraSpec>) -> AlgebraElement {
    loop {
        let x = bounded_invertible(rng, spec);
        let m = x.to_matrix().expect("unimodular sampling needs a matrix form");
        let n = m.dim() as f64;
        let det = m.det();
        let root = det.powf(1.0 / n);
        let scaled = m.scale(root.inv());
        if let Ok(y) = AlgebraElement::from_matrix(spec, &scaled) {
            if well_conditioned(&y) {
                return y;
            }
        }
    }
}

pub fn hermitian(rng: &mut impl Rng, spec: &Arc<AlgebraSpec>) -> AlgebraElement {
    let x = element(rng, spec);
    let s = x.star().expect("hermitian sampling needs an involution");
    x.add(&s)
        .expect("same algebra")
        .scale(Complex64::new(0.5, 0.0))
        .expect("real scalar")
}

/// Random complex 2x2 matrix with determinant 1.
pub fn sl2(rng: &mut impl Rng) -> SquareMatrix {
    loop {
        let m = SquareMatrix::from_fn(2, |_, _| scalar(rng, Field::Complex));
        if m.lu().min_pivot_ratio < CONDITION_FLOOR {
            continue;
        }
        let scaled = m.scale(m.det().sqrt().inv());
        if scaled.lu().min_pivot_ratio >= CONDITION_FLOOR {
            return scaled;
        }
    }
}

pub fn real_vec4(rng: &mut impl Rng) -> crate::spacetime::Vec4 {
    crate::spacetime::Vec4::real(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

pub fn complex_vec4(rng: &mut impl Rng) -> crate::spacetime::Vec4 {
    crate::spacetime::Vec4::complex([0, 1, 2, 3].map(|_| scalar(rng, Field::Complex)))
}

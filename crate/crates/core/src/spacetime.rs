//! Minkowski space through `2 x 2` matrices.
//!
//! A four-vector `v` corresponds to `H = sum v_i sigma_i`, with
//! `det H = v0^2 - v1^2 - v2^2 - v3^2` (signature `+ - - -`). `SL(2, C)`
//! acts on Hermitian `H` by `H -> M H M*`, which double covers the proper
//! orthochronous Lorentz group, and pairs `(L, R)` act on complex vectors by
//! `a -> L a R^-1`, giving complex rotations in `SO(4, C)`.

use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{pauli_matrices, AlgebraElement, AlgebraSpec, Scalar};
use crate::error::{Error, Result};
use crate::group::TElement;
use crate::matrix::SquareMatrix;

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

const ZERO: Scalar = Complex64::new(0.0, 0.0);
const ONE: Scalar = Complex64::new(1.0, 0.0);

/// A space-time vector with possibly complex components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec4 {
    components: [Scalar; 4],
    real: bool,
}

impl Vec4 {
    pub fn real(v0: f64, v1: f64, v2: f64, v3: f64) -> Self {
        Self {
            components: [v0, v1, v2, v3].map(|x| Complex64::new(x, 0.0)),
            real: true,
        }
    }

    pub fn complex(components: [Scalar; 4]) -> Self {
        Self {
            components,
            real: false,
        }
    }

    /// Complex vector, flagged real when every imaginary part is exactly 0.
    pub fn from_components(components: [Scalar; 4]) -> Self {
        Self {
            components,
            real: components.iter().all(|z| z.im == 0.0),
        }
    }

    pub fn components(&self) -> [Scalar; 4] {
        self.components
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn real_parts(&self) -> [f64; 4] {
        self.components.map(|z| z.re)
    }

    pub fn is_finite(&self) -> bool {
        self.components
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn rel_diff(&self, other: &Vec4) -> f64 {
        let diff = (*self - *other).max_abs();
        diff / 1f64.max(self.max_abs()).max(other.max_abs())
    }
}

impl Add for Vec4 {
    type Output = Vec4;

    fn add(self, rhs: Vec4) -> Vec4 {
        let mut c = self.components;
        for (a, b) in c.iter_mut().zip(rhs.components) {
            *a += b;
        }
        Vec4 {
            components: c,
            real: self.real && rhs.real,
        }
    }
}

impl Sub for Vec4 {
    type Output = Vec4;

    fn sub(self, rhs: Vec4) -> Vec4 {
        let mut c = self.components;
        for (a, b) in c.iter_mut().zip(rhs.components) {
            *a -= b;
        }
        Vec4 {
            components: c,
            real: self.real && rhs.real,
        }
    }
}

impl fmt::Display for Vec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if self.real {
                write!(f, "{}", z.re)?;
            } else {
                write!(f, "{z}")?;
            }
        }
        write!(f, ")")
    }
}

fn ensure_2x2(m: &SquareMatrix) -> Result<()> {
    if m.dim() == 2 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: 2,
            found: m.dim(),
        })
    }
}

/// `v -> sum v_i sigma_i`.
pub fn vec_to_mat(v: &Vec4) -> SquareMatrix {
    let sigma = pauli_matrices();
    let mut out = SquareMatrix::zeros(2);
    for (s, c) in sigma.iter().zip(v.components) {
        out = &out + &s.scale(c);
    }
    out
}

/// `v_i = tr(M sigma_i) / 2`.
pub fn mat_to_vec(m: &SquareMatrix) -> Result<Vec4> {
    ensure_2x2(m)?;
    let sigma = pauli_matrices();
    let mut c = [ZERO; 4];
    for (out, s) in c.iter_mut().zip(&sigma) {
        *out = (m * s).trace() * 0.5;
    }
    Ok(Vec4::complex(c))
}

/// As [`mat_to_vec`] but requires `m` to be Hermitian and returns a real
/// vector.
pub fn mat_to_real_vec(m: &SquareMatrix, tol: f64) -> Result<Vec4> {
    let defect = m.hermitian_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    let v = mat_to_vec(m)?;
    let r = v.real_parts();
    Ok(Vec4::real(r[0], r[1], r[2], r[3]))
}

/// `v0^2 - v1^2 - v2^2 - v3^2` (no conjugation, so it is the complex
/// quadratic form for complex vectors).
pub fn mink_norm(v: &Vec4) -> Scalar {
    v.components.iter().zip(METRIC).map(|(z, g)| z * z * g).sum()
}

/// `H -> M H M*`.
pub fn mhm_action(m: &SquareMatrix, h: &SquareMatrix, tol: f64) -> Result<SquareMatrix> {
    ensure_2x2(m)?;
    ensure_2x2(h)?;
    let defect = h.hermitian_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    if m.is_singular() {
        return Err(Error::NotInvertible);
    }
    Ok(&(m * h) * &m.adjoint())
}

fn ensure_unimodular(m: &SquareMatrix, tol: f64) -> Result<()> {
    ensure_2x2(m)?;
    let det = m.det();
    if (det - ONE).norm() > tol {
        return Err(Error::Determinant(format!("det = {det}, expected 1")));
    }
    Ok(())
}

/// A real `4 x 4` Lorentz transformation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self(m)
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn to_matrix(&self) -> SquareMatrix {
        SquareMatrix::from_fn(4, |i, j| Complex64::new(self.0[i][j], 0.0))
    }

    pub fn apply(&self, v: &Vec4) -> Vec4 {
        let c = v.components();
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| c[j] * self.0[i][j]).sum();
        }
        Vec4 {
            components: out,
            real: v.real,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..4).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Self(m)
    }

    /// Largest entry of `|L^T g L - g|`.
    pub fn metric_residual(&self) -> f64 {
        metric_residual(&self.to_matrix())
    }

    pub fn det(&self) -> f64 {
        self.to_matrix().det().re
    }

    pub fn rel_diff(&self, other: &Self) -> f64 {
        self.to_matrix().rel_diff(&other.to_matrix())
    }
}

/// Largest entry of `|O^T g O - g|`, with a plain (unconjugated) transpose.
pub fn metric_residual(o: &SquareMatrix) -> f64 {
    let g = SquareMatrix::diagonal(&METRIC.map(|x| Complex64::new(x, 0.0)));
    let lhs = &(&o.transpose() * &g) * o;
    (&lhs - &g).max_abs()
}

/// Image of `M in SL(2, C)` in `SO+(3, 1)`: column `j` is the vector of
/// `M sigma_j M*`.
pub fn lorentz_from_sl2(m: &SquareMatrix, tol: f64) -> Result<LorentzMatrix> {
    ensure_unimodular(m, tol)?;
    let sigma = pauli_matrices();
    let mut out = [[0.0; 4]; 4];
    for (j, s) in sigma.iter().enumerate() {
        let image = &(m * s) * &m.adjoint();
        // the image of a Hermitian matrix is Hermitian, so the vector is real
        let col = mat_to_vec(&image)?.components();
        for i in 0..4 {
            out[i][j] = col[i].re;
        }
    }
    Ok(LorentzMatrix(out))
}

/// Complex rotation `a -> L a R^-1` as a `4 x 4` matrix on vector
/// components; column `j` is the vector of `L sigma_j R^-1`.
///
/// `det L / det R` must be `+1` or `-1`. The quadratic form is scaled by
/// that ratio, so it is preserved exactly when the ratio is `+1`.
pub fn so4c_from_pair(l: &SquareMatrix, r: &SquareMatrix, tol: f64) -> Result<SquareMatrix> {
    ensure_2x2(l)?;
    ensure_2x2(r)?;
    let r_inv = r.inverse()?;
    if l.is_singular() {
        return Err(Error::NotInvertible);
    }
    let ratio = l.det() / r.det();
    if (ratio - ONE).norm() > tol && (ratio + ONE).norm() > tol {
        return Err(Error::Determinant(format!(
            "det(L)/det(R) = {ratio}, expected +1 or -1"
        )));
    }
    let sigma = pauli_matrices();
    let columns: Vec<Vec<Scalar>> = sigma
        .iter()
        .map(|s| {
            let image = &(l * s) * &r_inv;
            mat_to_vec(&image).map(|v| v.components().to_vec())
        })
        .collect::<Result<_>>()?;
    Ok(SquareMatrix::from_columns(&columns))
}

/// Element `(H, Lambda)` of the spinor Poincare group, acting on Hermitian
/// matrices by `X -> Lambda X Lambda* + H`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinPoincareElement {
    translation: SquareMatrix,
    spinor: SquareMatrix,
}

impl SpinPoincareElement {
    pub fn new(translation: SquareMatrix, spinor: SquareMatrix, tol: f64) -> Result<Self> {
        ensure_2x2(&translation)?;
        let defect = translation.hermitian_defect();
        if defect > tol {
            return Err(Error::NotHermitian(defect));
        }
        ensure_unimodular(&spinor, tol)?;
        Ok(Self { translation, spinor })
    }

    pub fn identity() -> Self {
        Self {
            translation: SquareMatrix::zeros(2),
            spinor: SquareMatrix::identity(2),
        }
    }

    pub fn translation_by(v: &Vec4) -> Result<Self> {
        if !v.is_real() {
            return Err(Error::Unsupported("translations need a real 4-vector".into()));
        }
        Ok(Self {
            translation: vec_to_mat(v),
            spinor: SquareMatrix::identity(2),
        })
    }

    /// Boost `exp(eta sigma_k / 2)` along spatial axis `k`.
    pub fn boost(axis: usize, rapidity: f64) -> Result<Self> {
        let s = axis_matrix(axis)?;
        let (ch, sh) = ((rapidity / 2.0).cosh(), (rapidity / 2.0).sinh());
        let spinor = &SquareMatrix::identity(2).scale(ch.into()) + &s.scale(sh.into());
        Ok(Self {
            translation: SquareMatrix::zeros(2),
            spinor,
        })
    }

    /// Rotation `exp(-i theta sigma_k / 2)` about spatial axis `k`. For
    /// `k = 3` it sends `sigma1` to `cos(theta) sigma1 + sin(theta) sigma2`.
    pub fn rotation(axis: usize, angle: f64) -> Result<Self> {
        let s = axis_matrix(axis)?;
        let (c, sn) = ((angle / 2.0).cos(), (angle / 2.0).sin());
        let spinor = &SquareMatrix::identity(2).scale(c.into()) + &s.scale(Complex64::new(0.0, -sn));
        Ok(Self {
            translation: SquareMatrix::zeros(2),
            spinor,
        })
    }

    pub fn translation(&self) -> &SquareMatrix {
        &self.translation
    }

    pub fn spinor(&self) -> &SquareMatrix {
        &self.spinor
    }

    /// `(H1, L1)(H2, L2) = (H1 + L1 H2 L1*, L1 L2)`.
    pub fn compose(&self, other: &Self) -> Self {
        let moved = &(&self.spinor * &other.translation) * &self.spinor.adjoint();
        Self {
            translation: &self.translation + &moved,
            spinor: &self.spinor * &other.spinor,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.spinor.inverse()?;
        let moved = &(&inv * &self.translation) * &inv.adjoint();
        Ok(Self {
            translation: -&moved,
            spinor: inv,
        })
    }

    /// `[[L, H L*^-1], [0, L*^-1]]`.
    pub fn matrix_rep(&self) -> Result<SquareMatrix> {
        let adj_inv = self.spinor.adjoint().inverse()?;
        Ok(SquareMatrix::from_blocks(
            &self.spinor,
            &(&self.translation * &adj_inv),
            &SquareMatrix::zeros(2),
            &adj_inv,
        ))
    }

    /// The triple `(H, L, L*^-1)` in `T~` of the given 2x2 algebra.
    pub fn to_triple(&self, spec: &Arc<AlgebraSpec>) -> Result<TElement> {
        let adj_inv = self.spinor.adjoint().inverse()?;
        TElement::new(
            AlgebraElement::from_matrix(spec, &self.translation)?,
            AlgebraElement::from_matrix(spec, &self.spinor)?,
            AlgebraElement::from_matrix(spec, &adj_inv)?,
        )
    }

    /// Acts on a real event `v`.
    pub fn apply(&self, v: &Vec4) -> Result<Vec4> {
        if !v.is_real() {
            return Err(Error::Unsupported(
                "spinor Poincare elements act on real vectors only".into(),
            ));
        }
        let x = vec_to_mat(v);
        let image = &(&(&self.spinor * &x) * &self.spinor.adjoint()) + &self.translation;
        let r = mat_to_vec(&image)?.real_parts();
        Ok(Vec4::real(r[0], r[1], r[2], r[3]))
    }

    pub fn lorentz(&self, tol: f64) -> Result<LorentzMatrix> {
        lorentz_from_sl2(&self.spinor, tol)
    }

    pub fn rel_diff(&self, other: &Self) -> f64 {
        self.translation
            .rel_diff(&other.translation)
            .max(self.spinor.rel_diff(&other.spinor))
    }
}

fn axis_matrix(axis: usize) -> Result<SquareMatrix> {
    match axis {
        1..=3 => Ok(pauli_matrices()[axis].clone()),
        _ => Err(Error::BadAxis(axis)),
    }
}

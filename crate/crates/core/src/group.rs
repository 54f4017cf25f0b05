//! Semidirect products built from an algebra `A`:
//!
//! * `D(A)`, pairs `(B, L)` acting by `a -> L a + B`;
//! * `T~(A)`, triples `(B, L, R)` acting by `a -> L a R^-1 + B`;
//! * the star-fixed subgroup of `T~(A)`, triples `(H, G, G*^-1)` with `H`
//!   Hermitian.
//!
//! The quotient `T(A)` by central rescaling `(B, L, R) ~ (B, cL, cR)` is
//! handled through [`center_equiv`] rather than a normal form.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, AlgebraSpec};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Default relative tolerance for comparing group elements.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Antiautomorphism used to turn right multiplication into a left action.
///
/// `Inverse` gives `R'_r : a -> a r^-1` and is what every other routine in
/// the crate assumes. `Adjoint` gives `a -> a r*` and is only available for
/// algebras with an involution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RightTwist {
    #[default]
    Inverse,
    Adjoint,
}

impl RightTwist {
    fn apply(self, r: &AlgebraElement) -> Result<AlgebraElement> {
        match self {
            RightTwist::Inverse => r.invert(),
            RightTwist::Adjoint => r.star(),
        }
    }
}

fn ensure_invertible(x: &AlgebraElement) -> Result<()> {
    if x.is_invertible() {
        Ok(())
    } else {
        Err(Error::NotInvertible)
    }
}

/// Element `(B, L)` of `D(A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DElement {
    translation: AlgebraElement,
    left: AlgebraElement,
}

impl DElement {
    pub fn new(translation: AlgebraElement, left: AlgebraElement) -> Result<Self> {
        translation.spec().ensure_same(left.spec())?;
        ensure_invertible(&left)?;
        Ok(Self { translation, left })
    }

    pub fn identity(spec: &Arc<AlgebraSpec>) -> Self {
        Self {
            translation: AlgebraElement::zero(spec),
            left: AlgebraElement::unit(spec),
        }
    }

    /// `S_b = D(b, 1)`.
    pub fn shift(b: AlgebraElement) -> Self {
        let left = AlgebraElement::unit(b.spec());
        Self { translation: b, left }
    }

    /// `L_l = D(0, l)`.
    pub fn left_mult(l: AlgebraElement) -> Result<Self> {
        Self::new(AlgebraElement::zero(l.spec()), l)
    }

    pub fn translation(&self) -> &AlgebraElement {
        &self.translation
    }

    pub fn left(&self) -> &AlgebraElement {
        &self.left
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        self.left.spec()
    }

    /// `(B1, L1)(B2, L2) = (L1 B2 + B1, L1 L2)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.spec().ensure_same(other.spec())?;
        Ok(Self {
            translation: self.left.mul(&other.translation)?.add(&self.translation)?,
            left: self.left.mul(&other.left)?,
        })
    }

    /// `(B, L)^-1 = (-L^-1 B, L^-1)`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.left.invert()?;
        Ok(Self {
            translation: inv.mul(&self.translation)?.neg(),
            left: inv,
        })
    }

    /// `a -> L a + B`.
    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.left.mul(a)?.add(&self.translation)
    }

    /// `[[L, B], [0, 1]]` acting on the stacked column `[[a], [1]]`.
    pub fn matrix_rep(&self) -> Result<SquareMatrix> {
        let l = self.left.to_matrix()?;
        let n = l.dim();
        Ok(SquareMatrix::from_blocks(
            &l,
            &self.translation.to_matrix()?,
            &SquareMatrix::zeros(n),
            &SquareMatrix::identity(n),
        ))
    }

    /// `(N+1) x (N+1)` affine matrix `[[l^, b], [0, 1]]` on coordinates.
    pub fn affine_rep(&self) -> SquareMatrix {
        let lhat = self.left.left_mult_matrix();
        let n = lhat.dim();
        let b = self.translation.coords();
        SquareMatrix::from_fn(n + 1, |i, j| match (i < n, j < n) {
            (true, true) => lhat.get(i, j),
            (true, false) => b[i],
            (false, true) => 0.0.into(),
            (false, false) => 1.0.into(),
        })
    }

    pub fn rel_diff(&self, other: &Self) -> f64 {
        self.translation
            .rel_diff(&other.translation)
            .max(self.left.rel_diff(&other.left))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rel_diff(other) <= tol
    }
}

/// `Ad[L_l](S_b)`: conjugates the pure translation `(b, 1)` by `(0, l)` and
/// returns the translation part of the result, which equals `l b`.
pub fn adjoint_d(l: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    let g = DElement::left_mult(l.clone())?;
    let conj = g.compose(&DElement::shift(b.clone()))?.compose(&g.inverse()?)?;
    Ok(conj.translation)
}

/// Element `(B, L, R)` of `T~(A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TElement {
    translation: AlgebraElement,
    left: AlgebraElement,
    right: AlgebraElement,
}

impl From<DElement> for TElement {
    fn from(d: DElement) -> Self {
        let right = AlgebraElement::unit(d.spec());
        Self {
            translation: d.translation,
            left: d.left,
            right,
        }
    }
}

impl TElement {
    pub fn new(translation: AlgebraElement, left: AlgebraElement, right: AlgebraElement) -> Result<Self> {
        translation.spec().ensure_same(left.spec())?;
        translation.spec().ensure_same(right.spec())?;
        ensure_invertible(&left)?;
        ensure_invertible(&right)?;
        Ok(Self {
            translation,
            left,
            right,
        })
    }

    pub fn identity(spec: &Arc<AlgebraSpec>) -> Self {
        DElement::identity(spec).into()
    }

    pub fn shift(b: AlgebraElement) -> Self {
        DElement::shift(b).into()
    }

    pub fn left_mult(l: AlgebraElement) -> Result<Self> {
        Ok(DElement::left_mult(l)?.into())
    }

    /// `R'_r = T(0, 1, r)`, acting as `a -> a r^-1`.
    pub fn right_mult(r: AlgebraElement) -> Result<Self> {
        let spec = r.spec().clone();
        Self::new(AlgebraElement::zero(&spec), AlgebraElement::unit(&spec), r)
    }

    pub fn translation(&self) -> &AlgebraElement {
        &self.translation
    }

    pub fn left(&self) -> &AlgebraElement {
        &self.left
    }

    pub fn right(&self) -> &AlgebraElement {
        &self.right
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        self.left.spec()
    }

    /// `(B1, L1, R1)(B2, L2, R2) = (L1 B2 R1^-1 + B1, L1 L2, R1 R2)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.compose_with(other, RightTwist::Inverse)
    }

    pub fn compose_with(&self, other: &Self, twist: RightTwist) -> Result<Self> {
        self.spec().ensure_same(other.spec())?;
        let translation = self
            .left
            .mul(&other.translation)?
            .mul(&twist.apply(&self.right)?)?
            .add(&self.translation)?;
        Ok(Self {
            translation,
            left: self.left.mul(&other.left)?,
            right: self.right.mul(&other.right)?,
        })
    }

    /// `(B, L, R)^-1 = (-L^-1 B R, L^-1, R^-1)`.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with(RightTwist::Inverse)
    }

    pub fn inverse_with(&self, twist: RightTwist) -> Result<Self> {
        let left = self.left.invert()?;
        let right = self.right.invert()?;
        // the twisted image of R^-1 undoes the twisted image of R
        let undo = twist.apply(&right)?;
        let translation = left.mul(&self.translation)?.mul(&undo)?.neg();
        Ok(Self {
            translation,
            left,
            right,
        })
    }

    /// `a -> L a R^-1 + B`.
    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.apply_with(a, RightTwist::Inverse)
    }

    pub fn apply_with(&self, a: &AlgebraElement, twist: RightTwist) -> Result<AlgebraElement> {
        self.left
            .mul(a)?
            .mul(&twist.apply(&self.right)?)?
            .add(&self.translation)
    }

    /// `[[L, B R], [0, R]]`.
    pub fn matrix_rep(&self) -> Result<SquareMatrix> {
        let l = self.left.to_matrix()?;
        let r = self.right.to_matrix()?;
        let br = &self.translation.to_matrix()? * &r;
        Ok(SquareMatrix::from_blocks(
            &l,
            &br,
            &SquareMatrix::zeros(l.dim()),
            &r,
        ))
    }

    /// Reads `(B, L, R)` back out of a block matrix produced by
    /// [`TElement::matrix_rep`].
    pub fn from_matrix_rep(spec: &Arc<AlgebraSpec>, m: &SquareMatrix) -> Result<Self> {
        let n = spec
            .matrix_size()
            .ok_or_else(|| Error::NoMatrixForm(spec.name().to_string()))?;
        if m.dim() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: m.dim(),
            });
        }
        let l = m.block(0, 0, n);
        let br = m.block(0, n, n);
        let r = m.block(n, n, n);
        let b = &br * &r.inverse()?;
        Self::new(
            AlgebraElement::from_matrix(spec, &b)?,
            AlgebraElement::from_matrix(spec, &l)?,
            AlgebraElement::from_matrix(spec, &r)?,
        )
    }

    /// `*(B, L, R) = (B*, R*^-1, L*^-1)`.
    pub fn star(&self) -> Result<Self> {
        Ok(Self {
            translation: self.translation.star()?,
            left: self.right.star()?.invert()?,
            right: self.left.star()?.invert()?,
        })
    }

    pub fn is_pure_translation(&self, tol: f64) -> bool {
        let one = AlgebraElement::unit(self.spec());
        self.left.approx_eq(&one, tol) && self.right.approx_eq(&one, tol)
    }

    pub fn rel_diff(&self, other: &Self) -> f64 {
        self.translation
            .rel_diff(&other.translation)
            .max(self.left.rel_diff(&other.left))
            .max(self.right.rel_diff(&other.right))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rel_diff(other) <= tol
    }
}

/// Element `(H, G)` of the star-fixed subgroup, standing for the triple
/// `(H, G, G*^-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarDElement {
    hermitian: AlgebraElement,
    linear: AlgebraElement,
}

impl StarDElement {
    pub fn new(hermitian: AlgebraElement, linear: AlgebraElement, tol: f64) -> Result<Self> {
        hermitian.spec().ensure_same(linear.spec())?;
        let defect = hermitian.hermitian_defect()?;
        if defect > tol {
            return Err(Error::NotHermitian(defect));
        }
        ensure_invertible(&linear)?;
        Ok(Self { hermitian, linear })
    }

    /// Recognises a triple of the shape `(H, G, G*^-1)`.
    pub fn from_triple(t: &TElement, tol: f64) -> Result<Self> {
        let expected_right = t.left.star()?.invert()?;
        let defect = t.right.rel_diff(&expected_right);
        if defect > tol {
            return Err(Error::Unsupported(format!(
                "triple is not of the form (H, G, G*^-1) (deviation {defect:e})"
            )));
        }
        Self::new(t.translation.clone(), t.left.clone(), tol)
    }

    pub fn hermitian(&self) -> &AlgebraElement {
        &self.hermitian
    }

    pub fn linear(&self) -> &AlgebraElement {
        &self.linear
    }

    pub fn embed(&self) -> Result<TElement> {
        TElement::new(
            self.hermitian.clone(),
            self.linear.clone(),
            self.linear.star()?.invert()?,
        )
    }
}

/// Whether `x` and `y` define the same element of `T(A)`, i.e. `B_x = B_y`
/// and `(L_y, R_y) = c (L_x, R_x)` for a nonzero scalar `c`.
///
/// With a matrix form `c` is `tr(L_y L_x^-1) / n`; without one it is read
/// off the unit coordinates of `L_y L_x^-1`.
pub fn center_equiv(x: &TElement, y: &TElement, tol: f64) -> Result<bool> {
    x.spec().ensure_same(y.spec())?;
    if !x.translation.approx_eq(&y.translation, tol) {
        return Ok(false);
    }
    let spec = x.spec();
    let ratio = y.left.mul(&x.left.invert()?)?;
    let c = match spec.matrix_size() {
        Some(n) => ratio.to_matrix()?.trace() / n as f64,
        None => {
            let unit = spec.unit_coords();
            let k = (0..unit.len())
                .max_by(|&a, &b| unit[a].norm().total_cmp(&unit[b].norm()))
                .unwrap_or(0);
            ratio.coords()[k] / unit[k]
        }
    };
    if c.norm() <= tol {
        return Ok(false);
    }
    let left_ok = x.left.scale_unchecked(c).approx_eq(&y.left, tol);
    let right_ok = x.right.scale_unchecked(c).approx_eq(&y.right, tol);
    Ok(left_ok && right_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra_spec, pauli_spec, Scalar};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Scalar {
        Complex64::new(re, im)
    }

    fn scalar_elem(spec: &Arc<AlgebraSpec>, re: f64) -> AlgebraElement {
        AlgebraElement::scalar(spec, c(re, 0.0)).unwrap()
    }

    fn d1(b: f64, l: f64) -> DElement {
        let spec = matrix_algebra_spec(1);
        DElement::new(scalar_elem(&spec, b), scalar_elem(&spec, l)).unwrap()
    }

    fn t1(b: f64, l: f64, r: f64) -> TElement {
        let spec = matrix_algebra_spec(1);
        TElement::new(
            scalar_elem(&spec, b),
            scalar_elem(&spec, l),
            scalar_elem(&spec, r),
        )
        .unwrap()
    }

    fn sigma(i: usize) -> AlgebraElement {
        AlgebraElement::basis(&pauli_spec(), i)
    }

    #[test]
    fn compose_d_one_dimensional() {
        // oracle: compose the affine maps a -> 2a + 1 and a -> 4a + 3 at
        // sample points; the composite is a -> 8a + 7
        let x = d1(1.0, 2.0);
        let y = d1(3.0, 4.0);
        let xy = x.compose(&y).unwrap();
        for a in [-1.5, 0.0, 2.0] {
            let direct = 2.0 * (4.0 * a + 3.0) + 1.0;
            let pt = scalar_elem(x.spec(), a);
            assert!((xy.apply(&pt).unwrap().coords()[0] - c(direct, 0.0)).norm() < 1e-14);
        }
        assert!(xy.approx_eq(&d1(7.0, 8.0), 1e-15));
        assert_eq!(x.compose(&DElement::identity(x.spec())).unwrap(), x);
    }

    #[test]
    fn d_element_factors_as_shift_then_left() {
        let b = sigma(1);
        let l = sigma(3);
        let prod = DElement::shift(b.clone())
            .compose(&DElement::left_mult(l.clone()).unwrap())
            .unwrap();
        assert_eq!(prod, DElement::new(b, l).unwrap());
    }

    #[test]
    fn invert_d_examples() {
        let spec = pauli_spec();
        let id = DElement::identity(&spec);
        assert_eq!(id.inverse().unwrap(), id);
        let inv = d1(6.0, 3.0).inverse().unwrap();
        assert!(inv.approx_eq(&d1(-2.0, 1.0 / 3.0), 1e-15));
        let x = DElement::new(sigma(1), sigma(3)).unwrap();
        let xi = x.inverse().unwrap();
        let want = DElement::new(sigma(3).mul(&sigma(1)).unwrap().neg(), sigma(3)).unwrap();
        assert!(xi.approx_eq(&want, 1e-15));
        assert!(x.compose(&xi).unwrap().approx_eq(&id, 1e-15));
    }

    #[test]
    fn non_invertible_left_part_is_rejected() {
        let m2 = matrix_algebra_spec(2);
        let e12 = AlgebraElement::basis(&m2, 1);
        assert_eq!(DElement::left_mult(e12.clone()), Err(Error::NotInvertible));
        assert_eq!(TElement::right_mult(e12), Err(Error::NotInvertible));
    }

    #[test]
    fn apply_d_examples() {
        let spec = pauli_spec();
        let a = sigma(2);
        assert_eq!(DElement::identity(&spec).apply(&a).unwrap(), a);
        assert_eq!(
            DElement::shift(sigma(1)).apply(&a).unwrap(),
            a.add(&sigma(1)).unwrap()
        );
        assert_eq!(
            DElement::left_mult(sigma(3)).unwrap().apply(&a).unwrap(),
            sigma(3).mul(&a).unwrap()
        );
    }

    #[test]
    fn matrix_rep_of_shift() {
        let spec = pauli_spec();
        assert_eq!(
            DElement::identity(&spec).matrix_rep().unwrap(),
            SquareMatrix::identity(4)
        );
        let b = sigma(1).add(&sigma(2).scale(c(0.0, 2.0)).unwrap()).unwrap();
        let bm = b.to_matrix().unwrap();
        let rep = DElement::shift(b).matrix_rep().unwrap();
        let want = SquareMatrix::from_blocks(
            &SquareMatrix::identity(2),
            &bm,
            &SquareMatrix::zeros(2),
            &SquareMatrix::identity(2),
        );
        assert_eq!(rep, want);
    }

    #[test]
    fn adjoint_action() {
        assert_eq!(adjoint_d(&sigma(0), &sigma(1)).unwrap(), sigma(1));
        // sigma3 sigma1 = i sigma2
        let got = adjoint_d(&sigma(3), &sigma(1)).unwrap();
        let s3 = pauli_spec_matrix(3);
        let s1 = pauli_spec_matrix(1);
        let want = AlgebraElement::from_matrix(&pauli_spec(), &(&s3 * &s1)).unwrap();
        assert!(got.approx_eq(&want, 1e-15));
        assert_eq!(got.coords()[2], c(0.0, 1.0));
    }

    fn pauli_spec_matrix(i: usize) -> SquareMatrix {
        crate::algebra::pauli_matrices()[i].clone()
    }

    #[test]
    fn affine_rep_identity_and_action() {
        let spec = pauli_spec();
        assert_eq!(DElement::identity(&spec).affine_rep(), SquareMatrix::identity(5));
        let x = DElement::new(
            sigma(2),
            sigma(1).add(&sigma(0).scale(c(2.0, 0.0)).unwrap()).unwrap(),
        )
        .unwrap();
        let a = sigma(3).add(&sigma(0)).unwrap();
        let mut col: Vec<Scalar> = a.coords().to_vec();
        col.push(c(1.0, 0.0));
        let out = x.affine_rep().mat_vec(&col);
        let direct = x.apply(&a).unwrap();
        for k in 0..4 {
            assert!((out[k] - direct.coords()[k]).norm() < 1e-14);
        }
        assert_eq!(out[4], c(1.0, 0.0));
    }

    #[test]
    fn compose_t_one_dimensional() {
        // oracle: maps a -> 2a/4 + 1 and a -> a + 1, composed at points
        let x = t1(1.0, 2.0, 4.0);
        let y = t1(1.0, 1.0, 1.0);
        let xy = x.compose(&y).unwrap();
        for a in [-2.0, 0.5, 3.0] {
            let direct = 2.0 * (a + 1.0) / 4.0 + 1.0;
            let pt = scalar_elem(x.spec(), a);
            assert!((xy.apply(&pt).unwrap().coords()[0] - c(direct, 0.0)).norm() < 1e-14);
        }
        assert!(xy.approx_eq(&t1(1.5, 2.0, 4.0), 1e-15));
        assert_eq!(x.compose(&TElement::identity(x.spec())).unwrap(), x);
    }

    #[test]
    fn invert_t_examples() {
        let spec = pauli_spec();
        let id = TElement::identity(&spec);
        assert_eq!(id.inverse().unwrap(), id);
        let x = t1(1.0, 2.0, 4.0);
        let xi = x.inverse().unwrap();
        assert!(xi.approx_eq(&t1(-2.0, 0.5, 0.25), 1e-15));
        assert!(x
            .compose(&xi)
            .unwrap()
            .approx_eq(&TElement::identity(x.spec()), 1e-15));
        assert!(xi.inverse().unwrap().approx_eq(&x, 1e-15));
    }

    #[test]
    fn t_restricted_to_trivial_right_part_is_d() {
        let x = DElement::new(sigma(1), sigma(2)).unwrap();
        let y = DElement::new(
            sigma(3),
            sigma(0).add(&sigma(1).scale(c(0.5, 0.0)).unwrap()).unwrap(),
        )
        .unwrap();
        let via_t = TElement::from(x.clone())
            .compose(&TElement::from(y.clone()))
            .unwrap();
        assert_eq!(via_t, TElement::from(x.compose(&y).unwrap()));
    }

    #[test]
    fn right_operators_compose_in_order() {
        // R'_{r1} R'_{r2} = R'_{r1 r2}, checked on a sample point
        let r1 = sigma(1).add(&sigma(0).scale(c(2.0, 0.0)).unwrap()).unwrap();
        let r2 = sigma(3).add(&sigma(2).scale(c(0.0, 0.5)).unwrap()).unwrap();
        let a = sigma(2).add(&sigma(0)).unwrap();
        let lhs = TElement::right_mult(r1.clone())
            .unwrap()
            .apply(&TElement::right_mult(r2.clone()).unwrap().apply(&a).unwrap())
            .unwrap();
        let rhs = TElement::right_mult(r1.mul(&r2).unwrap())
            .unwrap()
            .apply(&a)
            .unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-14));
        let pure_r = TElement::right_mult(r1.clone()).unwrap().apply(&a).unwrap();
        assert!(pure_r.approx_eq(&a.mul(&r1.invert().unwrap()).unwrap(), 1e-14));
    }

    #[test]
    fn adjoint_twist_is_a_group_action() {
        let x = TElement::new(
            sigma(1),
            sigma(2),
            sigma(0).add(&sigma(3).scale(c(0.0, 0.5)).unwrap()).unwrap(),
        )
        .unwrap();
        let y = TElement::new(
            sigma(3),
            sigma(0).add(&sigma(1).scale(c(0.3, 0.0)).unwrap()).unwrap(),
            sigma(2),
        )
        .unwrap();
        let a = sigma(0).add(&sigma(2)).unwrap();
        let tw = RightTwist::Adjoint;
        let lhs = x.compose_with(&y, tw).unwrap().apply_with(&a, tw).unwrap();
        let rhs = x.apply_with(&y.apply_with(&a, tw).unwrap(), tw).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-13));
        let id = TElement::identity(x.spec());
        assert!(x
            .compose_with(&x.inverse_with(tw).unwrap(), tw)
            .unwrap()
            .approx_eq(&id, 1e-13));
    }

    #[test]
    fn matrix_rep_t_block_diagonal_without_translation() {
        let l = sigma(1);
        let r = sigma(3);
        let t = TElement::new(AlgebraElement::zero(&pauli_spec()), l.clone(), r.clone()).unwrap();
        let want = SquareMatrix::from_blocks(
            &l.to_matrix().unwrap(),
            &SquareMatrix::zeros(2),
            &SquareMatrix::zeros(2),
            &r.to_matrix().unwrap(),
        );
        assert_eq!(t.matrix_rep().unwrap(), want);
        assert_eq!(
            TElement::identity(&pauli_spec()).matrix_rep().unwrap(),
            SquareMatrix::identity(4)
        );
        let back = TElement::from_matrix_rep(&pauli_spec(), &t.matrix_rep().unwrap()).unwrap();
        assert!(back.approx_eq(&t, 1e-15));
    }

    #[test]
    fn star_examples() {
        let spec = pauli_spec();
        let id = TElement::identity(&spec);
        assert_eq!(id.star().unwrap(), id);
        let g = sigma(0).add(&sigma(1).scale(c(0.2, 0.7)).unwrap()).unwrap();
        let d = StarDElement::new(sigma(3).scale(c(2.0, 0.0)).unwrap(), g, 1e-12).unwrap();
        let t = d.embed().unwrap();
        assert!(t.star().unwrap().approx_eq(&t, 1e-14));
        let m1 = matrix_algebra_spec(1);
        let _ = m1;
    }

    #[test]
    fn star_d_rejects_non_hermitian() {
        let h = sigma(1).scale(c(0.0, 1.0)).unwrap();
        let err = StarDElement::new(h, sigma(0), 1e-9).unwrap_err();
        assert!(matches!(err, Error::NotHermitian(_)));
        let spec = pauli_spec();
        let id = StarDElement::new(AlgebraElement::zero(&spec), AlgebraElement::unit(&spec), 1e-9).unwrap();
        assert_eq!(id.embed().unwrap(), TElement::identity(&spec));
    }

    #[test]
    fn center_equivalence_examples() {
        let b = sigma(1);
        let l = sigma(0)
            .add(&sigma(2))
            .unwrap()
            .add(&sigma(3).scale(c(0.0, 1.0)).unwrap())
            .unwrap();
        let r = sigma(3);
        let x = TElement::new(b.clone(), l.clone(), r.clone()).unwrap();
        assert!(center_equiv(&x, &x, 1e-9).unwrap());
        let two = c(2.0, 0.0);
        let y = TElement::new(b.clone(), l.scale(two).unwrap(), r.scale(two).unwrap()).unwrap();
        assert!(center_equiv(&x, &y, 1e-9).unwrap());
        let z = TElement::new(b, l.scale(two).unwrap(), r.scale(c(3.0, 0.0)).unwrap()).unwrap();
        assert!(!center_equiv(&x, &z, 1e-9).unwrap());
    }
}

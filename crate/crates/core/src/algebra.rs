//! Finite-dimensional associative algebras given by structure constants.
//!
//! An algebra of dimension `N` is fixed by the products of its basis
//! elements, `e_i e_j = sum_k c[i][j][k] e_k`, together with the coordinates
//! of its unit. Algebras that come from matrices (the full matrix algebra and
//! the Pauli algebra) also remember their basis matrices, which gives
//! `to_matrix`/`from_matrix` and the conjugate-transpose involution.
//!
//! Pauli matrices follow the usual physics convention
//! `sigma2 = [[0, -i], [i, 0]]`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{self, Basis, SquareMatrix};

pub type Scalar = Complex64;

const ZERO: Scalar = Complex64::new(0.0, 0.0);
const ONE: Scalar = Complex64::new(1.0, 0.0);

/// Absolute tolerance for the associativity and unit-law checks, scaled by
/// the size of the structure constants.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// Residual above which a matrix is considered outside the algebra.
const SPAN_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn contains(self, z: Scalar) -> bool {
        match self {
            Field::Complex => true,
            Field::Real => z.im == 0.0,
        }
    }

    pub fn check(self, z: Scalar) -> Result<()> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        if self.contains(z) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(z))
        }
    }
}

#[derive(Clone, Debug)]
struct MatrixForm {
    basis: Vec<SquareMatrix>,
    decomposer: Basis,
    star_closed: bool,
}

/// Structure constants, unit and (optionally) a faithful matrix basis.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    name: String,
    field: Field,
    dim: usize,
    constants: Vec<Scalar>,
    unit: Vec<Scalar>,
    matrix_form: Option<MatrixForm>,
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.dim == other.dim && self.field == other.field
    }
}

impl AlgebraSpec {
    /// Validates the structure constants (`dim^3` entries, indexed
    /// `[i][j][k]`) for associativity and the unit law.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        constants: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Arc<Self>> {
        let spec = Self::unchecked(name.into(), field, dim, constants, unit, None)?;
        spec.validate()?;
        Ok(Arc::new(spec))
    }

    fn unchecked(
        name: String,
        field: Field,
        dim: usize,
        constants: Vec<Scalar>,
        unit: Vec<Scalar>,
        matrix_form: Option<MatrixForm>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Empty);
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        for &z in constants.iter().chain(&unit) {
            field.check(z)?;
        }
        Ok(Self {
            name,
            field,
            dim,
            constants,
            unit,
            matrix_form,
        })
    }

    /// Builds the algebra spanned by `basis`, which must be closed under
    /// multiplication and contain the identity matrix.
    pub fn from_matrix_basis(
        name: impl Into<String>,
        field: Field,
        basis: Vec<SquareMatrix>,
    ) -> Result<Arc<Self>> {
        let name = name.into();
        let first = basis.first().ok_or(Error::Empty)?;
        let n = first.dim();
        if let Some(bad) = basis.iter().find(|m| m.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        let vectors: Vec<Vec<Scalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let decomposer = Basis::new(&vectors)?;
        let dim = basis.len();
        let decompose = |m: &SquareMatrix, what: &str| -> Result<Vec<Scalar>> {
            let (coords, residual) = decomposer.coordinates(m.entries())?;
            if residual > SPAN_TOL {
                return Err(Error::InvalidAlgebra(format!(
                    "{what} leaves the span of the basis (residual {residual:e})"
                )));
            }
            Ok(clean(coords, field))
        };
        let mut constants = Vec::with_capacity(dim * dim * dim);
        for a in &basis {
            for b in &basis {
                constants.extend(decompose(&(a * b), "a basis product")?);
            }
        }
        let unit = decompose(&SquareMatrix::identity(n), "the identity")?;
        let star_closed = basis.iter().all(|m| {
            decomposer
                .coordinates(m.adjoint().entries())
                .map(|(_, r)| r <= SPAN_TOL)
                .unwrap_or(false)
        });
        let spec = Self::unchecked(
            name,
            field,
            dim,
            constants,
            unit,
            Some(MatrixForm {
                basis,
                decomposer,
                star_closed,
            }),
        )?;
        spec.validate()?;
        Ok(Arc::new(spec))
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        let scale = self.constants.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let tol = STRUCTURE_TOL * scale * scale;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs: Scalar = (0..n).map(|m| self.c(i, j, m) * self.c(m, k, l)).sum();
                        let rhs: Scalar = (0..n).map(|m| self.c(j, k, m) * self.c(i, m, l)).sum();
                        if (lhs - rhs).norm() > tol {
                            return Err(Error::InvalidAlgebra(format!(
                                "associativity fails for basis triple ({i}, {j}, {k})"
                            )));
                        }
                    }
                }
            }
        }
        let tol = STRUCTURE_TOL * scale * 1f64.max(self.unit.iter().map(|z| z.norm()).sum());
        for j in 0..n {
            for k in 0..n {
                let left: Scalar = (0..n).map(|i| self.unit[i] * self.c(i, j, k)).sum();
                let right: Scalar = (0..n).map(|i| self.unit[i] * self.c(j, i, k)).sum();
                let expected = if j == k { ONE } else { ZERO };
                if (left - expected).norm() > tol || (right - expected).norm() > tol {
                    return Err(Error::InvalidAlgebra(format!(
                        "unit law fails for basis element {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constant `c[i][j][k]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    /// Size `n` of the matrices representing the algebra, if any.
    pub fn matrix_size(&self) -> Option<usize> {
        self.matrix_form.as_ref().map(|f| f.basis[0].dim())
    }

    pub fn basis_matrices(&self) -> Option<&[SquareMatrix]> {
        self.matrix_form.as_ref().map(|f| f.basis.as_slice())
    }

    pub fn has_involution(&self) -> bool {
        self.matrix_form.as_ref().is_some_and(|f| f.star_closed)
    }

    /// Checks that both specs describe the same algebra.
    pub fn ensure_same(&self, other: &AlgebraSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.name.clone(),
                right: other.name.clone(),
            })
        }
    }

    /// A real basis of the Hermitian (self-adjoint) elements.
    pub fn hermitian_basis(self: &Arc<Self>) -> Result<Vec<AlgebraElement>> {
        if !self.has_involution() {
            return Err(Error::NoInvolution(self.name.clone()));
        }
        let half = Complex64::new(0.5, 0.0);
        let half_i = Complex64::new(0.0, 0.5);
        let mut candidates = Vec::new();
        for i in 0..self.dim {
            let e = AlgebraElement::basis(self, i);
            let s = e.star()?;
            let sum = e.add(&s)?.scale_unchecked(half);
            let diff = e.sub(&s)?.scale_unchecked(half_i);
            if e.approx_eq(&s, SPAN_TOL) {
                candidates.push(e);
            } else {
                candidates.push(sum);
                candidates.push(diff);
            }
        }
        // independence over the reals: split coordinates into re/im parts
        let real_vectors: Vec<Vec<Scalar>> = candidates
            .iter()
            .map(|e| {
                e.coords()
                    .iter()
                    .flat_map(|z| [Complex64::new(z.re, 0.0), Complex64::new(z.im, 0.0)])
                    .collect()
            })
            .collect();
        let (_, kept) = Basis::select(&real_vectors)?;
        Ok(kept.into_iter().map(|k| candidates[k].clone()).collect())
    }
}

fn clean(coords: Vec<Scalar>, field: Field) -> Vec<Scalar> {
    coords
        .into_iter()
        .map(|z| {
            let re = if z.re.abs() < 1e-14 { 0.0 } else { z.re };
            let im = if z.im.abs() < 1e-14 || field == Field::Real {
                0.0
            } else {
                z.im
            };
            Complex64::new(re, im)
        })
        .collect()
}

/// Full matrix algebra of `n x n` complex matrices in the matrix-unit basis
/// `E_{ij}`, ordered row-major.
pub fn matrix_algebra_spec(n: usize) -> Arc<AlgebraSpec> {
    matrix_algebra_spec_over(n, Field::Complex)
}

pub fn matrix_algebra_spec_over(n: usize, field: Field) -> Arc<AlgebraSpec> {
    assert!(n >= 1, "matrix algebra needs n >= 1");
    let basis = (0..n * n)
        .map(|k| SquareMatrix::from_fn(n, |i, j| if i * n + j == k { ONE } else { ZERO }))
        .collect();
    let name = match field {
        Field::Complex => format!("M{n}(C)"),
        Field::Real => format!("M{n}(R)"),
    };
    AlgebraSpec::from_matrix_basis(name, field, basis).expect("matrix units form an algebra")
}

/// The four Pauli matrices `sigma0..sigma3`.
pub fn pauli_matrices() -> [SquareMatrix; 4] {
    let c = Complex64::new;
    let m = |rows: [[Scalar; 2]; 2]| SquareMatrix::from_fn(2, |i, j| rows[i][j]);
    [
        m([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]),
        m([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]),
        m([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]),
        m([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]),
    ]
}

/// The Pauli algebra of all complex `2 x 2` matrices in the basis
/// `sigma0..sigma3`.
pub fn pauli_spec() -> Arc<AlgebraSpec> {
    AlgebraSpec::from_matrix_basis("pauli", Field::Complex, pauli_matrices().to_vec())
        .expect("Pauli matrices form an algebra")
}

/// An element of an algebra, as coordinates in the algebra's basis.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement {
    spec: Arc<AlgebraSpec>,
    coords: Vec<Scalar>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.spec.name, self.coords)
    }
}

impl AlgebraElement {
    pub fn new(spec: &Arc<AlgebraSpec>, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != spec.dim {
            return Err(Error::DimensionMismatch {
                expected: spec.dim,
                found: coords.len(),
            });
        }
        for &z in &coords {
            spec.field.check(z)?;
        }
        Ok(Self {
            spec: spec.clone(),
            coords,
        })
    }

    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        Self {
            spec: spec.clone(),
            coords: vec![ZERO; spec.dim],
        }
    }

    pub fn unit(spec: &Arc<AlgebraSpec>) -> Self {
        Self {
            spec: spec.clone(),
            coords: spec.unit.clone(),
        }
    }

    pub fn basis(spec: &Arc<AlgebraSpec>, i: usize) -> Self {
        let mut coords = vec![ZERO; spec.dim];
        coords[i] = ONE;
        Self {
            spec: spec.clone(),
            coords,
        }
    }

    /// `lambda * 1`.
    pub fn scalar(spec: &Arc<AlgebraSpec>, lambda: Scalar) -> Result<Self> {
        Self::unit(spec).scale(lambda)
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    fn same_spec(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) {
            return Ok(());
        }
        self.spec.ensure_same(&other.spec)
    }

    fn checked(spec: &Arc<AlgebraSpec>, coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(Self {
                spec: spec.clone(),
                coords,
            })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Self::checked(&self.spec, coords)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Self::checked(&self.spec, coords)
    }

    pub fn neg(&self) -> Self {
        self.scale_unchecked(-ONE)
    }

    /// Product through the structure constants.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        let n = self.spec.dim;
        let mut coords = vec![ZERO; n];
        for (i, a) in self.coords.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if *b == ZERO {
                    continue;
                }
                let ab = a * b;
                for (k, out) in coords.iter_mut().enumerate() {
                    *out += ab * self.spec.c(i, j, k);
                }
            }
        }
        Self::checked(&self.spec, coords)
    }

    /// Scalar action; complex scalars are rejected on real algebras.
    pub fn scale(&self, lambda: Scalar) -> Result<Self> {
        self.spec.field.check(lambda)?;
        Self::checked(&self.spec, self.coords.iter().map(|z| z * lambda).collect())
    }

    pub(crate) fn scale_unchecked(&self, lambda: Scalar) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|z| z * lambda).collect(),
        }
    }

    /// Matrix of `x -> self * x` in the algebra basis (the left-regular
    /// representation).
    pub fn left_mult_matrix(&self) -> SquareMatrix {
        let n = self.spec.dim;
        SquareMatrix::from_fn(n, |k, j| {
            self.coords
                .iter()
                .enumerate()
                .map(|(i, a)| a * self.spec.c(i, j, k))
                .sum()
        })
    }

    /// Matrix of `x -> x * self`.
    pub fn right_mult_matrix(&self) -> SquareMatrix {
        let n = self.spec.dim;
        SquareMatrix::from_fn(n, |k, i| {
            self.coords
                .iter()
                .enumerate()
                .map(|(j, b)| b * self.spec.c(i, j, k))
                .sum()
        })
    }

    /// Decided by the left-regular representation being nonsingular.
    pub fn is_invertible(&self) -> bool {
        !self.left_mult_matrix().is_singular()
    }

    pub fn invert(&self) -> Result<Self> {
        let coords = self.left_mult_matrix().solve(&self.spec.unit)?;
        Self::checked(&self.spec, clean_field(coords, self.spec.field))
    }

    pub fn to_matrix(&self) -> Result<SquareMatrix> {
        let form = self
            .spec
            .matrix_form
            .as_ref()
            .ok_or_else(|| Error::NoMatrixForm(self.spec.name.clone()))?;
        let n = form.basis[0].dim();
        let mut out = SquareMatrix::zeros(n);
        for (a, m) in self.coords.iter().zip(&form.basis) {
            out = &out + &m.scale(*a);
        }
        Ok(out)
    }

    pub fn from_matrix(spec: &Arc<AlgebraSpec>, m: &SquareMatrix) -> Result<Self> {
        let form = spec
            .matrix_form
            .as_ref()
            .ok_or_else(|| Error::NoMatrixForm(spec.name.clone()))?;
        let n = form.basis[0].dim();
        if m.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.dim(),
            });
        }
        let (coords, residual) = form.decomposer.coordinates(m.entries())?;
        if residual > SPAN_TOL {
            return Err(Error::NotInSpan(residual));
        }
        if spec.field == Field::Real && coords.iter().any(|z| z.im.abs() > SPAN_TOL * 1f64.max(z.norm())) {
            return Err(Error::NotInSpan(residual));
        }
        Self::checked(spec, clean_field(coords, spec.field))
    }

    /// Conjugate transpose in matrix form.
    pub fn star(&self) -> Result<Self> {
        if !self.spec.has_involution() {
            return Err(Error::NoInvolution(self.spec.name.clone()));
        }
        Self::from_matrix(&self.spec, &self.to_matrix()?.adjoint())
    }

    /// Relative deviation of `self` from `self*`.
    pub fn hermitian_defect(&self) -> Result<f64> {
        Ok(self.rel_diff(&self.star()?))
    }

    pub fn max_abs(&self) -> f64 {
        self.coords.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest coordinate difference divided by `max(1, |self|, |other|)`.
    /// Elements of different algebras are infinitely far apart.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        if self.same_spec(other).is_err() {
            return f64::INFINITY;
        }
        let diff = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        diff / 1f64.max(self.max_abs()).max(other.max_abs())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rel_diff(other) <= tol
    }
}

fn clean_field(coords: Vec<Scalar>, field: Field) -> Vec<Scalar> {
    match field {
        Field::Complex => coords,
        Field::Real => coords.into_iter().map(|z| Complex64::new(z.re, 0.0)).collect(),
    }
}

/// Rank of the coordinate vectors of `elements`.
pub fn span_rank(elements: &[AlgebraElement]) -> Result<usize> {
    let first = elements.first().ok_or(Error::Empty)?;
    for e in elements {
        first.same_spec(e)?;
    }
    matrix::rank(&elements.iter().map(|e| e.coords.clone()).collect::<Vec<_>>())
}

/// Rank of matrices viewed as vectors of their entries.
pub fn span_rank_matrices(matrices: &[SquareMatrix]) -> Result<usize> {
    matrix::rank(&matrices.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Scalar {
        Complex64::new(re, im)
    }

    fn sigma(i: usize) -> AlgebraElement {
        AlgebraElement::basis(&pauli_spec(), i)
    }

    // Oracle: explicit 2x2 products of the Pauli matrices, decomposed with
    // v_k = tr(M sigma_k) / 2 (independent of the structure constants).
    fn pauli_product_oracle(a: usize, b: usize) -> Vec<Scalar> {
        let s = pauli_matrices();
        let p = &s[a] * &s[b];
        (0..4).map(|k| (&p * &s[k]).trace() * 0.5).collect()
    }

    #[test]
    fn add_examples() {
        let spec = pauli_spec();
        let a = sigma(1);
        assert_eq!(a.add(&AlgebraElement::zero(&spec)).unwrap(), a);
        assert_eq!(
            a.add(&a).unwrap().coords(),
            &[c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
        let sum = sigma(0).add(&sigma(1)).unwrap();
        assert_eq!(
            sum.coords(),
            &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let a = sigma(1);
        let b = AlgebraElement::unit(&matrix_algebra_spec(2));
        assert!(matches!(a.add(&b), Err(Error::SpecMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::SpecMismatch { .. })));
    }

    #[test]
    fn pauli_products_match_matrix_oracle() {
        for a in 0..4 {
            for b in 0..4 {
                let got = sigma(a).mul(&sigma(b)).unwrap();
                let want = pauli_product_oracle(a, b);
                for (x, y) in got.coords().iter().zip(&want) {
                    assert!((x - y).norm() < 1e-14, "sigma{a} sigma{b}");
                }
            }
        }
        // sigma1 sigma2 = i sigma3
        assert_eq!(sigma(1).mul(&sigma(2)).unwrap().coords()[3], c(0.0, 1.0));
        assert_eq!(sigma(1).mul(&sigma(1)).unwrap(), sigma(0));
        assert_eq!(sigma(2).mul(&sigma(2)).unwrap(), sigma(0));
        assert_eq!(AlgebraElement::unit(&pauli_spec()), sigma(0));
    }

    #[test]
    fn scalar_action() {
        let a = sigma(2);
        assert_eq!(a.scale(c(1.0, 0.0)).unwrap(), a);
        assert_eq!(a.scale(c(0.0, 0.0)).unwrap().max_abs(), 0.0);
        assert_eq!(sigma(3).scale(c(0.0, 1.0)).unwrap().coords()[3], c(0.0, 1.0));
        let real = matrix_algebra_spec_over(2, Field::Real);
        let e = AlgebraElement::unit(&real);
        assert!(matches!(e.scale(c(0.0, 1.0)), Err(Error::FieldMismatch(_))));
        assert!(e.scale(c(-3.0, 0.0)).is_ok());
    }

    #[test]
    fn matrix_algebra_examples() {
        let m1 = matrix_algebra_spec(1);
        assert_eq!(m1.dim(), 1);
        assert_eq!(m1.c(0, 0, 0), c(1.0, 0.0));

        // E11 = index 0, E12 = index 1, E21 = 2, E22 = 3
        let m2 = matrix_algebra_spec(2);
        assert_eq!(m2.dim(), 4);
        let e = |i| AlgebraElement::basis(&m2, i);
        assert_eq!(e(0).mul(&e(1)).unwrap(), e(1));
        assert_eq!(e(1).mul(&e(0)).unwrap().max_abs(), 0.0);
        assert_eq!(AlgebraElement::unit(&m2), e(0).add(&e(3)).unwrap());
    }

    #[test]
    fn matrix_round_trip() {
        let spec = pauli_spec();
        let s1 = sigma(1).to_matrix().unwrap();
        assert_eq!(
            s1,
            SquareMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
        );
        assert_eq!(
            AlgebraElement::unit(&spec).to_matrix().unwrap(),
            SquareMatrix::identity(2)
        );
        let a =
            AlgebraElement::new(&spec, vec![c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.1), c(0.0, 4.0)]).unwrap();
        let back = AlgebraElement::from_matrix(&spec, &a.to_matrix().unwrap()).unwrap();
        assert!(back.approx_eq(&a, 1e-12));
        assert!(matches!(
            AlgebraElement::from_matrix(&spec, &SquareMatrix::identity(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverses() {
        let spec = pauli_spec();
        let one = AlgebraElement::unit(&spec);
        assert_eq!(one.invert().unwrap(), one);
        assert!(sigma(1).invert().unwrap().approx_eq(&sigma(1), 1e-15));
        let m2 = matrix_algebra_spec(2);
        let e12 = AlgebraElement::basis(&m2, 1);
        assert!(!e12.is_invertible());
        assert_eq!(e12.invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn span_rank_examples() {
        let spec = pauli_spec();
        let all: Vec<_> = (0..4).map(sigma).collect();
        assert_eq!(span_rank(&all).unwrap(), 4);
        let s0 = sigma(0);
        assert_eq!(
            span_rank(&[s0.clone(), s0.scale(c(2.0, 0.0)).unwrap()]).unwrap(),
            1
        );
        assert_eq!(span_rank(&[]), Err(Error::Empty));
        let _ = spec;
    }

    #[test]
    fn non_associative_constants_are_rejected() {
        // 2-dim algebra with e1 e1 = e0 + e1 but e0 acting as unit: fine;
        // break it by making e1 e1 = e0 and e0 e1 = 0.
        let mut constants = vec![c(0.0, 0.0); 8];
        let idx = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        constants[idx(0, 0, 0)] = c(1.0, 0.0);
        constants[idx(1, 1, 0)] = c(1.0, 0.0);
        constants[idx(1, 0, 1)] = c(1.0, 0.0);
        let err = AlgebraSpec::new(
            "broken",
            Field::Complex,
            2,
            constants,
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(_)));
    }

    #[test]
    fn hermitian_basis_of_pauli_is_sigma() {
        let spec = pauli_spec();
        let basis = spec.hermitian_basis().unwrap();
        assert_eq!(basis.len(), 4);
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(*b, sigma(i));
        }
        let m2 = matrix_algebra_spec(2);
        assert_eq!(m2.hermitian_basis().unwrap().len(), 4);
    }

    #[test]
    fn star_is_conjugate_transpose() {
        let y = sigma(1).mul(&sigma(2)).unwrap(); // i sigma3
        let ys = y.star().unwrap();
        assert!(ys.approx_eq(&y.neg(), 1e-15));
    }
}

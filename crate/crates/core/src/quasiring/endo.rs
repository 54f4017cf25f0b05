use crate::algebra::{Field, Scalar};
use crate::error::{Error, Result};
use crate::group::{TElement, DEFAULT_TOL};
use crate::matrix::SquareMatrix;

use super::SemidirectGroup;

/// A linear map of the translation subgroup, in the coordinates of
/// [`SemidirectGroup::translation_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct LinearEndo {
    field: Field,
    matrix: SquareMatrix,
}

impl LinearEndo {
    pub fn new(field: Field, matrix: SquareMatrix) -> Result<Self> {
        if field == Field::Real && !matrix.is_real(0.0) {
            return Err(Error::FieldMismatch(
                matrix
                    .entries()
                    .iter()
                    .copied()
                    .find(|z| z.im != 0.0)
                    .unwrap_or_default(),
            ));
        }
        Ok(Self { field, matrix })
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self {
            field,
            matrix: SquareMatrix::identity(n),
        }
    }

    pub fn zero(field: Field, n: usize) -> Self {
        Self {
            field,
            matrix: SquareMatrix::zeros(n),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        if self.field != other.field {
            return Err(Error::Unsupported(format!(
                "maps over {:?} and {:?} do not combine",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// Smile of two maps of the translation space: their sum.
    pub fn smile(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Self {
            field: self.field,
            matrix: &self.matrix + &other.matrix,
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Self {
            field: self.field,
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// Pointwise inverse in the group, i.e. negation.
    pub fn negate(&self) -> Self {
        Self {
            field: self.field,
            matrix: -&self.matrix,
        }
    }

    /// `(λ f)(b) = f(λ b)`; `λ` must lie in the field of the space.
    pub fn scale(&self, lambda: Scalar) -> Result<Self> {
        self.field.check(lambda)?;
        Ok(Self {
            field: self.field,
            matrix: self.matrix.scale(lambda),
        })
    }

    pub fn apply(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        Ok(self.matrix.mat_vec(coords))
    }

    /// Entries in row-major order, for span computations.
    pub fn as_vector(&self) -> Vec<Scalar> {
        self.matrix.entries().to_vec()
    }

    pub fn from_vector(field: Field, n: usize, v: &[Scalar]) -> Result<Self> {
        if v.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: v.len(),
            });
        }
        Self::new(field, SquareMatrix::from_fn(n, |i, j| v[i * n + j]))
    }

    pub fn operator_norm(&self) -> f64 {
        self.matrix.operator_norm()
    }

    pub fn rel_diff(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.matrix.rel_diff(&other.matrix)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rel_diff(other) <= tol
    }
}

/// The restriction of `x -> g x g^-1` to the translation subgroup.
///
/// Column `j` holds the coordinates of `g b_j g^-1` where `b_j` runs over the
/// translation basis. Fails if `g` is not in the group or the conjugate of
/// a translation is not a translation.
pub fn ad_endo(group: &SemidirectGroup, g: &TElement) -> Result<LinearEndo> {
    if !group.contains(g, DEFAULT_TOL) {
        return Err(Error::Unsupported(format!(
            "element does not belong to {group:?}"
        )));
    }
    let g_inv = g.inverse()?;
    let n = group.translation_dim();
    let mut columns = Vec::with_capacity(n);
    for b in group.translation_basis() {
        let y = g.compose(&TElement::shift(b.clone()))?.compose(&g_inv)?;
        if !y.is_pure_translation(DEFAULT_TOL) {
            return Err(Error::Unsupported(
                "conjugate of a translation left the translation subgroup".into(),
            ));
        }
        columns.push(group.translation_coords(y.translation())?);
    }
    LinearEndo::new(group.translation_field(), SquareMatrix::from_columns(&columns))
}

pub fn endo_smile(a: &LinearEndo, b: &LinearEndo) -> Result<LinearEndo> {
    a.smile(b)
}

/// Scalar action on the endomorphisms of a group's translation subgroup;
/// rejects scalars outside that subgroup's field.
pub fn endo_scalar(group: &SemidirectGroup, lambda: Scalar, e: &LinearEndo) -> Result<LinearEndo> {
    group.translation_field().check(lambda)?;
    e.scale(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{pauli_spec, AlgebraElement};
    use crate::quasiring::GroupKind;
    use crate::sample::trial_rng;

    #[test]
    fn ad_endo_of_d_is_left_multiplication() {
        let g = SemidirectGroup::new(GroupKind::D, pauli_spec()).unwrap();
        let mut rng = trial_rng(20, 0);
        let x = g.random_element(&mut rng);
        let e = ad_endo(&g, &x).unwrap();
        assert!(e.matrix().approx_eq(&x.left().left_mult_matrix(), 1e-12));
    }

    #[test]
    fn ad_endo_of_t_is_two_sided() {
        let g = SemidirectGroup::new(GroupKind::T, pauli_spec()).unwrap();
        let mut rng = trial_rng(21, 0);
        let x = g.random_element(&mut rng);
        let e = ad_endo(&g, &x).unwrap();
        let r_inv = x.right().invert().unwrap();
        let oracle = &x.left().left_mult_matrix() * &r_inv.right_mult_matrix();
        assert!(e.matrix().approx_eq(&oracle, 1e-12));
    }

    #[test]
    fn ad_endo_of_star_d_is_real() {
        let g = SemidirectGroup::new(GroupKind::StarD, pauli_spec()).unwrap();
        let mut rng = trial_rng(22, 0);
        let x = g.random_element(&mut rng);
        let e = ad_endo(&g, &x).unwrap();
        assert_eq!(e.field(), Field::Real);
        assert!(e.matrix().is_real(0.0));
        // oracle: h -> g h g* on a Hermitian sample
        let h = g.random_translation_vector(&mut rng);
        let direct = x.left().mul(&h).unwrap().mul(&x.left().star().unwrap()).unwrap();
        let via = g
            .translation_from_coords(&e.apply(&g.translation_coords(&h).unwrap()).unwrap())
            .unwrap();
        assert!(via.approx_eq(&direct, 1e-12));
    }

    #[test]
    fn ad_endo_rejects_foreign_elements() {
        let g = SemidirectGroup::new(GroupKind::D, pauli_spec()).unwrap();
        let spec = pauli_spec();
        let x = TElement::new(
            AlgebraElement::zero(&spec),
            AlgebraElement::unit(&spec),
            AlgebraElement::basis(&spec, 1),
        )
        .unwrap();
        assert!(ad_endo(&g, &x).is_err());
    }

    #[test]
    fn real_endo_rejects_complex_scalars() {
        let g = SemidirectGroup::new(GroupKind::StarD, pauli_spec()).unwrap();
        let e = LinearEndo::identity(Field::Real, 4);
        assert!(matches!(
            endo_scalar(&g, Scalar::new(0.0, 1.0), &e),
            Err(Error::FieldMismatch(_))
        ));
        assert!(endo_scalar(&g, Scalar::new(2.0, 0.0), &e).is_ok());
    }

    #[test]
    fn smile_and_negation() {
        let a = LinearEndo::identity(Field::Complex, 3);
        let z = a.smile(&a.negate()).unwrap();
        assert_eq!(z, LinearEndo::zero(Field::Complex, 3));
        assert!(a.smile(&LinearEndo::identity(Field::Real, 3)).is_err());
        assert!(a.smile(&LinearEndo::identity(Field::Complex, 2)).is_err());
    }
}

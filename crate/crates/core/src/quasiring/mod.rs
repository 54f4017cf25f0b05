//! From groups back to algebras.
//!
//! Functions `G -> G` form a quasi-ring under the pointwise product
//! ("smile", `(f ⌣ h)(g) = f(g) h(g)`) and composition. For a semidirect
//! product `B ⋊ L` with `B` a vector space, the inner automorphisms restrict
//! to linear maps of `B`; smile becomes addition of those maps, and the
//! algebra they generate can be compared with the algebra the group was
//! built from.

mod checks;
mod endo;
mod function;
mod reconstruct;

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde_json::Value;

use crate::algebra::{AlgebraElement, AlgebraSpec, Field, Scalar};
use crate::error::{Error, Result};
use crate::group::{TElement, DEFAULT_TOL};
use crate::matrix::Basis;
use crate::sample;
use crate::serial;

pub use checks::{check_quasiring, star_counterexamples};
pub use endo::{ad_endo, endo_scalar, endo_smile, LinearEndo};
pub use function::GroupFn;
pub use reconstruct::{reconstruct, span_dimension, AlgebraComparison, ReconstructedAlgebra};

/// A group given by its operations, enough to evaluate functions on it.
pub trait Group: Clone + PartialEq + fmt::Debug {
    type Element: Clone + fmt::Debug;

    fn identity(&self) -> Self::Element;
    fn operate(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;
    fn inverse(&self, a: &Self::Element) -> Result<Self::Element>;
    /// Relative distance between two elements; zero iff equal.
    fn distance(&self, a: &Self::Element, b: &Self::Element) -> f64;
    /// JSON form used in counterexamples.
    fn describe(&self, a: &Self::Element) -> Value;
}

/// Which semidirect product of an algebra `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// `D(A)`, pairs `(B, L)` embedded as `(B, L, 1)`.
    D,
    /// `T~(A)`, triples `(B, L, R)`.
    T,
    /// The star-fixed subgroup, `(H, G, G*^-1)` with `H` Hermitian. Its
    /// translation part is a real vector space.
    StarD,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::D => "D",
            GroupKind::T => "T",
            GroupKind::StarD => "starD",
        })
    }
}

/// One of `D(A)`, `T~(A)`, `D*(A)`, all realised inside `T~(A)`.
///
/// With `unimodular` set, sampled linear parts are drawn from `SL(n)` only
/// (the primed groups `D'`, `T'`).
#[derive(Clone)]
pub struct SemidirectGroup {
    kind: GroupKind,
    spec: Arc<AlgebraSpec>,
    unimodular: bool,
    translation_basis: Vec<AlgebraElement>,
    // real coordinates of Hermitian elements, only for StarD
    hermitian_coords: Option<Arc<Basis>>,
}

impl PartialEq for SemidirectGroup {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.spec == other.spec && self.unimodular == other.unimodular
    }
}

impl fmt::Debug for SemidirectGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}({})",
            self.kind,
            if self.unimodular { "'" } else { "" },
            self.spec.name()
        )
    }
}

fn real_parts(e: &AlgebraElement) -> Vec<Scalar> {
    e.coords()
        .iter()
        .flat_map(|z| [Scalar::new(z.re, 0.0), Scalar::new(z.im, 0.0)])
        .collect()
}

impl SemidirectGroup {
    pub fn new(kind: GroupKind, spec: Arc<AlgebraSpec>) -> Result<Self> {
        let (translation_basis, hermitian_coords) = match kind {
            GroupKind::D | GroupKind::T => (
                (0..spec.dim()).map(|i| AlgebraElement::basis(&spec, i)).collect(),
                None,
            ),
            GroupKind::StarD => {
                let basis = spec.hermitian_basis()?;
                let vectors: Vec<_> = basis.iter().map(real_parts).collect();
                (basis, Some(Arc::new(Basis::new(&vectors)?)))
            }
        };
        Ok(Self {
            kind,
            spec,
            unimodular: false,
            translation_basis,
            hermitian_coords,
        })
    }

    /// Restricts sampling of linear parts to determinant one.
    pub fn unimodular(mut self) -> Result<Self> {
        if self.spec.matrix_size().is_none() {
            return Err(Error::NoMatrixForm(self.spec.name().to_string()));
        }
        self.unimodular = true;
        Ok(self)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn is_unimodular(&self) -> bool {
        self.unimodular
    }

    /// Field of the translation subgroup viewed as a vector space.
    pub fn translation_field(&self) -> Field {
        match self.kind {
            GroupKind::StarD => Field::Real,
            _ => self.spec.field(),
        }
    }

    pub fn translation_basis(&self) -> &[AlgebraElement] {
        &self.translation_basis
    }

    pub fn translation_dim(&self) -> usize {
        self.translation_basis.len()
    }

    /// Coordinates of a translation vector in [`Self::translation_basis`].
    pub fn translation_coords(&self, b: &AlgebraElement) -> Result<Vec<Scalar>> {
        self.spec.ensure_same(b.spec())?;
        match &self.hermitian_coords {
            None => Ok(b.coords().to_vec()),
            Some(basis) => {
                let (coords, residual) = basis.coordinates(&real_parts(b))?;
                if residual > DEFAULT_TOL {
                    return Err(Error::NotHermitian(residual));
                }
                Ok(coords.into_iter().map(|z| Scalar::new(z.re, 0.0)).collect())
            }
        }
    }

    pub fn translation_from_coords(&self, coords: &[Scalar]) -> Result<AlgebraElement> {
        if coords.len() != self.translation_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.translation_dim(),
                found: coords.len(),
            });
        }
        let mut out = AlgebraElement::zero(&self.spec);
        for (c, e) in coords.iter().zip(&self.translation_basis) {
            self.translation_field().check(*c)?;
            out = out.add(&e.scale(*c)?)?;
        }
        Ok(out)
    }

    /// The pure translation `(b, 1, 1)`.
    pub fn translation(&self, b: AlgebraElement) -> Result<TElement> {
        if self.kind == GroupKind::StarD {
            let defect = b.hermitian_defect()?;
            if defect > DEFAULT_TOL {
                return Err(Error::NotHermitian(defect));
            }
        }
        self.spec.ensure_same(b.spec())?;
        Ok(TElement::shift(b))
    }

    /// `(0, l, 1)` for `D` and `T~`, `(0, l, l*^-1)` for `D*`.
    pub fn lift(&self, l: &AlgebraElement) -> Result<TElement> {
        let spec = &self.spec;
        let zero = AlgebraElement::zero(spec);
        match self.kind {
            GroupKind::D | GroupKind::T => TElement::new(zero, l.clone(), AlgebraElement::unit(spec)),
            GroupKind::StarD => TElement::new(zero, l.clone(), l.star()?.invert()?),
        }
    }

    /// Whether `x` has the shape required by this group.
    pub fn contains(&self, x: &TElement, tol: f64) -> bool {
        if x.spec() != &self.spec && **x.spec() != *self.spec {
            return false;
        }
        let unit = AlgebraElement::unit(&self.spec);
        match self.kind {
            GroupKind::D => x.right().approx_eq(&unit, tol),
            GroupKind::T => true,
            GroupKind::StarD => {
                let shape = x
                    .left()
                    .star()
                    .and_then(|s| s.invert())
                    .map(|r| r.approx_eq(x.right(), tol))
                    .unwrap_or(false);
                shape
                    && x.translation()
                        .hermitian_defect()
                        .map(|d| d <= tol)
                        .unwrap_or(false)
            }
        }
    }

    /// Well-conditioned random linear part (singular values within a
    /// factor 2 of one for matrix algebras).
    pub fn random_linear(&self, rng: &mut impl Rng) -> AlgebraElement {
        if self.unimodular {
            sample::unimodular(rng, &self.spec)
        } else {
            sample::bounded_invertible(rng, &self.spec)
        }
    }

    pub fn random_translation_vector(&self, rng: &mut impl Rng) -> AlgebraElement {
        match self.kind {
            GroupKind::StarD => sample::hermitian(rng, &self.spec),
            _ => sample::element(rng, &self.spec),
        }
    }

    pub fn random_translation(&self, rng: &mut impl Rng) -> TElement {
        TElement::shift(self.random_translation_vector(rng))
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> TElement {
        let b = self.random_translation_vector(rng);
        let l = self.random_linear(rng);
        let built = match self.kind {
            GroupKind::D => TElement::new(b, l, AlgebraElement::unit(&self.spec)),
            GroupKind::T => {
                let r = self.random_linear(rng);
                TElement::new(b, l, r)
            }
            GroupKind::StarD => l
                .star()
                .and_then(|s| s.invert())
                .and_then(|r| TElement::new(b, l, r)),
        };
        built.expect("sampled linear parts are invertible")
    }
}

impl Group for SemidirectGroup {
    type Element = TElement;

    fn identity(&self) -> TElement {
        TElement::identity(&self.spec)
    }

    fn operate(&self, a: &TElement, b: &TElement) -> Result<TElement> {
        a.compose(b)
    }

    fn inverse(&self, a: &TElement) -> Result<TElement> {
        a.inverse()
    }

    fn distance(&self, a: &TElement, b: &TElement) -> f64 {
        a.rel_diff(b)
    }

    fn describe(&self, a: &TElement) -> Value {
        serial::t_json(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::pauli_spec;
    use crate::sample::trial_rng;

    #[test]
    fn sampled_elements_have_group_shape() {
        let mut rng = trial_rng(1, 0);
        for kind in [GroupKind::D, GroupKind::T, GroupKind::StarD] {
            let g = SemidirectGroup::new(kind, pauli_spec()).unwrap();
            for _ in 0..20 {
                let x = g.random_element(&mut rng);
                assert!(g.contains(&x, 1e-9), "{kind}");
            }
        }
    }

    #[test]
    fn star_d_translation_coordinates_are_real() {
        let g = SemidirectGroup::new(GroupKind::StarD, pauli_spec()).unwrap();
        assert_eq!(g.translation_field(), Field::Real);
        let mut rng = trial_rng(2, 0);
        let h = g.random_translation_vector(&mut rng);
        let coords = g.translation_coords(&h).unwrap();
        assert!(coords.iter().all(|z| z.im == 0.0));
        let back = g.translation_from_coords(&coords).unwrap();
        assert!(back.approx_eq(&h, 1e-12));
        let not_herm = AlgebraElement::basis(&pauli_spec(), 1)
            .scale(Scalar::new(0.0, 1.0))
            .unwrap();
        assert!(g.translation(not_herm).is_err());
    }

    #[test]
    fn unimodular_sampling() {
        let g = SemidirectGroup::new(GroupKind::D, pauli_spec())
            .unwrap()
            .unimodular()
            .unwrap();
        let mut rng = trial_rng(3, 0);
        for _ in 0..20 {
            let l = g.random_linear(&mut rng);
            let det = l.to_matrix().unwrap().det();
            assert!((det - Scalar::new(1.0, 0.0)).norm() < 1e-12);
        }
    }
}

use std::sync::Arc;

use serde_json::{json, Value};

use super::endo::{ad_endo, endo_scalar, LinearEndo};
use super::{GroupKind, SemidirectGroup};
use crate::algebra::{AlgebraSpec, Scalar};
use crate::error::{Error, Result};
use crate::group::TElement;
use crate::matrix::{rank, Basis};
use crate::serial::{matrix_json, scalar_json};

/// How a recovered algebra compares with the algebra the group was built on.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraComparison {
    pub target: String,
    /// `[e_i]` for the target basis `e_i`, built from the generators by
    /// smile and scalar action only.
    pub images: Vec<LinearEndo>,
    /// Largest residual of an image outside the recovered span.
    pub embedding_residual: f64,
    /// Largest `|d_ijk - c_ijk|` where `[e_i][e_j] = sum_k d_ijk [e_k]`.
    pub max_deviation: f64,
    pub isomorphic: bool,
}

/// The algebra of translation endomorphisms generated by a set of
/// inner automorphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructedAlgebra {
    pub group: String,
    pub generator_endos: Vec<LinearEndo>,
    /// Dimension of the linear span of the generators.
    pub span_dim: usize,
    /// Generators forming a basis of the span.
    pub basis: Vec<LinearEndo>,
    /// `basis_i ∘ basis_j = sum_k constants[(i*dim + j)*dim + k] basis_k`.
    pub constants: Vec<Scalar>,
    /// Largest residual of a basis product outside the span.
    pub closure_residual: f64,
    pub comparison: Option<AlgebraComparison>,
}

impl ReconstructedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> Scalar {
        let d = self.dim();
        self.constants[(i * d + j) * d + k]
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "group": self.group,
            "generators": self.generator_endos.len(),
            "span_dim": self.span_dim,
            "dim": self.dim(),
            "closure_residual": self.closure_residual,
            "basis": self.basis.iter().map(|e| matrix_json(e.matrix())).collect::<Vec<_>>(),
            "structure_constants": self.constants.iter().map(|z| scalar_json(*z)).collect::<Vec<_>>(),
        });
        if let Some(cmp) = &self.comparison {
            out["comparison"] = json!({
                "target": cmp.target,
                "embedding_residual": cmp.embedding_residual,
                "max_deviation": cmp.max_deviation,
                "isomorphic": cmp.isomorphic,
            });
        }
        out
    }
}

/// Dimension of the span of `{[g] : g in generators}`.
pub fn span_dimension(group: &SemidirectGroup, generators: &[TElement]) -> Result<usize> {
    let vectors = generators
        .iter()
        .map(|g| ad_endo(group, g).map(|e| e.as_vector()))
        .collect::<Result<Vec<_>>>()?;
    rank(&vectors)
}

/// Recovers an algebra from the inner automorphisms `generators` of `group`.
///
/// The span of the restrictions `[g]` must be closed under composition
/// (smile is already addition); otherwise the offending basis product is
/// reported. The result carries a basis and its structure constants. When
/// `target` is given it must be the algebra `group` was built on, and the
/// lift `l -> [l]` is checked to be an algebra isomorphism onto the result.
/// Comparison is only meaningful for `D`, where `[l]` is linear in `l`.
pub fn reconstruct(
    group: &SemidirectGroup,
    generators: &[TElement],
    target: Option<&Arc<AlgebraSpec>>,
    tol: f64,
) -> Result<ReconstructedAlgebra> {
    if generators.is_empty() {
        return Err(Error::Empty);
    }
    let generator_endos = generators
        .iter()
        .map(|g| ad_endo(group, g))
        .collect::<Result<Vec<_>>>()?;
    let field = group.translation_field();
    let n = group.translation_dim();
    let vectors: Vec<_> = generator_endos.iter().map(LinearEndo::as_vector).collect();
    let (span, kept) = Basis::select(&vectors)?;
    let span_dim = kept.len();
    let basis: Vec<LinearEndo> = kept.iter().map(|&i| generator_endos[i].clone()).collect();

    let dim = basis.len();
    let mut constants = vec![Scalar::new(0.0, 0.0); dim * dim * dim];
    let mut closure_residual = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let p = basis[i].compose(&basis[j])?;
            let (coords, residual) = span.coordinates(&p.as_vector())?;
            if residual > tol {
                return Err(Error::NotClosed {
                    left: i,
                    right: j,
                    residual,
                });
            }
            closure_residual = closure_residual.max(residual);
            for (k, c) in coords.into_iter().enumerate() {
                constants[(i * dim + j) * dim + k] = c;
            }
        }
    }

    let comparison = match target {
        None => None,
        Some(spec) => Some(compare(group, generators, &generator_endos, &span, spec, tol)?),
    };
    debug_assert!(basis.iter().all(|e| e.dim() == n && e.field() == field));
    Ok(ReconstructedAlgebra {
        group: format!("{group:?}"),
        generator_endos,
        span_dim,
        basis,
        constants,
        closure_residual,
        comparison,
    })
}

fn compare(
    group: &SemidirectGroup,
    generators: &[TElement],
    endos: &[LinearEndo],
    span: &Basis,
    target: &Arc<AlgebraSpec>,
    tol: f64,
) -> Result<AlgebraComparison> {
    match group.kind() {
        GroupKind::D => {}
        GroupKind::T => {
            return Err(Error::Unsupported(
                "[g] depends on both linear parts in T, so l -> [l] is not defined".into(),
            ))
        }
        GroupKind::StarD => {
            return Err(Error::Unsupported(
                "the translation space of starD is real, so l -> [l] is not linear over the algebra's field"
                    .into(),
            ))
        }
    }
    group.spec().ensure_same(target)?;
    let lefts: Vec<_> = generators.iter().map(|g| g.left().coords().to_vec()).collect();
    let (left_basis, kept) = Basis::select(&lefts)?;
    if kept.len() != target.dim() {
        return Err(Error::Unsupported(format!(
            "linear parts of the generators span {} of {} dimensions",
            kept.len(),
            target.dim()
        )));
    }

    // [e_i] = sum_j alpha_j [g_j] where e_i = sum_j alpha_j l_j
    let mut images = Vec::with_capacity(target.dim());
    for i in 0..target.dim() {
        let mut e = vec![Scalar::new(0.0, 0.0); target.dim()];
        e[i] = Scalar::new(1.0, 0.0);
        let (alpha, _) = left_basis.coordinates(&e)?;
        let mut img = LinearEndo::zero(group.translation_field(), group.translation_dim());
        for (a, &j) in alpha.iter().zip(&kept) {
            img = img.smile(&endo_scalar(group, *a, &endos[j])?)?;
        }
        images.push(img);
    }

    let mut embedding_residual = 0.0f64;
    for img in &images {
        embedding_residual = embedding_residual.max(span.coordinates(&img.as_vector())?.1);
    }

    let image_vectors: Vec<_> = images.iter().map(LinearEndo::as_vector).collect();
    let (image_basis, independent) = Basis::select(&image_vectors)?;
    let mut max_deviation = 0.0f64;
    if independent.len() == images.len() {
        let d = target.dim();
        for i in 0..d {
            for j in 0..d {
                let p = images[i].compose(&images[j])?;
                let (coords, residual) = image_basis.coordinates(&p.as_vector())?;
                max_deviation = max_deviation.max(residual);
                for (k, c) in coords.iter().enumerate() {
                    max_deviation = max_deviation.max((c - target.c(i, j, k)).norm());
                }
            }
        }
    } else {
        max_deviation = f64::INFINITY;
    }
    let isomorphic = span.len() == target.dim() && embedding_residual <= tol && max_deviation <= tol;
    Ok(AlgebraComparison {
        target: target.name().to_string(),
        images,
        embedding_residual,
        max_deviation,
        isomorphic,
    })
}

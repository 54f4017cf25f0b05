//! Semidirect-product groups built from finite-dimensional associative
//! algebras, and the way back from such groups to algebras.
//!
//! * [`algebra`]: algebras by structure constants, with matrix and Pauli
//!   instances.
//! * [`group`]: the affine group `D(A)` of pairs `(B, L)` and the group
//!   `T~(A)` of triples `(B, L, R)` acting by `a -> L a R^-1 + B`.
//! * [`spacetime`]: four-vectors as Hermitian matrices, the `SL(2, C)` cover
//!   of the Lorentz group, complex rotations and the spinor Poincare group.
//! * [`quasiring`]: the smile operation on functions `G -> G` and the
//!   reconstruction of an algebra from inner automorphisms.
//! * [`verify`]: randomized verification suites producing JSON reports.

pub mod algebra;
pub mod error;
pub mod group;
pub mod matrix;
pub mod quasiring;
pub mod report;
pub mod sample;
pub mod serial;
pub mod spacetime;
pub mod verify;

pub use algebra::{pauli_spec, AlgebraElement, AlgebraSpec, Field, Scalar};
pub use error::{Error, Result};
pub use group::{DElement, RightTwist, StarDElement, TElement};
pub use matrix::SquareMatrix;
pub use report::VerificationReport;

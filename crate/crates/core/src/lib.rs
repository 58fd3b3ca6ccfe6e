//! Constructive calculus on stratified Lie groups: exact nilpotent group
//! arithmetic, left-invariant vector fields, certification of
//! filtration-preserving diffeomorphisms and atlases, lattice realizations of
//! sub-Laplacians and quasi-Riesz transforms, and a formal principal-symbol
//! algebra with equivariance and partition-of-unity globalisation.
//!
//! All numeric code is generic over the scalar type (`f32` or `f64`) through
//! the [`scalar::Real`] trait; `f64` aliases are exported at the crate root.

pub mod algebra;
pub mod covering;
pub mod error;
pub mod geometry;
pub mod fields;
pub mod linalg;
pub mod maps;
pub mod poly;
pub mod scalar;

pub use algebra::{abelian, engel, heisenberg, validate_algebra, RawStructure, StratifiedAlgebra};
pub use scalar::{real, Real};

/// Working-precision aliases.
pub type Algebra64 = StratifiedAlgebra<f64>;
pub type Mat64 = linalg::Mat<f64>;
pub type Poly64 = poly::Polynomial<f64>;

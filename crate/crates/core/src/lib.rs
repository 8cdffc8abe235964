//! Exterior algebra of Minkowski space under the Clifford product, with the
//! machinery to turn it into Dirac theory: Hodge star and the differential /
//! codifferential pair on plane-wave fields, a primitive idempotent whose
//! minimal left ideal carries a 4×4 matrix representation, and a plane-wave
//! solver for the ideal-valued Dirac equation written with exterior forms.
//!
//! The crate is organized bottom-up:
//!
//! - [`blade`] / [`multivector`] — exact arithmetic in the 16-dimensional
//!   complexified exterior algebra: wedge and Clifford products, Hodge star,
//!   Clifford and Hermitian conjugation.
//! - [`linalg`] — the few dense complex kernels the representation needs
//!   (≤16×16): products, least squares, rank, null spaces.
//! - [`tetrad`] / [`ideal`] — orthonormal tetrads, the idempotent
//!   t = ¼(1+h⁰)(1+ih¹h²), its ideal basis t₁…t₄, and the induced γ map.
//! - [`field`] — plane-wave superpositions with exact d, δ, and e^μ∂_μ.
//! - [`solver`] — null spaces of the 4×4 plane-wave symbol, dispersion
//!   scans, and the algebra-vs-matrix residual comparison.
//! - [`checks`] — the seeded identity suite behind the CLI `verify` command.

// index loops over μ = 0..4 mirror the summation convention throughout
#![allow(clippy::needless_range_loop)]

pub mod blade;
pub mod checks;
pub mod error;
pub mod field;
pub mod ideal;
pub mod linalg;
pub mod multivector;
pub mod solver;
pub mod tetrad;

pub use blade::{BladeIndex, Metric};
pub use error::{Error, Result};
pub use field::{FourMomentum, PlaneWaveField, Potential};
pub use ideal::{GammaRep, IdealBasis, Idempotent};
pub use linalg::{ComplexMatrix, KetVector};
pub use multivector::Multivector;
pub use solver::{SolutionSet, SymbolMatrix, TheoremReport};
pub use tetrad::Tetrad;

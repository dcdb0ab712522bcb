//! Exact computations with shuffle algebras, their symmetric Hopf-ring layers,
//! and the secant ideals of Veronese embeddings of cones.
//!
//! Module map:
//! - [`exactlin`]: rational sparse matrices, rref, kernels, subspaces.
//! - [`polyring`]: graded rings `k[x]/I` computed degree by degree.
//! - [`shuffle`]: words, the shuffle products `·_σ` and the star product `*`.
//! - [`hopf`]: symmetric tensors, the coinvariant algebra and comultiplication.
//! - [`secant`]: Veronese ideals, joins, secant ideals and generator profiles.
//! - [`verify`]: seeded randomized checks of the algebraic identities.

pub mod error;
pub mod exactlin;
pub mod hopf;
pub mod polyring;
pub mod random;
pub mod secant;
pub mod shuffle;
pub mod verify;

pub use error::{Error, Result};
pub use exactlin::{RatMatrix, Rational, Subspace};
pub use hopf::{InvariantElement, PairTensor, SymElement};
pub use polyring::{ExponentVector, GradedRing, Polynomial, RingSpec};
pub use secant::{BigradedSubspace, GeneratorProfile, ProfileRow, SecantIdeals};
pub use shuffle::{Split, TensorElement, Word};

//! Exact rational arithmetic for polyhedral convex cones and their tensor
//! products.
//!
//! The crate is organized in layers:
//!
//! * [`linalg`] — elimination and subspace machinery, generic over any ordered
//!   field scalar (see [`Scalar`]); canonical forms require [`CanonicalScale`].
//! * [`cone`] — the polyhedral [`Cone`] type with dual V/H representations
//!   kept in canonical form via the double description method.
//! * [`tensor`] — projective and injective cones in a tensor product space,
//!   lineality formulas, rank-one classification, mapping checks.
//! * [`face`] — faces, order ideals, quotients, the face constructions for
//!   both tensor cones, extremal rays, exposed/dual faces, maximal ideals.
//! * [`bodies`] — absolutely convex polytopes, homogenization, tensor hulls.
//! * [`oracle`] — slow definitional verifiers, algorithmically independent of
//!   the main paths.
//!
//! All geometry is done over arbitrary-precision rationals; there is no
//! floating point anywhere in a predicate.

pub mod bodies;
pub mod cone;
mod error;
pub mod face;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod tensor;

#[cfg(test)]
pub(crate) mod testutil;

pub use cone::{Cone, ConeRepInput};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use scalar::{rat, ratio, rvec, CanonicalScale, Rational, Scalar};

/// Vector of exact rationals.
pub type QVec = Vec<Rational>;
/// Dense matrix of exact rationals.
pub type QMatrix = Matrix<Rational>;

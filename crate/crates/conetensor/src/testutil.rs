//! Shared fixtures for unit tests.

use crate::cone::Cone;
use crate::scalar::rvec;

/// Cone over the square `[-1,1]^2` at height one; the smallest proper
/// generating polyhedral cone that is not a simplex cone.
pub(crate) fn square_cone() -> Cone {
    Cone::from_generators(
        3,
        &[
            rvec(&[1, 1, 1]),
            rvec(&[1, -1, 1]),
            rvec(&[-1, 1, 1]),
            rvec(&[-1, -1, 1]),
        ],
        &[],
    )
    .unwrap()
}

/// Dual of the square cone: the cone over the diamond `conv{±e1, ±e2}`.
pub(crate) fn diamond_cone() -> Cone {
    square_cone().dual()
}

/// `{(x, y) : y >= 0}`, the standard non-proper generating example.
pub(crate) fn half_plane() -> Cone {
    Cone::from_halfspaces(2, &[rvec(&[0, 1])], &[]).unwrap()
}

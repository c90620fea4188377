//! Closed polyhedral convex cones with dual representations.
//!
//! A [`Cone`] always carries both of its descriptions in canonical form:
//!
//! * generators: extremal rays (primitive, reduced modulo the lineality
//!   space) plus a canonical lineality basis;
//! * half-spaces: irredundant facet inequalities (primitive, reduced modulo
//!   the implicit equality space) plus a canonical basis of that space.
//!
//! The double description method is the single conversion algorithm; both
//! directions run through [`double_description`]. Because each side is the
//! minimal canonical description, cones are equal iff their fields are equal,
//! and `dual` is a representation swap.

use crate::error::{Error, Result};
use crate::linalg::{
    canonical_basis, dot, is_zero_vec, neg_vec, perp_basis, sort_vecs, sub_scaled, Matrix,
};
use crate::scalar::{CanonicalScale, Rational};
use crate::QVec;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

/// Intermediate ray guard for the double description method, configurable via
/// `CONETENSOR_MAX_DD_ROWS`.
fn dd_ray_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("CONETENSOR_MAX_DD_ROWS")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(4096)
    })
}

pub(crate) struct DdOutput {
    pub rays: Vec<QVec>,
    pub lineality: Vec<QVec>,
}

/// Extreme rays and lineality of `{x : ineqs·x >= 0, eqs·x = 0}`.
pub(crate) fn double_description(
    dim: usize,
    ineqs: &[QVec],
    eqs: &[QVec],
) -> Result<DdOutput> {
    let mut lin: Vec<QVec> = Matrix::<Rational>::identity(dim).row_vecs();
    let mut rays: Vec<QVec> = Vec::new();

    for e in eqs {
        let Some(idx) = lin.iter().position(|l| !dot(e, l).is_zero()) else {
            continue;
        };
        let l0 = lin.remove(idx);
        let v0 = dot(e, &l0);
        for l in &mut lin {
            let v = dot(e, l);
            if !v.is_zero() {
                sub_scaled(l, &l0, &(v / v0.clone()));
            }
        }
    }

    let mut processed: Vec<QVec> = Vec::new();
    for a in ineqs {
        if let Some(idx) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            // The hyperplane of `a` cuts the lineality space: pivot one
            // lineality vector out; it becomes a ray of the restricted cone.
            let mut l0 = lin.remove(idx);
            let mut v0 = dot(a, &l0);
            if v0.is_negative() {
                l0 = neg_vec(&l0);
                v0 = -v0;
            }
            for l in &mut lin {
                let v = dot(a, l);
                if !v.is_zero() {
                    sub_scaled(l, &l0, &(v / v0.clone()));
                }
            }
            for r in &mut rays {
                let v = dot(a, r);
                if !v.is_zero() {
                    sub_scaled(r, &l0, &(v / v0.clone()));
                }
            }
            rays.push(l0);
            processed.push(a.clone());
            continue;
        }

        let values: Vec<Rational> = rays.iter().map(|r| dot(a, r)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            processed.push(a.clone());
            continue;
        }

        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut new_rays: Vec<QVec> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !values[i].is_negative() {
                new_rays.push(r.clone());
            }
        }
        if !pos.is_empty() && !neg.is_empty() {
            // Tight sets over the rows processed so far; the original
            // equality rows are tight at every ray by construction.
            let tight: Vec<Vec<bool>> = rays
                .iter()
                .map(|r| processed.iter().map(|row| dot(row, r).is_zero()).collect())
                .collect();
            // Two rays are adjacent iff their common tight rows cut the
            // ambient space down to a two-dimensional face over the lineality.
            let target_rank = dim
                .checked_sub(lin.len() + 2)
                .expect("two distinct extreme rays span two dimensions beyond the lineality");
            for &p in &pos {
                for &n in &neg {
                    let common: Vec<&QVec> = (0..processed.len())
                        .filter(|&k| tight[p][k] && tight[n][k])
                        .map(|k| &processed[k])
                        .collect();
                    if eqs.len() + common.len() < target_rank {
                        continue;
                    }
                    let mut stacked: Vec<QVec> = eqs.to_vec();
                    stacked.extend(common.into_iter().cloned());
                    if Matrix::from_rows(dim, &stacked)?.rank() != target_rank {
                        continue;
                    }
                    // w = <a,p>·n - <a,n>·p lies on the hyperplane and in the cone.
                    let mut w = vec![Rational::zero(); dim];
                    sub_scaled(&mut w, &rays[n], &-values[p].clone());
                    sub_scaled(&mut w, &rays[p], &values[n].clone());
                    CanonicalScale::primitive_scale(&mut w);
                    new_rays.push(w);
                }
            }
        }
        if new_rays.len() > dd_ray_limit() {
            return Err(Error::DdLimitExceeded {
                limit: dd_ray_limit(),
                reached: new_rays.len(),
            });
        }
        rays = new_rays;
        processed.push(a.clone());
    }

    let lineality = canonical_basis(dim, &lin);
    let rays = canonicalize_rays(dim, rays, &lineality);
    Ok(DdOutput { rays, lineality })
}

/// Reduce rays modulo the lineality span (zero out the pivot coordinates of
/// the canonical lineality basis), scale to primitive form, sort.
fn canonicalize_rays(dim: usize, mut rays: Vec<QVec>, lineality: &[QVec]) -> Vec<QVec> {
    debug_assert!(rays.iter().chain(lineality).all(|v| v.len() == dim));
    let pivots: Vec<usize> = lineality
        .iter()
        .map(|b| b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector"))
        .collect();
    for r in &mut rays {
        for (b, &p) in lineality.iter().zip(&pivots) {
            let coeff = r[p].clone() / b[p].clone();
            sub_scaled(r, b, &coeff);
        }
        CanonicalScale::primitive_scale(r);
        debug_assert!(!is_zero_vec(r), "extreme ray reduced to the lineality span");
    }
    sort_vecs(&mut rays);
    debug_assert!(rays.windows(2).all(|w| w[0] != w[1]), "duplicate extreme rays");
    rays
}

/// One or both representations of a cone, as raw user input.
#[derive(Clone, Debug, Default)]
pub struct ConeRepInput {
    pub dim: usize,
    pub rays: Option<Vec<QVec>>,
    pub lineality: Option<Vec<QVec>>,
    pub ineqs: Option<Vec<QVec>>,
    pub eqs: Option<Vec<QVec>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cone {
    dim: usize,
    rays: Vec<QVec>,
    lineality: Vec<QVec>,
    ineqs: Vec<QVec>,
    eqs: Vec<QVec>,
}

impl Cone {
    pub fn from_input(input: &ConeRepInput) -> Result<Cone> {
        let dim = input.dim;
        for side in [&input.rays, &input.lineality, &input.ineqs, &input.eqs] {
            if let Some(vecs) = side {
                for v in vecs {
                    if v.len() != dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            got: v.len(),
                        });
                    }
                }
            }
        }
        let has_v = input.rays.is_some() || input.lineality.is_some();
        let has_h = input.ineqs.is_some() || input.eqs.is_some();
        let empty: Vec<QVec> = Vec::new();
        match (has_v, has_h) {
            (false, false) => Err(Error::EmptyRepresentation),
            (true, false) => Cone::from_generators(
                dim,
                input.rays.as_deref().unwrap_or(&empty),
                input.lineality.as_deref().unwrap_or(&empty),
            ),
            (false, true) => Cone::from_halfspaces(
                dim,
                input.ineqs.as_deref().unwrap_or(&empty),
                input.eqs.as_deref().unwrap_or(&empty),
            ),
            (true, true) => {
                let v = Cone::from_generators(
                    dim,
                    input.rays.as_deref().unwrap_or(&empty),
                    input.lineality.as_deref().unwrap_or(&empty),
                )?;
                let h = Cone::from_halfspaces(
                    dim,
                    input.ineqs.as_deref().unwrap_or(&empty),
                    input.eqs.as_deref().unwrap_or(&empty),
                )?;
                if v != h {
                    return Err(Error::InconsistentRepresentations);
                }
                Ok(v)
            }
        }
    }

    /// Cone generated by `rays` plus the span of `lineality`.
    pub fn from_generators(dim: usize, rays: &[QVec], lineality: &[QVec]) -> Result<Cone> {
        let rays = nonzero(dim, rays)?;
        let lineality = nonzero(dim, lineality)?;
        // Dual run: facets of this cone are the extreme rays of its dual.
        let h = double_description(dim, &rays, &lineality)?;
        let v = double_description(dim, &h.rays, &h.lineality)?;
        Ok(Cone {
            dim,
            rays: v.rays,
            lineality: v.lineality,
            ineqs: h.rays,
            eqs: h.lineality,
        })
    }

    /// Cone `{x : ineqs·x >= 0, eqs·x = 0}`.
    pub fn from_halfspaces(dim: usize, ineqs: &[QVec], eqs: &[QVec]) -> Result<Cone> {
        let ineqs = nonzero(dim, ineqs)?;
        let eqs = nonzero(dim, eqs)?;
        let v = double_description(dim, &ineqs, &eqs)?;
        let h = double_description(dim, &v.rays, &v.lineality)?;
        Ok(Cone {
            dim,
            rays: v.rays,
            lineality: v.lineality,
            ineqs: h.rays,
            eqs: h.lineality,
        })
    }

    pub fn zero(dim: usize) -> Cone {
        Cone::from_generators(dim, &[], &[]).expect("zero cone")
    }

    pub fn full_space(dim: usize) -> Cone {
        Cone::from_halfspaces(dim, &[], &[]).expect("full space")
    }

    /// The nonnegative orthant.
    pub fn standard(dim: usize) -> Cone {
        let id = Matrix::<Rational>::identity(dim).row_vecs();
        Cone::from_generators(dim, &id, &[]).expect("standard cone")
    }

    pub fn from_subspace(dim: usize, basis: &[QVec]) -> Result<Cone> {
        Cone::from_generators(dim, &[], basis)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn lineality_basis(&self) -> &[QVec] {
        &self.lineality
    }

    pub fn ineqs(&self) -> &[QVec] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[QVec] {
        &self.eqs
    }

    /// Canonical basis of `cone ∩ -cone`.
    pub fn lineality_space(&self) -> &[QVec] {
        &self.lineality
    }

    /// The dual cone `{φ : <x,φ> >= 0 for all x}`. A representation swap:
    /// facets of the primal are the extreme rays of the dual and vice versa,
    /// and both canonical forms agree. Hence `dual(dual(c)) == c` on the nose
    /// (polyhedral cones are closed).
    pub fn dual(&self) -> Cone {
        Cone {
            dim: self.dim,
            rays: self.ineqs.clone(),
            lineality: self.eqs.clone(),
            ineqs: self.rays.clone(),
            eqs: self.lineality.clone(),
        }
    }

    pub fn is_proper(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_generating(&self) -> bool {
        self.eqs.is_empty()
    }

    pub fn is_full_space(&self) -> bool {
        self.ineqs.is_empty() && self.eqs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(self.ineqs.iter().all(|a| !dot(a, x).is_negative())
            && self.eqs.iter().all(|e| dot(e, x).is_zero()))
    }

    /// Conic generators: rays plus both orientations of the lineality basis.
    pub fn generators(&self) -> Vec<QVec> {
        let mut gens = self.rays.clone();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(neg_vec(l));
        }
        gens
    }

    /// Canonical basis of the linear span of the cone.
    pub fn span_basis(&self) -> Vec<QVec> {
        let mut gens = self.rays.clone();
        gens.extend(self.lineality.iter().cloned());
        canonical_basis(self.dim, &gens)
    }

    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        for g in other.generators() {
            if !self.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn subset_of(&self, other: &Cone) -> Result<bool> {
        other.contains_cone(self)
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut ineqs = self.ineqs.clone();
        ineqs.extend(other.ineqs.iter().cloned());
        let mut eqs = self.eqs.clone();
        eqs.extend(other.eqs.iter().cloned());
        Cone::from_halfspaces(self.dim, &ineqs, &eqs)
    }

    pub fn minkowski_sum(&self, other: &Cone) -> Result<Cone> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().cloned());
        let mut lin = self.lineality.clone();
        lin.extend(other.lineality.iter().cloned());
        Cone::from_generators(self.dim, &rays, &lin)
    }

    /// `cone ∩ span(basis)`.
    pub fn intersect_subspace(&self, basis: &[QVec]) -> Result<Cone> {
        for v in basis {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let mut eqs = self.eqs.clone();
        eqs.extend(perp_basis(self.dim, basis));
        Cone::from_halfspaces(self.dim, &self.ineqs, &eqs)
    }

    /// Pushforward along the quotient by `subspace`. The complement is the
    /// coordinate subspace of the non-pivot columns of the subspace basis,
    /// which makes the construction canonical. Returns the image cone and the
    /// projection matrix.
    pub fn quotient(&self, subspace: &[QVec]) -> Result<(Cone, Matrix<Rational>)> {
        for v in subspace {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let projection = quotient_projection(self.dim, subspace)?;
        let rays: Vec<QVec> = self
            .rays
            .iter()
            .map(|r| projection.mul_vec(r))
            .collect::<Result<_>>()?;
        let lin: Vec<QVec> = self
            .lineality
            .iter()
            .map(|l| projection.mul_vec(l))
            .collect::<Result<_>>()?;
        let image = Cone::from_generators(projection.rows(), &rays, &lin)?;
        Ok((image, projection))
    }
}

/// The canonical projection `E -> E/span(subspace)` in the coordinates of the
/// non-pivot columns of the subspace basis.
pub fn quotient_projection(dim: usize, subspace: &[QVec]) -> Result<Matrix<Rational>> {
    let (r, pivots) = Matrix::from_rows(dim, subspace)?.rref();
    let complement: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut m = Matrix::zero(complement.len(), dim);
    for (k, &c) in complement.iter().enumerate() {
        *m.at_mut(k, c) = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            *m.at_mut(k, p) = -r.at(i, c).clone();
        }
    }
    Ok(m)
}

fn nonzero(dim: usize, vecs: &[QVec]) -> Result<Vec<QVec>> {
    let mut out = Vec::with_capacity(vecs.len());
    for v in vecs {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        if !is_zero_vec(v) {
            out.push(v.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rvec;
    use crate::testutil::square_cone;

    #[test]
    fn standard_cone_self_description() {
        let c = Cone::standard(2);
        assert_eq!(c.rays(), &[rvec(&[0, 1]), rvec(&[1, 0])]);
        assert_eq!(c.ineqs(), &[rvec(&[0, 1]), rvec(&[1, 0])]);
        assert!(c.lineality_basis().is_empty());
        assert!(c.eqs().is_empty());
    }

    #[test]
    fn square_cone_facets() {
        let q = square_cone();
        let mut expected = vec![
            rvec(&[-1, 0, 1]),
            rvec(&[1, 0, 1]),
            rvec(&[0, -1, 1]),
            rvec(&[0, 1, 1]),
        ];
        sort_vecs(&mut expected);
        assert_eq!(q.ineqs(), &expected[..]);
        assert_eq!(q.rays().len(), 4);
    }

    #[test]
    fn half_plane_decomposition() {
        let h = Cone::from_halfspaces(2, &[rvec(&[0, 1])], &[]).unwrap();
        assert_eq!(h.rays(), &[rvec(&[0, 1])]);
        assert_eq!(h.lineality_basis(), &[rvec(&[1, 0])]);
    }

    #[test]
    fn dual_of_standard_is_standard() {
        let c = Cone::standard(2);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn dual_of_square_cone() {
        let q = square_cone();
        let d = q.dual();
        let mut expected = vec![
            rvec(&[1, 0, 1]),
            rvec(&[-1, 0, 1]),
            rvec(&[0, 1, 1]),
            rvec(&[0, -1, 1]),
        ];
        sort_vecs(&mut expected);
        assert_eq!(d.rays(), &expected[..]);
        assert_eq!(q.dual().dual(), q);
    }

    #[test]
    fn dual_of_zero_is_full_space() {
        let z = Cone::zero(2);
        assert!(z.is_zero());
        let d = z.dual();
        assert!(d.is_full_space());
        assert_eq!(d, Cone::full_space(2));
    }

    #[test]
    fn lineality_of_half_plane() {
        let h = Cone::from_halfspaces(2, &[rvec(&[0, 1])], &[]).unwrap();
        assert_eq!(h.lineality_space(), &[rvec(&[1, 0])]);
        assert!(Cone::standard(2).lineality_space().is_empty());
        assert_eq!(Cone::full_space(3).lineality_space().len(), 3);
    }

    #[test]
    fn predicates() {
        let std3 = Cone::standard(3);
        assert!(std3.is_proper() && std3.is_generating());

        let h = Cone::from_halfspaces(2, &[rvec(&[0, 1])], &[]).unwrap();
        assert!(!h.is_proper() && h.is_generating());

        let ray = Cone::from_generators(2, &[rvec(&[1, 0])], &[]).unwrap();
        assert!(ray.is_proper() && !ray.is_generating());
        // duality: generating iff dual proper, and closed proper iff dual generating
        assert!(!ray.dual().is_proper());
        assert!(ray.dual().is_generating());
    }

    #[test]
    fn membership() {
        let q = square_cone();
        assert!(Cone::standard(2).contains(&rvec(&[1, 1])).unwrap());
        assert!(q.contains(&rvec(&[0, 0, 1])).unwrap());
        assert!(q.contains(&rvec(&[1, 1, 1])).unwrap());
        assert!(!q.contains(&rvec(&[2, 0, 1])).unwrap());
        let h = Cone::from_halfspaces(2, &[rvec(&[0, 1])], &[]).unwrap();
        assert!(h.contains(&rvec(&[-1, 0])).unwrap());
    }

    #[test]
    fn membership_dimension_mismatch() {
        let q = square_cone();
        assert!(matches!(
            q.contains(&rvec(&[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn intersect_orthant_with_left_half_plane() {
        let left = Cone::from_halfspaces(2, &[rvec(&[-1, 0])], &[]).unwrap();
        let i = Cone::standard(2).intersect(&left).unwrap();
        assert_eq!(i.rays(), &[rvec(&[0, 1])]);
        assert!(i.lineality_basis().is_empty());
    }

    #[test]
    fn sum_of_axes_rays() {
        let a = Cone::from_generators(2, &[rvec(&[1, 0])], &[]).unwrap();
        let b = Cone::from_generators(2, &[rvec(&[0, 1])], &[]).unwrap();
        assert_eq!(a.minkowski_sum(&b).unwrap(), Cone::standard(2));
    }

    #[test]
    fn equality_is_scale_invariant() {
        let a = Cone::from_generators(2, &[rvec(&[2, 0])], &[]).unwrap();
        let b = Cone::from_generators(2, &[rvec(&[1, 0])], &[]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_of_orthant_by_axis() {
        let (image, proj) = Cone::standard(2).quotient(&[rvec(&[1, 0])]).unwrap();
        assert_eq!(proj.rows(), 1);
        assert_eq!(image, Cone::standard(1));
    }

    #[test]
    fn quotient_by_extremal_ray_span_is_proper() {
        let q = square_cone();
        let (image, _) = q.quotient(&[rvec(&[1, 1, 1])]).unwrap();
        assert_eq!(image.dim(), 2);
        assert!(image.is_proper());
    }

    #[test]
    fn quotient_by_trivial_subspace() {
        let q = square_cone();
        let (image, proj) = q.quotient(&[]).unwrap();
        assert_eq!(image, q);
        assert_eq!(proj, Matrix::identity(3));
    }

    #[test]
    fn quotient_by_non_ideal_subspace_can_fail_properness() {
        // span{(1,1)} meets the standard cone in an interior ray, so it is
        // not an ideal, and the image of the proper cone picks up lineality.
        let c = Cone::standard(2);
        let (image, _) = c.quotient(&[rvec(&[1, 1])]).unwrap();
        assert!(!image.is_proper());
    }

    #[test]
    fn degenerate_encodings_are_distinct() {
        let zero = Cone::zero(2);
        let full = Cone::full_space(2);
        assert!(zero.is_zero() && !zero.is_full_space());
        assert!(full.is_full_space() && !full.is_zero());
        assert_ne!(zero, full);
        assert_eq!(zero.eqs().len(), 2);
        assert!(full.eqs().is_empty() && full.ineqs().is_empty());
    }

    #[test]
    fn dim_zero_cone() {
        let c = Cone::zero(0);
        assert!(c.is_zero() && c.is_full_space());
        assert!(c.contains(&[]).unwrap());
        assert!(c.is_proper() && c.is_generating());
    }

    #[test]
    fn input_with_both_representations() {
        let input = ConeRepInput {
            dim: 2,
            rays: Some(vec![rvec(&[1, 0]), rvec(&[0, 1])]),
            lineality: None,
            ineqs: Some(vec![rvec(&[1, 0]), rvec(&[0, 1])]),
            eqs: None,
        };
        assert_eq!(Cone::from_input(&input).unwrap(), Cone::standard(2));

        let bad = ConeRepInput {
            ineqs: Some(vec![rvec(&[1, 0])]),
            ..input
        };
        assert!(matches!(
            Cone::from_input(&bad),
            Err(Error::InconsistentRepresentations)
        ));
    }

    #[test]
    fn input_requires_a_representation() {
        let input = ConeRepInput {
            dim: 2,
            ..Default::default()
        };
        assert!(matches!(
            Cone::from_input(&input),
            Err(Error::EmptyRepresentation)
        ));
    }

    #[test]
    fn lineality_equals_kernel_of_stacked_system() {
        for c in [
            Cone::from_halfspaces(2, &[rvec(&[0, 1])], &[]).unwrap(),
            Cone::full_space(3),
            Cone::standard(3),
        ] {
            let mut stacked = c.ineqs().to_vec();
            stacked.extend(c.eqs().iter().cloned());
            assert_eq!(c.lineality_space(), &perp_basis(c.dim(), &stacked)[..]);
        }
    }
}

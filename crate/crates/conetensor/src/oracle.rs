//! Slow, definition-level verifiers, algorithmically disjoint from the main
//! computation paths. `membership_fm` decides conic membership by
//! Fourier–Motzkin elimination on the coefficient system without any double
//! description; `face_definitional` and `extremality_definitional` test the
//! order-theoretic definitions directly. These run in the verification
//! suites only, never inside library operations.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, neg_vec, sort_vecs, sub_scaled, Matrix};
use crate::scalar::{ratio, CanonicalScale, Rational};
use crate::QVec;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// One inequality `coeffs · λ <= rhs` over the combination variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct FmRow {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl FmRow {
    fn normalized(mut self) -> FmRow {
        let mut all = self.coeffs.clone();
        all.push(self.rhs.clone());
        CanonicalScale::primitive_scale(&mut all);
        self.rhs = all.pop().expect("rhs present");
        self.coeffs = all;
        self
    }

    fn is_constant(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }
}

/// Decide `x ∈ cone(generators) + span(lineality)` by eliminating the
/// combination variables of `Σ λ_i g_i = x, λ >= 0` with Fourier–Motzkin.
pub fn membership_fm(
    dim: usize,
    generators: &[QVec],
    lineality: &[QVec],
    x: &[Rational],
) -> Result<bool> {
    if x.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: x.len(),
        });
    }
    let mut gens: Vec<QVec> = Vec::new();
    for g in generators {
        if g.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.len(),
            });
        }
        gens.push(g.clone());
    }
    for l in lineality {
        if l.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: l.len(),
            });
        }
        gens.push(l.clone());
        gens.push(neg_vec(l));
    }

    let vars = gens.len();
    let mut rows: BTreeSet<FmRow> = BTreeSet::new();
    // coordinate equations as <= pairs
    for coord in 0..dim {
        let coeffs: Vec<Rational> = gens.iter().map(|g| g[coord].clone()).collect();
        rows.insert(
            FmRow {
                coeffs: coeffs.clone(),
                rhs: x[coord].clone(),
            }
            .normalized(),
        );
        rows.insert(
            FmRow {
                coeffs: neg_vec(&coeffs),
                rhs: -x[coord].clone(),
            }
            .normalized(),
        );
    }
    // nonnegativity
    for j in 0..vars {
        let mut coeffs = vec![Rational::zero(); vars];
        coeffs[j] = -Rational::one();
        rows.insert(FmRow {
            coeffs,
            rhs: Rational::zero(),
        });
    }

    let mut remaining: Vec<usize> = (0..vars).collect();
    loop {
        // constant rows decide feasibility as soon as they appear
        for row in &rows {
            if row.is_constant() && row.rhs.is_negative() {
                return Ok(false);
            }
        }
        let Some(pick) = remaining
            .iter()
            .copied()
            .min_by_key(|&j| {
                let pos = rows.iter().filter(|r| r.coeffs[j].is_positive()).count();
                let neg = rows.iter().filter(|r| r.coeffs[j].is_negative()).count();
                (pos * neg, j)
            })
        else {
            break;
        };
        remaining.retain(|&j| j != pick);

        let mut pos: Vec<&FmRow> = Vec::new();
        let mut neg: Vec<&FmRow> = Vec::new();
        let mut zero: Vec<FmRow> = Vec::new();
        for row in &rows {
            if row.coeffs[pick].is_positive() {
                pos.push(row);
            } else if row.coeffs[pick].is_negative() {
                neg.push(row);
            } else {
                zero.push(row.clone());
            }
        }
        let mut next: BTreeSet<FmRow> = zero.into_iter().collect();
        for p in &pos {
            for n in &neg {
                // scale so the pick coefficient cancels: |n_j|·p + p_j·n
                let pj = p.coeffs[pick].clone();
                let nj = -n.coeffs[pick].clone();
                let mut coeffs = vec![Rational::zero(); vars];
                sub_scaled(&mut coeffs, &p.coeffs, &-nj.clone());
                sub_scaled(&mut coeffs, &n.coeffs, &-pj.clone());
                let rhs = &nj * &p.rhs + &pj * &n.rhs;
                debug_assert!(coeffs[pick].is_zero());
                let row = FmRow { coeffs, rhs }.normalized();
                if row.is_constant() {
                    if row.rhs.is_negative() {
                        return Ok(false);
                    }
                    continue;
                }
                next.insert(row);
            }
        }
        rows = next;
    }
    Ok(rows.iter().all(|r| !r.rhs.is_negative()))
}

/// Tiny deterministic generator for the extra segment samples; keeps the
/// oracle dependency-free and reproducible.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

/// The literal face definition: whenever a relative-interior point of a
/// segment between points of `c` lies in `candidate`, both endpoints must.
/// Segments are spanned by all generator pairs with the coefficient grid
/// {1/4, 1/2, 3/4}, plus `extra_samples` seeded random nonnegative
/// combinations. A `true` verdict is evidence, not proof.
pub fn face_definitional(c: &Cone, candidate: &Cone, extra_samples: usize) -> Result<bool> {
    if !c.contains_cone(candidate)? {
        return Err(Error::NotSubcone);
    }
    let gens = c.generators();
    let grid = [ratio(1, 4), ratio(1, 2), ratio(3, 4)];
    let segment_ok = |u: &QVec, v: &QVec| -> Result<bool> {
        for t in &grid {
            let mut z = vec![Rational::zero(); c.dim()];
            sub_scaled(&mut z, u, &-t.clone());
            let s = Rational::one() - t;
            sub_scaled(&mut z, v, &-s);
            if candidate.contains(&z)? && !(candidate.contains(u)? && candidate.contains(v)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for (i, u) in gens.iter().enumerate() {
        for v in gens.iter().skip(i + 1) {
            if !segment_ok(u, v)? {
                return Ok(false);
            }
        }
    }
    let mut rng = XorShift(0x6a00_9e66_7f3b_cc09);
    let mut random_point = |rng: &mut XorShift| -> QVec {
        let mut p = vec![Rational::zero(); c.dim()];
        if gens.is_empty() {
            return p;
        }
        for _ in 0..3 {
            let g = &gens[(rng.next() % gens.len() as u64) as usize];
            let w = Rational::from_integer(((rng.next() % 4) as i64).into());
            sub_scaled(&mut p, g, &-w);
        }
        p
    };
    for _ in 0..extra_samples {
        let u = random_point(&mut rng);
        let v = random_point(&mut rng);
        if !segment_ok(&u, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The literal extremal-direction test: enumerate the vertex solutions of the
/// feasibility system `x = Σ λ_i r_i, λ >= 0` over the stored generators (the
/// supports of vertex solutions are exactly the inclusion-minimal independent
/// generator subsets spanning `x`) and demand that every support be a single
/// ray parallel to `x`. A cone with a nontrivial lineality space has no
/// extremal directions at all, since every face contains that subspace.
pub fn extremality_definitional(c: &Cone, x: &[Rational]) -> Result<bool> {
    if is_zero_vec(x) {
        return Err(Error::ZeroVector);
    }
    if !c.contains(x)? {
        return Err(Error::NotInCone);
    }
    if !c.lineality_basis().is_empty() {
        return Ok(false);
    }
    let gens = c.rays();
    let dim = c.dim();
    let max_rank = Matrix::from_rows(dim, gens)?.rank();

    // depth-first enumeration of minimal independent spanning subsets
    struct Search<'a> {
        gens: &'a [QVec],
        dim: usize,
        max_rank: usize,
        x: &'a [Rational],
    }
    impl Search<'_> {
        /// Returns false as soon as a non-parallel decomposition is found.
        fn recurse(&self, start: usize, chosen: &mut Vec<usize>) -> Result<bool> {
            let rows: Vec<QVec> = chosen.iter().map(|&i| self.gens[i].clone()).collect();
            let m = Matrix::from_rows(self.dim, &rows)?;
            if m.rank() < chosen.len() {
                return Ok(true); // dependent set: no vertex support here
            }
            // does x lie in the span of the chosen columns?
            let mt = m.transpose();
            if let Some(coeffs) = mt.solve(self.x)? {
                if coeffs.iter().all(|l| !l.is_negative()) {
                    // feasible vertex solution; by minimality all coefficients
                    // are nonzero, so the support is exactly `chosen`
                    if chosen.len() > 1 {
                        return Ok(false);
                    }
                    let g = &self.gens[chosen[0]];
                    // single support ray must be parallel to x
                    let mut gp = g.clone();
                    let mut xp = self.x.to_vec();
                    CanonicalScale::primitive_scale(&mut gp);
                    CanonicalScale::primitive_scale(&mut xp);
                    if gp != xp {
                        return Ok(false);
                    }
                }
                return Ok(true); // do not extend a spanning set
            }
            if chosen.len() == self.max_rank {
                return Ok(true);
            }
            for i in start..self.gens.len() {
                chosen.push(i);
                let ok = self.recurse(i + 1, chosen)?;
                chosen.pop();
                if !ok {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
    let search = Search {
        gens,
        dim,
        max_rank,
        x,
    };
    search.recurse(0, &mut Vec::new())
}

/// Convenience wrapper: run the membership oracle against a cone's stored
/// generator representation.
pub fn membership_fm_cone(c: &Cone, x: &[Rational]) -> Result<bool> {
    membership_fm(c.dim(), c.rays(), c.lineality_basis(), x)
}

/// Deterministic sample points for oracle cross-checks: small integer
/// combinations of generators and standard basis vectors, both inside and
/// outside the cone.
pub fn sample_points(c: &Cone, count: usize, seed: u64) -> Vec<QVec> {
    let mut rng = XorShift(seed | 1);
    let gens = c.generators();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut p = vec![Rational::zero(); c.dim()];
        if !gens.is_empty() {
            for _ in 0..2 {
                let g = &gens[(rng.next() % gens.len() as u64) as usize];
                let w = Rational::from_integer(((rng.next() % 3) as i64).into());
                sub_scaled(&mut p, g, &-w);
            }
        }
        if c.dim() > 0 && rng.next() % 2 == 0 {
            let coord = (rng.next() % c.dim() as u64) as usize;
            let w = Rational::from_integer(((rng.next() % 5) as i64 - 2).into());
            p[coord] = &p[coord] + &w;
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rvec;
    use crate::testutil::{half_plane, square_cone};
    use crate::QVec;

    #[test]
    fn fm_membership_in_orthant() {
        let gens = vec![rvec(&[1, 0]), rvec(&[0, 1])];
        assert!(membership_fm(2, &gens, &[], &rvec(&[1, 1])).unwrap());
        assert!(!membership_fm(2, &gens, &[], &rvec(&[-1, 1])).unwrap());
    }

    #[test]
    fn fm_membership_in_square_cone() {
        let q = square_cone();
        assert!(!membership_fm(3, q.rays(), &[], &rvec(&[2, 0, 1])).unwrap());
        assert!(membership_fm(3, q.rays(), &[], &rvec(&[1, 1, 1])).unwrap());
        assert!(membership_fm(3, q.rays(), &[], &rvec(&[0, 0, 2])).unwrap());
    }

    #[test]
    fn fm_membership_with_lineality() {
        let h = half_plane();
        assert!(membership_fm(2, h.rays(), h.lineality_basis(), &rvec(&[-5, 0])).unwrap());
        assert!(!membership_fm(2, h.rays(), h.lineality_basis(), &rvec(&[0, -1])).unwrap());
    }

    #[test]
    fn fm_agrees_with_contains_on_samples() {
        let cones = [Cone::standard(3), square_cone(), half_plane(), Cone::zero(2)];
        for c in &cones {
            for p in sample_points(c, 40, 0xfeed) {
                assert_eq!(
                    membership_fm_cone(c, &p).unwrap(),
                    c.contains(&p).unwrap(),
                    "cone {c:?} point {p:?}"
                );
            }
        }
    }

    #[test]
    fn face_definitional_accepts_extremal_ray() {
        let c = Cone::standard(2);
        let ray = Cone::from_generators(2, &[rvec(&[1, 0])], &[]).unwrap();
        assert!(face_definitional(&c, &ray, 25).unwrap());
    }

    #[test]
    fn face_definitional_rejects_interior_ray() {
        let c = Cone::standard(2);
        let ray = Cone::from_generators(2, &[rvec(&[1, 1])], &[]).unwrap();
        assert!(!face_definitional(&c, &ray, 0).unwrap());
    }

    #[test]
    fn extremality_of_orthant_rays() {
        let c = Cone::standard(2);
        assert!(extremality_definitional(&c, &rvec(&[1, 0])).unwrap());
        assert!(extremality_definitional(&c, &rvec(&[3, 0])).unwrap());
        assert!(!extremality_definitional(&c, &rvec(&[1, 1])).unwrap());
    }

    #[test]
    fn extremality_needs_membership() {
        let c = Cone::standard(2);
        assert!(matches!(
            extremality_definitional(&c, &rvec(&[-1, 0])),
            Err(Error::NotInCone)
        ));
        assert!(matches!(
            extremality_definitional(&c, &rvec(&[0, 0])),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn no_extremal_directions_with_lineality() {
        let h = half_plane();
        assert!(!extremality_definitional(&h, &rvec(&[0, 1])).unwrap());
    }

    #[test]
    fn square_cone_rays_are_extremal() {
        let q = square_cone();
        for r in q.rays() {
            assert!(extremality_definitional(&q, r).unwrap());
        }
        let interior: QVec = rvec(&[0, 0, 1]);
        assert!(!extremality_definitional(&q, &interior).unwrap());
    }

    #[test]
    fn fm_dimension_check() {
        assert!(matches!(
            membership_fm(2, &[rvec(&[1, 0])], &[], &rvec(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

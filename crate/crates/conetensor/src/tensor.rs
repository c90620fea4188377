//! Projective and injective cones in the tensor product of two ordered
//! spaces, together with the direct lineality formulas, the reasonable-cone
//! sandwich, rank-one classification, and pushforward checks.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{canonical_basis, is_zero_vec, neg_vec, subspace_contains, Matrix};
use crate::scalar::Rational;
use crate::QVec;
use num_traits::Zero;

/// Coordinates for `E ⊗ F`: the basis tensor `e_i ⊗ f_j` sits at index
/// `i * right_dim + j` (row-major). Every operation in this crate that
/// touches the tensor product goes through this one index map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub left_dim: usize,
    pub right_dim: usize,
}

impl TensorSpace {
    pub fn new(left_dim: usize, right_dim: usize) -> Self {
        TensorSpace {
            left_dim,
            right_dim,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.left_dim * self.right_dim
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left_dim && j < self.right_dim);
        i * self.right_dim + j
    }

    /// Reshape a tensor vector into its `left_dim × right_dim` coefficient
    /// matrix.
    pub fn reshape(&self, u: &[Rational]) -> Result<Matrix<Rational>> {
        if u.len() != self.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.total_dim(),
                got: u.len(),
            });
        }
        Ok(Matrix::new(self.left_dim, self.right_dim, u.to_vec()))
    }

    /// Matrix rank of the reshaped tensor.
    pub fn tensor_rank(&self, u: &[Rational]) -> Result<usize> {
        Ok(self.reshape(u)?.rank())
    }
}

/// Elementary tensor `x ⊗ y` as a coordinate vector.
pub fn vec_tensor(x: &[Rational], y: &[Rational]) -> QVec {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for xi in x {
        for yj in y {
            out.push(xi * yj);
        }
    }
    out
}

/// Kronecker product of two linear maps, consistent with [`vec_tensor`]:
/// `kron_map(t, s) · vec_tensor(x, y) = vec_tensor(t·x, s·y)`.
pub fn kron_map(t: &Matrix<Rational>, s: &Matrix<Rational>) -> Matrix<Rational> {
    let rows = t.rows() * s.rows();
    let cols = t.cols() * s.cols();
    let mut out = Matrix::zero(rows, cols);
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            let tij = t.at(i, j);
            if tij.is_zero() {
                continue;
            }
            for k in 0..s.rows() {
                for l in 0..s.cols() {
                    *out.at_mut(i * s.rows() + k, j * s.cols() + l) = tij * s.at(k, l);
                }
            }
        }
    }
    out
}

/// The projective cone: generated by the elementary tensors of generators,
/// with lineality generated by `lineal(e) ⊗ (rays+lineality of f)` and
/// `(rays+lineality of e) ⊗ lineal(f)`. Extremality of the generators is
/// recomputed by the double description pass inside `Cone::from_generators`.
pub fn projective_cone(e: &Cone, f: &Cone) -> Cone {
    let space = TensorSpace::new(e.dim(), f.dim());
    let mut rays = Vec::new();
    for r in e.rays() {
        for s in f.rays() {
            rays.push(vec_tensor(r, s));
        }
    }
    let mut lin = Vec::new();
    let e_side: Vec<&QVec> = e.rays().iter().chain(e.lineality_basis()).collect();
    let f_side: Vec<&QVec> = f.rays().iter().chain(f.lineality_basis()).collect();
    for l in e.lineality_basis() {
        for v in &f_side {
            lin.push(vec_tensor(l, v));
        }
    }
    for v in &e_side {
        for l in f.lineality_basis() {
            lin.push(vec_tensor(v, l));
        }
    }
    Cone::from_generators(space.total_dim(), &rays, &lin).expect("consistent dimensions")
}

/// Functional generators of the dual cone: extreme rays plus both
/// orientations of the dual lineality basis.
fn dual_functionals(c: &Cone) -> Vec<QVec> {
    let d = c.dual();
    let mut out = d.rays().to_vec();
    for l in d.lineality_basis() {
        out.push(l.clone());
        out.push(neg_vec(l));
    }
    out
}

/// The injective cone `{u : <u, φ⊗ψ> >= 0 for all φ in dual(e), ψ in dual(f)}`,
/// built directly as a half-space representation over the finite family of
/// dual generators. Coincides with `dual(projective_cone(dual(e), dual(f)))`,
/// which the test suite checks as an independent route.
pub fn injective_cone(e: &Cone, f: &Cone) -> Cone {
    let space = TensorSpace::new(e.dim(), f.dim());
    let mut ineqs = Vec::new();
    for phi in dual_functionals(e) {
        for psi in dual_functionals(f) {
            ineqs.push(vec_tensor(&phi, &psi));
        }
    }
    Cone::from_halfspaces(space.total_dim(), &ineqs, &[]).expect("consistent dimensions")
}

/// Direct formula for the lineality space of the projective cone:
/// `(lineal(e) ⊗ span(f)) + (span(e) ⊗ lineal(f))`.
pub fn projective_lineality(e: &Cone, f: &Cone) -> Vec<QVec> {
    let space = TensorSpace::new(e.dim(), f.dim());
    let mut gens = Vec::new();
    for l in e.lineality_basis() {
        for v in f.span_basis() {
            gens.push(vec_tensor(l, &v));
        }
    }
    for v in e.span_basis() {
        for l in f.lineality_basis() {
            gens.push(vec_tensor(&v, l));
        }
    }
    canonical_basis(space.total_dim(), &gens)
}

/// Direct formula for the lineality space of the injective cone:
/// `(lineal(e) ⊗ F) + (E ⊗ lineal(f))` with full ambient factors.
pub fn injective_lineality(e: &Cone, f: &Cone) -> Vec<QVec> {
    let space = TensorSpace::new(e.dim(), f.dim());
    let full_e = Matrix::<Rational>::identity(e.dim()).row_vecs();
    let full_f = Matrix::<Rational>::identity(f.dim()).row_vecs();
    let mut gens = Vec::new();
    for l in e.lineality_basis() {
        for v in &full_f {
            gens.push(vec_tensor(l, v));
        }
    }
    for v in &full_e {
        for l in f.lineality_basis() {
            gens.push(vec_tensor(v, l));
        }
    }
    canonical_basis(space.total_dim(), &gens)
}

/// A cone in the tensor space is reasonable iff it is sandwiched between the
/// projective and the injective cone.
pub fn is_reasonable(k: &Cone, e: &Cone, f: &Cone) -> Result<bool> {
    let space = TensorSpace::new(e.dim(), f.dim());
    if k.dim() != space.total_dim() {
        return Err(Error::DimensionMismatch {
            expected: space.total_dim(),
            got: k.dim(),
        });
    }
    Ok(projective_cone(e, f).subset_of(k)? && k.subset_of(&injective_cone(e, f))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    Projective,
    Injective,
}

/// Which clause of the rank-one membership classification fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankOneClause {
    /// The tensor lies in the lineality space of the tensor cone
    /// (one factor in a lineality space, paired with a spanning factor).
    Lineality,
    /// Both factors positive.
    PositivePair,
    /// Both factors negative.
    NegatedPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneVerdict {
    pub member: bool,
    pub clause: Option<RankOneClause>,
}

/// Classify whether the rank-one tensor `x ⊗ y` lies in the chosen tensor
/// cone, reporting the clause that decides membership. For closed polyhedral
/// cones the weak closures in the injective clauses are identities.
pub fn rank_one_classify(
    x: &[Rational],
    y: &[Rational],
    e: &Cone,
    f: &Cone,
    kind: TensorKind,
) -> Result<RankOneVerdict> {
    if is_zero_vec(x) || is_zero_vec(y) {
        return Err(Error::ZeroVector);
    }
    if x.len() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            got: x.len(),
        });
    }
    if y.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: y.len(),
        });
    }
    let in_lin_e = subspace_contains(e.dim(), e.lineality_basis(), &[x.to_vec()])?;
    let in_lin_f = subspace_contains(f.dim(), f.lineality_basis(), &[y.to_vec()])?;
    let lineality_clause = match kind {
        TensorKind::Projective => {
            let in_span_e = subspace_contains(e.dim(), &e.span_basis(), &[x.to_vec()])?;
            let in_span_f = subspace_contains(f.dim(), &f.span_basis(), &[y.to_vec()])?;
            (in_lin_e && in_span_f) || (in_span_e && in_lin_f)
        }
        TensorKind::Injective => in_lin_e || in_lin_f,
    };
    if lineality_clause {
        return Ok(RankOneVerdict {
            member: true,
            clause: Some(RankOneClause::Lineality),
        });
    }
    if e.contains(x)? && f.contains(y)? {
        return Ok(RankOneVerdict {
            member: true,
            clause: Some(RankOneClause::PositivePair),
        });
    }
    if e.contains(&neg_vec(x))? && f.contains(&neg_vec(y))? {
        return Ok(RankOneVerdict {
            member: true,
            clause: Some(RankOneClause::NegatedPair),
        });
    }
    Ok(RankOneVerdict {
        member: false,
        clause: None,
    })
}

/// Image of a cone under a linear map, as a cone in the codomain.
pub fn image_cone(t: &Matrix<Rational>, e: &Cone) -> Result<Cone> {
    if t.cols() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            got: t.cols(),
        });
    }
    let rays: Vec<QVec> = e.rays().iter().map(|r| t.mul_vec(r)).collect::<Result<_>>()?;
    let lin: Vec<QVec> = e
        .lineality_basis()
        .iter()
        .map(|l| t.mul_vec(l))
        .collect::<Result<_>>()?;
    Cone::from_generators(t.rows(), &rays, &lin)
}

/// Preimage of a cone under a linear map: the half-space representation
/// pulls back row by row.
pub fn preimage_cone(t: &Matrix<Rational>, g: &Cone) -> Result<Cone> {
    if t.rows() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: t.rows(),
        });
    }
    let tt = t.transpose();
    let ineqs: Vec<QVec> = g.ineqs().iter().map(|a| tt.mul_vec(a)).collect::<Result<_>>()?;
    let eqs: Vec<QVec> = g.eqs().iter().map(|a| tt.mul_vec(a)).collect::<Result<_>>()?;
    Cone::from_halfspaces(t.cols(), &ineqs, &eqs)
}

/// Whether `t` maps `e` into `g` (positivity of the map).
pub fn maps_into(t: &Matrix<Rational>, e: &Cone, g: &Cone) -> Result<bool> {
    for gen in e.generators() {
        if !g.contains(&t.mul_vec(&gen)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `t[e] = g` exactly.
pub fn pushforward_check(t: &Matrix<Rational>, e: &Cone, g: &Cone) -> Result<bool> {
    if t.rows() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: t.rows(),
        });
    }
    Ok(image_cone(t, e)? == *g)
}

/// Whether `t^{-1}[g] = e` exactly (bipositivity of `t` viewed as a map
/// between the ordered spaces).
pub fn pullback_check(t: &Matrix<Rational>, e: &Cone, g: &Cone) -> Result<bool> {
    Ok(preimage_cone(t, g)? == *e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rvec};
    use crate::testutil::{diamond_cone, half_plane, square_cone};

    #[test]
    fn vec_tensor_examples() {
        assert_eq!(vec_tensor(&rvec(&[1, 0]), &rvec(&[0, 1])), rvec(&[0, 1, 0, 0]));
        assert_eq!(vec_tensor(&rvec(&[1, 2]), &rvec(&[3, 4])), rvec(&[3, 4, 6, 8]));
        assert_eq!(vec_tensor(&rvec(&[1, 2]), &rvec(&[0, 0])), rvec(&[0, 0, 0, 0]));
    }

    #[test]
    fn kron_identity() {
        let id2 = Matrix::<Rational>::identity(2);
        assert_eq!(kron_map(&id2, &id2), Matrix::identity(4));
        let a = Matrix::new(1, 1, rvec(&[2]));
        let b = Matrix::new(1, 1, rvec(&[3]));
        assert_eq!(kron_map(&a, &b), Matrix::new(1, 1, rvec(&[6])));
    }

    #[test]
    fn kron_swap_sends_basis_tensor() {
        let swap = Matrix::from_rows(2, &[rvec(&[0, 1]), rvec(&[1, 0])]).unwrap();
        let id2 = Matrix::<Rational>::identity(2);
        let k = kron_map(&swap, &id2);
        let e1e2 = vec_tensor(&rvec(&[1, 0]), &rvec(&[0, 1]));
        let e2e2 = vec_tensor(&rvec(&[0, 1]), &rvec(&[0, 1]));
        assert_eq!(k.mul_vec(&e1e2).unwrap(), e2e2);
    }

    #[test]
    fn kron_consistent_with_vec_tensor() {
        let t = Matrix::from_rows(2, &[rvec(&[1, 2]), rvec(&[0, 1]), rvec(&[3, -1])]).unwrap();
        let s = Matrix::from_rows(3, &[rvec(&[1, 0, 2]), rvec(&[-1, 1, 0])]).unwrap();
        let x = rvec(&[2, -3]);
        let y = rvec(&[1, 4, -2]);
        let lhs = kron_map(&t, &s).mul_vec(&vec_tensor(&x, &y)).unwrap();
        let rhs = vec_tensor(&t.mul_vec(&x).unwrap(), &s.mul_vec(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn projective_of_standard_cones_is_simplex() {
        let min = projective_cone(&Cone::standard(2), &Cone::standard(2));
        assert_eq!(min, Cone::standard(4));
        assert_eq!(min.rays().len(), 4);
    }

    #[test]
    fn projective_of_square_and_standard_has_eight_rays() {
        let min = projective_cone(&square_cone(), &Cone::standard(2));
        assert_eq!(min.rays().len(), 8);
        for q in square_cone().rays() {
            for e in Cone::standard(2).rays() {
                assert!(min.rays().contains(&vec_tensor(q, e)));
            }
        }
    }

    #[test]
    fn projective_with_half_plane_has_lineality() {
        let e = half_plane();
        let f = Cone::standard(1);
        let min = projective_cone(&e, &f);
        assert_eq!(min.lineality_space(), &[rvec(&[1, 0])]);
        assert_eq!(projective_lineality(&e, &f), vec![rvec(&[1, 0])]);
    }

    #[test]
    fn injective_of_standard_cones_collapses_to_projective() {
        let e = Cone::standard(2);
        let max = injective_cone(&e, &e);
        assert_eq!(max, Cone::standard(4));
        assert_eq!(max, projective_cone(&e, &e));
    }

    #[test]
    fn injective_with_zero_cone_factor_is_zero() {
        let max = injective_cone(&Cone::zero(2), &Cone::standard(2));
        assert!(max.is_zero());
        assert_eq!(max.dim(), 4);
    }

    #[test]
    fn injective_of_square_pair_strictly_contains_projective() {
        let q = square_cone();
        let d = diamond_cone();
        let min = projective_cone(&q, &d);
        let max = injective_cone(&q, &d);
        assert!(min.subset_of(&max).unwrap());
        assert_ne!(min, max);
    }

    #[test]
    fn injective_is_dual_of_projective_of_duals() {
        let pairs = [
            (Cone::standard(2), square_cone()),
            (square_cone(), diamond_cone()),
            (half_plane(), Cone::standard(2)),
            (Cone::zero(2), half_plane()),
        ];
        for (e, f) in &pairs {
            assert_eq!(
                injective_cone(e, f),
                projective_cone(&e.dual(), &f.dual()).dual()
            );
        }
    }

    #[test]
    fn lineality_formulas_match_direct_computation() {
        let cones = [
            Cone::standard(2),
            half_plane(),
            Cone::zero(2),
            Cone::full_space(2),
        ];
        for e in &cones {
            for f in &cones {
                assert_eq!(
                    projective_lineality(e, f),
                    projective_cone(e, f).lineality_space(),
                );
                assert_eq!(
                    injective_lineality(e, f),
                    injective_cone(e, f).lineality_space(),
                );
            }
        }
    }

    #[test]
    fn proper_factors_give_trivial_lineality() {
        assert!(projective_lineality(&square_cone(), &Cone::standard(2)).is_empty());
        assert!(injective_lineality(&square_cone(), &Cone::standard(2)).is_empty());
    }

    #[test]
    fn zero_cone_factor_kills_projective_lineality() {
        let lin = projective_lineality(&Cone::full_space(2), &Cone::zero(2));
        assert!(lin.is_empty());
        // contrast: the injective lineality with a full-space factor is everything
        let lin = injective_lineality(&Cone::full_space(2), &Cone::standard(2));
        assert_eq!(lin.len(), 4);
    }

    #[test]
    fn reasonable_sandwich() {
        let q = square_cone();
        let d = diamond_cone();
        assert!(is_reasonable(&projective_cone(&q, &d), &q, &d).unwrap());
        assert!(is_reasonable(&injective_cone(&q, &d), &q, &d).unwrap());
        assert!(!is_reasonable(&Cone::standard(9), &q, &d).unwrap());
    }

    #[test]
    fn rank_one_positive_pair() {
        let q = square_cone();
        let d = diamond_cone();
        let x = rvec(&[1, 1, 1]);
        let y = rvec(&[1, 0, 1]);
        for kind in [TensorKind::Projective, TensorKind::Injective] {
            let v = rank_one_classify(&x, &y, &q, &d, kind).unwrap();
            assert!(v.member);
            assert_eq!(v.clause, Some(RankOneClause::PositivePair));
        }
    }

    #[test]
    fn rank_one_negated_pair() {
        let q = square_cone();
        let d = diamond_cone();
        let x = rvec(&[-1, -1, -1]);
        let y = rvec(&[-1, 0, -1]);
        for kind in [TensorKind::Projective, TensorKind::Injective] {
            let v = rank_one_classify(&x, &y, &q, &d, kind).unwrap();
            assert!(v.member);
            assert_eq!(v.clause, Some(RankOneClause::NegatedPair));
        }
    }

    #[test]
    fn rank_one_lineality_clause() {
        let e = half_plane();
        let f = Cone::standard(1);
        let x = rvec(&[1, 0]);
        let y = vec![rat(-2)];
        let v = rank_one_classify(&x, &y, &e, &f, TensorKind::Projective).unwrap();
        assert!(v.member);
        assert_eq!(v.clause, Some(RankOneClause::Lineality));
        // cross-check against actual membership
        let min = projective_cone(&e, &f);
        assert!(min.contains(&vec_tensor(&x, &y)).unwrap());
    }

    #[test]
    fn rank_one_rejects_zero_factor() {
        let e = Cone::standard(2);
        assert!(matches!(
            rank_one_classify(&rvec(&[0, 0]), &rvec(&[1, 0]), &e, &e, TensorKind::Projective),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn rank_one_agrees_with_membership() {
        let e = half_plane();
        let f = diamond_cone();
        let min = projective_cone(&e, &f);
        let max = injective_cone(&e, &f);
        let xs = [rvec(&[1, 0]), rvec(&[0, 1]), rvec(&[-1, 2]), rvec(&[1, -1])];
        let ys = [rvec(&[1, 0, 1]), rvec(&[0, 0, 1]), rvec(&[-1, 0, -1]), rvec(&[2, 1, 0])];
        for x in &xs {
            for y in &ys {
                let u = vec_tensor(x, y);
                let vp = rank_one_classify(x, y, &e, &f, TensorKind::Projective).unwrap();
                assert_eq!(vp.member, min.contains(&u).unwrap(), "projective {x:?} {y:?}");
                let vi = rank_one_classify(x, y, &e, &f, TensorKind::Injective).unwrap();
                assert_eq!(vi.member, max.contains(&u).unwrap(), "injective {x:?} {y:?}");
            }
        }
    }

    #[test]
    fn pushforward_examples() {
        let id = Matrix::<Rational>::identity(2);
        assert!(pushforward_check(&id, &Cone::standard(2), &Cone::standard(2)).unwrap());

        // send the four standard rays of R^4 onto the square cone generators
        let q = square_cone();
        let t = Matrix::from_rows(
            4,
            &[
                rvec(&[1, 1, -1, -1]),
                rvec(&[1, -1, 1, -1]),
                rvec(&[1, 1, 1, 1]),
            ],
        )
        .unwrap();
        assert!(pushforward_check(&t, &Cone::standard(4), &q).unwrap());

        let proj = Matrix::from_rows(2, &[rvec(&[1, 0])]).unwrap();
        assert!(!pushforward_check(&proj, &Cone::standard(2), &Cone::zero(1)).unwrap());
    }

    #[test]
    fn theorem_a_and_b_corner_cases_differ() {
        // e has the zero cone in a nonzero space, f is improper:
        // the projective cone is proper (zero-cone corner), the injective one is not.
        let e = Cone::zero(2);
        let f = half_plane();
        assert!(projective_cone(&e, &f).is_proper());
        assert!(!injective_cone(&e, &f).is_proper());
        // with a zero-dimensional factor both are proper
        let p = Cone::zero(0);
        assert!(projective_cone(&p, &f).is_proper());
        assert!(injective_cone(&p, &f).is_proper());
    }
}

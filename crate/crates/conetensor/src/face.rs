//! Faces, order ideals, quotients, and the face constructions for the
//! projective and injective tensor cones: the "or"/"and" faces and their
//! sublattice, combined faces, the operator-style injective faces, order
//! ideals for the injective cone, extremal rays, exposed and dual faces,
//! maximal ideals, and the homomorphism/isomorphism checks.

use crate::cone::{quotient_projection, Cone};
use crate::error::{Error, Result};
use crate::linalg::{canonical_basis, dot, is_zero_vec, perp_basis, subspace_contains, Matrix};
use crate::scalar::Rational;
use crate::tensor::{
    injective_cone, injective_lineality, maps_into, preimage_cone, projective_cone,
    projective_lineality, pushforward_check, vec_tensor,
};
use crate::QVec;
use num_traits::{One, Zero};

/// A face of a polyhedral cone, stored as the sorted set of indices of the
/// parent's extremal rays it contains. Every face contains the parent's
/// lineality space; the empty index set is the minimal face.
#[derive(Clone, Debug, PartialEq)]
pub struct Face {
    parent: Cone,
    indices: Vec<usize>,
}

impl Face {
    /// Validated constructor: the selected rays together with the parent
    /// lineality must generate a face of the parent.
    pub fn new(parent: &Cone, indices: &[usize]) -> Result<Face> {
        let face = Face::new_unchecked(parent, indices)?;
        if !is_face(parent, &face.to_cone())? {
            return Err(Error::FacePrecondition(
                "selected rays do not generate a face".into(),
            ));
        }
        Ok(face)
    }

    /// Constructor for faces produced by constructions that guarantee the
    /// face property. Bounds are still checked.
    pub(crate) fn new_unchecked(parent: &Cone, indices: &[usize]) -> Result<Face> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        for &i in &idx {
            if i >= parent.rays().len() {
                return Err(Error::InvalidRayIndex {
                    index: i,
                    count: parent.rays().len(),
                });
            }
        }
        Ok(Face {
            parent: parent.clone(),
            indices: idx,
        })
    }

    /// The minimal face: the lineality space of the parent.
    pub fn minimal(parent: &Cone) -> Face {
        Face {
            parent: parent.clone(),
            indices: Vec::new(),
        }
    }

    /// The maximal face: the parent cone itself.
    pub fn maximal(parent: &Cone) -> Face {
        Face {
            parent: parent.clone(),
            indices: (0..parent.rays().len()).collect(),
        }
    }

    pub fn parent(&self) -> &Cone {
        &self.parent
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_minimal(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.indices.len() == self.parent.rays().len()
    }

    /// The face as a cone: selected rays plus the parent lineality.
    pub fn to_cone(&self) -> Cone {
        let rays: Vec<QVec> = self
            .indices
            .iter()
            .map(|&i| self.parent.rays()[i].clone())
            .collect();
        Cone::from_generators(self.parent.dim(), &rays, self.parent.lineality_basis())
            .expect("consistent dimensions")
    }

    /// The dual face `M⋄ = dual(parent) ∩ M^⊥`, as a face of the dual cone.
    pub fn dual_face(&self) -> Face {
        let d = self.parent.dual();
        let gens = self.to_cone().generators();
        let indices: Vec<usize> = d
            .rays()
            .iter()
            .enumerate()
            .filter(|(_, phi)| gens.iter().all(|g| dot(phi, g).is_zero()))
            .map(|(i, _)| i)
            .collect();
        Face::new_unchecked(&d, &indices).expect("indices in range")
    }

    /// Recover a face of `parent` from a cone known to be a face of it.
    pub fn from_cone(parent: &Cone, face_cone: &Cone) -> Result<Face> {
        let indices: Vec<usize> = parent
            .rays()
            .iter()
            .enumerate()
            .filter_map(|(i, r)| match face_cone.contains(r) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_>>()?;
        let face = Face::new_unchecked(parent, &indices)?;
        if &face.to_cone() != face_cone {
            return Err(Error::FacePrecondition(
                "cone is not a face of the parent".into(),
            ));
        }
        Ok(face)
    }
}

/// An order ideal: a subspace whose intersection with the cone is a face,
/// equivalently whose quotient cone is proper.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderIdeal {
    parent: Cone,
    basis: Vec<QVec>,
}

impl OrderIdeal {
    pub fn new(parent: &Cone, subspace: &[QVec]) -> Result<OrderIdeal> {
        if !is_ideal_for(parent, subspace)? {
            return Err(Error::NotAnIdeal);
        }
        Ok(OrderIdeal {
            parent: parent.clone(),
            basis: canonical_basis(parent.dim(), subspace),
        })
    }

    pub fn parent(&self) -> &Cone {
        &self.parent
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    /// The face `ideal ∩ cone`.
    pub fn face(&self) -> Result<Face> {
        let cut = self.parent.intersect_subspace(&self.basis)?;
        Face::from_cone(&self.parent, &cut)
    }
}

/// Whether `subspace` is an order ideal for `c`: the quotient cone is proper.
pub fn is_ideal_for(c: &Cone, subspace: &[QVec]) -> Result<bool> {
    let (image, _) = c.quotient(subspace)?;
    Ok(image.is_proper())
}

/// The polyhedral face test: `candidate` is a face of `c` iff
/// `candidate = c ∩ span(candidate)` and `span(candidate)` is an order ideal.
/// (Equivalent to the order-theoretic full-subcone definition, which lives in
/// the oracle as the independent slow path.)
pub fn is_face(c: &Cone, candidate: &Cone) -> Result<bool> {
    if !c.contains_cone(candidate)? {
        return Err(Error::NotSubcone);
    }
    let span = candidate.span_basis();
    Ok(*candidate == c.intersect_subspace(&span)? && is_ideal_for(c, &span)?)
}

/// The span of a face is an order ideal whose positive part is the face.
pub fn span_is_ideal(c: &Cone, m: &Face) -> Result<OrderIdeal> {
    let face_cone = m.to_cone();
    let span = face_cone.span_basis();
    let ideal = OrderIdeal::new(c, &span)?;
    assert_eq!(
        c.intersect_subspace(ideal.basis())?,
        face_cone,
        "span of a face must cut the face back out of the cone"
    );
    Ok(ideal)
}

fn tensor_parents(m: &Face, n: &Face) -> (Cone, Cone) {
    (m.parent().clone(), n.parent().clone())
}

/// The upper face `(min(M, F) + min(E, N))` of the projective cone: generated
/// by the elementary tensors with left factor in M or right factor in N.
pub fn orface(m: &Face, n: &Face) -> Cone {
    let (e, f) = tensor_parents(m, n);
    let left = projective_cone(&m.to_cone(), &f);
    let right = projective_cone(&e, &n.to_cone());
    left.minkowski_sum(&right).expect("same tensor space")
}

/// The lower face `min(M, N) + lineal(min(E, F))` of the projective cone.
pub fn andface(m: &Face, n: &Face) -> Cone {
    let (e, f) = tensor_parents(m, n);
    let base = projective_cone(&m.to_cone(), &n.to_cone());
    let lin = Cone::from_subspace(base.dim(), &projective_lineality(&e, &f))
        .expect("consistent dimensions");
    base.minkowski_sum(&lin).expect("same tensor space")
}

/// The four sublattice identities tying `orface` and `andface` together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeReport {
    /// orface(M,N) = orface(M, minimal) + orface(minimal, N)
    pub or_is_sum_of_orfaces: bool,
    /// orface(M,N) = andface(M, maximal) + andface(maximal, N)
    pub or_is_sum_of_andfaces: bool,
    /// andface(M,N) = orface(M, minimal) ∩ orface(minimal, N)
    pub and_is_meet_of_orfaces: bool,
    /// andface(M,N) = andface(M, maximal) ∩ andface(maximal, N)
    pub and_is_meet_of_andfaces: bool,
}

impl SublatticeReport {
    pub fn all_hold(&self) -> bool {
        self.or_is_sum_of_orfaces
            && self.or_is_sum_of_andfaces
            && self.and_is_meet_of_orfaces
            && self.and_is_meet_of_andfaces
    }
}

pub fn face_sublattice_check(m: &Face, n: &Face) -> Result<SublatticeReport> {
    let (e, f) = tensor_parents(m, n);
    let min_e = Face::minimal(&e);
    let min_f = Face::minimal(&f);
    let max_e = Face::maximal(&e);
    let max_f = Face::maximal(&f);

    let or_mn = orface(m, n);
    let and_mn = andface(m, n);
    let left_or = orface(m, &min_f);
    let right_or = orface(&min_e, n);
    let left_and = andface(m, &max_f);
    let right_and = andface(&max_e, n);

    Ok(SublatticeReport {
        or_is_sum_of_orfaces: or_mn == left_or.minkowski_sum(&right_or)?,
        or_is_sum_of_andfaces: or_mn == left_and.minkowski_sum(&right_and)?,
        and_is_meet_of_orfaces: and_mn == left_or.intersect(&right_or)?,
        and_is_meet_of_andfaces: and_mn == left_and.intersect(&right_and)?,
    })
}

/// `andface(M1,N1) + andface(M2,N2)` under the crossing conditions
/// `M1 ∩ M2 = lineal(E)` and `N1 ∩ N2 = lineal(F)`; equals
/// `orface(M1,N2) ∩ orface(M2,N1)` and is again a face of the projective cone.
pub fn combined_face(m1: &Face, n1: &Face, m2: &Face, n2: &Face) -> Result<Cone> {
    let (e, f) = (m1.parent().clone(), n1.parent().clone());
    let lin_e = Cone::from_subspace(e.dim(), e.lineality_basis())?;
    let lin_f = Cone::from_subspace(f.dim(), f.lineality_basis())?;
    if m1.to_cone().intersect(&m2.to_cone())? != lin_e {
        return Err(Error::FacePrecondition(
            "left faces must intersect exactly in the lineality space".into(),
        ));
    }
    if n1.to_cone().intersect(&n2.to_cone())? != lin_f {
        return Err(Error::FacePrecondition(
            "right faces must intersect exactly in the lineality space".into(),
        ));
    }
    let sum = andface(m1, n1).minkowski_sum(&andface(m2, n2))?;
    let meet = orface(m1, n2).intersect(&orface(m2, n1))?;
    assert_eq!(
        sum, meet,
        "sum of crossing lower faces must equal the meet of the upper faces"
    );
    Ok(sum)
}

/// Extremal rays modulo lineality: the canonical primitive representatives
/// when the cone is proper, and empty otherwise (a cone with a nontrivial
/// lineality space has no extremal rays at all).
pub fn extremal_rays(c: &Cone) -> Vec<QVec> {
    if c.is_proper() {
        c.rays().to_vec()
    } else {
        Vec::new()
    }
}

/// The injective face `{u in max(E,F) : u^T(φ) in N for all φ in M'}` for a
/// set of dual functionals `M'` and a face `N` of `f`. Constraints are
/// emitted as half-space rows `φ ⊗ a` over the half-space description of the
/// face cone of `N`.
pub fn injective_face_msetn(e: &Cone, f: &Cone, mprime: &[QVec], n: &Face) -> Result<Cone> {
    let dual_e = e.dual();
    for phi in mprime {
        if !dual_e.contains(phi)? {
            return Err(Error::NotInDualCone);
        }
    }
    let n_cone = n.to_cone();
    let max = injective_cone(e, f);
    let mut ineqs = max.ineqs().to_vec();
    let mut eqs = max.eqs().to_vec();
    for phi in mprime {
        for a in n_cone.ineqs() {
            ineqs.push(vec_tensor(phi, a));
        }
        for q in n_cone.eqs() {
            eqs.push(vec_tensor(phi, q));
        }
    }
    Cone::from_halfspaces(max.dim(), &ineqs, &eqs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InjectiveFaceKind {
    /// `(M ◁ N⋄) ∩ (M⋄ ▷ N) ∩ max(E,F)` — the upper injective face.
    SCor,
    /// `(M ◁ F'₊) ∩ (E'₊ ▷ N)` — the lower injective face.
    SCand,
}

/// Conic generators of the dual cone: extreme rays plus ± the dual lineality.
fn dual_generators(c: &Cone) -> Vec<QVec> {
    c.dual().generators()
}

/// Rows forcing `u · ψ ∈ M` for all ψ in the given right-functional set:
/// inequality rows `a ⊗ ψ` over the face cone's inequalities, equality rows
/// over its equations.
fn left_constraint_rows(
    m_cone: &Cone,
    right_functionals: &[QVec],
    ineqs: &mut Vec<QVec>,
    eqs: &mut Vec<QVec>,
) {
    for psi in right_functionals {
        for a in m_cone.ineqs() {
            ineqs.push(vec_tensor(a, psi));
        }
        for q in m_cone.eqs() {
            eqs.push(vec_tensor(q, psi));
        }
    }
}

/// Rows forcing `u^T · φ ∈ N` for all φ in the given left-functional set.
fn right_constraint_rows(
    n_cone: &Cone,
    left_functionals: &[QVec],
    ineqs: &mut Vec<QVec>,
    eqs: &mut Vec<QVec>,
) {
    for phi in left_functionals {
        for b in n_cone.ineqs() {
            ineqs.push(vec_tensor(phi, b));
        }
        for q in n_cone.eqs() {
            eqs.push(vec_tensor(phi, q));
        }
    }
}

/// The upper (`SCor`) and lower (`SCand`) face constructions of the injective
/// cone. For `SCor` the duality identity against the projective `andface` of
/// the dual faces is asserted: polyhedral faces are always dual faces.
pub fn injective_orface_andface(m: &Face, n: &Face, kind: InjectiveFaceKind) -> Result<Cone> {
    let (e, f) = tensor_parents(m, n);
    let m_cone = m.to_cone();
    let n_cone = n.to_cone();
    let total = e.dim() * f.dim();
    let mut ineqs: Vec<QVec> = Vec::new();
    let mut eqs: Vec<QVec> = Vec::new();
    let result = match kind {
        InjectiveFaceKind::SCand => {
            left_constraint_rows(&m_cone, &dual_generators(&f), &mut ineqs, &mut eqs);
            right_constraint_rows(&n_cone, &dual_generators(&e), &mut ineqs, &mut eqs);
            Cone::from_halfspaces(total, &ineqs, &eqs)?
        }
        InjectiveFaceKind::SCor => {
            let m_dual_cone = m.dual_face().to_cone();
            let n_dual_cone = n.dual_face().to_cone();
            left_constraint_rows(&m_cone, &n_dual_cone.generators(), &mut ineqs, &mut eqs);
            right_constraint_rows(&n_cone, &m_dual_cone.generators(), &mut ineqs, &mut eqs);
            let max = injective_cone(&e, &f);
            ineqs.extend(max.ineqs().iter().cloned());
            eqs.extend(max.eqs().iter().cloned());
            let scor = Cone::from_halfspaces(total, &ineqs, &eqs)?;
            assert_eq!(
                scor,
                predual_face(&max, &andface(&m.dual_face(), &n.dual_face()))?,
                "upper injective face must be the predual of the lower projective face of the duals"
            );
            scor
        }
    };
    Ok(result)
}

/// `⋄X = {u in c : <u, v> = 0 for all v in X}` for a subcone `X` of the dual
/// cone of `c`.
fn predual_face(c: &Cone, x: &Cone) -> Result<Cone> {
    let mut eqs = c.eqs().to_vec();
    eqs.extend(x.rays().iter().cloned());
    eqs.extend(x.lineality_basis().iter().cloned());
    Cone::from_halfspaces(c.dim(), c.ineqs(), &eqs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InjectiveIdealKind {
    /// `(I ⊗ J) + lineal(max(E,F))`
    TensorPlusLineality,
    /// `(I ⊗ F) + (E ⊗ J)`
    SumForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealVerdict {
    pub basis: Vec<QVec>,
    pub is_ideal: bool,
}

/// Order ideals of the injective cone built from ideals of the factors.
/// For closed polyhedral cones every proper quotient cone is semisimple, so
/// the sum form needs no extra hypothesis here.
pub fn injective_ideal(
    i: &OrderIdeal,
    j: &OrderIdeal,
    kind: InjectiveIdealKind,
) -> Result<IdealVerdict> {
    let e = i.parent();
    let f = j.parent();
    let total = e.dim() * f.dim();
    let mut gens: Vec<QVec> = Vec::new();
    match kind {
        InjectiveIdealKind::TensorPlusLineality => {
            for a in i.basis() {
                for b in j.basis() {
                    gens.push(vec_tensor(a, b));
                }
            }
            gens.extend(injective_lineality(e, f));
        }
        InjectiveIdealKind::SumForm => {
            let full_e = Matrix::<Rational>::identity(e.dim()).row_vecs();
            let full_f = Matrix::<Rational>::identity(f.dim()).row_vecs();
            for a in i.basis() {
                for v in &full_f {
                    gens.push(vec_tensor(a, v));
                }
            }
            for v in &full_e {
                for b in j.basis() {
                    gens.push(vec_tensor(v, b));
                }
            }
        }
    }
    let basis = canonical_basis(total, &gens);
    let is_ideal = is_ideal_for(&injective_cone(e, f), &basis)?;
    Ok(IdealVerdict { basis, is_ideal })
}

/// The exposed face `c ∩ ker(φ)` for a positive functional φ.
pub fn exposed_face(c: &Cone, phi: &[Rational]) -> Result<Face> {
    if !c.dual().contains(phi)? {
        return Err(Error::NotInDualCone);
    }
    let indices: Vec<usize> = c
        .rays()
        .iter()
        .enumerate()
        .filter(|(_, r)| dot(phi, r).is_zero())
        .map(|(i, _)| i)
        .collect();
    Face::new_unchecked(c, &indices)
}

/// The dual face `c ∩ subset^⊥` for a set of dual-cone vectors. In finite
/// dimension this always coincides with the exposed face of the sum
/// functional, which is asserted.
pub fn dual_face(c: &Cone, subset: &[QVec]) -> Result<Face> {
    let d = c.dual();
    for v in subset {
        if !d.contains(v)? {
            return Err(Error::NotInDualCone);
        }
    }
    let indices: Vec<usize> = c
        .rays()
        .iter()
        .enumerate()
        .filter(|(_, r)| subset.iter().all(|v| dot(v, r).is_zero()))
        .map(|(i, _)| i)
        .collect();
    let face = Face::new_unchecked(c, &indices)?;
    let mut sum = vec![Rational::zero(); c.dim()];
    for v in subset {
        for (s, x) in sum.iter_mut().zip(v) {
            *s = &*s + x;
        }
    }
    assert_eq!(
        face,
        exposed_face(c, &sum)?,
        "a polyhedral dual face is exposed by the sum functional of the subset"
    );
    Ok(face)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaximalIdeals {
    /// Canonical bases of the maximal-ideal hyperplanes, one per facet
    /// functional.
    pub hyperplanes: Vec<Vec<QVec>>,
    /// Set when the cone is not generating: the returned subspaces are the
    /// facet hyperplanes of the cone within its span, where true maximal
    /// ideals of the ambient space are not unique.
    pub restricted_to_span: bool,
}

/// Kernels of the extremal rays of the dual cone: the facet-supporting
/// hyperplanes. For a generating cone each is verified maximal (the quotient
/// is one-dimensional with a proper quotient cone). The full-space cone has
/// no nonzero positive functionals and yields the empty list.
pub fn maximal_ideals(c: &Cone) -> Result<MaximalIdeals> {
    let restricted = !c.is_generating();
    let span = c.span_basis();
    let mut hyperplanes = Vec::new();
    for phi in c.dual().rays() {
        let kernel = perp_basis(c.dim(), &[phi.clone()]);
        if restricted {
            // facet hyperplane within the span of the cone
            let within = crate::linalg::subspace_intersection(c.dim(), &kernel, &span)?;
            assert!(is_ideal_for(c, &within)?);
            hyperplanes.push(within);
        } else {
            let (image, _) = c.quotient(&kernel)?;
            assert!(
                image.dim() == 1 && image.is_proper(),
                "kernel of a facet functional must be a maximal ideal"
            );
            hyperplanes.push(kernel);
        }
    }
    Ok(MaximalIdeals {
        hyperplanes,
        restricted_to_span: restricted,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomReport {
    /// The unique factorization of `t` through the quotient by `i`.
    pub factored_map: Matrix<Rational>,
    pub factored_positive: bool,
    pub quotient_bipositive: bool,
    /// `i ⊆ lineal(e)` — the exact criterion for the quotient to be bipositive.
    pub lineality_criterion: bool,
    pub bipositive_matches_criterion: bool,
    /// When a second nested subspace `j ⊇ i` is supplied: whether the natural
    /// map `(E/I)/(J/I) → E/J` is bipositive.
    pub third_isomorphism_bipositive: Option<bool>,
}

/// Section of the canonical quotient projection: embeds quotient coordinates
/// back at the complement columns.
fn quotient_section(dim: usize, subspace: &[QVec]) -> Result<Matrix<Rational>> {
    let (_, pivots) = Matrix::from_rows(dim, subspace)?.rref();
    let complement: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut s = Matrix::zero(dim, complement.len());
    for (k, &c) in complement.iter().enumerate() {
        *s.at_mut(c, k) = Rational::one();
    }
    Ok(s)
}

/// Homomorphism-theorem checks for a positive map `t : (E, e) → (G, g)` and a
/// subspace `i ⊆ ker(t)`: factor `t` through `E/i` and verify positivity;
/// decide whether the quotient map is bipositive and compare against the
/// `i ⊆ lineal(e)` criterion; optionally verify the third isomorphism
/// `(E/I)/(J/I) ≅ E/J` bipositively for a nested subspace `j`.
pub fn homomorphism_checks(
    t: &Matrix<Rational>,
    e: &Cone,
    g: &Cone,
    i: &[QVec],
    j: Option<&[QVec]>,
) -> Result<HomReport> {
    if t.cols() != e.dim() || t.rows() != g.dim() {
        return Err(Error::MapPrecondition(
            "map shape must match the cone dimensions".into(),
        ));
    }
    for v in i {
        if !is_zero_vec(&t.mul_vec(v)?) {
            return Err(Error::MapPrecondition(
                "subspace must be contained in the kernel of the map".into(),
            ));
        }
    }
    if !maps_into(t, e, g)? {
        return Err(Error::MapPrecondition("map must be positive".into()));
    }

    let (quotient_cone, projection) = e.quotient(i)?;
    let section = quotient_section(e.dim(), i)?;
    let factored_map = t.mul(&section)?;
    let factored_positive = maps_into(&factored_map, &quotient_cone, g)?;
    assert!(factored_positive, "the factored map is always positive");

    let quotient_bipositive = preimage_cone(&projection, &quotient_cone)? == *e;
    let lineality_criterion = subspace_contains(e.dim(), e.lineality_basis(), i)?;
    let bipositive_matches_criterion = quotient_bipositive == lineality_criterion;
    assert!(
        bipositive_matches_criterion,
        "quotient bipositivity must match containment in the lineality space"
    );

    let third_isomorphism_bipositive = match j {
        None => None,
        Some(j) => {
            if !subspace_contains(e.dim(), j, i)? {
                return Err(Error::MapPrecondition(
                    "nested check needs i contained in j".into(),
                ));
            }
            let j_image: Vec<QVec> = j
                .iter()
                .map(|v| projection.mul_vec(v))
                .collect::<Result<_>>()?;
            let (q2_cone, p2) = quotient_cone.quotient(&j_image)?;
            let (qj_cone, _) = e.quotient(j)?;
            let pj_section = quotient_section(e.dim(), j)?;
            let natural = p2.mul(&projection)?.mul(&pj_section)?;
            let bijective = natural.rank() == natural.rows() && natural.rows() == natural.cols();
            let onto = pushforward_check(&natural, &qj_cone, &q2_cone)?;
            Some(bijective && onto)
        }
    };

    Ok(HomReport {
        factored_map,
        factored_positive,
        quotient_bipositive,
        lineality_criterion,
        bipositive_matches_criterion,
        third_isomorphism_bipositive,
    })
}

/// Express `g ∩ span(basis)` in the coordinates of `basis`: the pullback of
/// `g` along the inclusion of the subspace. Used to state bipositivity of
/// subspace inclusions.
pub fn restrict_to_subspace(g: &Cone, basis: &[QVec]) -> Result<Cone> {
    let m = Matrix::from_rows(g.dim(), basis)?.transpose();
    preimage_cone(&m, g)
}

/// Re-export of the canonical quotient projection for face-level callers.
pub fn canonical_projection(dim: usize, subspace: &[QVec]) -> Result<Matrix<Rational>> {
    quotient_projection(dim, subspace)
}

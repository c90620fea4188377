//! Exact linear algebra over a generic field scalar: reduced row echelon
//! form, kernels, solving, and canonical subspace arithmetic.

use crate::error::{Error, Result};
use crate::scalar::{sign_normalize, CanonicalScale, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    /// Build from row vectors; `cols` makes the shape unambiguous when the
    /// row list is empty.
    pub fn from_rows(cols: usize, rows_in: &[Vec<S>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows_in.len() * cols);
        for r in rows_in {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix::new(rows_in.len(), cols, data))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut S {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), x)).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out: Matrix<S> = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a.clone() * other.at(k, c).clone();
                    *out.at_mut(r, c) = out.at(r, c).clone() + add;
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    /// The RREF of a matrix is unique, which makes it the backbone of every
    /// canonical form in this crate.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).clone();
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).clone() / inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let sub = f.clone() * m.at(r, j).clone();
                    *m.at_mut(i, j) = m.at(i, j).clone() - sub;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, in the reduced form induced by the RREF
    /// (one basis vector per free column, unit entry at that column).
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set[f] {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = rhs`, with free variables set to zero.
    pub fn solve(&self, rhs: &[S]) -> Result<Option<Vec<S>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = rhs[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![S::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.at(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = acc + x.clone() * y.clone();
    }
    acc
}

pub fn neg_vec<S: Scalar>(v: &[S]) -> Vec<S> {
    v.iter().map(|x| -x.clone()).collect()
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `target -= coeff * src`
pub fn sub_scaled<S: Scalar>(target: &mut [S], src: &[S], coeff: &S) {
    if coeff.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        if s.is_zero() {
            continue;
        }
        *t = t.clone() - coeff.clone() * s.clone();
    }
}

fn cmp_vecs<S: Scalar>(a: &[S], b: &[S]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Equal) => continue,
            Some(o) => return o,
            None => unreachable!("scalars in this crate are totally ordered"),
        }
    }
    std::cmp::Ordering::Equal
}

/// Sort vectors lexicographically (the canonical order used everywhere).
pub fn sort_vecs<S: Scalar>(vecs: &mut [Vec<S>]) {
    vecs.sort_by(|a, b| cmp_vecs(a, b));
}

/// Canonical basis of the span of `vectors`: unique RREF rows, scaled to
/// primitive form, first nonzero entry positive, sorted lexicographically.
/// Subspaces are equal iff their canonical bases are equal.
pub fn canonical_basis<S: CanonicalScale>(dim: usize, vectors: &[Vec<S>]) -> Vec<Vec<S>> {
    for v in vectors {
        assert_eq!(v.len(), dim, "ambient dimension");
    }
    let (r, pivots) = Matrix::from_rows(dim, vectors).expect("checked dims").rref();
    let mut basis: Vec<Vec<S>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    for b in &mut basis {
        S::primitive_scale(b);
        sign_normalize(b);
    }
    sort_vecs(&mut basis);
    basis
}

pub fn subspace_sum<S: CanonicalScale>(
    dim: usize,
    a: &[Vec<S>],
    b: &[Vec<S>],
) -> Result<Vec<Vec<S>>> {
    check_dims(dim, a)?;
    check_dims(dim, b)?;
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    Ok(canonical_basis(dim, &all))
}

/// Intersection of spans, via the kernel of the stacked system
/// `[a^T | -b^T] (lambda, mu)^T = 0`.
pub fn subspace_intersection<S: CanonicalScale>(
    dim: usize,
    a: &[Vec<S>],
    b: &[Vec<S>],
) -> Result<Vec<Vec<S>>> {
    check_dims(dim, a)?;
    check_dims(dim, b)?;
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut stacked = Matrix::zero(dim, a.len() + b.len());
    for (j, v) in a.iter().enumerate() {
        for i in 0..dim {
            *stacked.at_mut(i, j) = v[i].clone();
        }
    }
    for (j, v) in b.iter().enumerate() {
        for i in 0..dim {
            *stacked.at_mut(i, a.len() + j) = -v[i].clone();
        }
    }
    let mut members = Vec::new();
    for coeffs in stacked.kernel_basis() {
        let mut w = vec![S::zero(); dim];
        for (j, v) in a.iter().enumerate() {
            sub_scaled(&mut w, v, &-coeffs[j].clone());
        }
        members.push(w);
    }
    Ok(canonical_basis(dim, &members))
}

/// Whether span(inner) is contained in span(outer).
pub fn subspace_contains<S: Scalar>(
    dim: usize,
    outer: &[Vec<S>],
    inner: &[Vec<S>],
) -> Result<bool> {
    check_dims(dim, outer)?;
    check_dims(dim, inner)?;
    let outer_rank = Matrix::from_rows(dim, outer)?.rank();
    let mut all = outer.to_vec();
    all.extend(inner.iter().cloned());
    Ok(Matrix::from_rows(dim, &all)?.rank() == outer_rank)
}

pub fn subspace_eq<S: CanonicalScale>(dim: usize, a: &[Vec<S>], b: &[Vec<S>]) -> Result<bool> {
    check_dims(dim, a)?;
    check_dims(dim, b)?;
    Ok(canonical_basis(dim, a) == canonical_basis(dim, b))
}

/// Canonical basis of the orthogonal complement of span(vectors).
pub fn perp_basis<S: CanonicalScale>(dim: usize, vectors: &[Vec<S>]) -> Vec<Vec<S>> {
    for v in vectors {
        assert_eq!(v.len(), dim, "ambient dimension");
    }
    let kernel = Matrix::from_rows(dim, vectors)
        .expect("checked dims")
        .kernel_basis();
    canonical_basis(dim, &kernel)
}

fn check_dims<S>(dim: usize, vecs: &[Vec<S>]) -> Result<()> {
    for v in vecs {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
    }
    Ok(())
}

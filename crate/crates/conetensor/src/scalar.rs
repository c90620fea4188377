//! Scalar abstraction and the concrete rational scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Field scalar usable by the elimination routines: exact ordered arithmetic
/// with signs. Satisfied by `BigRational` (and by the primitive floats, which
/// are fine for the generic linear algebra but are never used by the cone
/// geometry in this crate).
pub trait Scalar: Clone + std::fmt::Debug + PartialEq + PartialOrd + Signed + 'static {}

impl<T> Scalar for T where T: Clone + std::fmt::Debug + PartialEq + PartialOrd + Signed + 'static {}

/// The exact scalar backing all cone geometry.
pub type Rational = BigRational;

/// Scalars with a canonical representative per ray direction.
///
/// `primitive_scale` multiplies a nonzero slice by a *positive* factor so the
/// result is the canonical representative of its ray: for rationals, coprime
/// integers. Orientation is preserved, so the same function serves rays
/// (one-sided) and, combined with a sign flip, basis vectors.
pub trait CanonicalScale: Scalar {
    fn primitive_scale(v: &mut [Self]);
}

impl CanonicalScale for Rational {
    fn primitive_scale(v: &mut [Self]) {
        let mut denom_lcm = BigInt::one();
        for e in v.iter() {
            if !e.is_zero() {
                denom_lcm = denom_lcm.lcm(e.denom());
            }
        }
        let mut numer_gcd = BigInt::zero();
        for e in v.iter() {
            if !e.is_zero() {
                numer_gcd = numer_gcd.gcd(&(e.numer() * &denom_lcm / e.denom()));
            }
        }
        if numer_gcd.is_zero() {
            return;
        }
        let factor = Rational::new(denom_lcm, numer_gcd);
        for e in v.iter_mut() {
            *e = &*e * &factor;
        }
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rvec(entries: &[i64]) -> Vec<Rational> {
    entries.iter().map(|&x| rat(x)).collect()
}

/// Flip the sign of the whole vector if its first nonzero entry is negative.
/// Canonical form for sign-symmetric vectors (subspace basis elements).
pub fn sign_normalize<S: Scalar>(v: &mut [S]) {
    for e in v.iter() {
        if e.is_zero() {
            continue;
        }
        if e.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        return;
    }
}

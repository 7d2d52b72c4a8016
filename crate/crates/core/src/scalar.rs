//! Exact scalar arithmetic.
//!
//! All computations in this crate take place over an exact ordered field.
//! [`Scalar`] abstracts the rational implementations we support: a fixed
//! width `Ratio<i64>` and the arbitrary-precision `Ratio<BigInt>`. Floating
//! point types are deliberately excluded; the congruence and canonical-form
//! contracts require exact equality.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// An exact ordered field with conversions from machine integers.
pub trait Scalar:
    Clone + PartialEq + Eq + PartialOrd + Ord + Hash + Debug + Display + Num + Signed + 'static
{
    fn from_i64(n: i64) -> Self;

    /// The fraction `num/den`. Panics when `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// `Some((num, den))` in lowest terms with `den > 0`, when both fit in `i64`.
    fn as_i64_ratio(&self) -> Option<(i64, i64)>;

    fn is_integer(&self) -> bool;

    /// `Some(n)` when the value is an integer that fits in `i64`.
    fn to_i64(&self) -> Option<i64> {
        match self.as_i64_ratio() {
            Some((n, 1)) => Some(n),
            _ => None,
        }
    }
}

impl Scalar for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational64::new(num, den)
    }

    fn as_i64_ratio(&self) -> Option<(i64, i64)> {
        Some((*self.numer(), *self.denom()))
    }

    fn is_integer(&self) -> bool {
        Rational64::is_integer(self)
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn as_i64_ratio(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    fn is_integer(&self) -> bool {
        BigRational::is_integer(self)
    }
}

/// Sum of `a[i] * b[i]`; the plain coordinate dot product.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// Clears denominators and divides by the content, yielding a primitive
/// integer vector with the same span. Returns `None` for the zero vector or
/// when an entry does not fit `i64`.
pub fn primitive_integer_vector<S: Scalar>(v: &[S]) -> Option<Vec<i64>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut lcm: i64 = 1;
    for x in v {
        let (_, den) = x.as_i64_ratio()?;
        lcm = num_integer::lcm(lcm, den);
    }
    let mut out = Vec::with_capacity(v.len());
    for x in v {
        let scaled = x.clone() * S::from_i64(lcm);
        out.push(scaled.to_i64()?);
    }
    let mut g: i64 = 0;
    for &x in &out {
        g = num_integer::gcd(g, x);
    }
    for x in &mut out {
        *x /= g;
    }
    Some(out)
}

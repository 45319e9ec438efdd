//! Classification of dyadic intervals.
//!
//! Every nontrivial dyadic interval of length `k * 2^n` (odd `k`) is
//! midpoint-isomorphic to `[0, k]`, so the odd part of the length is a
//! complete invariant. Triangle sides are dyadic intervals too; their type
//! is the odd part of the gcd of an integerized direction vector.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::affine::Vec2;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// The isomorphism type of a dyadic interval: an odd positive integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalType(BigInt);

impl IntervalType {
    pub(crate) fn new(k: BigInt) -> Self {
        debug_assert!(k.is_positive() && k.is_odd());
        IntervalType(k)
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for IntervalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for IntervalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Type of the interval `[a, b]`: the odd part of `|b - a|`.
pub fn interval_type(a: &Dyadic, b: &Dyadic) -> Result<IntervalType> {
    let len = b - a;
    if len.is_zero() {
        return Err(Error::DegenerateInterval);
    }
    Ok(IntervalType::new(len.numerator().abs()))
}

/// Type of the segment from `p` to `q` as a dyadic interval.
///
/// The direction is scaled by the power of two that makes both coordinates
/// integers with at least one odd; the type is the gcd of their absolute
/// values, which is then necessarily odd.
pub fn side_type(p: &Vec2, q: &Vec2) -> Result<IntervalType> {
    let d = q.sub(p);
    if d.is_zero() {
        return Err(Error::DegenerateInterval);
    }
    if d.x.is_zero() {
        return Ok(IntervalType::new(d.y.numerator().abs()));
    }
    if d.y.is_zero() {
        return Ok(IntervalType::new(d.x.numerator().abs()));
    }
    let e = d.x.exponent().min(d.y.exponent());
    let nx = d.x.numerator() << (d.x.exponent() - e) as u64;
    let ny = d.y.numerator() << (d.y.exponent() - e) as u64;
    Ok(IntervalType::new(nx.gcd(&ny)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    fn it(a: &str, b: &str) -> BigInt {
        interval_type(&d(a), &d(b)).unwrap().value().clone()
    }

    #[test]
    fn interval_types() {
        assert_eq!(it("0", "1"), BigInt::from(1));
        assert_eq!(it("0", "3/4"), BigInt::from(3));
        assert_eq!(it("1/2", "5/2"), BigInt::from(1));
        assert_eq!(
            interval_type(&d("3/4"), &d("3/4")),
            Err(Error::DegenerateInterval)
        );
    }

    #[test]
    fn side_types() {
        let st =
            |p: (i64, i64), q: (i64, i64)| side_type(&p.into(), &q.into()).unwrap().value().clone();
        assert_eq!(st((0, 3), (19, 0)), BigInt::from(1));
        assert_eq!(st((0, 0), (0, 4)), BigInt::from(1));
        assert_eq!(st((0, 0), (3, 9)), BigInt::from(3));
        let p = Vec2::new(d("1/2"), d("0"));
        assert_eq!(side_type(&p, &p), Err(Error::DegenerateInterval));
    }

    #[test]
    fn side_type_with_fractional_coordinates() {
        // Direction (3/2, 9/4) integerizes to (6, 9): gcd 3.
        let p = Vec2::new(d("0"), d("0"));
        let q = Vec2::new(d("3/2"), d("9/4"));
        assert_eq!(side_type(&p, &q).unwrap().value(), &BigInt::from(3));
    }
}

//! Exact arithmetic in the ring of dyadic rationals.
//!
//! A [`Dyadic`] stores `num * 2^exp` with `num` odd (or the unique zero
//! `(0, 0)`), so the 2-adic valuation and odd part of a value are direct
//! field reads. All operations are exact; the ring is closed under
//! addition, subtraction, multiplication and the midpoint operation
//! `x ∘ y = (x + y) / 2`.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

/// An exact dyadic rational `num * 2^exp`, with `num` odd or zero.
///
/// Equality is structural; the canonical form guarantees it coincides with
/// numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: i64,
}

impl Dyadic {
    /// Builds the canonical form of `num * 2^exp`.
    pub fn new(num: BigInt, exp: i64) -> Self {
        if num.is_zero() {
            return Dyadic { num, exp: 0 };
        }
        let shift = num.trailing_zeros().expect("nonzero integer");
        Dyadic {
            num: num >> shift,
            exp: exp + shift as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            num: BigInt::one(),
            exp: 0,
        }
    }

    /// The value `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            num: BigInt::one(),
            exp: e,
        }
    }

    /// Exact ratio `p / 2^k`.
    pub fn ratio(p: impl Into<BigInt>, k: i64) -> Self {
        Dyadic::new(p.into(), -k)
    }

    /// The odd (or zero) numerator.
    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    /// The power-of-two exponent.
    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value is a (possibly negative) integer.
    pub fn is_integer(&self) -> bool {
        self.exp >= 0 || self.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.exp >= 0 {
            Some(&self.num << self.exp as u64)
        } else {
            None
        }
    }

    /// Sign of the value: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.num.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// Multiplies by `2^e`.
    pub fn scale_pow2(&self, e: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            num: self.num.clone(),
            exp: self.exp + e,
        }
    }

    /// The arithmetic mean `(self + other) / 2`, the basic midpoint
    /// operation. Commutative, idempotent and entropic.
    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        (self + other).scale_pow2(-1)
    }

    /// 2-adic valuation and odd part: `x = odd_part * 2^valuation`.
    ///
    /// Errors on zero, whose valuation is undefined.
    pub fn val2(&self) -> Result<(i64, BigInt)> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        Ok((self.exp, self.num.clone()))
    }

    /// The exponent `k ≥ 0` such that `self * 2^k` is an integer.
    pub fn denominator_exponent(&self) -> i64 {
        if self.exp < 0 {
            -self.exp
        } else {
            0
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.num << (self.exp - e) as u64;
        let b = &rhs.num << (rhs.exp - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // Product of odd numerators is odd: already canonical.
        Dyadic {
            num: &self.num * &rhs.num,
            exp: self.exp + rhs.exp,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.signum().cmp(&other.signum()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        if self.signum() == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare after clearing denominators.
        let e = self.exp.min(other.exp);
        let a = &self.num << (self.exp - e) as u64;
        let b = &other.num << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    /// Integer form when the value is integral, otherwise `p/2^k` with the
    /// denominator written out (`-7/2`, `3/1024`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 || self.is_zero() {
            write!(f, "{}", self.to_integer().expect("integral"))
        } else {
            let den = BigInt::one() << (-self.exp) as u64;
            write!(f, "{}/{}", self.num, den)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

fn parse_int(text: &str, whole: &str) -> core::result::Result<BigInt, ParseError> {
    BigInt::from_str(text)
        .map_err(|_| ParseError::new(format!("invalid integer {text:?} in {whole:?}")))
}

impl FromStr for Dyadic {
    type Err = ParseError;

    /// Accepts an integer, a fraction `p/q` with `q` a positive power of
    /// two, or `n*2^e`.
    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseError::new("empty dyadic literal"));
        }
        if let Some((mantissa, exponent)) = t.split_once("*2^") {
            let n = parse_int(mantissa.trim(), s)?;
            let e: i64 = exponent.trim().parse().map_err(|_| {
                ParseError::new(format!("invalid exponent {:?} in {s:?}", exponent.trim()))
            })?;
            return Ok(Dyadic::new(n, e));
        }
        if let Some((num, den)) = t.split_once('/') {
            let p = parse_int(num.trim(), s)?;
            let q = parse_int(den.trim(), s)?;
            if !q.is_positive() || !power_of_two(&q) {
                return Err(ParseError::new(format!(
                    "denominator not a power of 2: {:?}",
                    den.trim()
                )));
            }
            let k = q.trailing_zeros().expect("positive") as i64;
            return Ok(Dyadic::new(p, -k));
        }
        Ok(Dyadic::new(parse_int(t, s)?, 0))
    }
}

fn power_of_two(n: &BigInt) -> bool {
    n.is_positive() && n.magnitude().count_ones() == 1
}

/// String conversion used where exact decimal output is needed (SVG
/// coordinates): every dyadic has a finite decimal expansion.
pub fn to_decimal_string(x: &Dyadic) -> String {
    if x.exponent() >= 0 || x.is_zero() {
        return x.to_integer().expect("integral").to_string();
    }
    let k = (-x.exponent()) as u32;
    // num * 2^-k = num * 5^k / 10^k
    let scaled: BigInt = x.numerator() * BigInt::from(5u32).pow(k);
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let k = k as usize;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if digits.len() > k {
        out.push_str(&digits[..digits.len() - k]);
        out.push('.');
        out.push_str(&digits[digits.len() - k..]);
    } else {
        out.push_str("0.");
        for _ in 0..k - digits.len() {
            out.push('0');
        }
        out.push_str(&digits);
    }
    while out.ends_with('0') {
        out.pop();
    }
    if out.ends_with('.') {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn addition_is_exact() {
        assert_eq!(&d("3/4") + &d("1/2"), d("5/4"));
        assert_eq!(&d("3/2") * &d("5/4"), d("15/8"));
        assert_eq!(&d("1") - &d("1"), Dyadic::zero());
    }

    #[test]
    fn construction_canonicalizes() {
        let x = Dyadic::new(BigInt::from(6), -1);
        assert_eq!(x.numerator(), &BigInt::from(3));
        assert_eq!(x.exponent(), 0);
        let z = Dyadic::new(BigInt::zero(), 17);
        assert_eq!(z.exponent(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn midpoint_basics() {
        assert_eq!(d("0").midpoint(&d("1")), d("1/2"));
        assert_eq!(d("1/4").midpoint(&d("3/4")), d("1/2"));
        let x = d("-7/8");
        assert_eq!(x.midpoint(&x), x);
    }

    #[test]
    fn val2_reads_the_representation() {
        assert_eq!(d("24").val2().unwrap(), (3, BigInt::from(3)));
        assert_eq!(d("3/4").val2().unwrap(), (-2, BigInt::from(3)));
        assert_eq!(d("0").val2(), Err(Error::ZeroValuation));
    }

    #[test]
    fn parse_and_format() {
        let x = d("3/4");
        assert_eq!(x.numerator(), &BigInt::from(3));
        assert_eq!(x.exponent(), -2);
        assert_eq!(Dyadic::ratio(-7, 1).to_string(), "-7/2");
        assert_eq!(d("3*2^-2"), d("3/4"));
        assert_eq!(d("-12").to_string(), "-12");
        assert_eq!(d("6/8"), d("3/4"));
    }

    #[test]
    fn parse_rejects_bad_denominators() {
        let err = "1/3".parse::<Dyadic>().unwrap_err();
        assert!(err.to_string().contains("denominator not a power of 2"));
        assert!(err.to_string().contains('3'));
        assert!("3/0".parse::<Dyadic>().is_err());
        assert!("3/-4".parse::<Dyadic>().is_err());
        assert!("a/2".parse::<Dyadic>().is_err());
    }

    #[test]
    fn ordering_matches_real_order() {
        assert!(d("-1/2") < d("0"));
        assert!(d("3/4") < d("1"));
        assert!(d("5/4") > d("1"));
        assert_eq!(d("2/2").cmp(&d("1")), Ordering::Equal);
    }

    #[test]
    fn decimal_rendering_is_exact() {
        assert_eq!(to_decimal_string(&d("3/4")), "0.75");
        assert_eq!(to_decimal_string(&d("-7/2")), "-3.5");
        assert_eq!(to_decimal_string(&d("5")), "5");
        assert_eq!(to_decimal_string(&d("1/1024")), "0.0009765625");
        assert_eq!(to_decimal_string(&d("0")), "0");
    }
}

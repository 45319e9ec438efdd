//! The affine group of the dyadic plane.
//!
//! Points are row vectors and maps act by right multiplication:
//! `apply(f, p) = p * linear + shift`. A linear part is invertible over the
//! dyadic rationals exactly when its determinant is `±2^k`, so the group is
//! generated by translations, reflections, power-of-two scalings, shears and
//! the determinant-one matrices produced by [`AffineMap2::on_axis`].

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, ParseError, Result};

/// A point (or direction) of the dyadic plane.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub x: Dyadic,
    pub y: Dyadic,
}

impl Vec2 {
    pub fn new(x: Dyadic, y: Dyadic) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(Dyadic::zero(), Dyadic::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }

    pub fn sub(&self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }

    /// Componentwise midpoint.
    pub fn midpoint(&self, other: &Vec2) -> Vec2 {
        Vec2::new(self.x.midpoint(&other.x), self.y.midpoint(&other.y))
    }
}

impl From<(i64, i64)> for Vec2 {
    fn from((x, y): (i64, i64)) -> Self {
        Vec2::new(x.into(), y.into())
    }
}

impl Ord for Vec2 {
    /// Lexicographic by `x`, then `y`; used for deterministic point sets.
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for Vec2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Vec2 {
    type Err = ParseError;

    /// Point literal `(x,y)` in the dyadic grammar.
    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(format!("expected point literal (x,y), got {t:?}")))?;
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| ParseError::new(format!("missing comma in point literal {t:?}")))?;
        Ok(Vec2::new(x.parse()?, y.parse()?))
    }
}

/// A 2×2 dyadic matrix with rows `(a, b)` and `(c, d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: Dyadic,
    pub b: Dyadic,
    pub c: Dyadic,
    pub d: Dyadic,
}

impl Mat2 {
    pub fn new(a: Dyadic, b: Dyadic, c: Dyadic, d: Dyadic) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(Dyadic::one(), Dyadic::zero(), Dyadic::zero(), Dyadic::one())
    }

    pub fn det(&self) -> Dyadic {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Determinant together with invertibility over the dyadic rationals:
    /// invertible exactly when the determinant is nonzero with odd part ±1.
    pub fn det_invertible(&self) -> (Dyadic, bool) {
        let det = self.det();
        let invertible = !det.is_zero() && det.numerator().abs().is_one();
        (det, invertible)
    }

    pub fn invertible(&self) -> bool {
        self.det_invertible().1
    }

    /// Row vector times matrix.
    pub fn apply(&self, p: &Vec2) -> Vec2 {
        Vec2::new(
            &(&p.x * &self.a) + &(&p.y * &self.c),
            &(&p.x * &self.b) + &(&p.y * &self.d),
        )
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        )
    }

    /// Exact inverse; errors when the determinant is not `±2^k`.
    pub fn inverse(&self) -> Result<Mat2> {
        let (det, invertible) = self.det_invertible();
        if !invertible {
            return Err(Error::NonInvertible);
        }
        // det = s * 2^k with s = ±1, so 1/det = s * 2^-k.
        let inv_det = Dyadic::new(det.numerator().signum(), -det.exponent());
        Ok(Mat2::new(
            &self.d * &inv_det,
            &(-&self.b) * &inv_det,
            &(-&self.c) * &inv_det,
            &self.a * &inv_det,
        ))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An affine map `p ↦ p * linear + shift` of the dyadic plane.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMap2 {
    pub linear: Mat2,
    pub shift: Vec2,
}

impl AffineMap2 {
    pub fn new(linear: Mat2, shift: Vec2) -> Self {
        AffineMap2 { linear, shift }
    }

    pub fn identity() -> Self {
        AffineMap2::new(Mat2::identity(), Vec2::zero())
    }

    pub fn is_identity(&self) -> bool {
        self == &AffineMap2::identity()
    }

    pub fn linear(linear: Mat2) -> Self {
        AffineMap2::new(linear, Vec2::zero())
    }

    pub fn translation(v: Vec2) -> Self {
        AffineMap2::new(Mat2::identity(), v)
    }

    /// Diagonal scaling `diag(2^k, 2^l)`.
    pub fn scale_pow2(k: i64, l: i64) -> Self {
        AffineMap2::linear(Mat2::new(
            Dyadic::pow2(k),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::pow2(l),
        ))
    }

    /// Shear `[[1,0],[c,1]]`, which sends `(x, y)` to `(x + cy, y)`.
    pub fn shear(c: Dyadic) -> Self {
        AffineMap2::linear(Mat2::new(Dyadic::one(), Dyadic::zero(), c, Dyadic::one()))
    }

    /// The halving map `[[1/2,0],[1/2,1]]`; sends `(x, y)` to
    /// `((x + y)/2, y)`.
    pub fn halving() -> Self {
        AffineMap2::linear(Mat2::new(
            Dyadic::pow2(-1),
            Dyadic::zero(),
            Dyadic::pow2(-1),
            Dyadic::one(),
        ))
    }

    /// Reflection in the x-axis: `y ↦ -y`.
    pub fn reflect_x_axis() -> Self {
        AffineMap2::linear(Mat2::new(
            Dyadic::one(),
            Dyadic::zero(),
            Dyadic::zero(),
            -&Dyadic::one(),
        ))
    }

    /// Reflection in the y-axis: `x ↦ -x`.
    pub fn reflect_y_axis() -> Self {
        AffineMap2::linear(Mat2::new(
            -&Dyadic::one(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::one(),
        ))
    }

    /// Reflection in the line `y = x`.
    pub fn reflect_diagonal() -> Self {
        AffineMap2::linear(Mat2::new(
            Dyadic::zero(),
            Dyadic::one(),
            Dyadic::one(),
            Dyadic::zero(),
        ))
    }

    /// Reflection in the line `y = -x`.
    pub fn reflect_antidiagonal() -> Self {
        AffineMap2::linear(Mat2::new(
            Dyadic::zero(),
            -&Dyadic::one(),
            -&Dyadic::one(),
            Dyadic::zero(),
        ))
    }

    /// The determinant-one matrix `[[y,-b],[-x,a]]` with `a*y - b*x = 1`,
    /// which sends `(ma, mb)` to `(m, 0)` for coprime `a`, `b`.
    ///
    /// Uses the canonical Bézout solution; see [`bezout`].
    pub fn on_axis(a: &BigInt, b: &BigInt) -> Result<Self> {
        Self::on_axis_shifted(a, b, &BigInt::zero())
    }

    /// [`AffineMap2::on_axis`] with the Bézout solution moved `t` steps
    /// along its solution family `(x + t*a, y + t*b)`. Any `t` yields a
    /// valid map; pipelines use this to check choice independence.
    pub fn on_axis_shifted(a: &BigInt, b: &BigInt, t: &BigInt) -> Result<Self> {
        let (x, y) = bezout(a, b)?;
        let x = x + t * a;
        let y = y + t * b;
        let m = Mat2::new(
            Dyadic::from(y),
            Dyadic::from(-b),
            Dyadic::from(-x),
            Dyadic::from(a.clone()),
        );
        debug_assert!(m.det() == Dyadic::one());
        Ok(AffineMap2::linear(m))
    }

    /// `p * linear + shift`.
    pub fn apply(&self, p: &Vec2) -> Vec2 {
        self.linear.apply(p).add(&self.shift)
    }

    /// The map "`self` then `g`": `apply(compose(f, g), p) = g(f(p))`.
    pub fn compose(&self, g: &AffineMap2) -> AffineMap2 {
        AffineMap2::new(
            self.linear.mul(&g.linear),
            g.linear.apply(&self.shift).add(&g.shift),
        )
    }

    /// Exact inverse; errors when the linear part is not invertible.
    pub fn inverse(&self) -> Result<AffineMap2> {
        let inv = self.linear.inverse()?;
        let shift = inv.apply(&self.shift).neg();
        Ok(AffineMap2::new(inv, shift))
    }

    pub fn det(&self) -> Dyadic {
        self.linear.det()
    }

    pub fn is_invertible(&self) -> bool {
        self.linear.invertible()
    }
}

impl fmt::Display for AffineMap2 {
    /// Map literal `[[a,b],[c,d]]+(tx,ty)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.linear, self.shift)
    }
}

impl fmt::Debug for AffineMap2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for AffineMap2 {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        let t = s.trim();
        let body = t.strip_prefix("[[").ok_or_else(|| {
            ParseError::new(format!(
                "expected map literal [[a,b],[c,d]]+(tx,ty), got {t:?}"
            ))
        })?;
        let (matrix, rest) = body
            .split_once("]]")
            .ok_or_else(|| ParseError::new(format!("unterminated matrix in {t:?}")))?;
        let (r1, r2) = matrix
            .split_once("],[")
            .ok_or_else(|| ParseError::new(format!("expected two matrix rows in {t:?}")))?;
        let row = |r: &str| -> core::result::Result<(Dyadic, Dyadic), ParseError> {
            let (p, q) = r.split_once(',').ok_or_else(|| {
                ParseError::new(format!("expected two entries in matrix row {r:?}"))
            })?;
            Ok((p.parse()?, q.parse()?))
        };
        let (a, b) = row(r1)?;
        let (c, d) = row(r2)?;
        let shift = rest
            .trim_start()
            .strip_prefix('+')
            .ok_or_else(|| ParseError::new(format!("expected +(tx,ty) after matrix in {t:?}")))?;
        Ok(AffineMap2::new(Mat2::new(a, b, c, d), shift.parse()?))
    }
}

/// The canonical solution of `a*y - b*x = 1` for coprime `a`, `b`.
///
/// When `|b| > 1` the solution returned is the unique one with
/// `0 <= y < |b|`; for `|b| = 1` it has `y = 0`, and for `b = 0` (so
/// `a = ±1`) it is `(0, a)`. Errors when `gcd(a, b) != 1`.
pub fn bezout(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    let g = a.extended_gcd(b);
    if !g.gcd.is_one() {
        return Err(Error::NotCoprime);
    }
    // g.x * a + g.y * b = 1, so (x, y) = (-g.y, g.x) solves a*y - b*x = 1.
    let mut x = -g.y;
    let mut y = g.x;
    if b.is_zero() {
        // y is forced to 1/a = a; normalize x along the family x + t*a.
        x = BigInt::zero();
    } else {
        // The family is (x + t*a, y + t*b); reduce y into [0, |b|).
        let b_abs = b.abs();
        let r = y.mod_floor(&b_abs);
        let t = (&r - &y) / b;
        x += &t * a;
        y = r;
    }
    debug_assert!((a * &y - b * &x).is_one());
    Ok((x, y))
}

/// Verifies `f(midpoint(p, q)) = midpoint(f(p), f(q))` over the sampled
/// pairs. Affine maps always pass; arbitrary point functions can fail.
pub fn check_homomorphism<F>(f: F, pairs: &[(Vec2, Vec2)]) -> bool
where
    F: Fn(&Vec2) -> Vec2,
{
    pairs
        .iter()
        .all(|(p, q)| f(&p.midpoint(q)) == f(p).midpoint(&f(q)))
}

/// Splits `text` on `sep` and parses every piece; used by the list-valued
/// literals (triangles, generator sets).
pub(crate) fn parse_list<T: FromStr<Err = ParseError>>(
    text: &str,
    sep: char,
) -> core::result::Result<Vec<T>, ParseError> {
    text.split(sep).map(|part| part.parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> Vec2 {
        (x, y).into()
    }

    fn mat(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn determinants_and_invertibility() {
        let shear = mat(1, 0, 5, 1);
        assert_eq!(shear.det_invertible(), (Dyadic::one(), true));
        let m = mat(1, 2, 3, 4);
        assert_eq!(m.det_invertible(), (Dyadic::from(-2), true));
        let n = mat(3, 0, 0, 1);
        assert_eq!(n.det_invertible(), (Dyadic::from(3), false));
        assert_eq!(n.inverse(), Err(Error::NonInvertible));
    }

    #[test]
    fn row_vector_application() {
        // On-axis matrix for (a,b) = (5,3): maps (10,6) = 2*(5,3) to (2,0).
        let m = mat(2, -3, -3, 5);
        assert_eq!(m.apply(&v(10, 6)), v(2, 0));
        // Shear with c = -1 sends (j,j) to (0,j).
        let shear = mat(1, 0, -1, 1);
        assert_eq!(shear.apply(&v(3, 3)), v(0, 3));
        // Halving map sends (1,3) to (2,3).
        assert_eq!(AffineMap2::halving().apply(&v(1, 3)), v(2, 3));
    }

    #[test]
    fn compose_and_inverse() {
        let t = AffineMap2::translation(v(1, 2));
        assert_eq!(t.inverse().unwrap(), AffineMap2::translation(v(-1, -2)));
        let s = AffineMap2::scale_pow2(1, 0);
        assert_eq!(s.inverse().unwrap(), AffineMap2::scale_pow2(-1, 0));
        let f = t.compose(&s);
        assert_eq!(f.compose(&f.inverse().unwrap()), AffineMap2::identity());
        // compose(f, g) applies f first.
        let p = v(3, -1);
        assert_eq!(f.apply(&p), s.apply(&t.apply(&p)));
    }

    #[test]
    fn elementary_constructors() {
        let m = AffineMap2::on_axis(&BigInt::from(5), &BigInt::from(3)).unwrap();
        assert_eq!(m.linear, mat(2, -3, -3, 5));
        let sh = AffineMap2::shear(Dyadic::from(-1));
        assert_eq!(sh.apply(&v(3, 3)), v(0, 3));
        let sc = AffineMap2::scale_pow2(1, 1);
        assert_eq!(
            sc.apply(&Vec2::new("1/2".parse().unwrap(), "3/2".parse().unwrap())),
            v(1, 3)
        );
        assert!(AffineMap2::on_axis(&BigInt::from(2), &BigInt::from(4)).is_err());
    }

    #[test]
    fn bezout_canonical_solutions() {
        let b = |a: i64, bb: i64| bezout(&BigInt::from(a), &BigInt::from(bb));
        assert_eq!(b(5, 3).unwrap(), (BigInt::from(3), BigInt::from(2)));
        assert_eq!(b(3, 5).unwrap(), (BigInt::from(1), BigInt::from(2)));
        assert_eq!(b(1, 0).unwrap(), (BigInt::from(0), BigInt::from(1)));
        assert_eq!(b(-1, 0).unwrap(), (BigInt::from(0), BigInt::from(-1)));
        assert_eq!(b(0, 1).unwrap(), (BigInt::from(-1), BigInt::from(0)));
        assert_eq!(b(4, 6), Err(Error::NotCoprime));
        assert_eq!(b(0, 0), Err(Error::NotCoprime));
    }

    #[test]
    fn map_literal_round_trip() {
        let f = AffineMap2::new(
            Mat2::new(
                "1/2".parse().unwrap(),
                Dyadic::zero(),
                Dyadic::from(-3),
                Dyadic::one(),
            ),
            Vec2::new(Dyadic::from(-1), "7/4".parse().unwrap()),
        );
        let text = f.to_string();
        assert_eq!(text, "[[1/2,0],[-3,1]]+(-1,7/4)");
        assert_eq!(text.parse::<AffineMap2>().unwrap(), f);
        assert!("[[1,0],[0,1]]".parse::<AffineMap2>().is_err());
    }

    #[test]
    fn homomorphism_check() {
        let pairs = [(v(0, 0), v(2, 0)), (v(1, 3), v(-5, 7))];
        let f = AffineMap2::new(mat(1, 2, 0, 1), v(0, -3));
        assert!(check_homomorphism(|p| f.apply(p), &pairs));
        let squaring = |p: &Vec2| Vec2::new(&p.x * &p.x, &p.y * &p.y);
        assert!(!check_homomorphism(squaring, &pairs[..1]));
    }
}

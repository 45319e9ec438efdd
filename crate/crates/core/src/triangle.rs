//! Dyadic triangles: orientation, membership, boundary types and the
//! integer quadruples describing pointed triangles in normal position.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::affine::{parse_list, Vec2};
use crate::dyadic::Dyadic;
use crate::error::{Error, ParseError, Result};
use crate::interval::{side_type, IntervalType};

/// Vertex orientation of an ordered triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
    Degenerate,
}

/// A triangle given by three ordered vertices. Construction does not
/// reject collinear vertices; operations that need a genuine triangle
/// return [`Error::DegenerateTriangle`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [Vec2; 3],
}

impl Triangle {
    pub fn new(v0: Vec2, v1: Vec2, v2: Vec2) -> Self {
        Triangle {
            vertices: [v0, v1, v2],
        }
    }

    pub fn vertex(&self, i: usize) -> &Vec2 {
        &self.vertices[i % 3]
    }

    /// Twice the signed area:
    /// `(x1-x0)(y2-y0) - (y1-y0)(x2-x0)`. Negative for clockwise vertex
    /// order, zero exactly for collinear vertices.
    pub fn signed_area2(&self) -> Dyadic {
        signed_area2(&self.vertices[0], &self.vertices[1], &self.vertices[2])
    }

    pub fn orientation(&self) -> Orientation {
        match self.signed_area2().signum() {
            0 => Orientation::Degenerate,
            s if s < 0 => Orientation::Clockwise,
            _ => Orientation::Counterclockwise,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.orientation() == Orientation::Degenerate
    }

    pub(crate) fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateTriangle)
        } else {
            Ok(())
        }
    }

    /// Exact membership in the closed real convex hull. Every dyadic point
    /// of the hull belongs to the dyadic triangle.
    pub fn contains_point(&self, p: &Vec2) -> Result<bool> {
        self.require_nondegenerate()?;
        let s = self.signed_area2().signum();
        let inside = (0..3).all(|i| {
            let edge = signed_area2(self.vertex(i), self.vertex(i + 1), p);
            edge.signum() * s >= 0
        });
        Ok(inside)
    }

    /// Interval types of the edges `v0v1`, `v1v2`, `v2v0`.
    pub fn boundary_type(&self) -> Result<BoundaryType> {
        self.require_nondegenerate()?;
        Ok(BoundaryType {
            sides: [
                side_type(self.vertex(0), self.vertex(1))?,
                side_type(self.vertex(1), self.vertex(2))?,
                side_type(self.vertex(2), self.vertex(0))?,
            ],
        })
    }

    /// The reflection `y ↦ -y` applied to every vertex.
    pub fn mirrored(&self) -> Triangle {
        let m = |v: &Vec2| Vec2::new(v.x.clone(), -&v.y);
        Triangle::new(
            m(&self.vertices[0]),
            m(&self.vertices[1]),
            m(&self.vertices[2]),
        )
    }
}

pub(crate) fn signed_area2(a: &Vec2, b: &Vec2, c: &Vec2) -> Dyadic {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    &(&abx * &acy) - &(&aby * &acx)
}

impl From<[(i64, i64); 3]> for Triangle {
    fn from(p: [(i64, i64); 3]) -> Self {
        Triangle::new(p[0].into(), p[1].into(), p[2].into())
    }
}

impl fmt::Display for Triangle {
    /// Triangle literal `(x,y);(x,y);(x,y)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{};{}",
            self.vertices[0], self.vertices[1], self.vertices[2]
        )
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Triangle {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        let points: Vec<Vec2> = parse_list(s, ';')?;
        let [v0, v1, v2]: [Vec2; 3] = points
            .try_into()
            .map_err(|_| ParseError::new(format!("expected three points in {s:?}")))?;
        Ok(Triangle::new(v0, v1, v2))
    }
}

/// Cyclic triple of the side types of a triangle. Two boundary types are
/// equal when one is a rotation of the other; the reversed triple is a
/// distinct value.
#[derive(Clone)]
pub struct BoundaryType {
    sides: [IntervalType; 3],
}

impl BoundaryType {
    pub fn sides(&self) -> &[IntervalType; 3] {
        &self.sides
    }

    fn rotations(&self) -> [[&IntervalType; 3]; 3] {
        let [r, s, t] = [&self.sides[0], &self.sides[1], &self.sides[2]];
        [[r, s, t], [s, t, r], [t, r, s]]
    }

    /// The boundary type read in the opposite vertex order.
    pub fn reversed(&self) -> BoundaryType {
        let [r, s, t] = self.sides.clone();
        BoundaryType { sides: [t, s, r] }
    }
}

impl PartialEq for BoundaryType {
    fn eq(&self, other: &Self) -> bool {
        let mine = [&self.sides[0], &self.sides[1], &self.sides[2]];
        other.rotations().contains(&mine)
    }
}

impl Eq for BoundaryType {}

impl fmt::Display for BoundaryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.sides[0], self.sides[1], self.sides[2])
    }
}

impl fmt::Debug for BoundaryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Quadruple `(i, j, m, n)` describing the pointed triangle with vertices
/// `(0,0)`, `(i,j)`, `(m,n)`. Hats have `n = 0`; `i` may be any integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HatParams {
    i: BigInt,
    j: BigInt,
    m: BigInt,
    n: BigInt,
}

impl HatParams {
    /// Checks `j > 0`, `m > 0` and `0 <= n < j`.
    pub fn new(
        i: impl Into<BigInt>,
        j: impl Into<BigInt>,
        m: impl Into<BigInt>,
        n: impl Into<BigInt>,
    ) -> Result<Self> {
        let (i, j, m, n) = (i.into(), j.into(), m.into(), n.into());
        if !j.is_positive() {
            return Err(Error::InvalidHat("j must be positive"));
        }
        if !m.is_positive() {
            return Err(Error::InvalidHat("m must be positive"));
        }
        if n.is_negative() || n >= j {
            return Err(Error::InvalidHat("n must satisfy 0 <= n < j"));
        }
        Ok(HatParams { i, j, m, n })
    }

    /// A hat `(0,0), (i,j), (m,0)`.
    pub fn hat(i: impl Into<BigInt>, j: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<Self> {
        HatParams::new(i, j, m, 0)
    }

    pub fn i(&self) -> &BigInt {
        &self.i
    }

    pub fn j(&self) -> &BigInt {
        &self.j
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn is_hat(&self) -> bool {
        self.n.is_zero()
    }

    pub fn to_triangle(&self) -> Triangle {
        Triangle::new(
            Vec2::zero(),
            Vec2::new(self.i.clone().into(), self.j.clone().into()),
            Vec2::new(self.m.clone().into(), self.n.clone().into()),
        )
    }

    /// The class assigned by the older vertex-at-origin classification:
    ///
    /// * `A` — right triangles `(0, j, m, 0)` with `j`, `m` odd, `j <= m`;
    /// * `B` — hats with `0 < i <= m/2`, odd `j > 1` and `gcd(i,j) != j`;
    /// * `C` — quadruples with `i, n` nonzero, `j <= m`,
    ///   `gcd(i,j) ∉ {i, j, 1}` and `gcd(m,n) ∉ {m, n, 1}`.
    ///
    /// Returns `None` when no clause applies.
    pub fn legacy_class(&self) -> Option<LegacyClass> {
        let Self { i, j, m, n } = self;
        if i.is_zero() && n.is_zero() && j.is_odd() && m.is_odd() && j <= m {
            return Some(LegacyClass::A);
        }
        if n.is_zero()
            && i.is_positive()
            && BigInt::from(2) * i <= *m
            && j.is_odd()
            && *j > BigInt::one()
            && i.gcd(j) != *j
        {
            return Some(LegacyClass::B);
        }
        if !i.is_zero() && !n.is_zero() && j <= m {
            let gij = i.gcd(j);
            let gmn = m.gcd(n);
            if gij != i.abs()
                && gij != *j
                && !gij.is_one()
                && gmn != *m
                && gmn != *n
                && !gmn.is_one()
            {
                return Some(LegacyClass::C);
            }
        }
        None
    }
}

/// Clause of the older classification matched by a quadruple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegacyClass {
    A,
    B,
    C,
}

impl fmt::Display for HatParams {
    /// Hat literal `T{i,j,m,n}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{{{},{},{},{}}}", self.i, self.j, self.m, self.n)
    }
}

impl fmt::Debug for HatParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for HatParams {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix("T{")
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| {
                ParseError::new(format!("expected hat literal T{{i,j,m,n}}, got {t:?}"))
            })?;
        let fields: Vec<&str> = inner.split(',').collect();
        if fields.len() != 4 {
            return Err(ParseError::new(format!(
                "expected four integer fields in {t:?}"
            )));
        }
        let mut ints = Vec::with_capacity(4);
        for field in fields {
            let n = BigInt::from_str(field.trim()).map_err(|_| {
                ParseError::new(format!("invalid integer {:?} in {t:?}", field.trim()))
            })?;
            ints.push(n);
        }
        HatParams::new(
            ints[0].clone(),
            ints[1].clone(),
            ints[2].clone(),
            ints[3].clone(),
        )
        .map_err(|e| ParseError::new(e.to_string()))
    }
}

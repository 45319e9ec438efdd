//! Reduction of pointed dyadic triangles to canonical hats.
//!
//! Every nondegenerate triangle with a chosen (pointed) vertex reduces, by a
//! chain of elementary affine maps of positive determinant, to a hat
//! `(0,0), (i,j), (m,0)` with `i`, `j`, `m` odd and `1 <= i <= 2j-1`. The
//! resulting [`EncodingTriple`] is a complete invariant of pointed oriented
//! isomorphism, and the recorded [`TransformTrace`] composes to an explicit
//! witness map. Unpointed isomorphism is decided by intersecting the six
//! pointed encodings (three vertices, direct and mirrored); a match across
//! orientations inserts one reflection into the witness.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::affine::{AffineMap2, Vec2};
use crate::dyadic::Dyadic;
use crate::error::{Error, ParseError, Result};
use crate::triangle::{signed_area2, HatParams, Triangle};

/// One elementary map in a classification trace.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub label: &'static str,
    pub map: AffineMap2,
}

/// An ordered chain of elementary affine maps together with their
/// composition. `composed` sends the original triangle onto the final one,
/// vertex to vertex.
#[derive(Clone, Debug)]
pub struct TransformTrace {
    steps: Vec<TraceStep>,
    composed: AffineMap2,
}

impl Default for TransformTrace {
    fn default() -> Self {
        TransformTrace::new()
    }
}

impl TransformTrace {
    pub fn new() -> Self {
        TransformTrace {
            steps: Vec::new(),
            composed: AffineMap2::identity(),
        }
    }

    pub fn push(&mut self, label: &'static str, map: AffineMap2) {
        self.composed = self.composed.compose(&map);
        self.steps.push(TraceStep { label, map });
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn composed(&self) -> &AffineMap2 {
        &self.composed
    }
}

impl fmt::Display for TransformTrace {
    /// One line per step: `label: [[a,b],[c,d]]+(tx,ty)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{}: {}", step.label, step.map)?;
        }
        Ok(())
    }
}

/// The complete invariant of a pointed oriented triangle: odd positive
/// `i`, `j`, `m` with `1 <= i <= 2j-1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EncodingTriple {
    i: BigInt,
    j: BigInt,
    m: BigInt,
}

impl EncodingTriple {
    pub fn new(i: impl Into<BigInt>, j: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<Self> {
        let (i, j, m) = (i.into(), j.into(), m.into());
        if !(i.is_positive()
            && i.is_odd()
            && j.is_positive()
            && j.is_odd()
            && m.is_positive()
            && m.is_odd())
        {
            return Err(Error::InvalidTriple("fields must be odd and positive"));
        }
        if i >= BigInt::from(2) * &j {
            return Err(Error::InvalidTriple("i must satisfy 1 <= i <= 2j-1"));
        }
        Ok(EncodingTriple { i, j, m })
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

    /// The hat triangle `(0,0), (i,j), (m,0)` this triple encodes.
    pub fn to_triangle(&self) -> Triangle {
        HatParams::hat(self.i.clone(), self.j.clone(), self.m.clone())
            .expect("valid triple")
            .to_triangle()
    }
}

impl fmt::Display for EncodingTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.m)
    }
}

impl fmt::Debug for EncodingTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for EncodingTriple {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| {
                ParseError::new(format!("expected triple literal (i,j,m), got {t:?}"))
            })?;
        let fields: Vec<&str> = inner.split(',').collect();
        if fields.len() != 3 {
            return Err(ParseError::new(format!(
                "expected three integer fields in {t:?}"
            )));
        }
        let mut ints = Vec::with_capacity(3);
        for field in fields {
            let n = BigInt::from_str(field.trim()).map_err(|_| {
                ParseError::new(format!("invalid integer {:?} in {t:?}", field.trim()))
            })?;
            ints.push(n);
        }
        EncodingTriple::new(ints[0].clone(), ints[1].clone(), ints[2].clone())
            .map_err(|e| ParseError::new(e.to_string()))
    }
}

/// True exactly when the triple is the class of a right hat, i.e. the
/// canonical residue `i` equals `j`.
pub fn right_hat_test(triple: &EncodingTriple) -> bool {
    triple.i == triple.j
}

/// Alternative choices threaded through the reduction pipeline. The
/// encoding triple is independent of them; tests randomize both fields to
/// confirm it.
#[derive(Clone, Debug, Default)]
pub struct PipelineChoices {
    /// Moves the Bézout solution of the on-axis step `t` steps along its
    /// solution family `(x + t*a, y + t*b)`.
    pub bezout_shift: BigInt,
    /// An extra shear `[[1,0],[c,1]]` inserted after the on-axis step
    /// (followed by an x-scale clearing any new denominator).
    pub extra_shear: Option<Dyadic>,
}

/// Pipeline state: the images of the pointed vertex and of the two other
/// vertices in clockwise role order, under the maps recorded so far.
struct Reduction {
    a: Vec2,
    b: Vec2,
    c: Vec2,
    trace: TransformTrace,
}

impl Reduction {
    fn push(&mut self, label: &'static str, map: AffineMap2) {
        self.a = map.apply(&self.a);
        self.b = map.apply(&self.b);
        self.c = map.apply(&self.c);
        self.trace.push(label, map);
    }

    fn i(&self) -> BigInt {
        self.b.x.to_integer().expect("integral i")
    }

    fn j(&self) -> BigInt {
        self.b.y.to_integer().expect("integral j")
    }

    fn m(&self) -> BigInt {
        self.c.x.to_integer().expect("integral m")
    }
}

fn v2(n: &BigInt) -> u64 {
    n.trailing_zeros().expect("nonzero")
}

/// Steps 1-3 of the reduction: label the non-pointed vertices clockwise,
/// translate the pointed vertex to the origin, clear denominators with a
/// uniform power-of-two scale, and move C onto the positive x-axis with a
/// determinant-one map. Leaves `B = (i, j)` with `j > 0` and `C = (m, 0)`
/// with `m > 0`, all integral.
fn reduce(tri: &Triangle, vertex: usize, choices: &PipelineChoices) -> Result<Reduction> {
    tri.require_nondegenerate()?;
    let a = tri.vertex(vertex).clone();
    let mut b = tri.vertex(vertex + 1).clone();
    let mut c = tri.vertex(vertex + 2).clone();
    if signed_area2(&a, &b, &c).signum() > 0 {
        core::mem::swap(&mut b, &mut c);
    }
    let mut red = Reduction {
        a: a.clone(),
        b,
        c,
        trace: TransformTrace::new(),
    };

    if !a.is_zero() {
        red.push("translate", AffineMap2::translation(a.neg()));
    }

    let s = [&red.b.x, &red.b.y, &red.c.x, &red.c.y]
        .into_iter()
        .map(Dyadic::denominator_exponent)
        .max()
        .expect("nonempty");
    if s > 0 {
        red.push("scale", AffineMap2::scale_pow2(s, s));
    }

    let cx = red.c.x.to_integer().expect("integral");
    let cy = red.c.y.to_integer().expect("integral");
    let g = cx.gcd(&cy);
    let on_axis = AffineMap2::on_axis_shifted(&(&cx / &g), &(&cy / &g), &choices.bezout_shift)?;
    if !on_axis.is_identity() {
        red.push("on-axis", on_axis);
    }

    if let Some(shear_c) = &choices.extra_shear {
        if !shear_c.is_zero() {
            red.push("shear", AffineMap2::shear(shear_c.clone()));
            let e = red.b.x.denominator_exponent();
            if e > 0 {
                red.push("x-scale", AffineMap2::scale_pow2(e, 0));
            }
        }
    }

    debug_assert!(red.a.is_zero());
    debug_assert!(red.c.y.is_zero() && red.c.x.signum() > 0);
    debug_assert!(red.b.y.signum() > 0);
    Ok(red)
}

/// Divides the x-axis by the largest power of two shared by `i` and `m`
/// (by `m` alone when `i = 0`), making their gcd odd.
fn descale_x(red: &mut Reduction) {
    let i = red.i();
    let m = red.m();
    let w = if i.is_zero() {
        v2(&m)
    } else {
        v2(&i).min(v2(&m))
    };
    if w > 0 {
        red.push("x-descale", AffineMap2::scale_pow2(-(w as i64), 0));
    }
}

/// The dyadic of smallest denominator depth in `[lo/den, hi/den]`, taking
/// the smallest such value on ties. Requires `den > 0` and `lo <= hi`.
fn shallowest_in_interval(lo: &BigInt, hi: &BigInt, den: &BigInt) -> Dyadic {
    debug_assert!(den.is_positive() && lo <= hi);
    let mut depth = 0u64;
    loop {
        let lo_scaled = (lo << depth).div_ceil(den);
        let hi_scaled = (hi << depth).div_floor(den);
        if lo_scaled <= hi_scaled {
            return Dyadic::new(lo_scaled, -(depth as i64));
        }
        depth += 1;
    }
}

/// Reduces a pointed triangle to a hat `(0,0), (i,j), (m,0)` with
/// `0 <= i <= m` and odd `gcd(i, m)`.
///
/// After the axis reduction, a shear with the shallowest admissible dyadic
/// constant places `i` into `[0, m]`, any new denominator is cleared with an
/// x-scale, and a final x-descale makes `gcd(i, m)` odd. The returned trace
/// maps the input onto the hat vertex for vertex.
pub fn normalize_pointed(tri: &Triangle, vertex: usize) -> Result<(HatParams, TransformTrace)> {
    let mut red = reduce(tri, vertex, &PipelineChoices::default())?;
    let (i, j, m) = (red.i(), red.j(), red.m());
    if i.is_negative() || i > m {
        let c = shallowest_in_interval(&-&i, &(&m - &i), &j);
        red.push("shear", AffineMap2::shear(c));
        let e = red.b.x.denominator_exponent();
        if e > 0 {
            red.push("x-scale", AffineMap2::scale_pow2(e, 0));
        }
    }
    descale_x(&mut red);
    let hat = HatParams::hat(red.i(), red.j(), red.m())?;
    Ok((hat, red.trace))
}

/// Reduces a pointed triangle to its canonical representative hat and
/// encoding triple, with the full witness trace.
pub fn to_representative(
    tri: &Triangle,
    vertex: usize,
) -> Result<(EncodingTriple, TransformTrace)> {
    to_representative_with(tri, vertex, &PipelineChoices::default())
}

/// [`to_representative`] with explicit pipeline choices.
pub fn to_representative_with(
    tri: &Triangle,
    vertex: usize,
    choices: &PipelineChoices,
) -> Result<(EncodingTriple, TransformTrace)> {
    let mut red = reduce(tri, vertex, choices)?;

    let vj = v2(&red.j());
    if vj > 0 {
        red.push("y-descale", AffineMap2::scale_pow2(0, -(vj as i64)));
    }
    descale_x(&mut red);

    // Make i odd, then strip factors of two from m with the halving map;
    // each halving lowers the valuation of m by exactly one.
    loop {
        if red.i().is_even() {
            red.push("shear", AffineMap2::shear(Dyadic::one()));
        }
        if red.m().is_odd() {
            break;
        }
        red.push("halve", AffineMap2::halving());
    }

    // Canonical residue: the odd representative of i mod j.
    let (i, j) = (red.i(), red.j());
    let r = i.mod_floor(&j);
    let canonical = if r.is_odd() { r } else { r + &j };
    if canonical != i {
        let k = (&canonical - &i) / &j;
        red.push("shear", AffineMap2::shear(k.into()));
    }

    let triple = EncodingTriple::new(red.i(), red.j(), red.m())?;
    let det = red.trace.composed().det();
    debug_assert!(det.signum() > 0 && det.numerator().is_one());
    Ok((triple, red.trace))
}

/// The encoding triple of a pointed triangle.
pub fn encode(tri: &Triangle, vertex: usize) -> Result<EncodingTriple> {
    Ok(to_representative(tri, vertex)?.0)
}

/// [`encode`] with explicit pipeline choices; the result is the same for
/// every choice.
pub fn encode_with(
    tri: &Triangle,
    vertex: usize,
    choices: &PipelineChoices,
) -> Result<EncodingTriple> {
    Ok(to_representative_with(tri, vertex, choices)?.0)
}

/// The six pointed encodings of a triangle, with traces that map the
/// triangle itself (mirroring first where applicable) onto each hat.
/// Order: vertices 0, 1, 2 direct, then vertices 0, 1, 2 of the mirror
/// image.
pub fn pointed_variants(tri: &Triangle) -> Result<Vec<(EncodingTriple, TransformTrace)>> {
    let mut out = Vec::with_capacity(6);
    for vertex in 0..3 {
        out.push(to_representative(tri, vertex)?);
    }
    let mirrored = tri.mirrored();
    for vertex in 0..3 {
        let (triple, inner) = to_representative(&mirrored, vertex)?;
        let mut trace = TransformTrace::new();
        trace.push("mirror", AffineMap2::reflect_x_axis());
        for step in inner.steps() {
            trace.push(step.label, step.map.clone());
        }
        out.push((triple, trace));
    }
    Ok(out)
}

/// The set of encoding triples over all six vertex/orientation choices.
/// Orientation-preserving maps leave this set unchanged.
pub fn encode_all(tri: &Triangle) -> Result<BTreeSet<EncodingTriple>> {
    Ok(pointed_variants(tri)?
        .into_iter()
        .map(|(triple, _)| triple)
        .collect())
}

/// Decides pointed oriented isomorphism and returns a witness map carrying
/// `t1` onto `t2` with the chosen vertices corresponding and positive
/// determinant.
pub fn pointed_isomorphic(
    t1: &Triangle,
    v1: usize,
    t2: &Triangle,
    v2: usize,
) -> Result<Option<AffineMap2>> {
    let (e1, tr1) = to_representative(t1, v1)?;
    let (e2, tr2) = to_representative(t2, v2)?;
    if e1 != e2 {
        return Ok(None);
    }
    let witness = tr1.composed().compose(&tr2.composed().inverse()?);
    debug_assert!(witness.det().signum() > 0);
    debug_assert!(maps_vertices_exactly(&witness, t1, t2));
    debug_assert!(witness.apply(t1.vertex(v1)) == *t2.vertex(v2));
    Ok(Some(witness))
}

/// Decides isomorphism (any vertex correspondence, either orientation) by
/// intersecting the six pointed encodings of each triangle. The witness is
/// assembled from the two traces that reach the shared hat.
pub fn isomorphic(t1: &Triangle, t2: &Triangle) -> Result<Option<AffineMap2>> {
    let variants1 = pointed_variants(t1)?;
    let variants2 = pointed_variants(t2)?;
    for (e1, tr1) in &variants1 {
        for (e2, tr2) in &variants2 {
            if e1 == e2 {
                let witness = tr1.composed().compose(&tr2.composed().inverse()?);
                debug_assert!(maps_vertices_exactly(&witness, t1, t2));
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

/// True when `map` sends the vertex set of `from` exactly onto the vertex
/// set of `to`.
pub fn maps_vertices_exactly(map: &AffineMap2, from: &Triangle, to: &Triangle) -> bool {
    let images: BTreeSet<Vec2> = from.vertices.iter().map(|v| map.apply(v)).collect();
    let targets: BTreeSet<Vec2> = to.vertices.iter().cloned().collect();
    images == targets
}

//! Step-bounded brute force for midpoint closures.
//!
//! Midpoint closures in the dyadic line or plane never saturate in general
//! (denominators deepen forever), so the engine runs a fixed number of
//! breadth-first steps: level `s+1` adds every pairwise midpoint of level
//! `s`. Results are exact and reproducible; the step budget is always an
//! explicit parameter of the answer.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::affine::Vec2;
use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::triangle::Triangle;

/// Types carrying the midpoint operation; the closure engine is generic
/// over scalars (dimension one) and points of the plane.
pub trait Midpoint: Ord + Clone {
    fn midpoint(&self, other: &Self) -> Self;
}

impl Midpoint for Dyadic {
    fn midpoint(&self, other: &Self) -> Self {
        Dyadic::midpoint(self, other)
    }
}

impl Midpoint for Vec2 {
    fn midpoint(&self, other: &Self) -> Self {
        Vec2::midpoint(self, other)
    }
}

/// Result of a bounded closure computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult<T: Midpoint> {
    /// All points reached, in ascending order.
    pub points: BTreeSet<T>,
    /// Steps actually executed (the run stops early once a step adds
    /// nothing).
    pub steps_used: u32,
    /// True when the last executed step added no new points; further steps
    /// can then never add any.
    pub saturated: bool,
}

/// Breadth-first midpoint closure of `generators`, bounded by `steps`.
pub fn closure<T: Midpoint>(generators: &[T], steps: u32) -> ClosureResult<T> {
    let mut points: BTreeSet<T> = generators.iter().cloned().collect();
    let mut frontier: Vec<T> = points.iter().cloned().collect();
    let mut steps_used = 0;
    let mut saturated = false;
    for _ in 0..steps {
        steps_used += 1;
        let new_points = expand(&points, &frontier);
        if new_points.is_empty() {
            saturated = true;
            break;
        }
        frontier = new_points.iter().cloned().collect();
        points.extend(new_points);
    }
    ClosureResult {
        points,
        steps_used,
        saturated,
    }
}

/// Midpoints involving at least one frontier point that are not yet known.
/// Pairs entirely inside the older levels were produced by earlier steps,
/// so this yields exactly the all-pairs expansion.
fn expand<T: Midpoint>(points: &BTreeSet<T>, frontier: &[T]) -> BTreeSet<T> {
    let mut new_points = BTreeSet::new();
    for p in frontier {
        for q in points {
            let mid = p.midpoint(q);
            if !points.contains(&mid) {
                new_points.insert(mid);
            }
        }
    }
    new_points
}

/// Outcome of a bounded generation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generates<T: Midpoint> {
    /// True when every grid point of the region lies in the closure of the
    /// generators within the step budget.
    pub holds: bool,
    /// The smallest missing grid point when `holds` is false.
    pub missing: Option<T>,
    /// The step budget the answer refers to. A `false` answer means
    /// "missing at this budget"; a larger budget could still succeed.
    pub budget: u32,
}

/// The default step budget for a depth-`d` generation check: `d` steps
/// suffice on intervals, doubled plus slack for the plane.
pub fn default_step_budget(depth: u32) -> u32 {
    2 * depth + 2
}

/// Checks that the generators reach every point of `[lo, hi]` with
/// denominator exponent at most `depth`, within `budget` closure steps.
pub fn generates_interval(
    generators: &[Dyadic],
    lo: &Dyadic,
    hi: &Dyadic,
    depth: u32,
    budget: u32,
) -> Result<Generates<Dyadic>> {
    if lo == hi {
        return Err(crate::error::Error::DegenerateInterval);
    }
    let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
    let mut targets = Vec::new();
    let mut k = ceil_scaled(lo, depth);
    let top = floor_scaled(hi, depth);
    while k <= top {
        targets.push(Dyadic::new(k.clone(), -(depth as i64)));
        k += 1;
    }
    Ok(check_targets(generators, targets, budget))
}

/// Checks that the generators reach every grid point of the triangle at
/// the given depth, within `budget` closure steps.
pub fn generates_triangle(
    generators: &[Vec2],
    region: &Triangle,
    depth: u32,
    budget: u32,
) -> Result<Generates<Vec2>> {
    let targets = enumerate_points(region, depth)?;
    Ok(check_targets(generators, targets, budget))
}

/// Runs the bounded closure, stopping as soon as all targets are present
/// (membership is monotone in the step count, so an early stop cannot
/// change the answer).
fn check_targets<T: Midpoint>(generators: &[T], targets: Vec<T>, budget: u32) -> Generates<T> {
    let mut points: BTreeSet<T> = generators.iter().cloned().collect();
    let mut frontier: Vec<T> = points.iter().cloned().collect();
    let all_present = |points: &BTreeSet<T>| targets.iter().all(|t| points.contains(t));
    let mut done = all_present(&points);
    let mut step = 0;
    while !done && step < budget {
        step += 1;
        let new_points = expand(&points, &frontier);
        if new_points.is_empty() {
            break;
        }
        frontier = new_points.iter().cloned().collect();
        points.extend(new_points);
        done = all_present(&points);
    }
    let missing = if done {
        None
    } else {
        targets.iter().find(|t| !points.contains(t)).cloned()
    };
    Generates {
        holds: done,
        missing,
        budget,
    }
}

/// All dyadic points of the triangle with denominator exponent at most
/// `depth`, in ascending lexicographic order.
pub fn enumerate_points(tri: &Triangle, depth: u32) -> Result<Vec<Vec2>> {
    tri.require_nondegenerate()?;
    let xs: Vec<&Dyadic> = tri.vertices.iter().map(|v| &v.x).collect();
    let ys: Vec<&Dyadic> = tri.vertices.iter().map(|v| &v.y).collect();
    let min_x = ceil_scaled(xs.iter().min().expect("nonempty"), depth);
    let max_x = floor_scaled(xs.iter().max().expect("nonempty"), depth);
    let min_y = ceil_scaled(ys.iter().min().expect("nonempty"), depth);
    let max_y = floor_scaled(ys.iter().max().expect("nonempty"), depth);

    let mut out = Vec::new();
    let mut kx = min_x;
    while kx <= max_x {
        let x = Dyadic::new(kx.clone(), -(depth as i64));
        let mut ky = min_y.clone();
        while ky <= max_y {
            let p = Vec2::new(x.clone(), Dyadic::new(ky.clone(), -(depth as i64)));
            if tri.contains_point(&p)? {
                out.push(p);
            }
            ky += 1;
        }
        kx += 1;
    }
    Ok(out)
}

/// Largest integer `k` with `k/2^depth <= x`.
fn floor_scaled(x: &Dyadic, depth: u32) -> BigInt {
    let scaled = x.scale_pow2(depth as i64);
    if scaled.exponent() >= 0 || scaled.is_zero() {
        scaled.to_integer().expect("integral")
    } else {
        // BigInt shifts round toward negative infinity.
        scaled.numerator() >> (-scaled.exponent()) as u64
    }
}

/// Smallest integer `k` with `k/2^depth >= x`.
fn ceil_scaled(x: &Dyadic, depth: u32) -> BigInt {
    -floor_scaled(&-x, depth)
}

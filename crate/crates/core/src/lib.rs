//! Exact geometry of the dyadic plane.
//!
//! Everything here works over the ring of dyadic rationals (integers divided
//! by powers of two), with no floating point anywhere. The crate provides:
//!
//! * [`Dyadic`] — exact scalars stored as an odd numerator times a power of
//!   two, with the midpoint operation `(x + y) / 2` as the basic primitive;
//! * [`affine`] — points, 2×2 matrices and affine maps of the dyadic plane,
//!   where a map is invertible exactly when its determinant is `±2^k`;
//! * [`interval`] — the type of a dyadic interval (the odd part of its
//!   length), which classifies intervals up to midpoint isomorphism;
//! * [`triangle`] and [`classify`] — dyadic triangles, their reduction to
//!   canonical hat triangles `(0,0), (i,j), (m,0)`, the encoding triple
//!   `(i, j, m)` that completely classifies a pointed oriented triangle, and
//!   isomorphism tests that produce explicit affine witness maps;
//! * [`closure`] — a step-bounded brute-force engine for midpoint closures,
//!   used to cross-check generation and membership facts on small instances.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod affine;
pub mod classify;
pub mod closure;
pub mod dyadic;
pub mod error;
pub mod interval;
pub mod triangle;

pub use affine::{bezout, check_homomorphism, AffineMap2, Mat2, Vec2};
pub use classify::{
    encode, encode_all, encode_with, isomorphic, maps_vertices_exactly, normalize_pointed,
    pointed_isomorphic, pointed_variants, right_hat_test, to_representative,
    to_representative_with, EncodingTriple, PipelineChoices, TraceStep, TransformTrace,
};
pub use closure::{
    closure, default_step_budget, enumerate_points, generates_interval, generates_triangle,
    ClosureResult, Generates, Midpoint,
};
pub use dyadic::Dyadic;
pub use error::{Error, ParseError, Result};
pub use interval::{interval_type, side_type, IntervalType};
pub use triangle::{BoundaryType, HatParams, LegacyClass, Orientation, Triangle};

//! Deterministic SVG rendering of a triangle and its dyadic grid points.
//!
//! Coordinates are written as exact decimal expansions (every dyadic has
//! one), so equal inputs always produce byte-identical documents.

use std::fmt::Write;

use dytri_core::dyadic::to_decimal_string;
use dytri_core::{enumerate_points, Dyadic, Result, Triangle, Vec2};
use num_bigint::BigInt;

/// World y is flipped once at emission time: a point (x, y) is drawn at
/// screen (x, -y).
fn screen(p: &Vec2) -> (String, String) {
    (to_decimal_string(&p.x), to_decimal_string(&-&p.y))
}

/// Renders the triangle outline, the unit grid over its bounding box and
/// one marker per grid point of [`enumerate_points`] at the given depth.
pub fn render_svg(tri: &Triangle, depth: u32) -> Result<String> {
    let points = enumerate_points(tri, depth)?;

    let xs: Vec<&Dyadic> = tri.vertices.iter().map(|v| &v.x).collect();
    let ys: Vec<&Dyadic> = tri.vertices.iter().map(|v| &v.y).collect();
    let min_x = (*xs.iter().min().expect("nonempty")).clone();
    let max_x = (*xs.iter().max().expect("nonempty")).clone();
    let min_y = (*ys.iter().min().expect("nonempty")).clone();
    let max_y = (*ys.iter().max().expect("nonempty")).clone();

    let margin = Dyadic::ratio(1, 1);
    let view_x = &min_x - &margin;
    let view_y = -&(&max_y + &margin); // screen top edge
    let two_margins = Dyadic::from(1);
    let width = &(&max_x - &min_x) + &two_margins;
    let height = &(&max_y - &min_y) + &two_margins;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str("<!-- screen y axis points down: a world point (x,y) is drawn at (x,-y) -->\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        to_decimal_string(&view_x),
        to_decimal_string(&view_y),
        to_decimal_string(&width),
        to_decimal_string(&height),
    );

    // Unit grid over the bounding box.
    svg.push_str("<g stroke=\"#bbbbbb\" stroke-width=\"0.02\">\n");
    let x_top = to_decimal_string(&-&(&max_y + &margin));
    let x_bot = to_decimal_string(&-&(&min_y - &margin));
    let mut gx = ceil_int(&min_x);
    while Dyadic::from(gx.clone()) <= max_x {
        let x = gx.to_string();
        let _ = writeln!(
            svg,
            "<line x1=\"{x}\" y1=\"{x_top}\" x2=\"{x}\" y2=\"{x_bot}\"/>"
        );
        gx += 1;
    }
    let y_left = to_decimal_string(&(&min_x - &margin));
    let y_right = to_decimal_string(&(&max_x + &margin));
    let mut gy = ceil_int(&min_y);
    while Dyadic::from(gy.clone()) <= max_y {
        let y = (-gy.clone()).to_string();
        let _ = writeln!(
            svg,
            "<line x1=\"{y_left}\" y1=\"{y}\" x2=\"{y_right}\" y2=\"{y}\"/>"
        );
        gy += 1;
    }
    svg.push_str("</g>\n");

    // Triangle outline.
    let corners: Vec<String> = tri
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = screen(v);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        svg,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>",
        corners.join(" ")
    );

    // One marker per grid point, in sorted order.
    let radius = to_decimal_string(&Dyadic::pow2(-(depth as i64) - 2));
    for p in &points {
        let (cx, cy) = screen(p);
        let _ = writeln!(
            svg,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{radius}\" fill=\"#1f3d99\"/>"
        );
    }
    svg.push_str("</svg>");
    Ok(svg)
}

fn ceil_int(x: &Dyadic) -> BigInt {
    let floored = if x.exponent() >= 0 || x.is_zero() {
        x.to_integer().expect("integral")
    } else {
        x.numerator() >> (-x.exponent()) as u64
    };
    if &Dyadic::from(floored.clone()) == x {
        floored
    } else {
        floored + 1
    }
}

//! Command-line front end: argument parsing, dispatch and deterministic
//! text output. All literals use the grammars of the core crate; booleans
//! print as `true`/`false` with exit code 0, domain errors exit 1 and
//! parse errors exit 2.

mod render;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dytri_core::{
    closure, default_step_budget, encode, encode_all, enumerate_points, generates_interval,
    generates_triangle, interval_type, isomorphic, maps_vertices_exactly, normalize_pointed,
    pointed_isomorphic, side_type, AffineMap2, Dyadic, Error, HatParams, Triangle, Vec2,
};

pub use render::render_svg;

#[derive(Parser)]
#[command(
    name = "dytri",
    version,
    about = "Exact classification toolkit for dyadic triangles"
)]
pub struct Cli {
    /// Write the output to FILE instead of stdout.
    #[arg(short, long, global = true, value_name = "FILE")]
    pub output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Encoding triple of a pointed triangle.
    Encode {
        /// Triangle literal `(x,y);(x,y);(x,y)` or hat literal `T{i,j,m,n}`.
        #[arg(long)]
        triangle: String,
        /// Pointed vertex.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        vertex: u8,
    },
    /// All six encoding triples (three vertices, both orientations).
    EncodeAll {
        #[arg(long)]
        triangle: String,
    },
    /// Normal-position hat of a pointed triangle, with the witness trace.
    Normalize {
        #[arg(long)]
        triangle: String,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        vertex: u8,
    },
    /// Isomorphism test (any vertices, either orientation) with witness.
    Iso {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
    },
    /// Pointed oriented isomorphism test with witness.
    PointedIso {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        /// Pointed vertex of the first triangle.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        vertex1: u8,
        /// Pointed vertex of the second triangle.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        vertex2: u8,
    },
    /// Cyclic triple of the side types of a triangle.
    BoundaryType {
        #[arg(long)]
        triangle: String,
    },
    /// Type of the dyadic interval [a, b].
    IntervalType { a: String, b: String },
    /// Type of the segment between two points.
    SideType { p: String, q: String },
    /// Bounded midpoint closure of scalar or point generators.
    Closure {
        /// Generators separated by `;`: scalars `0;1` or points `(0,0);(1,0)`.
        #[arg(long)]
        generators: String,
        #[arg(long)]
        steps: u32,
    },
    /// Check that generators reach every grid point of a region.
    Generates {
        #[arg(long)]
        generators: String,
        /// Triangle region (triangle or hat literal).
        #[arg(long)]
        triangle: Option<String>,
        /// Interval region `a;b`.
        #[arg(long)]
        interval: Option<String>,
        /// Grid depth: targets have denominator exponent at most DEPTH.
        #[arg(long)]
        depth: u32,
        /// Closure step budget (default 2 * depth + 2).
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Grid points of a triangle at the given depth, sorted.
    Enumerate {
        #[arg(long)]
        triangle: String,
        #[arg(long)]
        depth: u32,
    },
    /// Check a witness map: must be invertible and carry the vertex set of
    /// t1 exactly onto the vertex set of t2.
    Verify {
        /// Map literal `[[a,b],[c,d]]+(tx,ty)`.
        #[arg(long)]
        map: String,
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
    },
    /// Deterministic SVG of a triangle and its grid points.
    Render {
        #[arg(long)]
        triangle: String,
        #[arg(long, default_value_t = 0)]
        depth: u32,
    },
}

/// Failure modes mapped to exit codes: parse errors exit 2, domain errors
/// exit 1.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Parse(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) | CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => CliError::Parse(p.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<dytri_core::ParseError> for CliError {
    fn from(e: dytri_core::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

/// A triangle argument: triangle literal or hat literal.
fn triangle_arg(s: &str) -> Result<Triangle, CliError> {
    let t = s.trim();
    if t.starts_with("T{") {
        Ok(t.parse::<HatParams>()?.to_triangle())
    } else {
        Ok(t.parse::<Triangle>()?)
    }
}

fn scalar_list(s: &str) -> Result<Vec<Dyadic>, CliError> {
    s.split(';')
        .map(|part| part.trim().parse::<Dyadic>().map_err(CliError::from))
        .collect()
}

fn point_list(s: &str) -> Result<Vec<Vec2>, CliError> {
    s.split(';')
        .map(|part| part.trim().parse::<Vec2>().map_err(CliError::from))
        .collect()
}

fn bool_with_witness(witness: Option<AffineMap2>) -> String {
    match witness {
        Some(map) => format!("true\n{map}"),
        None => "false".to_string(),
    }
}

/// Executes a command and returns its full output text (no trailing
/// newline). Deterministic: equal inputs give byte-identical output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Encode { triangle, vertex } => {
            let t = triangle_arg(triangle)?;
            Ok(encode(&t, *vertex as usize)?.to_string())
        }
        Command::EncodeAll { triangle } => {
            let t = triangle_arg(triangle)?;
            let triples = encode_all(&t)?;
            Ok(triples
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("\n"))
        }
        Command::Normalize { triangle, vertex } => {
            let t = triangle_arg(triangle)?;
            let (hat, trace) = normalize_pointed(&t, *vertex as usize)?;
            let mut out = hat.to_string();
            for step in trace.steps() {
                out.push_str(&format!("\n{}: {}", step.label, step.map));
            }
            Ok(out)
        }
        Command::Iso { t1, t2 } => {
            let a = triangle_arg(t1)?;
            let b = triangle_arg(t2)?;
            Ok(bool_with_witness(isomorphic(&a, &b)?))
        }
        Command::PointedIso {
            t1,
            t2,
            vertex1,
            vertex2,
        } => {
            let a = triangle_arg(t1)?;
            let b = triangle_arg(t2)?;
            Ok(bool_with_witness(pointed_isomorphic(
                &a,
                *vertex1 as usize,
                &b,
                *vertex2 as usize,
            )?))
        }
        Command::BoundaryType { triangle } => {
            let t = triangle_arg(triangle)?;
            Ok(t.boundary_type()?.to_string())
        }
        Command::IntervalType { a, b } => {
            let a: Dyadic = a.parse()?;
            let b: Dyadic = b.parse()?;
            Ok(interval_type(&a, &b)?.to_string())
        }
        Command::SideType { p, q } => {
            let p: Vec2 = p.parse()?;
            let q: Vec2 = q.parse()?;
            Ok(side_type(&p, &q)?.to_string())
        }
        Command::Closure { generators, steps } => {
            if generators.trim_start().starts_with('(') {
                let gens = point_list(generators)?;
                let result = closure(&gens, *steps);
                Ok(join_lines(result.points.iter()))
            } else {
                let gens = scalar_list(generators)?;
                let result = closure(&gens, *steps);
                Ok(join_lines(result.points.iter()))
            }
        }
        Command::Generates {
            generators,
            triangle,
            interval,
            depth,
            budget,
        } => {
            let budget = budget.unwrap_or_else(|| default_step_budget(*depth));
            match (triangle, interval) {
                (Some(region), None) => {
                    let region = triangle_arg(region)?;
                    let gens = point_list(generators)?;
                    let result = generates_triangle(&gens, &region, *depth, budget)?;
                    Ok(generates_output(result.holds, result.missing, budget))
                }
                (None, Some(range)) => {
                    let (lo, hi) = range.split_once(';').ok_or_else(|| {
                        CliError::Parse(format!(
                            "parse error: expected interval literal a;b, got {range:?}"
                        ))
                    })?;
                    let lo: Dyadic = lo.parse()?;
                    let hi: Dyadic = hi.parse()?;
                    let gens = scalar_list(generators)?;
                    let result = generates_interval(&gens, &lo, &hi, *depth, budget)?;
                    Ok(generates_output(result.holds, result.missing, budget))
                }
                _ => Err(CliError::Parse(
                    "parse error: exactly one of --triangle or --interval is required".to_string(),
                )),
            }
        }
        Command::Enumerate { triangle, depth } => {
            let t = triangle_arg(triangle)?;
            Ok(join_lines(enumerate_points(&t, *depth)?.iter()))
        }
        Command::Verify { map, t1, t2 } => {
            let map: AffineMap2 = map.parse()?;
            let a = triangle_arg(t1)?;
            let b = triangle_arg(t2)?;
            if a.is_degenerate() || b.is_degenerate() {
                return Err(CliError::Domain(Error::DegenerateTriangle.to_string()));
            }
            if !map.is_invertible() {
                return Err(CliError::Domain(Error::NonInvertible.to_string()));
            }
            Ok(if maps_vertices_exactly(&map, &a, &b) {
                "true".to_string()
            } else {
                "false".to_string()
            })
        }
        Command::Render { triangle, depth } => {
            let t = triangle_arg(triangle)?;
            Ok(render_svg(&t, *depth)?)
        }
    }
}

fn generates_output<T: fmt::Display>(holds: bool, missing: Option<T>, budget: u32) -> String {
    if holds {
        "true".to_string()
    } else {
        let missing = missing.expect("missing point accompanies a negative answer");
        format!("false\nmissing: {missing} (budget {budget})")
    }
}

fn join_lines<T: fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items
        .map(|item| item.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

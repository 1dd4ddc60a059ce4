//! Deterministic SVG rendering of scenes. All layout math runs on
//! exact rationals over decimal midpoints taken at the requested
//! precision, and every emitted number is formatted with a fixed
//! digit count, so the same scene and options always produce the same
//! bytes. The y axis is flipped to screen orientation.

use std::cmp::{max, min};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use trammel_core::decimal::{digits_for_bits, format_fixed};
use trammel_core::geoscript::{Scene, SceneObject};

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub width_px: u32,
    /// Extra world-space border around the scene's bounding box, as a
    /// fraction of its larger span. Must lie in [0, 1/2).
    pub margin_fraction: BigRational,
    pub precision_bits: u32,
    pub label_points: bool,
    /// Point-name pairs drawn as emphasized segments.
    pub highlight_edges: Vec<(String, String)>,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions {
            width_px: 800,
            margin_fraction: BigRational::new(BigInt::from(1), BigInt::from(10)),
            precision_bits: 60,
            label_points: true,
            highlight_edges: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RenderError {
    EmptyScene,
    InvalidOptions(String),
    UnknownPoint(String),
}

impl std::fmt::Display for RenderError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RenderError::EmptyScene => f.write_str("nothing to render: the scene is empty"),
            RenderError::InvalidOptions(msg) => write!(f, "invalid render options: {msg}"),
            RenderError::UnknownPoint(name) => {
                write!(f, "highlight names a point the scene does not have: '{name}'")
            }
        }
    }
}

impl std::error::Error for RenderError {}

fn validate(options: &RenderOptions) -> Result<(), RenderError> {
    if options.width_px < 64 {
        return Err(RenderError::InvalidOptions(format!(
            "width must be at least 64 pixels, got {}",
            options.width_px
        )));
    }
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    if options.margin_fraction.is_negative() || options.margin_fraction >= half {
        return Err(RenderError::InvalidOptions(format!(
            "margin fraction must lie in [0, 1/2), got {}",
            options.margin_fraction
        )));
    }
    if options.precision_bits < 16 {
        return Err(RenderError::InvalidOptions(format!(
            "precision must be at least 16 bits, got {}",
            options.precision_bits
        )));
    }
    Ok(())
}

struct WorldPoint {
    name: String,
    x: BigRational,
    y: BigRational,
}

struct WorldCircle {
    cx: BigRational,
    cy: BigRational,
    r: BigRational,
}

struct WorldLine {
    px: BigRational,
    py: BigRational,
    qx: BigRational,
    qy: BigRational,
}

/// Clips the infinite line through (px,py)-(qx,qy) to an axis-aligned
/// box, returning the visible segment's endpoints, if any.
#[allow(clippy::too_many_arguments)]
fn clip_line_to_box(
    px: &BigRational,
    py: &BigRational,
    qx: &BigRational,
    qy: &BigRational,
    min_x: &BigRational,
    max_x: &BigRational,
    min_y: &BigRational,
    max_y: &BigRational,
) -> Option<((BigRational, BigRational), (BigRational, BigRational))> {
    let dx = qx - px;
    let dy = qy - py;
    if dx.is_zero() && dy.is_zero() {
        return None;
    }
    let mut t_enter: Option<BigRational> = None;
    let mut t_exit: Option<BigRational> = None;
    for (d, start, lo, hi) in [(&dx, px, min_x, max_x), (&dy, py, min_y, max_y)] {
        if d.is_zero() {
            if start < lo || start > hi {
                return None;
            }
            continue;
        }
        let mut ta = (lo - start) / d;
        let mut tb = (hi - start) / d;
        if ta > tb {
            std::mem::swap(&mut ta, &mut tb);
        }
        t_enter = Some(match t_enter {
            None => ta,
            Some(t) => max(t, ta),
        });
        t_exit = Some(match t_exit {
            None => tb,
            Some(t) => min(t, tb),
        });
    }
    let t0 = t_enter.expect("some direction component is nonzero");
    let t1 = t_exit.expect("some direction component is nonzero");
    if t0 > t1 {
        return None;
    }
    let a = (px + &t0 * &dx, py + &t0 * &dy);
    let b = (px + &t1 * &dx, py + &t1 * &dy);
    Some((a, b))
}

/// Renders the scene as a standalone SVG 1.1 document: circles and
/// clipped lines in a neutral stroke, highlighted edges emphasized,
/// every point as a labeled dot.
pub fn render_svg(scene: &Scene, options: &RenderOptions) -> Result<String, RenderError> {
    validate(options)?;
    let bits = options.precision_bits;
    let digits = digits_for_bits(bits);
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));

    let mut points = Vec::new();
    let mut circles = Vec::new();
    let mut lines = Vec::new();
    for name in scene.names() {
        match scene.object(name).expect("listed names are bound") {
            SceneObject::Point(p) => points.push(WorldPoint {
                name: name.clone(),
                x: p.x.to_decimal(bits).midpoint(),
                y: p.y.to_decimal(bits).midpoint(),
            }),
            SceneObject::Line { geom, .. } => lines.push(WorldLine {
                px: geom.p.x.to_decimal(bits).midpoint(),
                py: geom.p.y.to_decimal(bits).midpoint(),
                qx: geom.q.x.to_decimal(bits).midpoint(),
                qy: geom.q.y.to_decimal(bits).midpoint(),
            }),
            SceneObject::CircleThrough { geom, .. } | SceneObject::CircleRadius { geom, .. } => {
                let radius = geom
                    .radius_sq
                    .sqrt()
                    .expect("squared radii are positive")
                    .to_decimal(bits)
                    .midpoint();
                circles.push(WorldCircle {
                    cx: geom.center.x.to_decimal(bits).midpoint(),
                    cy: geom.center.y.to_decimal(bits).midpoint(),
                    r: radius,
                });
            }
        }
    }
    if points.is_empty() && circles.is_empty() && lines.is_empty() {
        return Err(RenderError::EmptyScene);
    }

    let mut xs: Vec<BigRational> = Vec::new();
    let mut ys: Vec<BigRational> = Vec::new();
    for p in &points {
        xs.push(p.x.clone());
        ys.push(p.y.clone());
    }
    for c in &circles {
        xs.push(&c.cx - &c.r);
        xs.push(&c.cx + &c.r);
        ys.push(&c.cy - &c.r);
        ys.push(&c.cy + &c.r);
    }
    let mut min_x = xs.iter().min().expect("bounds are nonempty").clone();
    let mut max_x = xs.iter().max().expect("bounds are nonempty").clone();
    let mut min_y = ys.iter().min().expect("bounds are nonempty").clone();
    let mut max_y = ys.iter().max().expect("bounds are nonempty").clone();
    let half = rat(1, 2);
    if min_x == max_x {
        min_x -= &half;
        max_x += &half;
    }
    if min_y == max_y {
        min_y -= &half;
        max_y += &half;
    }
    let span = max(&max_x - &min_x, &max_y - &min_y);
    let pad = &options.margin_fraction * &span;
    min_x -= &pad;
    max_x += &pad;
    min_y -= &pad;
    max_y += &pad;
    let span_x = &max_x - &min_x;
    let span_y = &max_y - &min_y;

    let width = BigRational::from_integer(BigInt::from(options.width_px));
    let scale = &width / &span_x;
    let height_exact = &span_y * &scale;
    let height = height_exact.ceil().to_integer();

    let to_px_x = |x: &BigRational| (x - &min_x) * &scale;
    let to_px_y = |y: &BigRational| (&max_y - y) * &scale;
    let fmt = |v: &BigRational| format_fixed(v, digits);

    let mut svg = String::new();
    let w = options.width_px;
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{height}\" viewBox=\"0 0 {w} {height}\">"
    );
    let _ = writeln!(svg, "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{height}\" fill=\"#ffffff\"/>");

    let _ = writeln!(svg, "<g fill=\"none\" stroke=\"#777777\" stroke-width=\"1\">");
    for c in &circles {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            fmt(&to_px_x(&c.cx)),
            fmt(&to_px_y(&c.cy)),
            fmt(&(&c.r * &scale))
        );
    }
    for l in &lines {
        if let Some(((ax, ay), (bx, by))) =
            clip_line_to_box(&l.px, &l.py, &l.qx, &l.qy, &min_x, &max_x, &min_y, &max_y)
        {
            let _ = writeln!(
                svg,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt(&to_px_x(&ax)),
                fmt(&to_px_y(&ay)),
                fmt(&to_px_x(&bx)),
                fmt(&to_px_y(&by))
            );
        }
    }
    let _ = writeln!(svg, "</g>");

    if !options.highlight_edges.is_empty() {
        let _ = writeln!(
            svg,
            "<g stroke=\"#cc2222\" stroke-width=\"2.5\" stroke-linecap=\"round\">"
        );
        for (p_name, q_name) in &options.highlight_edges {
            let p = scene
                .point(p_name)
                .ok_or_else(|| RenderError::UnknownPoint(p_name.clone()))?;
            let q = scene
                .point(q_name)
                .ok_or_else(|| RenderError::UnknownPoint(q_name.clone()))?;
            let _ = writeln!(
                svg,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt(&to_px_x(&p.x.to_decimal(bits).midpoint())),
                fmt(&to_px_y(&p.y.to_decimal(bits).midpoint())),
                fmt(&to_px_x(&q.x.to_decimal(bits).midpoint())),
                fmt(&to_px_y(&q.y.to_decimal(bits).midpoint()))
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    let _ = writeln!(svg, "<g fill=\"#111111\">");
    for p in &points {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"3\"/>",
            fmt(&to_px_x(&p.x)),
            fmt(&to_px_y(&p.y))
        );
    }
    let _ = writeln!(svg, "</g>");

    if options.label_points {
        let _ = writeln!(
            svg,
            "<g font-family=\"monospace\" font-size=\"12\" fill=\"#111111\">"
        );
        let offset = rat(5, 1);
        for p in &points {
            let _ = writeln!(
                svg,
                "<text x=\"{}\" y=\"{}\">{}</text>",
                fmt(&(to_px_x(&p.x) + &offset)),
                fmt(&(to_px_y(&p.y) - &offset)),
                p.name
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

//! Exact plane geometry over constructible coordinates.
//!
//! Points carry [`ConstructibleNumber`] coordinates; lines are stored by
//! their two defining points (preserving an orientation) and circles by
//! center and squared radius. All predicates are exact sign tests and all
//! intersections return points that satisfy their defining equations with
//! exactly zero residual.
//!
//! Where an intersection has two solutions the result order is
//! deterministic:
//!
//! - line/circle: ascending parameter along the line's `p -> q` direction;
//! - circle/circle: ascending parameter along the radical line, oriented as
//!   the +90 degree rotation of the `a.center -> b.center` direction.
//!
//! All inputs to one operation must share a tower; mixing towers is a
//! programming error and panics (as the underlying arithmetic does).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactfield::ConstructibleNumber;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeomError {
    /// A line needs two distinct defining points.
    DegenerateLine,
    /// A circle needs a nonzero radius.
    ZeroRadius,
    /// Coincident lines meet everywhere; there is no single intersection.
    CoincidentLines,
    /// Coincident circles meet everywhere; there is no finite intersection.
    CoincidentCircles,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::DegenerateLine => write!(f, "line through coincident points"),
            GeomError::ZeroRadius => write!(f, "circle with zero radius"),
            GeomError::CoincidentLines => write!(f, "lines are coincident"),
            GeomError::CoincidentCircles => write!(f, "circles are coincident"),
        }
    }
}

impl core::error::Error for GeomError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: ConstructibleNumber,
    pub y: ConstructibleNumber,
}

impl Point {
    pub fn new(x: ConstructibleNumber, y: ConstructibleNumber) -> Point {
        Point { x, y }
    }

    /// Exact squared distance `(px - qx)^2 + (py - qy)^2`.
    pub fn dist_sq(&self, other: &Point) -> ConstructibleNumber {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        dx.square() + dy.square()
    }
}

/// Exact sign of the cross product `(q - p) x (r - p)`: `+1` when `r` lies
/// left of the directed line `p -> q`, `-1` when right, `0` when collinear.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    cross.sign()
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    orientation(p, q, r) == 0
}

/// A line through two distinct points, oriented `p -> q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub p: Point,
    pub q: Point,
}

impl Line {
    pub fn through(p: Point, q: Point) -> Result<Line, GeomError> {
        if p == q {
            return Err(GeomError::DegenerateLine);
        }
        Ok(Line { p, q })
    }

    pub fn contains(&self, r: &Point) -> bool {
        collinear(&self.p, &self.q, r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub center: Point,
    pub radius_sq: ConstructibleNumber,
}

impl Circle {
    /// Circle around `center` through `on`.
    pub fn center_through(center: Point, on: &Point) -> Result<Circle, GeomError> {
        let radius_sq = center.dist_sq(on);
        if radius_sq.is_zero() {
            return Err(GeomError::ZeroRadius);
        }
        Ok(Circle { center, radius_sq })
    }

    /// Circle around `center` whose radius is the distance from `p` to `q`
    /// (the rigid compass, transferring a length).
    pub fn center_radius_from(center: Point, p: &Point, q: &Point) -> Result<Circle, GeomError> {
        let radius_sq = p.dist_sq(q);
        if radius_sq.is_zero() {
            return Err(GeomError::ZeroRadius);
        }
        Ok(Circle { center, radius_sq })
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist_sq(p) == self.radius_sq
    }
}

/// The unique intersection of two lines, `None` when they are parallel,
/// an error when they are coincident.
pub fn intersect_lines(a: &Line, b: &Line) -> Result<Option<Point>, GeomError> {
    let d1x = &a.q.x - &a.p.x;
    let d1y = &a.q.y - &a.p.y;
    let d2x = &b.q.x - &b.p.x;
    let d2y = &b.q.y - &b.p.y;
    let denom = &d1x * &d2y - &d1y * &d2x;
    if denom.is_zero() {
        if collinear(&a.p, &a.q, &b.p) {
            return Err(GeomError::CoincidentLines);
        }
        return Ok(None);
    }
    let wx = &b.p.x - &a.p.x;
    let wy = &b.p.y - &a.p.y;
    let t = (&wx * &d2y - &wy * &d2x) / &denom;
    Ok(Some(Point::new(&a.p.x + &t * &d1x, &a.p.y + &t * &d1y)))
}

/// Intersection of a line and a circle: zero, one (tangent, discriminant
/// exactly zero) or two points ordered by ascending parameter along the
/// line's orientation.
pub fn intersect_line_circle(l: &Line, c: &Circle) -> Vec<Point> {
    let dx = &l.q.x - &l.p.x;
    let dy = &l.q.y - &l.p.y;
    let fx = &l.p.x - &c.center.x;
    let fy = &l.p.y - &c.center.y;
    let a = dx.square() + dy.square();
    let b = (&dx * &fx + &dy * &fy).double();
    let cc = fx.square() + fy.square() - &c.radius_sq;
    let disc = b.square() - (&a * &cc).double().double();
    let at = |t: &ConstructibleNumber| Point::new(&l.p.x + t * &dx, &l.p.y + t * &dy);
    match disc.sign() {
        -1 => vec![],
        0 => {
            let t = -&b / a.double();
            vec![at(&t)]
        }
        _ => {
            let root = disc.sqrt().expect("discriminant is positive");
            let two_a = a.double();
            let t1 = (-&b - &root) / &two_a;
            let t2 = (-&b + &root) / &two_a;
            vec![at(&t1), at(&t2)]
        }
    }
}

/// Intersection of two distinct circles: zero, one (tangent) or two points,
/// computed through the radical line and ordered along its canonical
/// orientation (the +90 degree rotation of `a.center -> b.center`).
pub fn intersect_circles(a: &Circle, b: &Circle) -> Result<Vec<Point>, GeomError> {
    if a.center == b.center {
        if a.radius_sq == b.radius_sq {
            return Err(GeomError::CoincidentCircles);
        }
        return Ok(vec![]);
    }
    let dx = &b.center.x - &a.center.x;
    let dy = &b.center.y - &a.center.y;
    let e = dx.square() + dy.square();
    let u = (&e + &a.radius_sq - &b.radius_sq) / e.double();
    let fx = &a.center.x + &u * &dx;
    let fy = &a.center.y + &u * &dy;
    let disc = &a.radius_sq / &e - u.square();
    match disc.sign() {
        -1 => Ok(vec![]),
        0 => Ok(vec![Point::new(fx, fy)]),
        _ => {
            let w = disc.sqrt().expect("discriminant is positive");
            let nx = -&dy;
            let ny = dx;
            let p1 = Point::new(&fx - &w * &nx, &fy - &w * &ny);
            let p2 = Point::new(&fx + &w * &nx, &fy + &w * &ny);
            Ok(vec![p1, p2])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Tower;
    use alloc::vec;

    fn pt(t: &Tower, x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(t.ratio(x.0, x.1), t.ratio(y.0, y.1))
    }

    fn ipt(t: &Tower, x: i64, y: i64) -> Point {
        Point::new(t.integer(x), t.integer(y))
    }

    #[test]
    fn dist_sq_examples() {
        let t = Tower::new();
        let h = ipt(&t, 0, 1);
        let g = pt(&t, (1, 2), (0, 1));
        assert_eq!(h.dist_sq(&g), t.ratio(5, 4));
        assert!(h.dist_sq(&h).is_zero());
        assert_eq!(h.dist_sq(&g), g.dist_sq(&h));
    }

    #[test]
    fn orientation_examples() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        let a = ipt(&t, 1, 0);
        assert_eq!(orientation(&o, &a, &ipt(&t, 0, 1)), 1);
        assert_eq!(orientation(&o, &a, &ipt(&t, 2, 0)), 0);
        assert_eq!(orientation(&o, &a, &ipt(&t, 1, -3)), -1);
        assert!(collinear(&o, &a, &ipt(&t, -7, 0)));
    }

    #[test]
    fn degenerate_constructors() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        assert_eq!(Line::through(o.clone(), o.clone()), Err(GeomError::DegenerateLine));
        assert_eq!(Circle::center_through(o.clone(), &o), Err(GeomError::ZeroRadius));
        let a = ipt(&t, 1, 0);
        assert_eq!(Circle::center_radius_from(a.clone(), &o, &o), Err(GeomError::ZeroRadius));
    }

    #[test]
    fn line_intersections() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        let a = ipt(&t, 1, 0);
        let s3 = t.integer(3).sqrt().unwrap();
        let e = Point::new(t.ratio(1, 2), t.ratio(1, 2) * &s3);
        let f = Point::new(t.ratio(1, 2), t.ratio(-1, 2) * &s3);
        let ef = Line::through(e, f).unwrap();
        let oa = Line::through(o.clone(), a.clone()).unwrap();
        let g = intersect_lines(&ef, &oa).unwrap().unwrap();
        assert_eq!(g, pt(&t, (1, 2), (0, 1)));

        let y0 = Line::through(o.clone(), a.clone()).unwrap();
        let y1 = Line::through(ipt(&t, 0, 1), ipt(&t, 1, 1)).unwrap();
        assert_eq!(intersect_lines(&y0, &y1), Ok(None));

        let oa2 = Line::through(ipt(&t, 2, 0), ipt(&t, 5, 0)).unwrap();
        assert_eq!(intersect_lines(&oa, &oa2), Err(GeomError::CoincidentLines));
    }

    #[test]
    fn line_circle_order_and_tangency() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        let a = ipt(&t, 1, 0);
        let x = Circle::center_through(o.clone(), &a).unwrap();
        let oa = Line::through(o.clone(), a.clone()).unwrap();
        let pts = intersect_line_circle(&oa, &x);
        assert_eq!(pts, vec![ipt(&t, -1, 0), ipt(&t, 1, 0)]);
        for p in &pts {
            assert!(x.contains(p));
            assert!(oa.contains(p));
        }

        let top = Line::through(ipt(&t, -2, 1), ipt(&t, 3, 1)).unwrap();
        assert_eq!(intersect_line_circle(&top, &x), vec![ipt(&t, 0, 1)]);

        let miss = Line::through(ipt(&t, -2, 2), ipt(&t, 3, 2)).unwrap();
        assert!(intersect_line_circle(&miss, &x).is_empty());
    }

    #[test]
    fn decagon_length_from_g_circle() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        let g = pt(&t, (1, 2), (0, 1));
        let h = ipt(&t, 0, 1);
        let gj = Circle::center_through(g.clone(), &o).unwrap();
        assert_eq!(gj.radius_sq, t.ratio(1, 4));
        let hg = Line::through(h.clone(), g.clone()).unwrap();
        let pts = intersect_line_circle(&hg, &gj);
        assert_eq!(pts.len(), 2);
        let j = if h.dist_sq(&pts[0]) < h.dist_sq(&pts[1]) { &pts[0] } else { &pts[1] };
        let s5 = t.integer(5).sqrt().unwrap();
        let expected = (t.integer(3) - &s5) / t.integer(2);
        assert_eq!(h.dist_sq(j), expected);
    }

    #[test]
    fn circle_circle_examples() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        let a = ipt(&t, 1, 0);
        let b = ipt(&t, -1, 0);
        let s3 = t.integer(3).sqrt().unwrap();

        let ca = Circle::center_radius_from(a.clone(), &a, &b).unwrap();
        let cb = Circle::center_radius_from(b.clone(), &a, &b).unwrap();
        let cd = intersect_circles(&ca, &cb).unwrap();
        assert_eq!(cd, vec![Point::new(t.zero(), s3.clone()), Point::new(t.zero(), -&s3)]);

        let x = Circle::center_through(o.clone(), &a).unwrap();
        let ae = Circle::center_through(a.clone(), &o).unwrap();
        let ef = intersect_circles(&ae, &x).unwrap();
        assert_eq!(ef.len(), 2);
        assert_eq!(ef[0], Point::new(t.ratio(1, 2), t.ratio(1, 2) * &s3));
        assert_eq!(ef[1], Point::new(t.ratio(1, 2), t.ratio(-1, 2) * &s3));
        for p in &ef {
            assert!(x.contains(p));
            assert!(ae.contains(p));
        }

        let c1 = Circle::center_through(o.clone(), &a).unwrap();
        let c2 = Circle::center_through(ipt(&t, 2, 0), &a).unwrap();
        assert_eq!(intersect_circles(&c1, &c2).unwrap(), vec![a.clone()]);

        let far = Circle::center_through(ipt(&t, 10, 0), &ipt(&t, 9, 0)).unwrap();
        assert!(intersect_circles(&x, &far).unwrap().is_empty());

        let inner = Circle::center_through(o.clone(), &pt(&t, (1, 4), (0, 1))).unwrap();
        assert!(intersect_circles(&x, &inner).unwrap().is_empty());
        assert!(intersect_circles(&x, &Circle::center_through(o.clone(), &a).unwrap()).is_err());
    }

    #[test]
    fn circle_circle_symmetry() {
        let t = Tower::new();
        let a = ipt(&t, 1, 0);
        let b = ipt(&t, -1, 0);
        let ca = Circle::center_radius_from(a.clone(), &a, &b).unwrap();
        let cb = Circle::center_radius_from(b.clone(), &a, &b).unwrap();
        let fwd = intersect_circles(&ca, &cb).unwrap();
        let rev = intersect_circles(&cb, &ca).unwrap();
        assert_eq!(fwd.len(), 2);
        assert!(rev.contains(&fwd[0]) && rev.contains(&fwd[1]));
        assert_eq!(fwd[0], rev[1]);
        assert_eq!(fwd[1], rev[0]);
    }

    #[test]
    fn tangency_is_knife_edge() {
        let t = Tower::new();
        let o = ipt(&t, 0, 0);
        let x = Circle::center_through(o.clone(), &ipt(&t, 1, 0)).unwrap();
        let touching = Circle {
            center: ipt(&t, 2, 0),
            radius_sq: t.integer(1),
        };
        assert_eq!(intersect_circles(&x, &touching).unwrap().len(), 1);
        let shrunk = Circle {
            center: ipt(&t, 2, 0),
            radius_sq: t.integer(1) - t.ratio(1, 1000),
        };
        assert!(intersect_circles(&x, &shrunk).unwrap().is_empty());
        let grown = Circle {
            center: ipt(&t, 2, 0),
            radius_sq: t.integer(1) + t.ratio(1, 1000000),
        };
        assert_eq!(intersect_circles(&x, &grown).unwrap().len(), 2);

        let top = Line::through(ipt(&t, -1, 1), ipt(&t, 4, 1)).unwrap();
        assert_eq!(intersect_line_circle(&top, &x).len(), 1);
        let nudged = Circle { center: o.clone(), radius_sq: t.integer(1) + t.ratio(1, 999983) };
        assert_eq!(intersect_line_circle(&top, &nudged).len(), 2);
    }
}

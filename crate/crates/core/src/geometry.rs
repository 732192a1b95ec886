//! Real-valued 2D primitives shared by every hit test.
//!
//! Screen convention: `+x` right, `+y` down, units are pixels. Integer device
//! coordinates are converted to `f64` at the UI boundary so that sub-pixel
//! drags accumulate without rounding.
//!
//! All containment tests are boundary inclusive.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// A location on screen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A translation vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Delta {
    pub dx: f64,
    pub dy: f64,
}

/// Axis-aligned rectangle spanned by `min` (top-left) and `max` (bottom-right).
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rect {
    pub min: Point,
    pub max: Point,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Rejects NaN and infinities.
    pub fn validate(self) -> Result<Self, GeometryError> {
        if self.x.is_finite() && self.y.is_finite() {
            Ok(self)
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn translate(self, d: Delta) -> Point {
        Point::new(self.x + d.dx, self.y + d.dy)
    }
}

impl Delta {
    pub const ZERO: Delta = Delta { dx: 0.0, dy: 0.0 };

    pub const fn new(dx: f64, dy: f64) -> Self {
        Self { dx, dy }
    }

    pub fn validate(self) -> Result<Self, GeometryError> {
        if self.dx.is_finite() && self.dy.is_finite() {
            Ok(self)
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn length(self) -> f64 {
        self.dx.hypot(self.dy)
    }
}

impl Sub for Point {
    type Output = Delta;

    fn sub(self, rhs: Point) -> Delta {
        Delta::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Delta> for Point {
    type Output = Point;

    fn add(self, rhs: Delta) -> Point {
        self.translate(rhs)
    }
}

impl Sub<Delta> for Point {
    type Output = Point;

    fn sub(self, rhs: Delta) -> Point {
        Point::new(self.x - rhs.dx, self.y - rhs.dy)
    }
}

impl Add for Delta {
    type Output = Delta;

    fn add(self, rhs: Delta) -> Delta {
        Delta::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl Neg for Delta {
    type Output = Delta;

    fn neg(self) -> Delta {
        Delta::new(-self.dx, -self.dy)
    }
}

impl Rect {
    /// Builds a rectangle, requiring finite corners with `min <= max` per axis.
    pub fn new(min: Point, max: Point) -> Result<Self, GeometryError> {
        min.validate()?;
        max.validate()?;
        if min.x > max.x || min.y > max.y {
            return Err(GeometryError::InvertedRect);
        }
        Ok(Self { min, max })
    }

    pub fn from_xywh(x: f64, y: f64, w: f64, h: f64) -> Result<Self, GeometryError> {
        Self::new(Point::new(x, y), Point::new(x + w, y + h))
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn center(&self) -> Point {
        Point::new(
            (self.min.x + self.max.x) / 2.0,
            (self.min.y + self.max.y) / 2.0,
        )
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    /// Componentwise clamp of `p` into the rectangle.
    pub fn clamp(&self, p: Point) -> Point {
        Point::new(
            p.x.clamp(self.min.x, self.max.x),
            p.y.clamp(self.min.y, self.max.y),
        )
    }

    pub fn translate(&self, d: Delta) -> Rect {
        Rect {
            min: self.min.translate(d),
            max: self.max.translate(d),
        }
    }

    /// Grows every side outward by `by` (shrinks for negative values).
    pub fn inflate(&self, by: f64) -> Rect {
        Rect {
            min: Point::new(self.min.x - by, self.min.y - by),
            max: Point::new(self.max.x + by, self.max.y + by),
        }
    }

    /// Corners clockwise on screen from top-left.
    pub fn corners(&self) -> [Point; 4] {
        [
            self.min,
            Point::new(self.max.x, self.min.y),
            self.max,
            Point::new(self.min.x, self.max.y),
        ]
    }

    pub fn validate(self) -> Result<Self, GeometryError> {
        Rect::new(self.min, self.max)
    }
}

fn check_finite(points: &[Point]) -> Result<(), GeometryError> {
    points.iter().try_for_each(|p| p.validate().map(|_| ()))
}

/// Euclidean distance from `p` to the closed segment `ab`.
///
/// A degenerate segment (`a == b`) behaves as the single point `a`.
pub fn segment_distance(p: Point, a: Point, b: Point) -> Result<f64, GeometryError> {
    check_finite(&[p, a, b])?;
    Ok(segment_distance_unchecked(p, a, b))
}

pub(crate) fn segment_distance_unchecked(p: Point, a: Point, b: Point) -> f64 {
    // canonical endpoint order makes the result exactly symmetric
    let (a, b) = if (a.x, a.y) <= (b.x, b.y) {
        (a, b)
    } else {
        (b, a)
    };
    let ab = b - a;
    let len2 = ab.dx * ab.dx + ab.dy * ab.dy;
    if len2 == 0.0 {
        return p.distance(a);
    }
    let ap = p - a;
    let t = ((ap.dx * ab.dx + ap.dy * ab.dy) / len2).clamp(0.0, 1.0);
    p.distance(Point::new(a.x + t * ab.dx, a.y + t * ab.dy))
}

/// `|p - center| <= radius`.
pub fn disc_contains(center: Point, radius: f64, p: Point) -> Result<bool, GeometryError> {
    check_finite(&[center, p])?;
    if !radius.is_finite() {
        return Err(GeometryError::NonFinite);
    }
    if radius < 0.0 {
        return Err(GeometryError::NegativeExtent(radius));
    }
    Ok(p.distance(center) <= radius)
}

/// Even-odd containment for a simple polygon; points on an edge count as inside.
pub fn polygon_contains(vertices: &[Point], p: Point) -> Result<bool, GeometryError> {
    if vertices.len() < 3 {
        return Err(GeometryError::TooFewVertices(vertices.len()));
    }
    check_finite(vertices)?;
    p.validate()?;
    Ok(polygon_contains_unchecked(vertices, p))
}

pub(crate) fn polygon_contains_unchecked(vertices: &[Point], p: Point) -> bool {
    let n = vertices.len();
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if on_segment(p, a, b) {
            return true;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if p.x < x_cross {
                inside = !inside;
            }
        }
    }
    inside
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if cross != 0.0 {
        return false;
    }
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Twice the signed area (shoelace); positive when clockwise on screen.
pub fn signed_area2(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            a.x * b.y - b.x * a.y
        })
        .sum()
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(a, c, d))
        || (d2 == 0.0 && on_segment(b, c, d))
        || (d3 == 0.0 && on_segment(c, a, b))
        || (d4 == 0.0 && on_segment(d, a, b))
}

/// Checks that a polygon has at least three finite vertices, non-zero area,
/// and no two non-adjacent edges touching.
pub fn validate_simple_polygon(vertices: &[Point]) -> Result<(), GeometryError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeometryError::TooFewVertices(n));
    }
    check_finite(vertices)?;
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        if a == b {
            return Err(GeometryError::DegeneratePolygon);
        }
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let (c, d) = (vertices[j], vertices[(j + 1) % n]);
            if segments_intersect(a, b, c, d) {
                return Err(GeometryError::SelfIntersecting);
            }
        }
    }
    if signed_area2(vertices) == 0.0 {
        return Err(GeometryError::DegeneratePolygon);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn unit_square() -> Vec<Point> {
        vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]
    }

    #[test]
    fn segment_distance_examples() {
        let (a, b) = (p(0.0, 0.0), p(10.0, 0.0));
        assert_eq!(segment_distance(p(0.0, 0.0), a, b).unwrap(), 0.0);
        assert_eq!(segment_distance(p(5.0, 3.0), a, b).unwrap(), 3.0);
        assert_eq!(segment_distance(p(-4.0, 3.0), a, b).unwrap(), 5.0);
    }

    #[test]
    fn segment_distance_rejects_non_finite() {
        let err = segment_distance(p(f64::NAN, 0.0), p(0.0, 0.0), p(1.0, 0.0));
        assert_eq!(err, Err(GeometryError::NonFinite));
        let err = segment_distance(p(0.0, 0.0), p(f64::INFINITY, 0.0), p(1.0, 0.0));
        assert_eq!(err, Err(GeometryError::NonFinite));
    }

    #[test]
    fn disc_examples() {
        let c = p(0.0, 0.0);
        assert!(disc_contains(c, 5.0, p(3.0, 4.0)).unwrap());
        assert!(!disc_contains(c, 5.0, p(4.0, 4.0)).unwrap());
        assert!(disc_contains(c, 0.0, c).unwrap());
        assert_eq!(
            disc_contains(c, -1.0, c),
            Err(GeometryError::NegativeExtent(-1.0))
        );
    }

    #[test]
    fn polygon_examples() {
        let sq = unit_square();
        assert!(polygon_contains(&sq, p(0.5, 0.5)).unwrap());
        assert!(!polygon_contains(&sq, p(1.5, 0.5)).unwrap());
        assert!(polygon_contains(&sq, p(1.0, 0.5)).unwrap());
        assert!(polygon_contains(&sq, p(0.0, 0.0)).unwrap());
        assert_eq!(
            polygon_contains(&sq[..2], p(0.0, 0.0)),
            Err(GeometryError::TooFewVertices(2))
        );
    }

    #[test]
    fn concave_polygon() {
        // U shape, notch open at the top
        let u = vec![
            p(0.0, 0.0),
            p(1.0, 0.0),
            p(1.0, 2.0),
            p(2.0, 2.0),
            p(2.0, 0.0),
            p(3.0, 0.0),
            p(3.0, 3.0),
            p(0.0, 3.0),
        ];
        assert!(polygon_contains(&u, p(0.5, 1.0)).unwrap());
        assert!(!polygon_contains(&u, p(1.5, 1.0)).unwrap());
        assert!(polygon_contains(&u, p(1.5, 2.5)).unwrap());
    }

    #[test]
    fn simple_polygon_validation() {
        assert!(validate_simple_polygon(&unit_square()).is_ok());
        let bowtie = vec![p(0.0, 0.0), p(1.0, 1.0), p(1.0, 0.0), p(0.0, 1.0)];
        assert_eq!(
            validate_simple_polygon(&bowtie),
            Err(GeometryError::SelfIntersecting)
        );
        let flat = vec![p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)];
        assert_eq!(
            validate_simple_polygon(&flat),
            Err(GeometryError::DegeneratePolygon)
        );
    }

    #[test]
    fn rect_helpers() {
        let r = Rect::new(p(0.0, 0.0), p(200.0, 100.0)).unwrap();
        assert_eq!(
            r.inflate(6.0),
            Rect::new(p(-6.0, -6.0), p(206.0, 106.0)).unwrap()
        );
        assert_eq!(r.clamp(p(250.0, -3.0)), p(200.0, 0.0));
        assert_eq!(
            Rect::new(p(1.0, 0.0), p(0.0, 0.0)),
            Err(GeometryError::InvertedRect)
        );
    }

    fn coord() -> impl Strategy<Value = f64> {
        -1.0e3..1.0e3
    }

    fn point() -> impl Strategy<Value = Point> {
        (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn segment_distance_is_symmetric(q in point(), a in point(), b in point()) {
            let ab = segment_distance(q, a, b).unwrap();
            let ba = segment_distance(q, b, a).unwrap();
            prop_assert_eq!(ab, ba);
        }

        #[test]
        fn degenerate_segment_is_point_distance(q in point(), a in point()) {
            prop_assert_eq!(segment_distance(q, a, a).unwrap(), q.distance(a));
        }

        #[test]
        fn disc_matches_degenerate_segment(c in point(), r in 0.0..500.0f64, q in point()) {
            let by_disc = disc_contains(c, r, q).unwrap();
            let by_segment = segment_distance(q, c, c).unwrap() <= r;
            prop_assert_eq!(by_disc, by_segment);
        }

        #[test]
        fn segment_distance_bounded_by_endpoints(q in point(), a in point(), b in point()) {
            let d = segment_distance(q, a, b).unwrap();
            prop_assert!(d <= q.distance(a) + 1e-9);
            prop_assert!(d <= q.distance(b) + 1e-9);
        }
    }
}

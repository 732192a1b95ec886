//! 3D bar chart ("skyscrapers") under an orthographic view.
//!
//! World axes: `x`, `y` span the ground plane, `z` is up. The view is set by
//! an azimuth `theta` about `z` and an elevation `phi` in `[0, pi/2]`:
//!
//! ```text
//! u = origin.x + scale * (x cos theta - y sin theta)
//! v = origin.y - scale * ((x sin theta + y cos theta) sin phi + z cos phi)
//! ```
//!
//! Depth away from the viewer is `x sin theta + y cos theta`; towers are
//! painted farthest first so near ones cover far ones.
//!
//! The contour is the axis system: node 0 at the origin and nodes 1..=3 at
//! the ends of the x, y and z axes, joined to node 0 by thin strips. Dragging
//! node 0 moves the plot; dragging an axis end turns it (angle about node 0)
//! and zooms it (distance from node 0).

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use super::{default_half_width, default_node_radius, finite, non_negative, positive};
use crate::contour::{Contour, Freedom, NodeShape};
use crate::error::ShapeError;
use crate::geometry::{Delta, Point};
use crate::mover::Movable;

/// Below this screen distance from the origin node an axis end carries no
/// usable angle.
const RADIUS_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tower {
    pub x: f64,
    pub y: f64,
    pub height: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Skyscrapers {
    origin: Point,
    theta: f64,
    #[serde(deserialize_with = "stored_phi")]
    phi: f64,
    scale: f64,
    axis_len: f64,
    towers: Vec<Tower>,
    #[serde(default = "default_bar_half")]
    bar_half: f64,
    #[serde(default = "default_node_radius")]
    node_radius: f64,
    #[serde(default = "default_half_width")]
    half_width: f64,
}

/// Stored elevations are rounded to 9 significant digits, which can land
/// just outside `[0, pi/2]`; snap those back onto the bound.
fn stored_phi<'de, D: serde::Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    let phi = f64::deserialize(d)?;
    Ok(if phi > FRAC_PI_2 && phi <= FRAC_PI_2 + 1e-8 {
        FRAC_PI_2
    } else if (-1e-8..0.0).contains(&phi) {
        0.0
    } else {
        phi
    })
}

fn default_bar_half() -> f64 {
    0.35
}

/// Wraps an angle difference into `(-pi, pi]`.
fn wrap_angle(a: f64) -> f64 {
    let mut a = a % (2.0 * PI);
    if a > PI {
        a -= 2.0 * PI;
    } else if a <= -PI {
        a += 2.0 * PI;
    }
    a
}

/// `angle.sin_cos()`, exact at whole multiples of a quarter turn so that
/// axis-aligned views project without residue.
fn sin_cos(angle: f64) -> (f64, f64) {
    let quarters = angle / FRAC_PI_2;
    if quarters.fract() == 0.0 && quarters.abs() < 1e15 && quarters * FRAC_PI_2 == angle {
        match (quarters as i64).rem_euclid(4) {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        }
    } else {
        angle.sin_cos()
    }
}

/// Angle of `d` measured counter-clockwise as seen on screen.
fn screen_angle(d: Delta) -> f64 {
    (-d.dy).atan2(d.dx)
}

impl Skyscrapers {
    pub fn new(
        origin: Point,
        theta: f64,
        phi: f64,
        scale: f64,
        axis_len: f64,
        towers: Vec<Tower>,
    ) -> Result<Self, ShapeError> {
        let sky = Self {
            origin,
            theta,
            phi,
            scale,
            axis_len,
            towers,
            bar_half: default_bar_half(),
            node_radius: default_node_radius(),
            half_width: default_half_width(),
        };
        sky.validate()?;
        Ok(sky)
    }

    /// Towers at cell centres `(i + 0.5, j + 0.5)` of a height grid indexed
    /// `heights[i][j]`, with a default oblique view.
    pub fn grid(origin: Point, heights: &[Vec<f64>]) -> Result<Self, ShapeError> {
        let towers = heights
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, &h)| Tower {
                    x: i as f64 + 0.5,
                    y: j as f64 + 0.5,
                    height: h,
                })
            })
            .collect();
        let extent = heights
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .max(heights.len())
            .max(1) as f64;
        Self::new(origin, 0.6, 0.5, 30.0, extent + 1.0, towers)
    }

    pub fn with_axis_half_width(mut self, half_width: f64) -> Result<Self, ShapeError> {
        self.half_width = half_width;
        self.validate()?;
        Ok(self)
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn axis_len(&self) -> f64 {
        self.axis_len
    }

    pub fn towers(&self) -> &[Tower] {
        &self.towers
    }

    pub fn bar_half(&self) -> f64 {
        self.bar_half
    }

    pub fn set_view(&mut self, theta: f64, phi: f64) {
        self.theta = theta;
        self.phi = phi.clamp(0.0, FRAC_PI_2);
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        self.origin.validate()?;
        finite("theta", self.theta)?;
        if !(0.0..=FRAC_PI_2).contains(&self.phi) {
            return Err(ShapeError::Invalid(format!(
                "phi {} outside [0, pi/2]",
                self.phi
            )));
        }
        positive("scale", self.scale)?;
        positive("axis_len", self.axis_len)?;
        non_negative("bar_half", self.bar_half)?;
        non_negative("node_radius", self.node_radius)?;
        non_negative("half_width", self.half_width)?;
        for t in &self.towers {
            finite("tower.x", t.x)?;
            finite("tower.y", t.y)?;
            non_negative("tower.height", t.height)?;
        }
        Ok(())
    }

    /// Screen position of world point `(x, y, z)`.
    pub fn project(&self, x: f64, y: f64, z: f64) -> Point {
        let (sin_t, cos_t) = sin_cos(self.theta);
        let (sin_p, cos_p) = sin_cos(self.phi);
        Point::new(
            self.origin.x + self.scale * (x * cos_t - y * sin_t),
            self.origin.y - self.scale * ((x * sin_t + y * cos_t) * sin_p + z * cos_p),
        )
    }

    /// World anchors of the four contour nodes.
    fn anchors(&self) -> [(f64, f64, f64); 4] {
        let l = self.axis_len;
        [(0.0, 0.0, 0.0), (l, 0.0, 0.0), (0.0, l, 0.0), (0.0, 0.0, l)]
    }

    pub fn node_positions(&self) -> [Point; 4] {
        self.anchors().map(|(x, y, z)| self.project(x, y, z))
    }

    /// Distance from the viewer plane; larger is farther.
    pub fn depth(&self, tower: &Tower) -> f64 {
        let (sin_t, cos_t) = sin_cos(self.theta);
        tower.x * sin_t + tower.y * cos_t
    }

    /// Tower indices back to front; ties keep ascending index.
    pub fn paint_order(&self) -> Vec<usize> {
        let depths: Vec<f64> = self.towers.iter().map(|t| self.depth(t)).collect();
        let mut order: Vec<usize> = (0..self.towers.len()).collect();
        order.sort_by(|&a, &b| depths[b].total_cmp(&depths[a]).then(a.cmp(&b)));
        order
    }

    /// Reacts to node `node` being dragged to `to`.
    ///
    /// Node 0 moves the origin. For an axis end the change of its screen
    /// angle about node 0 turns the view (x/y ends rotate `theta`, the z end
    /// tilts `phi`, clamped to `[0, pi/2]`) and the ratio of its distances
    /// from node 0 multiplies `scale`. Drags starting or ending within
    /// `RADIUS_EPS` of node 0 are ignored.
    pub fn apply_node(&mut self, node: usize, to: Point) -> Point {
        let positions = self.node_positions();
        match node {
            0 => self.origin = to,
            1..=3 => {
                let centre = positions[0];
                let (old, new) = (positions[node] - centre, to - centre);
                let (r_old, r_new) = (old.length(), new.length());
                if r_old > RADIUS_EPS && r_new > RADIUS_EPS {
                    let turn = wrap_angle(screen_angle(new) - screen_angle(old));
                    if node == 3 {
                        self.phi = (self.phi + turn).clamp(0.0, FRAC_PI_2);
                    } else {
                        self.theta += turn;
                    }
                    if r_new != r_old {
                        self.scale *= r_new / r_old;
                    }
                }
            }
            _ => return to,
        }
        self.node_positions()[node]
    }

    /// Screen polygon of the eight corners of tower `index`, as a convex hull.
    pub fn tower_outline(&self, index: usize) -> Vec<Point> {
        let t = &self.towers[index];
        let h = self.bar_half;
        let mut corners = Vec::with_capacity(8);
        for (dx, dy) in [(-h, -h), (h, -h), (h, h), (-h, h)] {
            for z in [0.0, t.height] {
                corners.push(self.project(t.x + dx, t.y + dy, z));
            }
        }
        convex_hull(corners)
    }

    /// Screen polygon of the roof of tower `index`.
    pub fn tower_roof(&self, index: usize) -> Vec<Point> {
        let t = &self.towers[index];
        let h = self.bar_half;
        [(-h, -h), (h, -h), (h, h), (-h, h)]
            .iter()
            .map(|(dx, dy)| self.project(t.x + dx, t.y + dy, t.height))
            .collect()
    }
}

/// Andrew's monotone chain; collinear points dropped.
fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross =
        |o: Point, a: Point, b: Point| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() * 2);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

impl Movable for Skyscrapers {
    fn contour(&self) -> Contour {
        let mut b = Contour::builder();
        for p in self.node_positions() {
            b.node(
                p,
                NodeShape::Disc {
                    radius: self.node_radius,
                },
                Freedom::Free,
            );
        }
        for end in 1..=3 {
            b.connect(0, end, self.half_width);
        }
        b.build().expect("axis contour is well formed")
    }

    fn on_translate(&mut self, d: Delta) {
        self.origin = self.origin + d;
    }

    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        self.apply_node(node, to)
    }
}

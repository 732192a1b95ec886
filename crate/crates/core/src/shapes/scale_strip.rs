use serde::{Deserialize, Serialize};

use super::{
    default_node_radius, finite, lower_with_gap, non_negative, size_slack, upper_with_gap,
};
use crate::contour::{Contour, Freedom, NodeShape};
use crate::error::ShapeError;
use crate::geometry::{Delta, Point, Rect};
use crate::mover::Movable;

/// Horizontal range the strip ends are confined to.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Track {
    pub min_x: f64,
    pub max_x: f64,
}

/// A horizontal scale: resizable along x only, movable as a whole.
///
/// Both end nodes are horizontal-only. With a track set, each end node is
/// clipped to the track, so the scale can never be stretched past it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleStrip {
    y: f64,
    x0: f64,
    x1: f64,
    half_height: f64,
    #[serde(default)]
    track: Option<Track>,
    #[serde(default)]
    min_len: f64,
    #[serde(default = "default_node_radius")]
    node_half_width: f64,
}

impl ScaleStrip {
    /// Strip from `start` to `(end_x, start.y)`.
    pub fn new(start: Point, end_x: f64, half_height: f64) -> Result<Self, ShapeError> {
        let strip = Self {
            y: start.y,
            x0: start.x,
            x1: end_x,
            half_height,
            track: None,
            min_len: 0.0,
            node_half_width: default_node_radius(),
        };
        strip.validate()?;
        Ok(strip)
    }

    pub fn with_track(mut self, track: Track, min_len: f64) -> Result<Self, ShapeError> {
        self.track = Some(track);
        self.min_len = min_len;
        self.validate()?;
        Ok(self)
    }

    pub fn start(&self) -> Point {
        Point::new(self.x0, self.y)
    }

    pub fn end(&self) -> Point {
        Point::new(self.x1, self.y)
    }

    pub fn length(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn half_height(&self) -> f64 {
        self.half_height
    }

    pub fn track(&self) -> Option<Track> {
        self.track
    }

    pub fn min_len(&self) -> f64 {
        self.min_len
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        finite("y", self.y)?;
        finite("x0", self.x0)?;
        finite("x1", self.x1)?;
        non_negative("half_height", self.half_height)?;
        non_negative("min_len", self.min_len)?;
        non_negative("node_half_width", self.node_half_width)?;
        let slack = size_slack(self.x0.abs().max(self.x1.abs()));
        if self.length() < self.min_len - slack {
            return Err(ShapeError::Invalid(format!(
                "scale length {} is below min_len {}",
                self.length(),
                self.min_len
            )));
        }
        if let Some(t) = self.track {
            finite("track.min_x", t.min_x)?;
            finite("track.max_x", t.max_x)?;
            if self.x0 < t.min_x || self.x1 > t.max_x {
                return Err(ShapeError::Invalid("scale ends leave their track".into()));
            }
        }
        Ok(())
    }

    fn clip(&self) -> Option<Rect> {
        self.track.map(|t| Rect {
            min: Point::new(t.min_x, self.y),
            max: Point::new(t.max_x, self.y),
        })
    }

    /// Moves end `node` (0 = start, 1 = end) to `to.x`, keeping `min_len`.
    pub fn apply_node(&mut self, node: usize, to: Point) -> Point {
        match node {
            0 if to.x != self.x0 => {
                self.x0 = lower_with_gap(to.x, self.x1, self.min_len);
                if let Some(t) = self.track {
                    self.x0 = self.x0.max(t.min_x);
                }
                self.start()
            }
            1 if to.x != self.x1 => {
                self.x1 = upper_with_gap(to.x, self.x0, self.min_len);
                if let Some(t) = self.track {
                    self.x1 = self.x1.min(t.max_x);
                }
                self.end()
            }
            0 => self.start(),
            1 => self.end(),
            _ => to,
        }
    }
}

impl Movable for ScaleStrip {
    fn contour(&self) -> Contour {
        let clip = self.clip();
        let shape = NodeShape::Box {
            half_width: self.node_half_width,
            half_height: self.half_height.max(self.node_half_width),
        };
        let mut b = Contour::builder();
        let a = b.clipped_node(self.start(), shape.clone(), Freedom::HorizontalOnly, clip);
        let c = b.clipped_node(self.end(), shape, Freedom::HorizontalOnly, clip);
        b.connect(a, c, self.half_height);
        b.build().expect("scale contour is well formed")
    }

    fn on_translate(&mut self, d: Delta) {
        self.x0 += d.dx;
        self.x1 += d.dx;
        self.y += d.dy;
        if let Some(t) = &mut self.track {
            t.min_x += d.dx;
            t.max_x += d.dx;
        }
    }

    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        self.apply_node(node, to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::ContourHit;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn tracked() -> ScaleStrip {
        ScaleStrip::new(p(50.0, 10.0), 150.0, 4.0)
            .unwrap()
            .with_track(
                Track {
                    min_x: 0.0,
                    max_x: 300.0,
                },
                30.0,
            )
            .unwrap()
    }

    #[test]
    fn ends_are_horizontal_only() {
        let c = tracked().contour();
        assert!(c
            .nodes()
            .iter()
            .all(|n| n.freedom == Freedom::HorizontalOnly));
        assert_eq!(c.hit_test(p(100.0, 13.0)), ContourHit::Connection(0));
        assert_eq!(c.hit_test(p(150.0, 12.0)), ContourHit::Node(1));
    }

    #[test]
    fn node_clip_is_the_track() {
        let s = tracked();
        let c = s.contour();
        let end = &c.nodes()[1];
        assert_eq!(end.constrain(p(900.0, 40.0)).unwrap(), p(300.0, 10.0));
        let start = &c.nodes()[0];
        assert_eq!(start.constrain(p(-20.0, 0.0)).unwrap(), p(0.0, 10.0));
    }

    #[test]
    fn min_len_is_kept() {
        let mut s = tracked();
        assert_eq!(s.apply_node(0, p(149.0, 10.0)), p(120.0, 10.0));
        assert_eq!(s.length(), 30.0);
        assert_eq!(s.apply_node(1, p(0.0, 10.0)), p(150.0, 10.0));
        assert_eq!(s.apply_node(1, p(260.0, 10.0)), p(260.0, 10.0));
    }

    #[test]
    fn translation_moves_the_track() {
        let mut s = tracked();
        s.on_translate(Delta::new(10.0, -5.0));
        assert_eq!(
            s.track(),
            Some(Track {
                min_x: 10.0,
                max_x: 310.0
            })
        );
        assert_eq!(s.start(), p(60.0, 5.0));
        s.validate().unwrap();
    }

    #[test]
    fn validation() {
        assert!(ScaleStrip::new(p(0.0, 0.0), 10.0, -1.0).is_err());
        assert!(ScaleStrip::new(p(0.0, 0.0), 10.0, 1.0)
            .unwrap()
            .with_track(
                Track {
                    min_x: 5.0,
                    max_x: 20.0
                },
                0.0
            )
            .is_err());
        assert!(ScaleStrip::new(p(0.0, 0.0), 10.0, 1.0)
            .unwrap()
            .with_track(
                Track {
                    min_x: 0.0,
                    max_x: 20.0
                },
                15.0
            )
            .is_err());
    }
}

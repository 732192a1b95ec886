use serde::{Deserialize, Serialize};

use super::{default_half_width, non_negative};
use crate::contour::Contour;
use crate::error::ShapeError;
use crate::geometry::{Delta, Point, Rect};
use crate::mover::Movable;

/// Stand-in for a group of UI controls that move together. `payload` is an
/// opaque handle the UI uses to find the real controls.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupProxy {
    rect: Rect,
    payload: u64,
    #[serde(default = "default_half_width")]
    half_width: f64,
}

impl GroupProxy {
    pub fn new(rect: Rect, payload: u64) -> Result<Self, ShapeError> {
        let g = Self {
            rect,
            payload,
            half_width: default_half_width(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn payload(&self) -> u64 {
        self.payload
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        self.rect.validate()?;
        non_negative("half_width", self.half_width)
    }
}

impl Movable for GroupProxy {
    fn contour(&self) -> Contour {
        let mut b = Contour::builder();
        let corners = self.rect.corners().map(|c| b.empty_node(c));
        for i in 0..4 {
            b.connect(corners[i], corners[(i + 1) % 4], self.half_width);
        }
        b.build().expect("group frame contour is well formed")
    }

    fn on_translate(&mut self, d: Delta) {
        self.rect = self.rect.translate(d);
    }

    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        self.rect.corners().get(node).copied().unwrap_or(to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::ContourHit;
    use crate::mover::Mover;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn frame_only_contour() {
        let g = GroupProxy::new(Rect::from_xywh(10.0, 10.0, 100.0, 40.0).unwrap(), 7).unwrap();
        let c = g.contour();
        assert_eq!(c.nodes().len(), 4);
        assert!(c.nodes().iter().all(|n| n.is_empty()));
        assert_eq!(c.connections().len(), 4);
        assert_eq!(c.hit_test(p(60.0, 12.0)), ContourHit::Connection(0));
        assert_eq!(c.hit_test(p(60.0, 30.0)), ContourHit::None);
    }

    #[test]
    fn drag_translates_rect() {
        let mut m = Mover::new();
        let g = GroupProxy::new(Rect::from_xywh(10.0, 10.0, 100.0, 40.0).unwrap(), 7).unwrap();
        let id = m.add(g);
        m.catch(p(10.0, 30.0));
        m.move_to(p(15.0, 20.0));
        m.release();
        let moved = m.get(id).unwrap();
        assert_eq!(
            moved.rect(),
            Rect::from_xywh(15.0, 0.0, 100.0, 40.0).unwrap()
        );
        assert_eq!(moved.payload(), 7);
    }
}

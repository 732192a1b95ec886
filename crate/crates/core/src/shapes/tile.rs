use serde::{Deserialize, Serialize};

use super::{non_negative, TILE_HALF_WIDTH};
use crate::contour::Contour;
use crate::error::ShapeError;
use crate::geometry::{validate_simple_polygon, Delta, Point};
use crate::mover::Movable;

fn default_tile_half_width() -> f64 {
    TILE_HALF_WIDTH
}

/// A game tile: movable by its edges, never resizable. The interior is left
/// insensitive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tile {
    vertices: Vec<Point>,
    #[serde(default = "default_tile_half_width")]
    half_width: f64,
}

impl Tile {
    pub fn new(vertices: Vec<Point>) -> Result<Self, ShapeError> {
        let tile = Self {
            vertices,
            half_width: TILE_HALF_WIDTH,
        };
        tile.validate()?;
        Ok(tile)
    }

    /// Axis-aligned square with top-left corner at `at`.
    pub fn square(at: Point, side: f64) -> Result<Self, ShapeError> {
        Self::new(vec![
            at,
            Point::new(at.x + side, at.y),
            Point::new(at.x + side, at.y + side),
            Point::new(at.x, at.y + side),
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        validate_simple_polygon(&self.vertices)?;
        non_negative("half_width", self.half_width)
    }
}

impl Movable for Tile {
    fn contour(&self) -> Contour {
        let mut b = Contour::builder();
        let ids: Vec<usize> = self.vertices.iter().map(|&v| b.empty_node(v)).collect();
        for (i, &a) in ids.iter().enumerate() {
            b.connect(a, ids[(i + 1) % ids.len()], self.half_width);
        }
        b.build().expect("tile contour is well formed")
    }

    fn on_translate(&mut self, d: Delta) {
        for v in &mut self.vertices {
            *v = *v + d;
        }
    }

    /// Tile nodes are empty; nothing moves.
    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        self.vertices.get(node).copied().unwrap_or(to)
    }
}

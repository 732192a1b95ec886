use serde::{Deserialize, Serialize};

use super::{default_half_width, non_negative};
use crate::contour::{Contour, Freedom, NodeShape};
use crate::error::ShapeError;
use crate::geometry::{Delta, Point};
use crate::mover::Movable;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

/// Balls joined by links. The contour mirrors the graph: one disc node per
/// ball, one connection per link.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallGraph {
    balls: Vec<Ball>,
    links: Vec<[usize; 2]>,
    #[serde(default = "default_half_width")]
    half_width: f64,
}

impl Default for BallGraph {
    fn default() -> Self {
        Self {
            balls: Vec::new(),
            links: Vec::new(),
            half_width: default_half_width(),
        }
    }
}

impl BallGraph {
    pub fn new(balls: Vec<Ball>, links: Vec<[usize; 2]>) -> Result<Self, ShapeError> {
        let g = Self {
            balls,
            links,
            half_width: default_half_width(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn links(&self) -> &[[usize; 2]] {
        &self.links
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        non_negative("half_width", self.half_width)?;
        for b in &self.balls {
            b.center.validate()?;
            non_negative("radius", b.radius)?;
        }
        for &[a, b] in &self.links {
            self.check_index(a)?;
            self.check_index(b)?;
            if a == b {
                return Err(ShapeError::SelfLink(a));
            }
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<(), ShapeError> {
        if index < self.balls.len() {
            Ok(())
        } else {
            Err(ShapeError::IndexOutOfRange {
                index,
                len: self.balls.len(),
            })
        }
    }

    /// Appends a ball and returns its index. Radius is clamped at zero.
    pub fn add_ball(&mut self, center: Point, radius: f64) -> usize {
        self.balls.push(Ball {
            center,
            radius: radius.max(0.0),
        });
        self.balls.len() - 1
    }

    /// Removes a ball and every link touching it; later indices shift down.
    pub fn remove_ball(&mut self, index: usize) -> Result<Ball, ShapeError> {
        self.check_index(index)?;
        self.links.retain(|l| !l.contains(&index));
        for l in &mut self.links {
            for end in l.iter_mut() {
                if *end > index {
                    *end -= 1;
                }
            }
        }
        Ok(self.balls.remove(index))
    }

    pub fn link(&mut self, a: usize, b: usize) -> Result<&mut Self, ShapeError> {
        self.check_index(a)?;
        self.check_index(b)?;
        if a == b {
            return Err(ShapeError::SelfLink(a));
        }
        self.links.push([a, b]);
        Ok(self)
    }

    /// Moves ball `node` to `to`.
    pub fn apply_node(&mut self, node: usize, to: Point) -> Point {
        match self.balls.get_mut(node) {
            Some(ball) => {
                ball.center = to;
                to
            }
            None => to,
        }
    }
}

impl Movable for BallGraph {
    fn contour(&self) -> Contour {
        let mut b = Contour::builder();
        for ball in &self.balls {
            b.node(
                ball.center,
                NodeShape::Disc {
                    radius: ball.radius,
                },
                Freedom::Free,
            );
        }
        for &[x, y] in &self.links {
            b.connect(x, y, self.half_width);
        }
        b.build().expect("ball graph contour is well formed")
    }

    fn on_translate(&mut self, d: Delta) {
        for ball in &mut self.balls {
            ball.center = ball.center + d;
        }
    }

    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        self.apply_node(node, to)
    }
}

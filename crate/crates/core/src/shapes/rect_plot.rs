use serde::{Deserialize, Serialize};

use super::{
    default_half_width, default_node_radius, lower_with_gap, non_negative, size_slack,
    upper_with_gap, DEFAULT_MARGIN, DEFAULT_MIN_SIZE,
};
use crate::contour::{Contour, Freedom, NodeShape};
use crate::error::ShapeError;
use crate::geometry::{Delta, Point, Rect};
use crate::mover::Movable;

/// Rectangular plot whose contour frame sits `margin` px outside the plot
/// area, leaving the area itself free for other clicks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RectPlot {
    area: Rect,
    margin: f64,
    min_size: f64,
    #[serde(default = "default_node_radius")]
    node_radius: f64,
    #[serde(default = "default_half_width")]
    half_width: f64,
}

/// Node ids of a [`RectPlot`] contour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(usize)]
pub enum RectPlotNode {
    TopLeft = 0,
    TopRight = 1,
    BottomRight = 2,
    BottomLeft = 3,
    Top = 4,
    Right = 5,
    Bottom = 6,
    Left = 7,
}

impl RectPlotNode {
    pub const ALL: [RectPlotNode; 8] = [
        RectPlotNode::TopLeft,
        RectPlotNode::TopRight,
        RectPlotNode::BottomRight,
        RectPlotNode::BottomLeft,
        RectPlotNode::Top,
        RectPlotNode::Right,
        RectPlotNode::Bottom,
        RectPlotNode::Left,
    ];

    pub fn id(self) -> usize {
        self as usize
    }

    fn freedom(self) -> Freedom {
        match self {
            RectPlotNode::Top | RectPlotNode::Bottom => Freedom::VerticalOnly,
            RectPlotNode::Left | RectPlotNode::Right => Freedom::HorizontalOnly,
            _ => Freedom::Free,
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    Min,
    Max,
}

impl RectPlot {
    pub fn new(area: Rect, margin: f64, min_size: f64) -> Result<Self, ShapeError> {
        let plot = Self {
            area,
            margin,
            min_size,
            node_radius: default_node_radius(),
            half_width: default_half_width(),
        };
        plot.validate()?;
        Ok(plot)
    }

    pub fn with_defaults(area: Rect) -> Result<Self, ShapeError> {
        Self::new(area, DEFAULT_MARGIN, DEFAULT_MIN_SIZE)
    }

    pub fn with_handles(mut self, node_radius: f64, half_width: f64) -> Result<Self, ShapeError> {
        self.node_radius = node_radius;
        self.half_width = half_width;
        self.validate()?;
        Ok(self)
    }

    pub fn area(&self) -> Rect {
        self.area
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }

    pub fn min_size(&self) -> f64 {
        self.min_size
    }

    /// The contour frame: the area inflated by the margin.
    pub fn frame(&self) -> Rect {
        self.area.inflate(self.margin)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        self.area.validate()?;
        non_negative("margin", self.margin)?;
        non_negative("min_size", self.min_size)?;
        non_negative("node_radius", self.node_radius)?;
        non_negative("half_width", self.half_width)?;
        let slack = size_slack(self.area.min.x.abs().max(self.area.max.x.abs()))
            .max(size_slack(self.area.min.y.abs().max(self.area.max.y.abs())));
        if self.area.width() < self.min_size - slack || self.area.height() < self.min_size - slack {
            return Err(ShapeError::BelowMinSize {
                width: self.area.width(),
                height: self.area.height(),
                min_size: self.min_size,
            });
        }
        Ok(())
    }

    fn node_position(&self, node: RectPlotNode) -> Point {
        let f = self.frame();
        let c = f.center();
        match node {
            RectPlotNode::TopLeft => f.min,
            RectPlotNode::TopRight => Point::new(f.max.x, f.min.y),
            RectPlotNode::BottomRight => f.max,
            RectPlotNode::BottomLeft => Point::new(f.min.x, f.max.y),
            RectPlotNode::Top => Point::new(c.x, f.min.y),
            RectPlotNode::Right => Point::new(f.max.x, c.y),
            RectPlotNode::Bottom => Point::new(c.x, f.max.y),
            RectPlotNode::Left => Point::new(f.min.x, c.y),
        }
    }

    /// Which area sides (x, y) a node drags.
    fn sides(node: RectPlotNode) -> (Option<Side>, Option<Side>) {
        use RectPlotNode::*;
        match node {
            TopLeft => (Some(Side::Min), Some(Side::Min)),
            TopRight => (Some(Side::Max), Some(Side::Min)),
            BottomRight => (Some(Side::Max), Some(Side::Max)),
            BottomLeft => (Some(Side::Min), Some(Side::Max)),
            Top => (None, Some(Side::Min)),
            Right => (Some(Side::Max), None),
            Bottom => (None, Some(Side::Max)),
            Left => (Some(Side::Min), None),
        }
    }

    /// Resizes the area by moving one contour node to `to`.
    ///
    /// Corners move both adjacent sides, mid-edge nodes one side; the opposite
    /// side stays fixed and each axis is kept at least `min_size` long.
    /// A coordinate equal to the node's current one leaves its side untouched.
    pub fn apply_node(&mut self, node: usize, to: Point) -> Point {
        let Some(&which) = RectPlotNode::ALL.get(node) else {
            return to;
        };
        let current = self.node_position(which);
        let (sx, sy) = Self::sides(which);
        if let Some(side) = sx {
            if to.x != current.x {
                let (min, max) = (&mut self.area.min.x, &mut self.area.max.x);
                Self::move_side(side, to.x, self.margin, self.min_size, min, max);
            }
        }
        if let Some(side) = sy {
            if to.y != current.y {
                let (min, max) = (&mut self.area.min.y, &mut self.area.max.y);
                Self::move_side(side, to.y, self.margin, self.min_size, min, max);
            }
        }
        self.node_position(which)
    }

    fn move_side(
        side: Side,
        frame_coord: f64,
        margin: f64,
        min_size: f64,
        min: &mut f64,
        max: &mut f64,
    ) {
        match side {
            Side::Min => *min = lower_with_gap(frame_coord + margin, *max, min_size),
            Side::Max => *max = upper_with_gap(frame_coord - margin, *min, min_size),
        }
    }
}

impl Movable for RectPlot {
    fn contour(&self) -> Contour {
        let mut b = Contour::builder();
        for node in RectPlotNode::ALL {
            b.node(
                self.node_position(node),
                NodeShape::Disc {
                    radius: self.node_radius,
                },
                node.freedom(),
            );
        }
        for (a, c) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            b.connect(a, c, self.half_width);
        }
        b.build().expect("rect plot contour is well formed")
    }

    fn on_translate(&mut self, d: Delta) {
        self.area = self.area.translate(d);
    }

    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        self.apply_node(node, to)
    }
}

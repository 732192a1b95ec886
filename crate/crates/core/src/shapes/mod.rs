//! Sample object families, each with its own contour layout.
//!
//! | family          | nodes                                  | connections      |
//! |-----------------|----------------------------------------|------------------|
//! | [`RectPlot`]    | 4 free corners, 4 one-axis mid-edges   | frame edges      |
//! | [`ScaleStrip`]  | 2 horizontal-only ends                 | the strip        |
//! | [`Skyscrapers`] | origin + 3 axis ends                   | the three axes   |
//! | [`BallGraph`]   | one per ball                           | one per link     |
//! | [`Tile`]        | empty, one per vertex                  | polygon edges    |
//! | [`GroupProxy`]  | empty corners                          | frame edges      |
//!
//! [`SceneObject`] is the closed set of families a scene file can hold.

mod ball_graph;
mod group_proxy;
mod rect_plot;
mod scale_strip;
mod skyscrapers;
mod tile;

use serde::{Deserialize, Serialize};

pub use ball_graph::{Ball, BallGraph};
pub use group_proxy::GroupProxy;
pub use rect_plot::{RectPlot, RectPlotNode};
pub use scale_strip::{ScaleStrip, Track};
pub use skyscrapers::{Skyscrapers, Tower};
pub use tile::Tile;

use crate::contour::Contour;
use crate::error::ShapeError;
use crate::geometry::{Delta, Point};
use crate::mover::Movable;

pub const DEFAULT_HALF_WIDTH: f64 = 3.0;
pub const DEFAULT_NODE_RADIUS: f64 = 5.0;
pub const DEFAULT_MARGIN: f64 = 6.0;
pub const DEFAULT_MIN_SIZE: f64 = 20.0;
pub const TILE_HALF_WIDTH: f64 = 2.0;

/// Slack allowed when re-validating sizes that went through translation or
/// 9-digit serialization.
pub(crate) fn size_slack(magnitude: f64) -> f64 {
    2e-8 * magnitude.abs().max(1.0)
}

pub(crate) fn default_half_width() -> f64 {
    DEFAULT_HALF_WIDTH
}

pub(crate) fn default_node_radius() -> f64 {
    DEFAULT_NODE_RADIUS
}

pub(crate) fn non_negative(what: &'static str, value: f64) -> Result<(), ShapeError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(ShapeError::Invalid(format!(
            "{what} must be finite and non-negative, got {value}"
        )))
    }
}

pub(crate) fn positive(what: &'static str, value: f64) -> Result<(), ShapeError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(ShapeError::NotPositive { what, value })
    }
}

pub(crate) fn finite(what: &'static str, value: f64) -> Result<(), ShapeError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ShapeError::Invalid(format!("{what} must be finite")))
    }
}

/// Smallest `lo` with `hi - lo >= len`, starting from `candidate`.
pub(crate) fn lower_with_gap(candidate: f64, hi: f64, len: f64) -> f64 {
    let mut lo = candidate.min(hi - len);
    while hi - lo < len {
        lo = lo.next_down();
    }
    lo
}

/// Largest `hi` with `hi - lo >= len`, starting from `candidate`.
pub(crate) fn upper_with_gap(candidate: f64, lo: f64, len: f64) -> f64 {
    let mut hi = candidate.max(lo + len);
    while hi - lo < len {
        hi = hi.next_up();
    }
    hi
}

/// Object family tag as written in scene files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectKind {
    RectPlot,
    ScaleStrip,
    Skyscrapers,
    BallGraph,
    Tile,
    GroupProxy,
}

impl ObjectKind {
    pub const ALL: [ObjectKind; 6] = [
        ObjectKind::RectPlot,
        ObjectKind::ScaleStrip,
        ObjectKind::Skyscrapers,
        ObjectKind::BallGraph,
        ObjectKind::Tile,
        ObjectKind::GroupProxy,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ObjectKind::RectPlot => "rect_plot",
            ObjectKind::ScaleStrip => "scale_strip",
            ObjectKind::Skyscrapers => "skyscrapers",
            ObjectKind::BallGraph => "ball_graph",
            ObjectKind::Tile => "tile",
            ObjectKind::GroupProxy => "group_proxy",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

/// Any object a scene can hold.
#[derive(Clone, Debug, PartialEq)]
pub enum SceneObject {
    RectPlot(RectPlot),
    ScaleStrip(ScaleStrip),
    Skyscrapers(Skyscrapers),
    BallGraph(BallGraph),
    Tile(Tile),
    GroupProxy(GroupProxy),
}

macro_rules! dispatch {
    ($self:expr, $obj:ident => $body:expr) => {
        match $self {
            SceneObject::RectPlot($obj) => $body,
            SceneObject::ScaleStrip($obj) => $body,
            SceneObject::Skyscrapers($obj) => $body,
            SceneObject::BallGraph($obj) => $body,
            SceneObject::Tile($obj) => $body,
            SceneObject::GroupProxy($obj) => $body,
        }
    };
}

impl SceneObject {
    pub fn kind(&self) -> ObjectKind {
        match self {
            SceneObject::RectPlot(_) => ObjectKind::RectPlot,
            SceneObject::ScaleStrip(_) => ObjectKind::ScaleStrip,
            SceneObject::Skyscrapers(_) => ObjectKind::Skyscrapers,
            SceneObject::BallGraph(_) => ObjectKind::BallGraph,
            SceneObject::Tile(_) => ObjectKind::Tile,
            SceneObject::GroupProxy(_) => ObjectKind::GroupProxy,
        }
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        dispatch!(self, o => o.validate())
    }

    /// A default-parameter object of `kind` placed near `at`.
    pub fn default_of(kind: ObjectKind, at: Point) -> SceneObject {
        let built = match kind {
            ObjectKind::RectPlot => RectPlot::with_defaults(
                crate::geometry::Rect::from_xywh(at.x, at.y, 240.0, 160.0).expect("finite"),
            )
            .map(SceneObject::RectPlot),
            ObjectKind::ScaleStrip => {
                ScaleStrip::new(at, at.x + 200.0, 6.0).map(SceneObject::ScaleStrip)
            }
            ObjectKind::Skyscrapers => Skyscrapers::grid(
                Point::new(at.x + 60.0, at.y + 200.0),
                &[
                    vec![1.0, 2.5, 1.5],
                    vec![3.0, 0.5, 2.0],
                    vec![1.0, 4.0, 2.0],
                ],
            )
            .map(SceneObject::Skyscrapers),
            ObjectKind::BallGraph => {
                let mut g = BallGraph::default();
                let a = g.add_ball(at, 12.0);
                let b = g.add_ball(Point::new(at.x + 80.0, at.y + 10.0), 9.0);
                let c = g.add_ball(Point::new(at.x + 40.0, at.y + 70.0), 15.0);
                g.link(a, b)
                    .and_then(|g| g.link(b, c))
                    .and_then(|g| g.link(c, a))
                    .map(|g| SceneObject::BallGraph(g.clone()))
            }
            ObjectKind::Tile => Tile::square(at, 60.0).map(SceneObject::Tile),
            ObjectKind::GroupProxy => GroupProxy::new(
                crate::geometry::Rect::from_xywh(at.x, at.y, 180.0, 120.0).expect("finite"),
                0,
            )
            .map(SceneObject::GroupProxy),
        };
        built.expect("default parameters are valid for finite anchors")
    }
}

impl Movable for SceneObject {
    fn contour(&self) -> Contour {
        dispatch!(self, o => o.contour())
    }

    fn on_translate(&mut self, d: Delta) {
        dispatch!(self, o => o.on_translate(d))
    }

    fn on_node_move(&mut self, node: usize, to: Point) -> Point {
        dispatch!(self, o => o.on_node_move(node, to))
    }
}

macro_rules! impl_from {
    ($($ty:ident),*) => {
        $(impl From<$ty> for SceneObject {
            fn from(v: $ty) -> Self {
                SceneObject::$ty(v)
            }
        })*
    };
}

impl_from!(
    RectPlot,
    ScaleStrip,
    Skyscrapers,
    BallGraph,
    Tile,
    GroupProxy
);

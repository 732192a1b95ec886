//! Contours: the sensitive skeleton attached to a movable object.
//!
//! A contour is a list of nodes and a list of connections between them.
//! Nodes are handles that reshape the object when dragged individually;
//! connections are strips that move the whole object. A contour need not
//! follow the visible outline of its object.
//!
//! Hit priority is fixed: nodes first in ascending id, then connections in
//! ascending index. Empty nodes (`Freedom::None`) are skipped, so an object
//! whose nodes are all empty is movable but not resizable.

use serde::Serialize;

use crate::error::{ContourError, GeometryError};
use crate::geometry::{
    polygon_contains_unchecked, segment_distance_unchecked, validate_simple_polygon, Delta, Point,
    Rect,
};

/// Sensitive area of a node, relative to the node position.
#[derive(Clone, Debug, PartialEq)]
pub enum NodeShape {
    Disc {
        radius: f64,
    },
    /// Axis-aligned box centred on the node.
    Box {
        half_width: f64,
        half_height: f64,
    },
    /// Vertices are offsets from the node position.
    Polygon {
        vertices: Vec<Point>,
    },
}

/// Which directions a node may be dragged in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Freedom {
    Free,
    HorizontalOnly,
    VerticalOnly,
    /// Empty node: anchors connections, never hit, never moved on its own.
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub id: usize,
    pub position: Point,
    pub shape: NodeShape,
    pub freedom: Freedom,
    pub clip: Option<Rect>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Connection {
    pub node_a: usize,
    pub node_b: usize,
    pub half_width: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Contour {
    nodes: Vec<Node>,
    connections: Vec<Connection>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum ContourHit {
    Node(usize),
    Connection(usize),
    None,
}

/// What a pointer hovering over a contour may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hint {
    Reconfigure,
    MoveObject,
    None,
}

impl NodeShape {
    fn validate(&self) -> Result<(), GeometryError> {
        let non_negative = |v: f64| {
            if !v.is_finite() {
                Err(GeometryError::NonFinite)
            } else if v < 0.0 {
                Err(GeometryError::NegativeExtent(v))
            } else {
                Ok(())
            }
        };
        match self {
            NodeShape::Disc { radius } => non_negative(*radius),
            NodeShape::Box {
                half_width,
                half_height,
            } => non_negative(*half_width).and(non_negative(*half_height)),
            NodeShape::Polygon { vertices } => validate_simple_polygon(vertices),
        }
    }

    /// Whether `offset` (pointer minus node position) falls inside the shape.
    pub fn contains_offset(&self, offset: Delta) -> bool {
        match self {
            NodeShape::Disc { radius } => offset.length() <= *radius,
            NodeShape::Box {
                half_width,
                half_height,
            } => offset.dx.abs() <= *half_width && offset.dy.abs() <= *half_height,
            NodeShape::Polygon { vertices } => {
                polygon_contains_unchecked(vertices, Point::new(offset.dx, offset.dy))
            }
        }
    }
}

impl Node {
    /// True when `p` lies in this node's sensitive area. Empty nodes never hit.
    pub fn hit(&self, p: Point) -> bool {
        self.freedom != Freedom::None && self.shape.contains_offset(p - self.position)
    }

    pub fn is_empty(&self) -> bool {
        self.freedom == Freedom::None
    }

    /// Applies the freedom axis restriction, then clamps into the clip.
    pub fn constrain(&self, proposed: Point) -> Result<Point, ContourError> {
        let along_axis = match self.freedom {
            Freedom::None => return Err(ContourError::EmptyNodeMove(self.id)),
            Freedom::Free => proposed,
            Freedom::HorizontalOnly => Point::new(proposed.x, self.position.y),
            Freedom::VerticalOnly => Point::new(self.position.x, proposed.y),
        };
        Ok(match &self.clip {
            Some(clip) => clip.clamp(along_axis),
            None => along_axis,
        })
    }
}

impl ContourHit {
    pub fn is_none(&self) -> bool {
        matches!(self, ContourHit::None)
    }

    /// Cursor feedback for a hover over this hit.
    pub fn hint(&self) -> Hint {
        match self {
            ContourHit::Node(_) => Hint::Reconfigure,
            ContourHit::Connection(_) => Hint::MoveObject,
            ContourHit::None => Hint::None,
        }
    }
}

impl Contour {
    pub fn builder() -> ContourBuilder {
        ContourBuilder::default()
    }

    /// Validates ids, shapes, clips and connection endpoints.
    pub fn new(nodes: Vec<Node>, connections: Vec<Connection>) -> Result<Self, ContourError> {
        for (index, node) in nodes.iter().enumerate() {
            if node.id != index {
                return Err(ContourError::NodeIdMismatch { index, id: node.id });
            }
            node.position.validate()?;
            node.shape.validate()?;
            if let Some(clip) = node.clip {
                clip.validate()?;
                if !clip.contains(node.position) {
                    return Err(ContourError::OutsideClip(index));
                }
            }
        }
        for (index, c) in connections.iter().enumerate() {
            for node in [c.node_a, c.node_b] {
                if node >= nodes.len() {
                    return Err(ContourError::DanglingConnection { index, node });
                }
            }
            if c.node_a == c.node_b {
                return Err(ContourError::SelfConnection(index));
            }
            if !c.half_width.is_finite() {
                return Err(GeometryError::NonFinite.into());
            }
            if c.half_width < 0.0 {
                return Err(GeometryError::NegativeExtent(c.half_width).into());
            }
        }
        Ok(Self { nodes, connections })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn connections(&self) -> &[Connection] {
        &self.connections
    }

    pub fn node(&self, id: usize) -> Option<&Node> {
        self.nodes.get(id)
    }

    /// Endpoints of connection `index`.
    pub fn segment(&self, index: usize) -> Option<(Point, Point)> {
        let c = self.connections.get(index)?;
        Some((self.nodes[c.node_a].position, self.nodes[c.node_b].position))
    }

    pub fn hit_test(&self, p: Point) -> ContourHit {
        if let Some(node) = self.nodes.iter().find(|n| n.hit(p)) {
            return ContourHit::Node(node.id);
        }
        self.connections
            .iter()
            .position(|c| {
                let (a, b) = (self.nodes[c.node_a].position, self.nodes[c.node_b].position);
                segment_distance_unchecked(p, a, b) <= c.half_width
            })
            .map_or(ContourHit::None, ContourHit::Connection)
    }

    /// Shifts every node and clip by `d`; shapes are relative and stay put.
    pub fn translate(&self, d: Delta) -> Contour {
        let nodes = self
            .nodes
            .iter()
            .map(|n| Node {
                position: n.position.translate(d),
                clip: n.clip.map(|c| c.translate(d)),
                ..n.clone()
            })
            .collect();
        Contour {
            nodes,
            connections: self.connections.clone(),
        }
    }
}

/// Incremental construction of a [`Contour`]; ids are assigned in order.
#[derive(Debug, Default)]
pub struct ContourBuilder {
    nodes: Vec<Node>,
    connections: Vec<Connection>,
}

impl ContourBuilder {
    pub fn node(&mut self, position: Point, shape: NodeShape, freedom: Freedom) -> usize {
        self.clipped_node(position, shape, freedom, None)
    }

    pub fn clipped_node(
        &mut self,
        position: Point,
        shape: NodeShape,
        freedom: Freedom,
        clip: Option<Rect>,
    ) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node {
            id,
            position,
            shape,
            freedom,
            clip,
        });
        id
    }

    /// An empty node with a zero-size disc.
    pub fn empty_node(&mut self, position: Point) -> usize {
        self.node(position, NodeShape::Disc { radius: 0.0 }, Freedom::None)
    }

    pub fn connect(&mut self, node_a: usize, node_b: usize, half_width: f64) -> &mut Self {
        self.connections.push(Connection {
            node_a,
            node_b,
            half_width,
        });
        self
    }

    pub fn build(self) -> Result<Contour, ContourError> {
        Contour::new(self.nodes, self.connections)
    }
}

//! Contour-based direct manipulation for 2D graphics.
//!
//! Every movable object carries a *contour*: nodes, which reshape the object
//! when dragged one at a time, and connections, which move the whole object.
//! A [`Mover`] keeps the objects in z-order and turns pointer down / move / up
//! into grabs, drags and releases.
//!
//! - [`geometry`]: points, rectangles and the hit-test primitives.
//! - [`contour`]: nodes, connections, hit priority, constrained node motion.
//! - [`mover`]: the object registry and catch / move / release protocol.
//! - [`shapes`]: plots, scales, 3D bar charts, ball graphs, tiles, control groups.
//! - [`scene_io`]: scene files, event scripts, replay and SVG snapshots.
//! - [`replay_cli`]: the `replay` command line front end.
//! - [`session`]: a string-in/string-out facade for interactive front ends.

pub mod contour;
pub mod error;
pub mod geometry;
pub mod mover;
pub mod replay_cli;
pub mod scene_io;
pub mod session;
pub mod shapes;

pub use contour::{Connection, Contour, ContourHit, Freedom, Hint, Node, NodeShape};
pub use error::{ContourError, GeometryError, SceneError, ScriptError, ShapeError};
pub use geometry::{Delta, Point, Rect};
pub use mover::{GrabState, Movable, MovableId, MoveOutcome, Mover};
pub use scene_io::{Event, EventScript, Scene, StepOutcome};
pub use session::Session;
pub use shapes::{ObjectKind, SceneObject};

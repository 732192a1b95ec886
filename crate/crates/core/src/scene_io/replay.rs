use std::fmt;

use serde::Serialize;

use super::canonical::format_number;
use super::script::Event;
use super::Scene;
use crate::mover::{MovableId, MoveOutcome};

/// Result of feeding one script event to a scene.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum StepOutcome {
    Down { caught: Option<MovableId> },
    Move(MoveOutcome),
    Up { released: Option<MovableId> },
    Add { id: MovableId },
    Remove { id: MovableId, existed: bool },
    Raise { id: MovableId, moved: bool },
    Lower { id: MovableId, moved: bool },
    ToggleContours { visible: bool },
}

impl fmt::Display for StepOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id_or_idle = |id: &Option<MovableId>| id.map_or("idle".to_owned(), |i| i.to_string());
        match self {
            StepOutcome::Down { caught } => write!(f, "down {}", id_or_idle(caught)),
            StepOutcome::Up { released } => write!(f, "up {}", id_or_idle(released)),
            StepOutcome::Move(MoveOutcome::Translated { object, delta }) => write!(
                f,
                "move translated {object} {} {}",
                format_number(delta.dx),
                format_number(delta.dy)
            ),
            StepOutcome::Move(MoveOutcome::NodeMoved {
                object,
                node,
                from,
                to,
            }) => write!(
                f,
                "move node_moved {object} {node} {} {} -> {} {}",
                format_number(from.x),
                format_number(from.y),
                format_number(to.x),
                format_number(to.y)
            ),
            StepOutcome::Move(MoveOutcome::Hint { hint }) => {
                let name = serde_json::to_value(hint).expect("hint serializes");
                write!(f, "move hint {}", name.as_str().unwrap_or("none"))
            }
            StepOutcome::Move(MoveOutcome::Idle) => f.write_str("move idle"),
            StepOutcome::Add { id } => write!(f, "add {id}"),
            StepOutcome::Remove { id, existed } => write!(f, "remove {id} {existed}"),
            StepOutcome::Raise { id, moved } => write!(f, "raise {id} {moved}"),
            StepOutcome::Lower { id, moved } => write!(f, "lower {id} {moved}"),
            StepOutcome::ToggleContours { visible } => write!(f, "toggle_contours {visible}"),
        }
    }
}

/// Feeds one event to the scene: down → catch, move → move_to, up → release.
pub fn apply_event(scene: &mut Scene, event: &Event) -> StepOutcome {
    match event {
        Event::Down(p) => StepOutcome::Down {
            caught: scene.catch(*p),
        },
        Event::Move(p) => StepOutcome::Move(scene.move_to(*p)),
        Event::Up => StepOutcome::Up {
            released: scene.release(),
        },
        Event::Add(obj) => StepOutcome::Add {
            id: scene.add(obj.clone()),
        },
        Event::Remove(id) => StepOutcome::Remove {
            id: *id,
            existed: scene.remove(*id).is_some(),
        },
        Event::Raise(id) => StepOutcome::Raise {
            id: *id,
            moved: scene.raise(*id),
        },
        Event::Lower(id) => StepOutcome::Lower {
            id: *id,
            moved: scene.lower(*id),
        },
        Event::ToggleContours => {
            let visible = !scene.contours_visible();
            scene.set_contours_visible(visible);
            StepOutcome::ToggleContours { visible }
        }
    }
}

/// Replays `events` in order and returns the final scene with one log entry
/// per event.
pub fn apply_script(mut scene: Scene, events: &[Event]) -> (Scene, Vec<StepOutcome>) {
    let log = events.iter().map(|e| apply_event(&mut scene, e)).collect();
    (scene, log)
}

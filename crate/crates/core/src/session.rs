//! Plain-value facade for interactive front ends.
//!
//! A [`Session`] owns a scene and records every operation as a script line,
//! so a live session can be exported and replayed bit-for-bit with
//! `replay --scene <start> --script <recording>`. Pointer coordinates are
//! rounded to the precision the script format keeps before they reach the
//! engine, and added objects go through their canonical document first, so
//! the live scene and the replayed one stay identical.

use crate::contour::Hint;
use crate::error::SceneError;
use crate::geometry::Point;
use crate::mover::MovableId;
use crate::scene_io::canonical::format_number;
use crate::scene_io::{
    apply_event, format_script, load_scene, object_from_value, object_to_value, render_svg,
    save_scene, Event, Scene, StepOutcome,
};
use crate::shapes::{ObjectKind, SceneObject};

/// CSS cursor name for a hover hint.
pub fn cursor_for(hint: Hint) -> &'static str {
    match hint {
        Hint::Reconfigure => "nwse-resize",
        Hint::MoveObject => "move",
        Hint::None => "default",
    }
}

fn quantize(v: f64) -> f64 {
    format_number(v).parse().unwrap_or(0.0)
}

#[derive(Debug, Clone)]
pub struct Session {
    scene: Scene,
    start: String,
    recording: Vec<Event>,
}

impl Default for Session {
    fn default() -> Self {
        Self::from_scene(Scene::new())
    }
}

impl Session {
    pub fn from_scene(scene: Scene) -> Self {
        Self {
            start: save_scene(&scene),
            scene,
            recording: Vec::new(),
        }
    }

    pub fn from_scene_text(text: &str) -> Result<Self, SceneError> {
        load_scene(text).map(Self::from_scene)
    }

    pub fn scene(&self) -> &Scene {
        &self.scene
    }

    fn record(&mut self, event: Event) -> StepOutcome {
        let outcome = apply_event(&mut self.scene, &event);
        self.recording.push(event);
        outcome
    }

    fn point(x: f64, y: f64) -> Point {
        Point::new(quantize(x), quantize(y))
    }

    pub fn pointer_down(&mut self, x: f64, y: f64) -> StepOutcome {
        self.record(Event::Down(Self::point(x, y)))
    }

    pub fn pointer_move(&mut self, x: f64, y: f64) -> StepOutcome {
        self.record(Event::Move(Self::point(x, y)))
    }

    pub fn pointer_up(&mut self) -> StepOutcome {
        self.record(Event::Up)
    }

    /// Cursor to show for the last move outcome; `None` when the cursor
    /// should stay as it is (a drag is in progress or nothing moved).
    pub fn cursor(outcome: &StepOutcome) -> Option<&'static str> {
        match outcome {
            StepOutcome::Move(crate::mover::MoveOutcome::Hint { hint }) => Some(cursor_for(*hint)),
            StepOutcome::Move(crate::mover::MoveOutcome::Idle) => Some(cursor_for(Hint::None)),
            _ => None,
        }
    }

    pub fn toggle_contours(&mut self) -> bool {
        self.record(Event::ToggleContours);
        self.scene.contours_visible()
    }

    /// Adds a default object of the family named `tag` near `(x, y)`.
    pub fn add_default(&mut self, tag: &str, x: f64, y: f64) -> Result<MovableId, SceneError> {
        let kind =
            ObjectKind::from_tag(tag).ok_or_else(|| SceneError::UnknownTag(tag.to_owned()))?;
        self.add(SceneObject::default_of(kind, Self::point(x, y)))
    }

    /// Adds an object as its canonical document would reload it.
    pub fn add(&mut self, obj: SceneObject) -> Result<MovableId, SceneError> {
        let text = crate::scene_io::canonical::to_compact(&object_to_value(&obj));
        let value = serde_json::from_str(&text).map_err(|e| SceneError::Schema(e.to_string()))?;
        let obj = object_from_value(value, self.scene.next_id())?;
        match self.record(Event::Add(obj)) {
            StepOutcome::Add { id } => Ok(id),
            other => unreachable!("add produced {other:?}"),
        }
    }

    pub fn remove(&mut self, id: MovableId) -> bool {
        matches!(
            self.record(Event::Remove(id)),
            StepOutcome::Remove { existed: true, .. }
        )
    }

    pub fn raise(&mut self, id: MovableId) -> bool {
        matches!(
            self.record(Event::Raise(id)),
            StepOutcome::Raise { moved: true, .. }
        )
    }

    pub fn lower(&mut self, id: MovableId) -> bool {
        matches!(
            self.record(Event::Lower(id)),
            StepOutcome::Lower { moved: true, .. }
        )
    }

    /// Object list for a side panel, top of the z-order first.
    pub fn list_top_down(&self) -> Vec<(MovableId, &'static str)> {
        self.scene
            .iter()
            .rev()
            .map(|(id, obj)| (id, obj.kind().tag()))
            .collect()
    }

    pub fn render_svg(&self) -> String {
        render_svg(&self.scene)
    }

    pub fn save(&self) -> String {
        save_scene(&self.scene)
    }

    /// The scene text the session started from.
    pub fn starting_scene(&self) -> &str {
        &self.start
    }

    /// Every operation so far, in script format.
    pub fn recording(&self) -> String {
        format_script(&self.recording)
    }
}

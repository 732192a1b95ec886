//! Scene files, event scripts, deterministic replay and SVG snapshots.
//!
//! Scene file (canonical JSON, keys sorted, floats at 9 significant digits):
//!
//! ```json
//! {
//!   "contours_visible": false,
//!   "next_id": 1,
//!   "objects": [
//!     {
//!       "id": 0,
//!       "params": { "half_width": 2, "vertices": [ ... ] },
//!       "type": "tile"
//!     }
//!   ],
//!   "version": 1
//! }
//! ```
//!
//! `objects` is listed bottom to top. `next_id` may be omitted, in which case
//! it is one past the largest id.

pub mod canonical;
mod replay;
mod script;
mod svg;

use serde_json::{json, Map, Value};

pub use replay::{apply_event, apply_script, StepOutcome};
pub use script::{format_script, parse_script, Event, EventScript};
pub use svg::{render_svg, render_svg_with, SvgOptions};

use crate::error::SceneError;
use crate::mover::{MovableId, Mover};
use crate::shapes::{
    BallGraph, GroupProxy, ObjectKind, RectPlot, ScaleStrip, SceneObject, Skyscrapers, Tile,
};

pub const SCENE_VERSION: u64 = 1;

/// A mover over the closed set of scene object families.
pub type Scene = Mover<SceneObject>;

/// `{"type": ..., "params": {...}}` for one object.
pub fn object_to_value(obj: &SceneObject) -> Value {
    let params = match obj {
        SceneObject::RectPlot(o) => serde_json::to_value(o),
        SceneObject::ScaleStrip(o) => serde_json::to_value(o),
        SceneObject::Skyscrapers(o) => serde_json::to_value(o),
        SceneObject::BallGraph(o) => serde_json::to_value(o),
        SceneObject::Tile(o) => serde_json::to_value(o),
        SceneObject::GroupProxy(o) => serde_json::to_value(o),
    }
    .expect("shape parameters serialize");
    json!({ "type": obj.kind().tag(), "params": params })
}

fn params_from_value(kind: ObjectKind, params: Value) -> Result<SceneObject, serde_json::Error> {
    Ok(match kind {
        ObjectKind::RectPlot => SceneObject::RectPlot(serde_json::from_value::<RectPlot>(params)?),
        ObjectKind::ScaleStrip => {
            SceneObject::ScaleStrip(serde_json::from_value::<ScaleStrip>(params)?)
        }
        ObjectKind::Skyscrapers => {
            SceneObject::Skyscrapers(serde_json::from_value::<Skyscrapers>(params)?)
        }
        ObjectKind::BallGraph => {
            SceneObject::BallGraph(serde_json::from_value::<BallGraph>(params)?)
        }
        ObjectKind::Tile => SceneObject::Tile(serde_json::from_value::<Tile>(params)?),
        ObjectKind::GroupProxy => {
            SceneObject::GroupProxy(serde_json::from_value::<GroupProxy>(params)?)
        }
    })
}

fn take_field(map: &mut Map<String, Value>, key: &str, ctx: &str) -> Result<Value, SceneError> {
    map.remove(key)
        .ok_or_else(|| SceneError::Schema(format!("{ctx}: missing field `{key}`")))
}

fn reject_extra(map: &Map<String, Value>, ctx: &str) -> Result<(), SceneError> {
    match map.keys().next() {
        Some(k) => Err(SceneError::Schema(format!("{ctx}: unknown field `{k}`"))),
        None => Ok(()),
    }
}

/// Parses and validates an object document. `id` labels errors only.
pub fn object_from_value(value: Value, id: u64) -> Result<SceneObject, SceneError> {
    let Value::Object(mut map) = value else {
        return Err(SceneError::Schema(format!(
            "object {id}: expected a JSON object"
        )));
    };
    let ctx = format!("object {id}");
    let tag = match take_field(&mut map, "type", &ctx)? {
        Value::String(s) => s,
        _ => {
            return Err(SceneError::Schema(format!(
                "{ctx}: `type` must be a string"
            )))
        }
    };
    let kind = ObjectKind::from_tag(&tag).ok_or(SceneError::UnknownTag(tag))?;
    let params = take_field(&mut map, "params", &ctx)?;
    reject_extra(&map, &ctx)?;
    let obj = params_from_value(kind, params)
        .map_err(|e| SceneError::Schema(format!("{ctx} ({}): {e}", kind.tag())))?;
    obj.validate()
        .map_err(|source| SceneError::InvalidObject { id, source })?;
    Ok(obj)
}

fn parse_json(text: &str) -> Result<Value, SceneError> {
    serde_json::from_str(text).map_err(|e| SceneError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses a single inline object document such as a script `add` payload.
pub fn parse_object(text: &str) -> Result<SceneObject, SceneError> {
    object_from_value(parse_json(text)?, 0)
}

pub fn load_scene(text: &str) -> Result<Scene, SceneError> {
    let Value::Object(mut root) = parse_json(text)? else {
        return Err(SceneError::Schema("scene: expected a JSON object".into()));
    };
    let version = take_field(&mut root, "version", "scene")?;
    match version.as_u64() {
        Some(SCENE_VERSION) => {}
        Some(v) => return Err(SceneError::Version(v)),
        None => {
            return Err(SceneError::Schema(
                "scene: `version` must be an integer".into(),
            ))
        }
    }
    let contours_visible = match take_field(&mut root, "contours_visible", "scene")? {
        Value::Bool(b) => b,
        _ => {
            return Err(SceneError::Schema(
                "scene: `contours_visible` must be a boolean".into(),
            ))
        }
    };
    let Value::Array(items) = take_field(&mut root, "objects", "scene")? else {
        return Err(SceneError::Schema(
            "scene: `objects` must be an array".into(),
        ));
    };
    let next_id = match root.remove("next_id") {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .ok_or_else(|| SceneError::Schema("scene: `next_id` must be an integer".into()))?,
        ),
    };
    reject_extra(&root, "scene")?;

    let mut objects = Vec::with_capacity(items.len());
    for (index, item) in items.into_iter().enumerate() {
        let Value::Object(mut entry) = item else {
            return Err(SceneError::Schema(format!(
                "objects[{index}]: expected a JSON object"
            )));
        };
        let ctx = format!("objects[{index}]");
        let id = take_field(&mut entry, "id", &ctx)?
            .as_u64()
            .ok_or_else(|| SceneError::Schema(format!("{ctx}: `id` must be an integer")))?;
        objects.push((MovableId(id), object_from_value(Value::Object(entry), id)?));
    }
    let next_id =
        next_id.unwrap_or_else(|| objects.iter().map(|(id, _)| id.0 + 1).max().unwrap_or(0));
    Scene::from_parts(objects, next_id, contours_visible).ok_or_else(|| {
        SceneError::Schema("scene: object ids must be unique and below `next_id`".into())
    })
}

pub fn scene_to_value(scene: &Scene) -> Value {
    let objects: Vec<Value> = scene
        .iter()
        .map(|(id, obj)| {
            let mut v = object_to_value(obj);
            v["id"] = json!(id.0);
            v
        })
        .collect();
    json!({
        "version": SCENE_VERSION,
        "contours_visible": scene.contours_visible(),
        "next_id": scene.next_id(),
        "objects": objects,
    })
}

/// Canonical text; equal scenes give identical bytes.
pub fn save_scene(scene: &Scene) -> String {
    canonical::to_pretty(&scene_to_value(scene))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn one_tile() -> Scene {
        let mut s = Scene::new();
        s.add(Tile::square(Point::new(10.0, 20.0), 30.5).unwrap().into());
        s
    }

    #[test]
    fn empty_scene_round_trip() {
        let s = Scene::new();
        let text = save_scene(&s);
        assert_eq!(
            text,
            "{\n  \"contours_visible\": false,\n  \"next_id\": 0,\n  \"objects\": [],\n  \"version\": 1\n}\n"
        );
        let back = load_scene(&text).unwrap();
        assert_eq!(back.next_id(), 0);
        assert!(back.is_empty());
        assert_eq!(save_scene(&back), text);
    }

    #[test]
    fn tile_round_trip_is_byte_stable() {
        let s = one_tile();
        let first = save_scene(&s);
        let loaded = load_scene(&first).unwrap();
        assert_eq!(loaded.get(MovableId(0)), s.get(MovableId(0)));
        assert_eq!(save_scene(&loaded), first);
    }

    #[test]
    fn every_kind_round_trips() {
        let mut s = Scene::new();
        for (i, kind) in ObjectKind::ALL.into_iter().enumerate() {
            s.add(SceneObject::default_of(
                kind,
                Point::new(10.0 * i as f64, 5.0),
            ));
        }
        s.set_contours_visible(true);
        let text = save_scene(&s);
        let back = load_scene(&text).unwrap();
        assert_eq!(back.z_order(), s.z_order());
        for (id, obj) in s.iter() {
            assert_eq!(back.get(id), Some(obj));
        }
        assert!(back.contours_visible());
    }

    #[test]
    fn top_down_view_survives_rounding() {
        let mut sky =
            crate::shapes::Skyscrapers::grid(Point::new(100.0, 100.0), &[vec![1.0]]).unwrap();
        sky.set_view(0.3, std::f64::consts::FRAC_PI_2);
        let mut s = Scene::new();
        s.add(sky.into());
        let text = save_scene(&s);
        assert!(text.contains("1.57079633"));
        let back = load_scene(&text).unwrap();
        assert_eq!(save_scene(&back), text);
        let crate::shapes::SceneObject::Skyscrapers(sky) = back.get(MovableId(0)).unwrap() else {
            panic!("skyscrapers expected")
        };
        assert_eq!(sky.phi(), std::f64::consts::FRAC_PI_2);
    }

    #[test]
    fn unknown_tag_is_distinct() {
        let text = r#"{"version":1,"contours_visible":false,"objects":[{"id":0,"type":"blob","params":{}}]}"#;
        assert!(matches!(load_scene(text), Err(SceneError::UnknownTag(t)) if t == "blob"));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = load_scene("{\n  \"version\": 1,\n  oops\n}").unwrap_err();
        assert_eq!(err.line(), Some(3));
        assert!(matches!(err, SceneError::Parse { .. }));
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(
            load_scene(r#"{"version":2,"contours_visible":false,"objects":[]}"#),
            Err(SceneError::Version(2))
        ));
        assert!(matches!(
            load_scene(r#"{"version":1,"objects":[]}"#),
            Err(SceneError::Schema(_))
        ));
        assert!(matches!(
            load_scene(r#"{"version":1,"contours_visible":false,"objects":[],"extra":1}"#),
            Err(SceneError::Schema(_))
        ));
        let dup = r#"{"version":1,"contours_visible":false,"objects":[
            {"id":0,"type":"tile","params":{"vertices":[{"x":0,"y":0},{"x":1,"y":0},{"x":0,"y":1}]}},
            {"id":0,"type":"tile","params":{"vertices":[{"x":0,"y":0},{"x":1,"y":0},{"x":0,"y":1}]}}]}"#;
        assert!(matches!(load_scene(dup), Err(SceneError::Schema(_))));
        let bad = r#"{"version":1,"contours_visible":false,"objects":[
            {"id":4,"type":"tile","params":{"vertices":[{"x":0,"y":0},{"x":1,"y":0}]}}]}"#;
        assert!(matches!(
            load_scene(bad),
            Err(SceneError::InvalidObject { id: 4, .. })
        ));
    }

    #[test]
    fn next_id_defaults_past_largest() {
        let text = r#"{"version":1,"contours_visible":true,"objects":[
            {"id":5,"type":"tile","params":{"vertices":[{"x":0,"y":0},{"x":1,"y":0},{"x":0,"y":1}]}}]}"#;
        let s = load_scene(text).unwrap();
        assert_eq!(s.next_id(), 6);
    }
}

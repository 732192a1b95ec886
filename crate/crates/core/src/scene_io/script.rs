//! Line-oriented pointer event scripts.
//!
//! ```text
//! # comment
//! down 12 40
//! move 15.5 42
//! up
//! add {"type":"tile","params":{"vertices":[{"x":0,"y":0},{"x":40,"y":0},{"x":0,"y":40}]}}
//! remove 3
//! raise 1
//! lower 1
//! toggle_contours
//! ```

use std::fmt;

use super::canonical::{format_number, to_compact};
use super::{object_to_value, parse_object};
use crate::error::ScriptError;
use crate::geometry::Point;
use crate::mover::MovableId;
use crate::shapes::SceneObject;

#[derive(Clone, Debug, PartialEq)]
pub enum Event {
    Down(Point),
    Move(Point),
    Up,
    Add(SceneObject),
    Remove(MovableId),
    /// One z-order slot up.
    Raise(MovableId),
    /// One z-order slot down.
    Lower(MovableId),
    ToggleContours,
}

pub type EventScript = Vec<Event>;

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Down(p) => write!(f, "down {} {}", format_number(p.x), format_number(p.y)),
            Event::Move(p) => write!(f, "move {} {}", format_number(p.x), format_number(p.y)),
            Event::Up => f.write_str("up"),
            Event::Add(obj) => write!(f, "add {}", to_compact(&object_to_value(obj))),
            Event::Remove(id) => write!(f, "remove {id}"),
            Event::Raise(id) => write!(f, "raise {id}"),
            Event::Lower(id) => write!(f, "lower {id}"),
            Event::ToggleContours => f.write_str("toggle_contours"),
        }
    }
}

/// One event per line, newline terminated.
pub fn format_script(events: &[Event]) -> String {
    events.iter().map(|e| format!("{e}\n")).collect()
}

fn coordinate(token: &str, line: usize) -> Result<f64, ScriptError> {
    let v: f64 = token.parse().map_err(|_| ScriptError {
        line,
        message: format!("bad coordinate {token:?}"),
    })?;
    if !v.is_finite() {
        return Err(ScriptError {
            line,
            message: format!("non-finite coordinate {token:?}"),
        });
    }
    Ok(v)
}

fn arity(keyword: &str, want: usize, got: usize, line: usize) -> Result<(), ScriptError> {
    if want == got {
        Ok(())
    } else {
        Err(ScriptError {
            line,
            message: format!("`{keyword}` takes {want} argument(s), got {got}"),
        })
    }
}

fn parse_line(text: &str, line: usize) -> Result<Event, ScriptError> {
    let (keyword, rest) = text
        .split_once(char::is_whitespace)
        .map_or((text, ""), |(k, r)| (k, r.trim()));
    if keyword == "add" {
        if rest.is_empty() {
            return Err(ScriptError {
                line,
                message: "`add` needs an object document".into(),
            });
        }
        return parse_object(rest).map(Event::Add).map_err(|e| ScriptError {
            line,
            message: format!("bad object: {e}"),
        });
    }
    let args: Vec<&str> = rest.split_whitespace().collect();
    match keyword {
        "down" | "move" => {
            arity(keyword, 2, args.len(), line)?;
            let p = Point::new(coordinate(args[0], line)?, coordinate(args[1], line)?);
            Ok(if keyword == "down" {
                Event::Down(p)
            } else {
                Event::Move(p)
            })
        }
        "up" => arity(keyword, 0, args.len(), line).map(|_| Event::Up),
        "toggle_contours" => arity(keyword, 0, args.len(), line).map(|_| Event::ToggleContours),
        "remove" | "raise" | "lower" => {
            arity(keyword, 1, args.len(), line)?;
            let id = MovableId(args[0].parse::<u64>().map_err(|_| ScriptError {
                line,
                message: format!("bad object id {:?}", args[0]),
            })?);
            Ok(match keyword {
                "remove" => Event::Remove(id),
                "raise" => Event::Raise(id),
                _ => Event::Lower(id),
            })
        }
        other => Err(ScriptError {
            line,
            message: format!("unknown event {other:?}"),
        }),
    }
}

/// Parses a script; `#` comments and blank lines are skipped. Lines are
/// numbered from 1.
pub fn parse_script(text: &str) -> Result<EventScript, ScriptError> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split_once('#').map_or(raw, |(before, _)| before).trim();
            (!content.is_empty()).then_some((i + 1, content))
        })
        .map(|(line, content)| parse_line(content, line))
        .collect()
}

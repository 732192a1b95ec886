//! Replay an event script against a scene and take an SVG snapshot, as the
//! `replay` binary does.

use contour_mover::scene_io::{apply_script, load_scene, parse_script, render_svg, save_scene};

const SCENE: &str = r#"{
  "contours_visible": true,
  "objects": [
    {"id": 0, "type": "tile", "params": {"vertices": [{"x": 0, "y": 0}, {"x": 60, "y": 0}, {"x": 0, "y": 60}]}},
    {"id": 1, "type": "scale_strip", "params": {"y": 200, "x0": 50, "x1": 250, "half_height": 6}}
  ],
  "version": 1
}"#;

const SCRIPT: &str = "\
# move the tile by its top edge
down 30 0
move 130 40
up
# stretch the scale
down 250 200
move 320 200
up
";

pub fn run_example() -> String {
    let scene = load_scene(SCENE).unwrap();
    let events = parse_script(SCRIPT).unwrap();
    let (scene, log) = apply_script(scene, &events);
    let svg = render_svg(&scene);
    assert!(svg.contains(r#"class="contour""#));
    let mut out: Vec<String> = log.iter().map(ToString::to_string).collect();
    out.push(save_scene(&scene));
    out.join("\n")
}

fn main() {
    println!("{}", run_example());
}

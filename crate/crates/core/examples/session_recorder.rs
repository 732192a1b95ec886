//! Drive a session the way an interactive front end would, then replay its
//! recording and get the same scene back.

use contour_mover::scene_io::{apply_script, load_scene, parse_script, save_scene};
use contour_mover::Session;

pub fn run_example() -> String {
    let mut s = Session::default();
    let plot = s.add_default("rect_plot", 100.0, 100.0).unwrap();
    s.add_default("ball_graph", 420.0, 120.0).unwrap();

    let hover = s.pointer_move(94.0, 94.0);
    assert_eq!(Session::cursor(&hover), Some("nwse-resize"));
    s.pointer_down(94.0, 94.0);
    s.pointer_move(60.25, 70.5);
    s.pointer_up();
    s.toggle_contours();
    s.lower(plot);

    let replayed = {
        let start = load_scene(s.starting_scene()).unwrap();
        apply_script(start, &parse_script(&s.recording()).unwrap()).0
    };
    assert_eq!(save_scene(&replayed), s.save());
    format!(
        "{} recorded lines replay to the live scene\n{}",
        s.recording().lines().count(),
        s.recording()
    )
}

fn main() {
    println!("{}", run_example());
}

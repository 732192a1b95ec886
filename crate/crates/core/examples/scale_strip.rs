//! A horizontal scale whose ends slide along a track but never leave it.

use contour_mover::shapes::{ScaleStrip, Track};
use contour_mover::{MoveOutcome, Mover, Point};

pub fn run_example() -> String {
    let mut movers = Mover::new();
    let strip = ScaleStrip::new(Point::new(100.0, 50.0), 300.0, 6.0)
        .unwrap()
        .with_track(
            Track {
                min_x: 50.0,
                max_x: 400.0,
            },
            40.0,
        )
        .unwrap();
    let id = movers.add(strip);

    // drag the right end far past the track, and off its row
    movers.catch(Point::new(300.0, 50.0));
    let out = movers.move_to(Point::new(900.0, 10.0));
    movers.release();
    let MoveOutcome::NodeMoved { to, .. } = out else {
        panic!("expected the end node to move, got {out:?}")
    };
    assert_eq!(to, Point::new(400.0, 50.0));

    // the left end cannot come closer than the minimum length
    movers.catch(Point::new(100.0, 50.0));
    movers.move_to(Point::new(390.0, 50.0));
    movers.release();
    let s = movers.get(id).unwrap();
    assert!(s.length() >= s.min_len());
    format!("strip from {:?} to {:?}", s.start(), s.end())
}

fn main() {
    println!("{}", run_example());
}

//! A control group stands in for several widgets: it moves as one and has no
//! resize handles.

use contour_mover::geometry::Rect;
use contour_mover::shapes::GroupProxy;
use contour_mover::{ContourHit, MoveOutcome, Mover, Point};

pub fn run_example() -> String {
    let mut movers = Mover::new();
    let id =
        movers.add(GroupProxy::new(Rect::from_xywh(10.0, 10.0, 120.0, 80.0).unwrap(), 7).unwrap());

    // a corner grabs the edge connection, never a node
    movers.catch(Point::new(10.0, 10.0));
    assert!(matches!(
        movers.grab().unwrap().hit,
        ContourHit::Connection(_)
    ));
    let out = movers.move_to(Point::new(60.0, 35.0));
    assert!(matches!(out, MoveOutcome::Translated { .. }));
    movers.release();

    let r = movers.get(id).unwrap().rect();
    assert_eq!((r.width(), r.height()), (120.0, 80.0));
    format!(
        "group {} moved to {:?}",
        movers.get(id).unwrap().payload(),
        r.min
    )
}

fn main() {
    println!("{}", run_example());
}

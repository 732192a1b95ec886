//! Resize a plot through its corner and side handles; drag its frame to move it.

use contour_mover::geometry::Rect;
use contour_mover::shapes::{RectPlot, RectPlotNode};
use contour_mover::{Movable, Mover, Point};

pub fn run_example() -> String {
    let mut movers = Mover::new();
    let plot =
        RectPlot::with_defaults(Rect::from_xywh(100.0, 100.0, 200.0, 120.0).unwrap()).unwrap();
    let id = movers.add(plot);

    // bottom-right corner: both sides follow
    let corner = movers.get(id).unwrap().contour().nodes()[RectPlotNode::BottomRight.id()].position;
    movers.catch(corner);
    movers.move_to(Point::new(corner.x + 40.0, corner.y + 30.0));
    movers.release();
    assert_eq!(
        movers.get(id).unwrap().area(),
        Rect::from_xywh(100.0, 100.0, 240.0, 150.0).unwrap()
    );

    // the top handle only moves vertically, and stops at the minimum height
    let top = movers.get(id).unwrap().contour().nodes()[RectPlotNode::Top.id()].position;
    movers.catch(top);
    movers.move_to(Point::new(top.x + 500.0, top.y + 1000.0));
    movers.release();
    let area = movers.get(id).unwrap().area();
    assert_eq!(area.height(), movers.get(id).unwrap().min_size());
    assert_eq!((area.min.x, area.max.x), (100.0, 340.0));

    // the frame edge moves the whole plot
    let frame = movers.get(id).unwrap().frame();
    movers.catch(Point::new(frame.center().x + 30.0, frame.min.y));
    movers.move_to(Point::new(frame.center().x + 30.0 - 100.0, frame.min.y));
    movers.release();
    format!("plot area {:?}", movers.get(id).unwrap().area())
}

fn main() {
    println!("{}", run_example());
}

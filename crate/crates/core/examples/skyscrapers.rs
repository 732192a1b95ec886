//! Turn and zoom a 3D bar chart by dragging its axis ends; hidden towers
//! come into view when the chart is turned around.

use std::f64::consts::PI;

use contour_mover::shapes::{Skyscrapers, Tower};
use contour_mover::{Mover, Point};

pub fn run_example() -> String {
    let towers = vec![
        Tower {
            x: 0.5,
            y: 2.5,
            height: 1.0,
        },
        Tower {
            x: 0.5,
            y: 0.5,
            height: 5.0,
        },
    ];
    let sky = Skyscrapers::new(Point::new(300.0, 300.0), 0.0, 0.3, 30.0, 4.0, towers).unwrap();
    let before = sky.paint_order();
    let mut movers = Mover::new();
    let id = movers.add(sky);

    // pull the x-axis end outwards: same direction, twice the distance
    let [o, x_end, ..] = movers.get(id).unwrap().node_positions();
    movers.catch(x_end);
    movers.move_to(Point::new(
        o.x + 2.0 * (x_end.x - o.x),
        o.y + 2.0 * (x_end.y - o.y),
    ));
    movers.release();
    assert_eq!(movers.get(id).unwrap().scale(), 60.0);

    let mut turned = movers.get(id).unwrap().clone();
    turned.set_view(PI, 0.3);
    let after = turned.paint_order();
    assert_eq!(after, vec![1, 0]);
    format!("paint order {before:?} at theta 0, {after:?} at theta pi")
}

fn main() {
    println!("{}", run_example());
}

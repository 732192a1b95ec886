//! Balls are nodes, links are connections: drag a ball to reshape the graph,
//! drag a link to move all of it.

use contour_mover::shapes::BallGraph;
use contour_mover::{Mover, Point};

pub fn run_example() -> String {
    let mut g = BallGraph::default();
    let a = g.add_ball(Point::new(100.0, 100.0), 10.0);
    let b = g.add_ball(Point::new(200.0, 100.0), 10.0);
    let c = g.add_ball(Point::new(150.0, 180.0), 10.0);
    g.link(a, b).unwrap().link(b, c).unwrap();

    let mut movers = Mover::new();
    let id = movers.add(g);

    movers.catch(Point::new(152.0, 182.0));
    movers.move_to(Point::new(152.0, 242.0));
    movers.release();
    assert_eq!(
        movers.get(id).unwrap().balls()[c].center,
        Point::new(150.0, 240.0)
    );

    movers.catch(Point::new(150.0, 100.0));
    movers.move_to(Point::new(160.0, 90.0));
    movers.release();
    let centers: Vec<Point> = movers
        .get(id)
        .unwrap()
        .balls()
        .iter()
        .map(|b| b.center)
        .collect();
    assert_eq!(centers[a], Point::new(110.0, 90.0));
    format!("ball centres {centers:?}")
}

fn main() {
    println!("{}", run_example());
}

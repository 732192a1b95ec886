//! Grab a tile by its edge and drag it; overlapping objects raise on catch.

use contour_mover::shapes::Tile;
use contour_mover::{ContourHit, MoveOutcome, Mover, Point};

pub fn run_example() -> String {
    let mut movers = Mover::new();
    let back = movers.add(Tile::square(Point::new(0.0, 0.0), 100.0).unwrap());
    let front = movers.add(Tile::square(Point::new(50.0, 50.0), 100.0).unwrap());

    // a point on the back tile's right edge, covered by nothing else
    let edge = Point::new(100.0, 20.0);
    let (hit_id, hit) = movers.hit_at(edge).unwrap();
    assert_eq!((hit_id, hit), (back, ContourHit::Connection(1)));

    assert_eq!(movers.catch(edge), Some(back));
    assert_eq!(movers.z_order(), vec![front, back]);
    let out = movers.move_to(Point::new(130.0, 60.0));
    assert!(matches!(out, MoveOutcome::Translated { .. }));
    movers.release();

    let tile = movers.get(back).unwrap();
    format!(
        "tile {back} now starts at {:?}, painted above tile {front}",
        tile.vertices()[0]
    )
}

fn main() {
    println!("{}", run_example());
}

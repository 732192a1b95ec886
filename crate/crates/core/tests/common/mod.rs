//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use contour_mover::contour::ContourBuilder;
use contour_mover::shapes::{
    Ball, BallGraph, GroupProxy, RectPlot, ScaleStrip, Skyscrapers, Tile, Tower, Track,
};
use contour_mover::{
    Contour, Event, Freedom, Movable, NodeShape, ObjectKind, Point, Rect, Scene, SceneObject,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn point_in(rng: &mut TestRng, region: Rect) -> Point {
    Point::new(
        rng.gen_range(region.min.x..=region.max.x),
        rng.gen_range(region.min.y..=region.max.y),
    )
}

pub fn canvas() -> Rect {
    Rect::from_xywh(0.0, 0.0, 800.0, 600.0).unwrap()
}

/// Star-shaped, hence simple, polygon around `center`. Consecutive vertex
/// angles stay less than half a turn apart so the centre is enclosed.
pub fn star_polygon(rng: &mut TestRng, center: Point, r_min: f64, r_max: f64) -> Vec<Point> {
    let n = rng.gen_range(3..=8);
    (0..n)
        .map(|i| {
            let a = (i as f64 + rng.gen_range(0.3..0.7)) * TAU / n as f64;
            let r = rng.gen_range(r_min..=r_max);
            Point::new(center.x + r * a.cos(), center.y + r * a.sin())
        })
        .collect()
}

fn random_shape(rng: &mut TestRng) -> NodeShape {
    match rng.gen_range(0..3) {
        0 => NodeShape::Disc {
            radius: rng.gen_range(0.0..12.0),
        },
        1 => NodeShape::Box {
            half_width: rng.gen_range(0.0..10.0),
            half_height: rng.gen_range(0.0..10.0),
        },
        _ => NodeShape::Polygon {
            vertices: star_polygon(rng, Point::new(0.0, 0.0), 2.0, 14.0),
        },
    }
}

fn random_freedom(rng: &mut TestRng) -> Freedom {
    *[
        Freedom::Free,
        Freedom::HorizontalOnly,
        Freedom::VerticalOnly,
        Freedom::None,
    ]
    .choose(rng)
    .unwrap()
}

/// Arbitrary contour in a 200x200 box: mixed node shapes and freedoms,
/// some empty nodes, some clipped, and random connections.
pub fn random_contour(rng: &mut TestRng) -> Contour {
    let region = Rect::from_xywh(0.0, 0.0, 200.0, 200.0).unwrap();
    let mut b = ContourBuilder::default();
    let n = rng.gen_range(0..=10);
    for _ in 0..n {
        let at = point_in(rng, region);
        if rng.gen_bool(0.15) {
            b.empty_node(at);
            continue;
        }
        let clip = rng.gen_bool(0.2).then(|| {
            Rect::new(
                Point::new(at.x - 20.0, at.y - 20.0),
                Point::new(at.x + 20.0, at.y + 20.0),
            )
            .unwrap()
        });
        b.clipped_node(at, random_shape(rng), random_freedom(rng), clip);
    }
    if n >= 2 {
        for _ in 0..rng.gen_range(0..=2 * n) {
            let a = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            if a != c {
                b.connect(a, c, rng.gen_range(0.0..6.0));
            }
        }
    }
    b.build().unwrap()
}

pub fn random_object(rng: &mut TestRng, kind: ObjectKind) -> SceneObject {
    let at = point_in(rng, Rect::from_xywh(0.0, 0.0, 600.0, 450.0).unwrap());
    match kind {
        ObjectKind::RectPlot => {
            let area = Rect::from_xywh(
                at.x,
                at.y,
                rng.gen_range(25.0..260.0),
                rng.gen_range(25.0..200.0),
            )
            .unwrap();
            RectPlot::with_defaults(area).unwrap().into()
        }
        ObjectKind::ScaleStrip => {
            let len = rng.gen_range(30.0..250.0);
            let strip = ScaleStrip::new(at, at.x + len, rng.gen_range(3.0..9.0)).unwrap();
            if rng.gen_bool(0.6) {
                let track = Track {
                    min_x: at.x - rng.gen_range(0.0..80.0),
                    max_x: at.x + len + rng.gen_range(0.0..80.0),
                };
                strip
                    .with_track(track, rng.gen_range(0.0..len))
                    .unwrap()
                    .into()
            } else {
                strip.into()
            }
        }
        ObjectKind::Skyscrapers => {
            let towers = (0..rng.gen_range(0..6))
                .map(|_| Tower {
                    x: rng.gen_range(0.0..4.0),
                    y: rng.gen_range(0.0..4.0),
                    height: rng.gen_range(0.0..5.0),
                })
                .collect();
            Skyscrapers::new(
                Point::new(at.x + 60.0, at.y + 120.0),
                rng.gen_range(-PI..PI),
                rng.gen_range(0.0..=FRAC_PI_2),
                rng.gen_range(8.0..40.0),
                rng.gen_range(2.0..6.0),
                towers,
            )
            .unwrap()
            .into()
        }
        ObjectKind::BallGraph => {
            let n = rng.gen_range(1..=6);
            let balls = (0..n)
                .map(|_| Ball {
                    center: Point::new(
                        at.x + rng.gen_range(0.0..150.0),
                        at.y + rng.gen_range(0.0..150.0),
                    ),
                    radius: rng.gen_range(2.0..18.0),
                })
                .collect();
            let mut links = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.4) {
                        links.push([a, b]);
                    }
                }
            }
            BallGraph::new(balls, links).unwrap().into()
        }
        ObjectKind::Tile => Tile::new(star_polygon(rng, at, 10.0, 60.0)).unwrap().into(),
        ObjectKind::GroupProxy => {
            let rect = Rect::from_xywh(
                at.x,
                at.y,
                rng.gen_range(10.0..220.0),
                rng.gen_range(10.0..160.0),
            )
            .unwrap();
            GroupProxy::new(rect, rng.gen()).unwrap().into()
        }
    }
}

pub fn random_scene(rng: &mut TestRng, kinds: &[ObjectKind], count: usize) -> Scene {
    let mut scene = Scene::new();
    for _ in 0..count {
        let kind = *kinds.choose(rng).unwrap();
        scene.add(random_object(rng, kind));
    }
    if rng.gen_bool(0.3) {
        scene.set_contours_visible(true);
    }
    scene
}

/// A pointer position that tends to land on contours in `scene`: near a
/// node, near a connection, or anywhere on the canvas.
pub fn aimed_point(rng: &mut TestRng, scene: &Scene) -> Point {
    let objects: Vec<&SceneObject> = scene.iter().map(|(_, o)| o).collect();
    if objects.is_empty() || rng.gen_bool(0.2) {
        return point_in(rng, Rect::from_xywh(-50.0, -50.0, 900.0, 700.0).unwrap());
    }
    let contour = objects.choose(rng).unwrap().contour();
    let jitter =
        |rng: &mut TestRng, r: f64| Point::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
    if !contour.connections().is_empty() && rng.gen_bool(0.5) {
        let (a, b) = contour
            .segment(rng.gen_range(0..contour.connections().len()))
            .unwrap();
        let t = rng.gen_range(0.0..=1.0);
        let j = jitter(rng, 4.0);
        Point::new(a.x + t * (b.x - a.x) + j.x, a.y + t * (b.y - a.y) + j.y)
    } else if let Some(node) = contour.nodes().choose(rng) {
        let j = jitter(rng, 6.0);
        Point::new(node.position.x + j.x, node.position.y + j.y)
    } else {
        point_in(rng, canvas())
    }
}

/// Next fuzz event for `scene`: mostly pointer traffic aimed at contours,
/// with occasional z-order and visibility changes.
pub fn fuzz_event(rng: &mut TestRng, scene: &Scene) -> Event {
    let ids = scene.z_order();
    let grabbed = scene.grab().is_some();
    let roll: f64 = rng.gen();
    if grabbed {
        match roll {
            r if r < 0.72 => Event::Move(drag_point(rng, scene)),
            r if r < 0.92 => Event::Up,
            r if r < 0.96 => Event::Down(aimed_point(rng, scene)),
            _ => side_event(rng, &ids),
        }
    } else {
        match roll {
            r if r < 0.5 => Event::Down(aimed_point(rng, scene)),
            r if r < 0.85 => Event::Move(aimed_point(rng, scene)),
            r if r < 0.9 => Event::Up,
            _ => side_event(rng, &ids),
        }
    }
}

fn drag_point(rng: &mut TestRng, scene: &Scene) -> Point {
    if rng.gen_bool(0.7) {
        let base = scene
            .grab()
            .map_or(Point::new(400.0, 300.0), |_| aimed_point(rng, scene));
        Point::new(
            base.x + rng.gen_range(-60.0..60.0),
            base.y + rng.gen_range(-60.0..60.0),
        )
    } else {
        point_in(rng, Rect::from_xywh(-100.0, -100.0, 1000.0, 800.0).unwrap())
    }
}

fn side_event(rng: &mut TestRng, ids: &[contour_mover::MovableId]) -> Event {
    let id = ids
        .choose(rng)
        .copied()
        .unwrap_or(contour_mover::MovableId(0));
    match rng.gen_range(0..3) {
        0 => Event::Raise(id),
        1 => Event::Lower(id),
        _ => Event::ToggleContours,
    }
}

/// Pairwise distances between contour nodes.
pub fn node_distances(contour: &Contour) -> Vec<f64> {
    let nodes = contour.nodes();
    let mut out = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            out.push(a.position.distance(b.position));
        }
    }
    out
}

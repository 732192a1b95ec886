//! Deterministic SVG 1.1 snapshots of a scene.
//!
//! One top-level `<g>` per object body in painter order; when contours are
//! visible each body is followed by a `<g class="contour">` overlay.
//! Coordinates are printed with three decimals.

use std::fmt::Write as _;

use super::Scene;
use crate::contour::{Contour, NodeShape};
use crate::geometry::Point;
use crate::mover::Movable;
use crate::shapes::{BallGraph, GroupProxy, RectPlot, ScaleStrip, SceneObject, Skyscrapers, Tile};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    pub width: u32,
    pub height: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            width: 1024,
            height: 768,
        }
    }
}

fn n(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

fn points_attr(points: &[Point]) -> String {
    points
        .iter()
        .map(|p| format!("{},{}", n(p.x), n(p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

struct Writer {
    out: String,
}

impl Writer {
    fn line(&mut self, indent: usize, text: &str) {
        for _ in 0..indent {
            self.out.push_str("  ");
        }
        self.out.push_str(text);
        self.out.push('\n');
    }

    fn seg(&mut self, indent: usize, a: Point, b: Point, attrs: &str) {
        self.line(
            indent,
            &format!(
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {attrs}/>"#,
                n(a.x),
                n(a.y),
                n(b.x),
                n(b.y)
            ),
        );
    }

    fn circle(&mut self, indent: usize, c: Point, r: f64, attrs: &str) {
        self.line(
            indent,
            &format!(
                r#"<circle cx="{}" cy="{}" r="{}" {attrs}/>"#,
                n(c.x),
                n(c.y),
                n(r)
            ),
        );
    }

    fn rect(&mut self, indent: usize, min: Point, w: f64, h: f64, attrs: &str) {
        self.line(
            indent,
            &format!(
                r#"<rect x="{}" y="{}" width="{}" height="{}" {attrs}/>"#,
                n(min.x),
                n(min.y),
                n(w),
                n(h)
            ),
        );
    }

    fn polygon(&mut self, indent: usize, points: &[Point], attrs: &str) {
        self.line(
            indent,
            &format!(r#"<polygon points="{}" {attrs}/>"#, points_attr(points)),
        );
    }
}

fn rect_plot(w: &mut Writer, plot: &RectPlot) {
    let a = plot.area();
    w.rect(
        2,
        a.min,
        a.width(),
        a.height(),
        r##"fill="#ffffff" stroke="#1f3b73" stroke-width="1""##,
    );
    // decorative axes and a sample curve
    let (x0, x1, y0, y1) = (a.min.x, a.max.x, a.min.y, a.max.y);
    let base = y1 - a.height() * 0.1;
    let left = x0 + a.width() * 0.08;
    w.seg(
        2,
        Point::new(left, base),
        Point::new(x1 - a.width() * 0.04, base),
        r##"stroke="#808080" stroke-width="1""##,
    );
    w.seg(
        2,
        Point::new(left, base),
        Point::new(left, y0 + a.height() * 0.06),
        r##"stroke="#808080" stroke-width="1""##,
    );
    let samples = 32;
    let mut d = String::new();
    for i in 0..=samples {
        let t = i as f64 / samples as f64;
        let x = left + t * (x1 - a.width() * 0.04 - left);
        let y = base
            - (0.5 + 0.4 * (t * std::f64::consts::TAU).sin()) * (base - y0 - a.height() * 0.06);
        let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, n(x), n(y));
    }
    w.line(
        2,
        &format!(r##"<path d="{d}" fill="none" stroke="#c0392b" stroke-width="1.5"/>"##),
    );
}

fn scale_strip(w: &mut Writer, s: &ScaleStrip) {
    let (a, b) = (s.start(), s.end());
    w.seg(2, a, b, r##"stroke="#2c3e50" stroke-width="2""##);
    let ticks = 10;
    for i in 0..=ticks {
        let x = a.x + (b.x - a.x) * i as f64 / ticks as f64;
        let h = if i % 5 == 0 {
            s.half_height() * 2.0
        } else {
            s.half_height()
        };
        w.seg(
            2,
            Point::new(x, a.y - h),
            Point::new(x, a.y),
            r##"stroke="#2c3e50" stroke-width="1""##,
        );
    }
}

fn skyscrapers(w: &mut Writer, s: &Skyscrapers) {
    let [o, xe, ye, ze] = s.node_positions();
    for end in [xe, ye, ze] {
        w.seg(2, o, end, r##"stroke="#555555" stroke-width="1""##);
    }
    for index in s.paint_order() {
        w.line(2, &format!(r#"<g class="tower" data-index="{index}">"#));
        w.polygon(
            3,
            &s.tower_outline(index),
            r##"fill="#7f8c8d" stroke="#2c3e50" stroke-width="0.5""##,
        );
        w.polygon(
            3,
            &s.tower_roof(index),
            r##"fill="#bdc3c7" stroke="#2c3e50" stroke-width="0.5""##,
        );
        w.line(2, "</g>");
    }
}

fn ball_graph(w: &mut Writer, g: &BallGraph) {
    for &[a, b] in g.links() {
        w.seg(
            2,
            g.balls()[a].center,
            g.balls()[b].center,
            r##"stroke="#34495e" stroke-width="2""##,
        );
    }
    for ball in g.balls() {
        w.circle(
            2,
            ball.center,
            ball.radius,
            r##"fill="#e67e22" stroke="#784212" stroke-width="1""##,
        );
    }
}

fn tile(w: &mut Writer, t: &Tile) {
    w.polygon(
        2,
        t.vertices(),
        r##"fill="#f4d03f" stroke="#7d6608" stroke-width="1""##,
    );
}

fn group_proxy(w: &mut Writer, g: &GroupProxy) {
    let r = g.rect();
    w.rect(
        2,
        r.min,
        r.width(),
        r.height(),
        &format!(
            r##"fill="#ecf0f1" stroke="#7f8c8d" stroke-width="1" stroke-dasharray="4 2" data-payload="{}""##,
            g.payload()
        ),
    );
}

fn overlay(w: &mut Writer, contour: &Contour) {
    const STROKE: &str = r##"fill="none" stroke="#e74c3c" stroke-width="1""##;
    for i in 0..contour.connections().len() {
        let (a, b) = contour.segment(i).expect("index in range");
        w.seg(
            2,
            a,
            b,
            r##"stroke="#e74c3c" stroke-width="1" stroke-opacity="0.6""##,
        );
    }
    for node in contour.nodes() {
        let p = node.position;
        if node.is_empty() {
            w.circle(
                2,
                p,
                2.0,
                r##"fill="none" stroke="#95a5a6" stroke-width="1" class="empty""##,
            );
            continue;
        }
        match &node.shape {
            NodeShape::Disc { radius } => w.circle(2, p, *radius, STROKE),
            NodeShape::Box {
                half_width,
                half_height,
            } => w.rect(
                2,
                Point::new(p.x - half_width, p.y - half_height),
                half_width * 2.0,
                half_height * 2.0,
                STROKE,
            ),
            NodeShape::Polygon { vertices } => {
                let abs: Vec<Point> = vertices
                    .iter()
                    .map(|v| Point::new(p.x + v.x, p.y + v.y))
                    .collect();
                w.polygon(2, &abs, STROKE);
            }
        }
    }
}

pub fn render_svg(scene: &Scene) -> String {
    render_svg_with(scene, &SvgOptions::default())
}

pub fn render_svg_with(scene: &Scene, opts: &SvgOptions) -> String {
    let mut w = Writer { out: String::new() };
    w.line(0, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    w.line(
        0,
        &format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
            opts.width, opts.height
        ),
    );
    for (id, obj) in scene.iter() {
        w.line(
            1,
            &format!(
                r#"<g class="object" data-id="{id}" data-type="{}">"#,
                obj.kind().tag()
            ),
        );
        match obj {
            SceneObject::RectPlot(o) => rect_plot(&mut w, o),
            SceneObject::ScaleStrip(o) => scale_strip(&mut w, o),
            SceneObject::Skyscrapers(o) => skyscrapers(&mut w, o),
            SceneObject::BallGraph(o) => ball_graph(&mut w, o),
            SceneObject::Tile(o) => tile(&mut w, o),
            SceneObject::GroupProxy(o) => group_proxy(&mut w, o),
        }
        w.line(1, "</g>");
        if scene.contours_visible() {
            w.line(1, &format!(r#"<g class="contour" data-id="{id}">"#));
            overlay(&mut w, &obj.contour());
            w.line(1, "</g>");
        }
    }
    w.line(0, "</svg>");
    w.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Rect;
    use crate::shapes::{ObjectKind, RectPlot};

    fn top_level_groups(svg: &str) -> usize {
        let doc = roxmltree::Document::parse(svg).expect("well-formed svg");
        doc.root_element()
            .children()
            .filter(|c| c.is_element() && c.tag_name().name() == "g")
            .count()
    }

    fn two_objects() -> Scene {
        let mut s = Scene::new();
        s.add(SceneObject::default_of(
            ObjectKind::Tile,
            Point::new(10.0, 10.0),
        ));
        s.add(
            RectPlot::with_defaults(Rect::from_xywh(100.0, 100.0, 200.0, 100.0).unwrap())
                .unwrap()
                .into(),
        );
        s
    }

    #[test]
    fn group_structure() {
        let mut s = two_objects();
        assert_eq!(top_level_groups(&render_svg(&s)), 2);
        s.set_contours_visible(true);
        assert_eq!(top_level_groups(&render_svg(&s)), 4);
    }

    #[test]
    fn deterministic_and_toggle_neutral() {
        let mut s = two_objects();
        let first = render_svg(&s);
        assert_eq!(render_svg(&s), first);
        s.set_contours_visible(true);
        s.set_contours_visible(false);
        assert_eq!(render_svg(&s), first);
    }

    #[test]
    fn every_kind_renders_well_formed() {
        let mut s = Scene::new();
        for kind in ObjectKind::ALL {
            s.add(SceneObject::default_of(kind, Point::new(50.0, 60.0)));
        }
        s.set_contours_visible(true);
        let svg = render_svg(&s);
        assert_eq!(top_level_groups(&svg), 12);
        assert!(svg.contains(r#"class="tower""#));
    }

    #[test]
    fn negative_zero_is_normalised() {
        assert_eq!(n(-0.0001), "0.000");
        assert_eq!(n(1.23456), "1.235");
    }
}

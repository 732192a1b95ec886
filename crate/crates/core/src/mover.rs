//! The mover: a z-ordered registry of movable objects and the single active
//! grab.
//!
//! A UI drives it with three calls from its pointer handlers:
//!
//! ```
//! use contour_mover::{Mover, Point, shapes::Tile};
//!
//! let mut movers = Mover::new();
//! let tile = Tile::square(Point::new(0.0, 0.0), 40.0).unwrap();
//! let id = movers.add(tile);
//!
//! // pointer down, move, up
//! assert_eq!(movers.catch(Point::new(20.0, 0.0)), Some(id));
//! movers.move_to(Point::new(25.0, 10.0));
//! assert_eq!(movers.release(), Some(id));
//! ```
//!
//! Objects are stored bottom to top; the last one is painted last and wins
//! hit tests.

use serde::{Deserialize, Serialize};

use crate::contour::{Contour, ContourHit, Hint};
use crate::geometry::{Delta, Point};

/// Behaviour every object managed by a [`Mover`] provides.
///
/// Implementations must keep their contour consistent with their geometry:
/// after `on_translate(d)` the contour equals the old contour translated by
/// `d`, and the point returned by `on_node_move` equals the new position of
/// that node in `contour()`.
pub trait Movable {
    fn contour(&self) -> Contour;

    /// Whole-object move. Always accepted.
    fn on_translate(&mut self, d: Delta);

    /// Moves node `node` towards `to` (already freedom/clip constrained).
    /// The object may adjust the point; the accepted position is returned.
    fn on_node_move(&mut self, node: usize, to: Point) -> Point;
}

/// Identifier of an object within one mover; never reused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MovableId(pub u64);

impl std::fmt::Display for MovableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// What the mover currently holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrabState {
    pub object: MovableId,
    /// Never `ContourHit::None`.
    pub hit: ContourHit,
    /// Pointer minus grabbed anchor at catch time; zero for connection grabs.
    pub offset: Delta,
    catch_point: Point,
    anchor: Point,
    last_pointer: Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MoveOutcome {
    Translated {
        object: MovableId,
        delta: Delta,
    },
    NodeMoved {
        object: MovableId,
        node: usize,
        from: Point,
        to: Point,
    },
    Hint {
        hint: Hint,
    },
    Idle,
}

#[derive(Clone, Debug)]
pub struct Mover<T> {
    objects: Vec<(MovableId, T)>,
    next_id: u64,
    grab: Option<GrabState>,
    contours_visible: bool,
    raise_on_catch: bool,
}

impl<T> Default for Mover<T> {
    fn default() -> Self {
        Self {
            objects: Vec::new(),
            next_id: 0,
            grab: None,
            contours_visible: false,
            raise_on_catch: true,
        }
    }
}

impl<T: Movable> Mover<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rebuilds a mover from stored parts. Returns `None` if ids repeat or
    /// are not below `next_id`.
    pub fn from_parts(
        objects: Vec<(MovableId, T)>,
        next_id: u64,
        contours_visible: bool,
    ) -> Option<Self> {
        let mut seen: Vec<u64> = objects.iter().map(|(id, _)| id.0).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) || seen.last().is_some_and(|&m| m >= next_id) {
            return None;
        }
        Some(Self {
            objects,
            next_id,
            contours_visible,
            ..Self::default()
        })
    }

    pub fn with_raise_on_catch(mut self, raise: bool) -> Self {
        self.raise_on_catch = raise;
        self
    }

    /// Places `obj` on top of the z-order.
    pub fn add(&mut self, obj: T) -> MovableId {
        let id = MovableId(self.next_id);
        self.next_id += 1;
        self.objects.push((id, obj));
        id
    }

    /// Removes an object, cancelling the grab first if it was held.
    pub fn remove(&mut self, id: MovableId) -> Option<T> {
        let index = self.index_of(id)?;
        if self.grab.is_some_and(|g| g.object == id) {
            self.grab = None;
        }
        Some(self.objects.remove(index).1)
    }

    /// Topmost object whose contour is hit at `p`.
    pub fn hit_at(&self, p: Point) -> Option<(MovableId, ContourHit)> {
        self.objects.iter().rev().find_map(|(id, obj)| {
            let hit = obj.contour().hit_test(p);
            (!hit.is_none()).then_some((*id, hit))
        })
    }

    /// Pointer down. Grabs the topmost object hit at `p`.
    ///
    /// While a grab is active this is a no-op returning the held id.
    pub fn catch(&mut self, p: Point) -> Option<MovableId> {
        if let Some(grab) = self.grab {
            return Some(grab.object);
        }
        if p.validate().is_err() {
            return None;
        }
        let (index, hit, anchor) =
            self.objects
                .iter()
                .enumerate()
                .rev()
                .find_map(|(i, (_, obj))| {
                    let contour = obj.contour();
                    match contour.hit_test(p) {
                        ContourHit::None => None,
                        hit @ ContourHit::Node(node) => {
                            Some((i, hit, contour.nodes()[node].position))
                        }
                        hit @ ContourHit::Connection(_) => Some((i, hit, p)),
                    }
                })?;
        let object = self.objects[index].0;
        self.grab = Some(GrabState {
            object,
            hit,
            offset: p - anchor,
            catch_point: p,
            anchor,
            last_pointer: p,
        });
        if self.raise_on_catch {
            let entry = self.objects.remove(index);
            self.objects.push(entry);
        }
        Some(object)
    }

    /// Pointer move. Drags the held object, or reports a hover hint.
    ///
    /// Non-finite pointers are ignored and reported as idle.
    pub fn move_to(&mut self, p: Point) -> MoveOutcome {
        if p.validate().is_err() {
            return MoveOutcome::Idle;
        }
        let Some(mut grab) = self.grab else {
            return self
                .hit_at(p)
                .map_or(MoveOutcome::Idle, |(_, hit)| MoveOutcome::Hint {
                    hint: hit.hint(),
                });
        };
        let Some(index) = self.index_of(grab.object) else {
            self.grab = None;
            return MoveOutcome::Idle;
        };
        let obj = &mut self.objects[index].1;
        let outcome = match grab.hit {
            ContourHit::Connection(_) => {
                let delta = p - grab.last_pointer;
                obj.on_translate(delta);
                MoveOutcome::Translated {
                    object: grab.object,
                    delta,
                }
            }
            ContourHit::Node(node) => {
                let contour = obj.contour();
                // the object may have changed under the grab
                let constrained = contour.node(node).map(|n| {
                    // anchor + (p - catch) == p - offset, exact when p == catch
                    let proposed = grab.anchor + (p - grab.catch_point);
                    (n.position, n.constrain(proposed))
                });
                match constrained {
                    Some((from, Ok(target))) => MoveOutcome::NodeMoved {
                        object: grab.object,
                        node,
                        from,
                        to: obj.on_node_move(node, target),
                    },
                    _ => {
                        self.grab = None;
                        return MoveOutcome::Idle;
                    }
                }
            }
            ContourHit::None => unreachable!("grab never holds ContourHit::None"),
        };
        grab.last_pointer = p;
        self.grab = Some(grab);
        outcome
    }

    /// Pointer up. Returns the id that was held. Idempotent.
    pub fn release(&mut self) -> Option<MovableId> {
        self.grab.take().map(|g| g.object)
    }
}

impl<T> Mover<T> {
    fn index_of(&self, id: MovableId) -> Option<usize> {
        self.objects.iter().position(|(oid, _)| *oid == id)
    }

    pub fn grab(&self) -> Option<&GrabState> {
        self.grab.as_ref()
    }

    pub fn contours_visible(&self) -> bool {
        self.contours_visible
    }

    /// Affects rendering only; hit testing ignores it.
    pub fn set_contours_visible(&mut self, visible: bool) {
        self.contours_visible = visible;
    }

    pub fn next_id(&self) -> u64 {
        self.next_id
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn get(&self, id: MovableId) -> Option<&T> {
        self.index_of(id).map(|i| &self.objects[i].1)
    }

    pub fn get_mut(&mut self, id: MovableId) -> Option<&mut T> {
        self.index_of(id).map(move |i| &mut self.objects[i].1)
    }

    /// Objects bottom to top (painter order).
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (MovableId, &T)> + ExactSizeIterator {
        self.objects.iter().map(|(id, obj)| (*id, obj))
    }

    /// Ids bottom to top.
    pub fn z_order(&self) -> Vec<MovableId> {
        self.objects.iter().map(|(id, _)| *id).collect()
    }

    /// Moves an object one slot towards the top.
    pub fn raise(&mut self, id: MovableId) -> bool {
        match self.index_of(id) {
            Some(i) if i + 1 < self.objects.len() => {
                self.objects.swap(i, i + 1);
                true
            }
            _ => false,
        }
    }

    /// Moves an object one slot towards the bottom.
    pub fn lower(&mut self, id: MovableId) -> bool {
        match self.index_of(id) {
            Some(i) if i > 0 => {
                self.objects.swap(i, i - 1);
                true
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::{Freedom, NodeShape};

    /// Horizontal bar: node 0 at `left` (free, r=4), node 1 at `right`
    /// (empty), one connection with halfwidth 2.
    #[derive(Clone, Debug, PartialEq)]
    struct Bar {
        left: Point,
        right: Point,
    }

    fn bar(x0: f64, x1: f64, y: f64) -> Bar {
        Bar {
            left: Point::new(x0, y),
            right: Point::new(x1, y),
        }
    }

    impl Movable for Bar {
        fn contour(&self) -> Contour {
            let mut b = Contour::builder();
            let l = b.node(self.left, NodeShape::Disc { radius: 4.0 }, Freedom::Free);
            let r = b.empty_node(self.right);
            b.connect(l, r, 2.0);
            b.build().unwrap()
        }

        fn on_translate(&mut self, d: Delta) {
            self.left = self.left + d;
            self.right = self.right + d;
        }

        fn on_node_move(&mut self, _node: usize, to: Point) -> Point {
            self.left = to;
            to
        }
    }

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn add_assigns_increasing_ids() {
        let mut m = Mover::new();
        assert_eq!(m.add(bar(0.0, 10.0, 0.0)), MovableId(0));
        assert_eq!(m.z_order(), vec![MovableId(0)]);
        let b = m.add(bar(0.0, 10.0, 50.0));
        assert_eq!(m.z_order(), vec![MovableId(0), b]);
        assert!(m.remove(b).is_some());
        assert_eq!(m.add(bar(0.0, 1.0, 0.0)), MovableId(2));
    }

    #[test]
    fn remove_cases() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 0.0));
        assert!(m.remove(MovableId(9)).is_none());
        assert_eq!(m.catch(p(10.0, 0.0)), Some(a));
        assert!(m.remove(a).is_some());
        assert!(m.z_order().is_empty());
        assert!(m.grab().is_none());
        assert_eq!(m.move_to(p(12.0, 0.0)), MoveOutcome::Idle);
    }

    #[test]
    fn catch_topmost_and_raise() {
        let mut m = Mover::new();
        let low = m.add(bar(0.0, 20.0, 0.0));
        let high = m.add(bar(0.0, 20.0, 0.0));
        assert_eq!(m.catch(p(10.0, 0.0)), Some(high));
        m.release();
        // empty desktop
        assert_eq!(m.catch(p(100.0, 100.0)), None);
        assert!(m.grab().is_none());
        // raise-on-catch: grab the lower one via its own connection
        m.get_mut(high).unwrap().on_translate(Delta::new(0.0, 30.0));
        assert_eq!(m.catch(p(10.0, 1.0)), Some(low));
        assert_eq!(m.z_order(), vec![high, low]);
    }

    #[test]
    fn raise_can_be_disabled() {
        let mut m = Mover::new().with_raise_on_catch(false);
        let a = m.add(bar(0.0, 20.0, 0.0));
        let b = m.add(bar(0.0, 20.0, 40.0));
        assert_eq!(m.catch(p(10.0, 0.0)), Some(a));
        assert_eq!(m.z_order(), vec![a, b]);
    }

    #[test]
    fn empty_node_falls_through_to_connection() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 0.0));
        // inside the empty right node's location, but on the strip
        assert_eq!(m.catch(p(20.0, 0.0)), Some(a));
        assert!(matches!(m.grab().unwrap().hit, ContourHit::Connection(0)));
    }

    #[test]
    fn connection_drag_uses_increments() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 5.0));
        // 5 px from the node centre, outside its r=4 disc
        assert_eq!(m.catch(p(5.0, 5.0)), Some(a));
        assert_eq!(m.grab().unwrap().offset, Delta::ZERO);
        assert!(matches!(m.grab().unwrap().hit, ContourHit::Connection(_)));
        assert_eq!(
            m.move_to(p(9.0, 8.0)),
            MoveOutcome::Translated {
                object: a,
                delta: Delta::new(4.0, 3.0)
            }
        );
        assert_eq!(
            m.move_to(p(10.0, 8.0)),
            MoveOutcome::Translated {
                object: a,
                delta: Delta::new(1.0, 0.0)
            }
        );
        assert_eq!(m.get(a).unwrap(), &bar(5.0, 25.0, 8.0));
    }

    #[test]
    fn node_drag_keeps_offset() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 0.0));
        assert_eq!(m.catch(p(1.0, 1.0)), Some(a));
        assert_eq!(m.grab().unwrap().offset, Delta::new(1.0, 1.0));
        // no jump at the catch point
        assert_eq!(
            m.move_to(p(1.0, 1.0)),
            MoveOutcome::NodeMoved {
                object: a,
                node: 0,
                from: p(0.0, 0.0),
                to: p(0.0, 0.0)
            }
        );
        assert_eq!(
            m.move_to(p(4.0, -1.0)),
            MoveOutcome::NodeMoved {
                object: a,
                node: 0,
                from: p(0.0, 0.0),
                to: p(3.0, -2.0)
            }
        );
    }

    #[test]
    fn hover_hints() {
        let mut m = Mover::new();
        m.add(bar(0.0, 20.0, 0.0));
        assert_eq!(
            m.move_to(p(0.0, 0.0)),
            MoveOutcome::Hint {
                hint: Hint::Reconfigure
            }
        );
        assert_eq!(
            m.move_to(p(15.0, 1.0)),
            MoveOutcome::Hint {
                hint: Hint::MoveObject
            }
        );
        assert_eq!(m.move_to(p(15.0, 10.0)), MoveOutcome::Idle);
    }

    #[test]
    fn release_is_idempotent() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 0.0));
        assert_eq!(m.release(), None);
        m.catch(p(10.0, 0.0));
        assert_eq!(m.release(), Some(a));
        assert_eq!(m.release(), None);
    }

    #[test]
    fn second_catch_returns_current_grab() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 0.0));
        let b = m.add(bar(0.0, 20.0, 50.0));
        assert_eq!(m.catch(p(10.0, 0.0)), Some(a));
        assert_eq!(m.catch(p(10.0, 50.0)), Some(a));
        m.release();
        assert_eq!(m.catch(p(10.0, 50.0)), Some(b));
    }

    #[test]
    fn visibility_does_not_affect_hits() {
        let mut m = Mover::new();
        assert!(!m.contours_visible());
        let a = m.add(bar(0.0, 20.0, 0.0));
        m.set_contours_visible(false);
        assert_eq!(m.catch(p(0.0, 0.0)), Some(a));
        assert!(matches!(m.grab().unwrap().hit, ContourHit::Node(0)));
    }

    #[test]
    fn non_finite_pointer_is_ignored() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 20.0, 0.0));
        assert_eq!(m.catch(p(f64::NAN, 0.0)), None);
        m.catch(p(10.0, 0.0));
        assert_eq!(m.move_to(p(f64::INFINITY, 0.0)), MoveOutcome::Idle);
        assert_eq!(m.get(a).unwrap(), &bar(0.0, 20.0, 0.0));
    }

    #[test]
    fn raise_and_lower() {
        let mut m = Mover::new();
        let a = m.add(bar(0.0, 1.0, 0.0));
        let b = m.add(bar(0.0, 1.0, 0.0));
        let c = m.add(bar(0.0, 1.0, 0.0));
        assert!(m.raise(a));
        assert_eq!(m.z_order(), vec![b, a, c]);
        assert!(!m.raise(c));
        assert!(m.lower(c));
        assert_eq!(m.z_order(), vec![b, c, a]);
        assert!(!m.lower(b));
        assert!(!m.raise(MovableId(42)));
    }

    #[test]
    fn from_parts_rejects_duplicates() {
        let objs = vec![
            (MovableId(1), bar(0.0, 1.0, 0.0)),
            (MovableId(1), bar(0.0, 1.0, 0.0)),
        ];
        assert!(Mover::from_parts(objs, 5, false).is_none());
        let objs = vec![(MovableId(7), bar(0.0, 1.0, 0.0))];
        assert!(Mover::from_parts(objs, 5, false).is_none());
        let objs = vec![(MovableId(3), bar(0.0, 1.0, 0.0))];
        let m = Mover::from_parts(objs, 5, true).unwrap();
        assert!(m.contours_visible());
        assert_eq!(m.next_id(), 5);
    }
}

//! Inclusive integer box geometry and the brute-force point semantics
//! oracle.
//!
//! Boxes occupy both corners: the area of `OccupyBox(x1, y1, x2, y2)` is
//! `(x2 - x1 + 1) * (y2 - y1 + 1)` and equals the number of grid points in
//! the box. Breaking boxes down to their point sets is the ground truth the
//! rest of the crate is tested against.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::ast::Invariant;

/// A point on the 2D integer grid.
///
/// Points order row-major (`y` first, then `x`), matching the enumeration
/// order of [`expand_box_to_points`], so ordered collections of points
/// iterate in enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }
}

impl PartialOrd for GridPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GridPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A corner-ordered rectangle on the grid, inclusive on all sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridBox {
    x1: i64,
    y1: i64,
    x2: i64,
    y2: i64,
}

impl GridBox {
    /// Builds a box from any two opposite corners, normalizing so that
    /// `x1 <= x2` and `y1 <= y2`.
    pub fn new(x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        GridBox {
            x1: x1.min(x2),
            y1: y1.min(y2),
            x2: x1.max(x2),
            y2: y1.max(y2),
        }
    }

    pub fn x1(&self) -> i64 {
        self.x1
    }

    pub fn y1(&self) -> i64 {
        self.y1
    }

    pub fn x2(&self) -> i64 {
        self.x2
    }

    pub fn y2(&self) -> i64 {
        self.y2
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.x1 <= p.x && p.x <= self.x2 && self.y1 <= p.y && p.y <= self.y2
    }

    /// Shifts both corners by `(dx, dy)`.
    pub fn translated(&self, dx: i64, dy: i64) -> GridBox {
        GridBox {
            x1: self.x1 + dx,
            y1: self.y1 + dy,
            x2: self.x2 + dx,
            y2: self.y2 + dy,
        }
    }

    /// The `OccupyBox` term for this box.
    pub fn to_invariant(&self) -> Invariant {
        Invariant::OccupyBox {
            x1: self.x1,
            y1: self.y1,
            x2: self.x2,
            y2: self.y2,
        }
    }

    /// Reads an `OccupyBox` term back into a box.
    pub fn from_invariant(inv: &Invariant) -> Option<GridBox> {
        match inv {
            Invariant::OccupyBox { x1, y1, x2, y2 } => Some(GridBox::new(*x1, *y1, *x2, *y2)),
            _ => None,
        }
    }
}

impl fmt::Display for GridBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x1, self.y1, self.x2, self.y2)
    }
}

/// Inclusive area of a box; equals the number of grid points it contains.
pub fn calculate_area(b: &GridBox) -> i64 {
    ((b.x2 - b.x1 + 1) * (b.y2 - b.y1 + 1)).abs()
}

/// All grid points of a box in row-major order (`y` outer, `x` inner,
/// ascending). The result has length `calculate_area(b)`.
pub fn expand_box_to_points(b: &GridBox) -> Vec<GridPoint> {
    let mut points = Vec::with_capacity(calculate_area(b) as usize);
    for y in b.y1..=b.y2 {
        for x in b.x1..=b.x2 {
            points.push(GridPoint { x, y });
        }
    }
    points
}

/// The common box of `a` and `b`, or `None` when they are disjoint.
pub fn intersect_boxes(a: &GridBox, b: &GridBox) -> Option<GridBox> {
    let x1 = a.x1.max(b.x1);
    let y1 = a.y1.max(b.y1);
    let x2 = a.x2.min(b.x2);
    let y2 = a.y2.min(b.y2);
    if x1 <= x2 && y1 <= y2 {
        Some(GridBox { x1, y1, x2, y2 })
    } else {
        None
    }
}

/// A model outside the guarded fragment the oracle and the spatial
/// operators understand.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelShapeError {
    /// Expected a conjunction of implications `IMPLIES(guard, geometry)`.
    #[error("model is not in guarded normal form: unexpected term {0}")]
    NotGuardedNormalForm(String),
    /// An atom whose semantics the oracle fragment does not define.
    #[error("unsupported atom in the oracle fragment: {0}")]
    UnsupportedAtom(String),
}

/// Owner label used for occupancy that carries no `Owner` atom.
pub const ANONYMOUS_OWNER: &str = "";

/// The ground-truth denotation of a guarded model at a fixed time: which
/// grid points each owner occupies. Point sets are deduplicated; owners
/// iterate in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointSemantics {
    buckets: BTreeMap<String, BTreeSet<GridPoint>>,
}

impl PointSemantics {
    pub fn new() -> Self {
        PointSemantics::default()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    /// Owners in sorted order (the anonymous owner is the empty string).
    pub fn owners(&self) -> impl Iterator<Item = &str> {
        self.buckets.keys().map(String::as_str)
    }

    pub fn points(&self, owner: &str) -> Option<&BTreeSet<GridPoint>> {
        self.buckets.get(owner)
    }

    pub fn count(&self, owner: &str) -> usize {
        self.buckets.get(owner).map_or(0, BTreeSet::len)
    }

    pub fn insert(&mut self, owner: &str, point: GridPoint) {
        self.buckets
            .entry(owner.to_string())
            .or_default()
            .insert(point);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<GridPoint>)> {
        self.buckets.iter().map(|(k, v)| (k.as_str(), v))
    }
}

/// What a guard requires: time constraints and the owners it attributes
/// occupancy to.
struct GuardInfo {
    owners: Vec<String>,
    /// Satisfied at time `t` iff every collected time atom holds at `t`.
    time_atoms: Vec<TimeAtom>,
}

enum TimeAtom {
    Point(i64),
    Interval(i64, i64),
}

impl GuardInfo {
    fn satisfied_at(&self, t: i64) -> bool {
        self.time_atoms.iter().all(|a| match a {
            TimeAtom::Point(u) => *u == t,
            TimeAtom::Interval(a, b) => *a <= t && t <= *b,
        })
    }
}

fn collect_guard(inv: &Invariant, info: &mut GuardInfo) -> Result<(), ModelShapeError> {
    match inv {
        Invariant::True => Ok(()),
        Invariant::TimePoint(t) => {
            info.time_atoms.push(TimeAtom::Point(*t));
            Ok(())
        }
        Invariant::TimeInterval { t1, t2 } => {
            info.time_atoms.push(TimeAtom::Interval(*t1, *t2));
            Ok(())
        }
        Invariant::Owner(o) => {
            info.owners.push(o.clone());
            Ok(())
        }
        Invariant::And(a, b) => {
            collect_guard(a, info)?;
            collect_guard(b, info)
        }
        Invariant::BigAnd(ts) => ts.iter().try_for_each(|t| collect_guard(t, info)),
        other => Err(ModelShapeError::UnsupportedAtom(other.to_string())),
    }
}

fn is_guard(inv: &Invariant) -> bool {
    match inv {
        Invariant::True
        | Invariant::TimePoint(_)
        | Invariant::TimeInterval { .. }
        | Invariant::Owner(_) => true,
        Invariant::And(a, b) => is_guard(a) && is_guard(b),
        Invariant::BigAnd(ts) => ts.iter().all(is_guard),
        _ => false,
    }
}

fn is_geometry(inv: &Invariant) -> bool {
    match inv {
        Invariant::OccupyPoint { .. } | Invariant::OccupyBox { .. } => true,
        Invariant::And(a, b) => is_geometry(a) && is_geometry(b),
        Invariant::BigAnd(ts) => ts.iter().all(is_geometry),
        _ => false,
    }
}

/// Collects the point set of a geometry conclusion (points, boxes, and
/// conjunctions thereof).
pub(crate) fn geometry_points(
    inv: &Invariant,
    out: &mut Vec<GridPoint>,
) -> Result<(), ModelShapeError> {
    match inv {
        Invariant::OccupyPoint { x, y } => {
            out.push(GridPoint::new(*x, *y));
            Ok(())
        }
        Invariant::OccupyBox { x1, y1, x2, y2 } => {
            out.extend(expand_box_to_points(&GridBox::new(*x1, *y1, *x2, *y2)));
            Ok(())
        }
        Invariant::And(a, b) => {
            geometry_points(a, out)?;
            geometry_points(b, out)
        }
        Invariant::BigAnd(ts) => ts.iter().try_for_each(|t| geometry_points(t, out)),
        other => Err(ModelShapeError::UnsupportedAtom(other.to_string())),
    }
}

/// Checks the strict guarded normal form: `TRUE`, a single
/// `IMPLIES(guard, geometry)`, or a `BIGAND` of such implications, where
/// guards are conjunctions of time/owner atoms and conclusions are 2D
/// occupancy geometry. `TRUE` counts as the empty conjunction so that the
/// output of time filtering stays inside the fragment.
pub fn is_guarded_normal_form(inv: &Invariant) -> bool {
    fn is_guarded_implication(inv: &Invariant) -> bool {
        match inv {
            Invariant::Implies(p, c) => is_guard(p) && is_geometry(c),
            _ => false,
        }
    }
    match inv {
        Invariant::True => true,
        Invariant::BigAnd(ts) => ts.iter().all(is_guarded_implication),
        other => is_guarded_implication(other),
    }
}

/// The brute-force semantics oracle: for each implication whose guard is
/// satisfied at time `t`, all points of its conclusion are attributed to the
/// guard's owners (or to [`ANONYMOUS_OWNER`] when the guard names none).
///
/// Besides the strict guarded normal form this also accepts `OwnPoint` and
/// `OwnBox` atoms as sugar for `IMPLIES(Owner(..), geometry)`. Any other
/// shape is an error; atoms without defined semantics (circles, 3D geometry,
/// topology, probabilities) are rejected rather than ignored.
pub fn point_semantics(model: &Invariant, t: i64) -> Result<PointSemantics, ModelShapeError> {
    let mut semantics = PointSemantics::new();
    match model {
        Invariant::True => Ok(semantics),
        Invariant::BigAnd(ts) => {
            for child in ts {
                add_member(child, t, &mut semantics)?;
            }
            Ok(semantics)
        }
        other => {
            add_member(other, t, &mut semantics)?;
            Ok(semantics)
        }
    }
}

fn add_member(
    inv: &Invariant,
    t: i64,
    semantics: &mut PointSemantics,
) -> Result<(), ModelShapeError> {
    match inv {
        Invariant::Implies(guard, conclusion) => {
            let mut info = GuardInfo {
                owners: Vec::new(),
                time_atoms: Vec::new(),
            };
            collect_guard(guard, &mut info)?;
            if !info.satisfied_at(t) {
                return Ok(());
            }
            let mut points = Vec::new();
            geometry_points(conclusion, &mut points)?;
            if info.owners.is_empty() {
                info.owners.push(ANONYMOUS_OWNER.to_string());
            }
            for owner in &info.owners {
                for p in &points {
                    semantics.insert(owner, *p);
                }
            }
            Ok(())
        }
        Invariant::OwnPoint { owner, x, y } => {
            semantics.insert(owner, GridPoint::new(*x, *y));
            Ok(())
        }
        Invariant::OwnBox {
            owner,
            x1,
            y1,
            x2,
            y2,
        } => {
            for p in expand_box_to_points(&GridBox::new(*x1, *y1, *x2, *y2)) {
                semantics.insert(owner, p);
            }
            Ok(())
        }
        other => Err(ModelShapeError::NotGuardedNormalForm(other.to_string())),
    }
}

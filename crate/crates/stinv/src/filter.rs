//! Time and space filtering.
//!
//! Both filters follow the rewrite-then-simplify scheme: atoms outside the
//! filter condition are rewritten to boolean constants, and the simplifier
//! then truncates the dead branches (an out-of-window time point guarding an
//! implication turns it into `IMPLIES(FALSE, ..)`, which rewrites to `TRUE`
//! and disappears from the enclosing conjunction).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::ast::Invariant;
use crate::geometry::{self, intersect_boxes, GridBox, GridPoint, ModelShapeError};
use crate::rewrite::simplify;

/// A half-open time window `[start, stop)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeWindow {
    start: i64,
    stop: i64,
}

/// Rejected window bounds (`start > stop`).
#[derive(Debug, Clone, PartialEq, Error)]
#[error("invalid time window: start {start} exceeds stop {stop}")]
pub struct InvalidWindow {
    pub start: i64,
    pub stop: i64,
}

impl TimeWindow {
    pub fn new(start: i64, stop: i64) -> Result<Self, InvalidWindow> {
        if start <= stop {
            Ok(TimeWindow { start, stop })
        } else {
            Err(InvalidWindow { start, stop })
        }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn stop(&self) -> i64 {
        self.stop
    }

    /// Start-inclusive, stop-exclusive membership.
    pub fn contains(&self, t: i64) -> bool {
        t >= self.start && t < self.stop
    }
}

/// Keeps the sub-invariant relevant to `window`.
///
/// Every `TimePoint` outside the window is replaced by the negation of the
/// `miss` constant (`miss = true` yields `FALSE`, the right default for
/// conjunctive models; `miss = false` yields `TRUE` for disjunctive ones),
/// and the result is simplified. Recursion descends through `IMPLIES`,
/// `AND`, `BIGAND`, `OR` and `BIGOR`; every other node, including `NOT` and
/// `TimeInterval`, passes through unchanged.
pub fn filter_time(inv: Invariant, window: TimeWindow, miss: bool) -> Invariant {
    simplify(rewrite_time(inv, window, miss))
}

fn rewrite_time(inv: Invariant, window: TimeWindow, miss: bool) -> Invariant {
    match inv {
        Invariant::TimePoint(t) => {
            if window.contains(t) {
                Invariant::TimePoint(t)
            } else if miss {
                Invariant::False
            } else {
                Invariant::True
            }
        }
        Invariant::Implies(p, c) => Invariant::implies(
            rewrite_time(*p, window, miss),
            rewrite_time(*c, window, miss),
        ),
        Invariant::And(a, b) => Invariant::and(
            rewrite_time(*a, window, miss),
            rewrite_time(*b, window, miss),
        ),
        Invariant::Or(a, b) => Invariant::or(
            rewrite_time(*a, window, miss),
            rewrite_time(*b, window, miss),
        ),
        Invariant::BigAnd(ts) => Invariant::BigAnd(
            ts.into_iter()
                .map(|t| rewrite_time(t, window, miss))
                .collect(),
        ),
        Invariant::BigOr(ts) => Invariant::BigOr(
            ts.into_iter()
                .map(|t| rewrite_time(t, window, miss))
                .collect(),
        ),
        other => other,
    }
}

/// Restricts a guarded-normal-form model to the part of the grid covered by
/// `window`.
///
/// Each implication's conclusion is replaced by the intersection of its
/// point set with the window, encoded by size: the implication is dropped
/// when no point survives, a single point becomes `OccupyPoint`, two become
/// `AND(p1, p2)` and three or more become a `BIGAND` of points in row-major
/// order. Zero surviving implications yield `TRUE`, one yields the bare
/// implication, several a `BIGAND` in the original order.
///
/// Errors when the model is not in guarded normal form; callers normalize
/// first (see [`crate::normalize::normalize_owner_occupied`]).
pub fn filter_space(model: &Invariant, window: &GridBox) -> Result<Invariant, ModelShapeError> {
    if !geometry::is_guarded_normal_form(model) {
        return Err(ModelShapeError::NotGuardedNormalForm(model.to_string()));
    }
    let implications: Vec<&Invariant> = match model {
        Invariant::True => Vec::new(),
        Invariant::BigAnd(ts) => ts.iter().collect(),
        other => vec![other],
    };
    let mut kept = Vec::new();
    for implication in implications {
        let Invariant::Implies(guard, conclusion) = implication else {
            unreachable!("guarded normal form only contains implications");
        };
        if let Some(clipped) = clip_conclusion(conclusion, window)? {
            kept.push(Invariant::implies(guard.as_ref().clone(), clipped));
        }
    }
    Ok(match kept.len() {
        0 => Invariant::True,
        1 => kept.pop().expect("one element"),
        _ => Invariant::BigAnd(kept),
    })
}

/// Intersects a geometry conclusion with the window; `None` when nothing
/// survives. Box intersections are clipped box-wise before expansion.
fn clip_conclusion(
    conclusion: &Invariant,
    window: &GridBox,
) -> Result<Option<Invariant>, ModelShapeError> {
    let mut points: BTreeSet<GridPoint> = BTreeSet::new();
    clip_points(conclusion, window, &mut points)?;
    let mut points: Vec<GridPoint> = points.into_iter().collect();
    Ok(match points.len() {
        0 => None,
        1 => {
            let p = points.pop().expect("one element");
            Some(Invariant::occupy_point(p.x, p.y))
        }
        2 => {
            let q = points.pop().expect("two elements");
            let p = points.pop().expect("two elements");
            Some(Invariant::and(
                Invariant::occupy_point(p.x, p.y),
                Invariant::occupy_point(q.x, q.y),
            ))
        }
        _ => Some(Invariant::BigAnd(
            points
                .into_iter()
                .map(|p| Invariant::occupy_point(p.x, p.y))
                .collect(),
        )),
    })
}

fn clip_points(
    conclusion: &Invariant,
    window: &GridBox,
    out: &mut BTreeSet<GridPoint>,
) -> Result<(), ModelShapeError> {
    match conclusion {
        Invariant::OccupyPoint { x, y } => {
            let p = GridPoint::new(*x, *y);
            if window.contains(p) {
                out.insert(p);
            }
            Ok(())
        }
        Invariant::OccupyBox { x1, y1, x2, y2 } => {
            if let Some(clipped) = intersect_boxes(&GridBox::new(*x1, *y1, *x2, *y2), window) {
                out.extend(geometry::expand_box_to_points(&clipped));
            }
            Ok(())
        }
        Invariant::And(a, b) => {
            clip_points(a, window, out)?;
            clip_points(b, window, out)
        }
        Invariant::BigAnd(ts) => ts.iter().try_for_each(|t| clip_points(t, window, out)),
        other => Err(ModelShapeError::UnsupportedAtom(other.to_string())),
    }
}

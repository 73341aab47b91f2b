//! Folds over time steps and spatial iteration paths.
//!
//! A fold visits a sequence of steps (times or boxes), computes the
//! sub-invariant relevant to each step with the corresponding filter, and
//! threads an accumulator through an aggregation function
//! `(accumulator, sub-invariant) -> accumulator`. Both folds include their
//! stop bound and are sequential by contract: accumulator threading is
//! order-dependent.

use thiserror::Error;

use crate::ast::Invariant;
use crate::filter::{filter_space, filter_time, TimeWindow};
use crate::geometry::{self, GridBox, ModelShapeError};

/// Invalid fold iteration parameters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IterationError {
    #[error("time step must be positive, got {0}")]
    NonPositiveStep(i64),
    #[error("start time {start} exceeds stop time {stop}")]
    TimeBoundsOutOfOrder { start: i64, stop: i64 },
    #[error("translation must not be (0, 0)")]
    ZeroTranslation,
    #[error("stop area {stop} is not reachable from {start} by whole steps of ({dx}, {dy})")]
    UnreachableStop {
        start: GridBox,
        stop: GridBox,
        dx: i64,
        dy: i64,
    },
}

/// The time steps of a fold: `start, start + step, ..` up to and including
/// `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeIteration {
    start: i64,
    stop: i64,
    step: i64,
}

impl TimeIteration {
    pub fn new(start: i64, stop: i64, step: i64) -> Result<Self, IterationError> {
        if step <= 0 {
            return Err(IterationError::NonPositiveStep(step));
        }
        if start > stop {
            return Err(IterationError::TimeBoundsOutOfOrder { start, stop });
        }
        Ok(TimeIteration { start, stop, step })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn stop(&self) -> i64 {
        self.stop
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    /// Visited time points, in order.
    pub fn times(&self) -> impl Iterator<Item = i64> + '_ {
        let mut next = Some(self.start);
        let iter = *self;
        std::iter::from_fn(move || {
            let t = next?;
            if t > iter.stop {
                return None;
            }
            next = t.checked_add(iter.step);
            Some(t)
        })
    }
}

/// The boxes of a spatial fold: the start area translated step by step until
/// the stop area is reached (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationPath {
    start_area: GridBox,
    stop_area: GridBox,
    translation: (i64, i64),
    steps: i64,
}

impl IterationPath {
    /// Validates that `stop_area` equals `start_area` shifted by a whole
    /// number `k >= 0` of translations.
    pub fn new(
        start_area: GridBox,
        stop_area: GridBox,
        translation: (i64, i64),
    ) -> Result<Self, IterationError> {
        let (dx, dy) = translation;
        if dx == 0 && dy == 0 {
            return Err(IterationError::ZeroTranslation);
        }
        let unreachable = || IterationError::UnreachableStop {
            start: start_area,
            stop: stop_area,
            dx,
            dy,
        };
        // A consistent step count must explain all four coordinate offsets.
        let offsets = [
            (stop_area.x1() - start_area.x1(), dx),
            (stop_area.x2() - start_area.x2(), dx),
            (stop_area.y1() - start_area.y1(), dy),
            (stop_area.y2() - start_area.y2(), dy),
        ];
        let mut steps: Option<i64> = None;
        for (offset, delta) in offsets {
            if delta == 0 {
                if offset != 0 {
                    return Err(unreachable());
                }
                continue;
            }
            if offset % delta != 0 {
                return Err(unreachable());
            }
            let k = offset / delta;
            if k < 0 {
                return Err(unreachable());
            }
            match steps {
                None => steps = Some(k),
                Some(existing) if existing != k => return Err(unreachable()),
                Some(_) => {}
            }
        }
        let steps = steps.expect("translation has a nonzero component");
        Ok(IterationPath {
            start_area,
            stop_area,
            translation,
            steps,
        })
    }

    pub fn start_area(&self) -> GridBox {
        self.start_area
    }

    pub fn stop_area(&self) -> GridBox {
        self.stop_area
    }

    pub fn translation(&self) -> (i64, i64) {
        self.translation
    }

    /// Visited boxes, in order; the length is `steps + 1`.
    pub fn boxes(&self) -> impl Iterator<Item = GridBox> + '_ {
        let (dx, dy) = self.translation;
        let start = self.start_area;
        (0..=self.steps).map(move |k| start.translated(k * dx, k * dy))
    }
}

/// Folds `model` over time: for each visited time `t`, the aggregation
/// function receives the sub-invariant relevant to the window
/// `[t, t + step)` (computed with [`filter_time`], missing time points
/// replaced by `FALSE`). A step with nothing relevant passes `TRUE` to the
/// aggregator.
pub fn fold_time<A>(
    model: &Invariant,
    init: A,
    iter: &TimeIteration,
    mut f: impl FnMut(A, &Invariant) -> A,
) -> A {
    let mut acc = init;
    for t in iter.times() {
        let window = TimeWindow::new(t, t.saturating_add(iter.step))
            .expect("a positive step always yields a valid window");
        let sub = filter_time(model.clone(), window, true);
        acc = f(acc, &sub);
    }
    acc
}

/// Folds a guarded-normal-form model over a spatial iteration path: for each
/// visited box, the aggregation function receives the output of
/// [`filter_space`] for that box.
pub fn fold_space<A>(
    model: &Invariant,
    init: A,
    path: &IterationPath,
    mut f: impl FnMut(A, &Invariant) -> A,
) -> Result<A, ModelShapeError> {
    if !geometry::is_guarded_normal_form(model) {
        return Err(ModelShapeError::NotGuardedNormalForm(model.to_string()));
    }
    let mut acc = init;
    for current in path.boxes() {
        let sub = filter_space(model, &current)?;
        acc = f(acc, &sub);
    }
    Ok(acc)
}

/// Aggregator summing the areas of box conclusions.
///
/// Adds `calculate_area(box)` when the item is `IMPLIES(_, OccupyBox)`; for
/// an `AND`/`BIGAND` the contributions of such children are summed (one
/// level deep). Everything else contributes nothing. Overlap between boxes
/// is not deduplicated: this sums areas, not union cardinality.
pub fn add_area_occupied(total: i64, item: &Invariant) -> i64 {
    fn implication_area(item: &Invariant) -> i64 {
        match item {
            Invariant::Implies(_, conclusion) => match conclusion.as_ref() {
                Invariant::OccupyBox { x1, y1, x2, y2 } => {
                    geometry::calculate_area(&GridBox::new(*x1, *y1, *x2, *y2))
                }
                _ => 0,
            },
            _ => 0,
        }
    }
    let area = match item {
        Invariant::And(a, b) => implication_area(a) + implication_area(b),
        Invariant::BigAnd(ts) => ts.iter().map(implication_area).sum(),
        other => implication_area(other),
    };
    total + area
}

/// Aggregator counting grid points attributed to `label` in the output of
/// [`filter_space`]: implications `IMPLIES(Owner(label), ..)` contribute 1
/// for a point conclusion, 2 for `AND` of two points, and the list length
/// for a `BIGAND` of points. A bare implication at the top level counts as a
/// one-element conjunction.
pub fn count_owner_points(label: &str, total: i64, sub: &Invariant) -> i64 {
    fn points_for(label: &str, item: &Invariant) -> i64 {
        let Invariant::Implies(premise, conclusion) = item else {
            return 0;
        };
        let Invariant::Owner(owner) = premise.as_ref() else {
            return 0;
        };
        if owner != label {
            return 0;
        }
        match conclusion.as_ref() {
            Invariant::OccupyPoint { .. } => 1,
            Invariant::And(p1, p2)
                if matches!(p1.as_ref(), Invariant::OccupyPoint { .. })
                    && matches!(p2.as_ref(), Invariant::OccupyPoint { .. }) =>
            {
                2
            }
            Invariant::BigAnd(points)
                if points
                    .iter()
                    .all(|p| matches!(p, Invariant::OccupyPoint { .. })) =>
            {
                points.len() as i64
            }
            _ => 0,
        }
    }
    let count = match sub {
        Invariant::And(a, b) => points_for(label, a) + points_for(label, b),
        Invariant::BigAnd(ts) => ts.iter().map(|t| points_for(label, t)).sum(),
        other => points_for(label, other),
    };
    total + count
}

/// [`count_owner_points`] fixed to the label `"cloud"`.
pub fn add_cloudy_area(total: i64, sub: &Invariant) -> i64 {
    count_owner_points("cloud", total, sub)
}

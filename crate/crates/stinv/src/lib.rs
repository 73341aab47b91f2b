//! A spatio-temporal invariant engine.
//!
//! The crate implements a small algebraic specification language for
//! spatio-temporal models — boolean connectives over atoms for integer time,
//! 2D grid occupancy, ownership, events and topology — together with the
//! operators that make it useful:
//!
//! - [`rewrite`]: fixpoint simplification with a fixed, size-decreasing rule
//!   set (`IMPLIES(FALSE, t) => TRUE` and friends).
//! - [`filter`]: selection of the sub-invariant relevant to a time window or
//!   a spatial window, via rewrite-then-simplify.
//! - [`fold`]: folds over time steps and spatial iteration paths, threading
//!   an accumulator through a user-supplied aggregation function.
//! - [`normalize`]: a processor pipeline (simplify, deduplicate, order,
//!   flatten) that produces a canonical representative, plus owner merging
//!   for guarded models.
//! - [`geometry`]: inclusive integer box geometry and a brute-force point
//!   semantics oracle (owner -> occupied grid points at a time).
//! - [`io`]: a deterministic tagged-tree text format (`.stinv` files) with a
//!   strict parser.
//! - [`cli`]: the `stinv` command-line front end over `.stinv` files.
//!
//! The `examples/` directory contains one runnable walk-through per
//! capability; start with `cargo run --example fold_over_time`.

pub mod ast;
pub mod cli;
pub mod filter;
pub mod fold;
pub mod geometry;
pub mod io;
pub mod normalize;
pub mod rewrite;

#[cfg(test)]
pub(crate) mod test_support;

pub use ast::{compare, Invariant, Probability};
pub use filter::{filter_space, filter_time, TimeWindow};
pub use fold::{
    add_area_occupied, add_cloudy_area, count_owner_points, fold_space, fold_time, IterationPath,
    TimeIteration,
};
pub use geometry::{
    calculate_area, expand_box_to_points, intersect_boxes, is_guarded_normal_form, point_semantics,
    GridBox, GridPoint, PointSemantics,
};
pub use io::{parse_invariant, serialize_invariant, Mode, ModelDocument};
pub use normalize::{
    deduplicate, flatten, merge_owners, normalize_owner_occupied, normalize_std, order,
};
pub use rewrite::{apply_once, simplify};

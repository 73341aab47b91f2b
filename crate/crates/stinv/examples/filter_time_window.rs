//! Rewrite-then-simplify time filtering: select the part of a model
//! relevant to a time window.
//!
//! Run with `cargo run --example filter_time_window`.

use stinv::{filter_space, filter_time, GridBox, Invariant, TimeWindow};

fn main() {
    let series = Invariant::big_and(vec![
        Invariant::implies(
            Invariant::time_point(1),
            Invariant::occupy_box(1, 1, 10, 10),
        ),
        Invariant::implies(
            Invariant::time_point(2),
            Invariant::occupy_box(5, 5, 15, 15),
        ),
        Invariant::implies(
            Invariant::time_point(3),
            Invariant::occupy_box(10, 10, 20, 20),
        ),
    ]);
    println!("model: {series}");

    // Time points outside [1, 2) rewrite to FALSE; simplification then
    // truncates the dead implications and the surviving one remains.
    let window = TimeWindow::new(1, 2).expect("start <= stop");
    let filtered = filter_time(series.clone(), window, true);
    println!("filtered to [1, 2): {filtered}");

    // An empty window filters everything away.
    let empty = TimeWindow::new(5, 5).expect("start <= stop");
    println!("filtered to [5, 5): {}", filter_time(series, empty, true));

    // Space filtering clips geometry to a window, breaking boxes down to
    // the grid points they share with it.
    let spatial = Invariant::big_and(vec![
        Invariant::implies(
            Invariant::owner("mountain"),
            Invariant::occupy_box(1, 1, 10, 10),
        ),
        Invariant::implies(
            Invariant::owner("cloud"),
            Invariant::occupy_box(5, 5, 15, 15),
        ),
    ]);
    let clipped = filter_space(&spatial, &GridBox::new(1, 1, 5, 5)).expect("guarded model");
    println!("clipped to (1,1)..(5,5): {clipped}");
}

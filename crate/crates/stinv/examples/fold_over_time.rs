//! Folding a model over time: aggregate cloud-covered area across three
//! time points.
//!
//! Run with `cargo run --example fold_over_time`.

use stinv::{add_area_occupied, fold_time, Invariant, TimeIteration};

fn main() {
    // A moving cloud: one occupied box per time point.
    let b1 = Invariant::occupy_box(1, 1, 10, 10); // area 100
    let b2 = Invariant::occupy_box(5, 5, 15, 15); // area 121
    let b3 = Invariant::occupy_box(10, 10, 20, 20); // area 121

    let series = Invariant::big_and(vec![
        Invariant::implies(Invariant::time_point(1), b1),
        Invariant::implies(Invariant::time_point(2), b2),
        Invariant::implies(Invariant::time_point(3), b3),
    ]);
    println!("model: {series}");

    // Visit t = 1, 2, 3; each step sees the sub-invariant for [t, t+1) and
    // adds the area of its occupied box to the accumulator.
    let iter = TimeIteration::new(1, 3, 1).expect("valid iteration");
    let per_step = fold_time(&series, Vec::new(), &iter, |mut acc, sub| {
        acc.push(add_area_occupied(0, sub));
        acc
    });
    for (t, area) in iter.times().zip(&per_step) {
        println!("t = {t}: occupied area {area}");
    }

    let total = fold_time(&series, 0, &iter, add_area_occupied);
    println!("total occupied area over t = 1..3: {total}");
    assert_eq!(total, 342);
}

//! The brute-force semantics oracle: which grid points does each owner
//! occupy at a given time?
//!
//! Run with `cargo run --example point_semantics`.

use stinv::{
    calculate_area, expand_box_to_points, intersect_boxes, point_semantics, GridBox, Invariant,
};

fn main() {
    let b = GridBox::new(1, 1, 10, 10);
    println!("box {b}: area {}", calculate_area(&b));
    println!("first points: {:?}", &expand_box_to_points(&b)[..4]);
    match intersect_boxes(&b, &GridBox::new(5, 5, 15, 15)) {
        Some(shared) => println!("overlap with (5,5)..(15,15): {shared}"),
        None => println!("no overlap"),
    }

    // A guarded model: time and owner atoms guard occupied geometry.
    let model = Invariant::big_and(vec![
        Invariant::implies(
            Invariant::and(Invariant::time_interval(0, 5), Invariant::owner("robot")),
            Invariant::occupy_box(0, 0, 2, 2),
        ),
        Invariant::implies(Invariant::owner("dock"), Invariant::occupy_point(9, 9)),
        Invariant::implies(Invariant::time_point(3), Invariant::occupy_box(4, 4, 5, 5)),
    ]);

    for t in [0, 3, 6] {
        let semantics = point_semantics(&model, t).expect("guarded model");
        println!("t = {t}:");
        for (owner, points) in semantics.iter() {
            let label = if owner.is_empty() {
                "<anonymous>"
            } else {
                owner
            };
            println!("  {label}: {} points", points.len());
        }
    }
}

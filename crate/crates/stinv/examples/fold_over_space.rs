//! Folding a model over a spatial iteration path: count cloud-covered grid
//! points along a diagonal of 5x5 boxes.
//!
//! Run with `cargo run --example fold_over_space`.

use stinv::{
    add_cloudy_area, count_owner_points, fold_space, normalize_owner_occupied, GridBox, Invariant,
    IterationPath,
};

fn main() {
    // Mountains and clouds on a 30x30 grid.
    let series = Invariant::big_and(vec![
        Invariant::implies(
            Invariant::owner("mountain"),
            Invariant::occupy_box(1, 1, 10, 10),
        ),
        Invariant::implies(
            Invariant::owner("cloud"),
            Invariant::occupy_box(5, 5, 15, 15),
        ),
        Invariant::implies(
            Invariant::owner("cloud"),
            Invariant::occupy_box(10, 10, 20, 20),
        ),
        Invariant::implies(
            Invariant::owner("mountain"),
            Invariant::occupy_box(21, 21, 30, 30),
        ),
    ]);

    // Spatial folds expect guarded normal form with one implication per
    // owner, so normalize first.
    let normalized = normalize_owner_occupied(series).expect("conjunction of implications");
    println!("normalized model: {normalized}");

    // Six 5x5 boxes from (1,1)..(5,5) to (26,26)..(30,30), stepping (5,5).
    let path = IterationPath::new(
        GridBox::new(1, 1, 5, 5),
        GridBox::new(26, 26, 30, 30),
        (5, 5),
    )
    .expect("stop box reachable");

    let per_step = fold_space(&normalized, Vec::new(), &path, |mut acc, sub| {
        acc.push(add_cloudy_area(0, sub));
        acc
    })
    .expect("guarded model");
    for (b, count) in path.boxes().zip(&per_step) {
        println!("box {b}: {count} cloudy points");
    }

    let cloudy = fold_space(&normalized, 0, &path, add_cloudy_area).expect("guarded model");
    println!("total cloud coverage along the path: {cloudy}");
    assert_eq!(cloudy, 76);

    // The aggregator is an ordinary closure; counting another owner is the
    // same fold with a different label.
    let rocky = fold_space(&normalized, 0, &path, |acc, sub| {
        count_owner_points("mountain", acc, sub)
    })
    .expect("guarded model");
    println!("total mountain coverage along the path: {rocky}");
}

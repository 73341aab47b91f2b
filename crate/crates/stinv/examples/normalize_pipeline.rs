//! The normalization pipeline: simplify, deduplicate, order and flatten an
//! invariant into its canonical representative, then merge implications
//! with identical premises.
//!
//! Run with `cargo run --example normalize_pipeline`.

use stinv::{
    deduplicate, flatten, merge_owners, normalize_owner_occupied, normalize_std, order, simplify,
    Invariant,
};

fn main() {
    let a = Invariant::owner("a");
    let b = Invariant::owner("b");
    let c = Invariant::owner("c");

    // Each processor on its own.
    let nested = Invariant::and(Invariant::and(a.clone(), b.clone()), c.clone());
    println!("flatten:     {nested}  =>  {}", flatten(nested.clone()));

    let unsorted = Invariant::big_or(vec![b.clone(), a.clone()]);
    println!("order:       {unsorted}  =>  {}", order(unsorted.clone()));

    let doubled = Invariant::big_and(vec![a.clone(), a.clone(), b.clone()]);
    println!(
        "deduplicate: {doubled}  =>  {}",
        deduplicate(doubled.clone())
    );

    let constant = Invariant::implies(Invariant::True, c.clone());
    println!(
        "simplify:    {constant}  =>  {}",
        simplify(constant.clone())
    );

    // The composed pipeline makes permutations of a conjunction converge to
    // one representative.
    let one = Invariant::big_and(vec![a.clone(), b.clone(), c.clone()]);
    let two = Invariant::big_and(vec![c.clone(), a.clone(), b.clone()]);
    assert_eq!(normalize_std(one.clone()), normalize_std(two.clone()));
    println!("normalized:  {two}  =>  {}", normalize_std(two.clone()));

    // Owner merging conjoins the conclusions of implications that share a
    // premise.
    let guarded = Invariant::big_and(vec![
        Invariant::implies(a.clone(), Invariant::event("X")),
        Invariant::implies(b.clone(), Invariant::event("Y")),
        Invariant::implies(a.clone(), Invariant::event("Z")),
    ]);
    println!(
        "merged:      {}",
        merge_owners(guarded.clone()).expect("implications")
    );
    println!(
        "owner form:  {}",
        normalize_owner_occupied(guarded).expect("implications")
    );
}

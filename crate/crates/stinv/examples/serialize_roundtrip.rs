//! The `.stinv` text format: deterministic serialization, parsing, and
//! canonical fingerprints.
//!
//! Run with `cargo run --example serialize_roundtrip`.

use stinv::{normalize_std, parse_invariant, serialize_invariant, Invariant, Mode, ModelDocument};

fn main() {
    let inv = Invariant::implies(
        Invariant::and(Invariant::time_interval(100, 150), Invariant::owner("A")),
        Invariant::occupy_box(42, 2605, 1531, 3056),
    );

    let compact = serialize_invariant(&inv, Mode::Compact);
    println!("compact: {compact}");
    println!("pretty:\n{}", serialize_invariant(&inv, Mode::Pretty));
    assert_eq!(parse_invariant(&compact).expect("round trip"), inv);

    // Model files carry a format version around the root term.
    let doc = ModelDocument::new(inv);
    println!("document: {}", doc.to_text(Mode::Compact));

    // Compact serialization of normalized terms is a fingerprint: equal
    // modulo normalization means byte-equal.
    let left = normalize_std(Invariant::big_and(vec![
        Invariant::owner("b"),
        Invariant::owner("a"),
        Invariant::owner("a"),
    ]));
    let right = normalize_std(Invariant::and(
        Invariant::owner("a"),
        Invariant::and(Invariant::owner("b"), Invariant::owner("a")),
    ));
    let left_print = serialize_invariant(&left, Mode::Compact);
    println!("fingerprint: {left_print}");
    assert_eq!(left_print, serialize_invariant(&right, Mode::Compact));

    // The parser is strict: out-of-range probabilities are rejected.
    let err = parse_invariant(r#"{"op":"Prob","p":1.5}"#).unwrap_err();
    println!("rejected: {err}");
}

//! Random term generation shared by the unit tests.

use std::ops::RangeInclusive;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::ast::Invariant;

pub(crate) fn test_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub(crate) fn random_quad(rng: &mut StdRng, range: RangeInclusive<i64>) -> (i64, i64, i64, i64) {
    (
        rng.gen_range(range.clone()),
        rng.gen_range(range.clone()),
        rng.gen_range(range.clone()),
        rng.gen_range(range),
    )
}

fn random_label(rng: &mut StdRng) -> String {
    const LABELS: &[&str] = &["a", "b", "cloud", "mountain", "robot"];
    LABELS[rng.gen_range(0..LABELS.len())].to_string()
}

fn random_atom(rng: &mut StdRng) -> Invariant {
    match rng.gen_range(0..12) {
        0 => Invariant::True,
        1 => Invariant::False,
        2 => Invariant::time_point(rng.gen_range(-10..=10)),
        3 => {
            let a = rng.gen_range(-10..=10);
            let b = rng.gen_range(-10..=10);
            Invariant::time_interval(a.min(b), a.max(b))
        }
        4 => Invariant::owner(random_label(rng)),
        5 => Invariant::event(random_label(rng)),
        6 => Invariant::component_state(random_label(rng)),
        7 => Invariant::prob([0.0, 0.25, 0.5, 1.0][rng.gen_range(0..4)]).unwrap(),
        8 => {
            let x = rng.gen_range(-50..=50);
            let y = rng.gen_range(-50..=50);
            Invariant::occupy_point(x, y)
        }
        9 => {
            let (a, b, c, d) = random_quad(rng, -50..=50);
            Invariant::occupy_box(a, b, c, d)
        }
        10 => {
            let owner = random_label(rng);
            let (a, b, c, d) = random_quad(rng, -50..=50);
            Invariant::own_box(owner, a, b, c, d)
        }
        _ => Invariant::occupy_node(random_label(rng)),
    }
}

/// A random term of the full language with tree depth at most `depth`.
pub(crate) fn random_invariant(rng: &mut StdRng, depth: usize) -> Invariant {
    if depth == 0 || rng.gen_bool(0.3) {
        return random_atom(rng);
    }
    match rng.gen_range(0..6) {
        0 => Invariant::not(random_invariant(rng, depth - 1)),
        1 => Invariant::and(
            random_invariant(rng, depth - 1),
            random_invariant(rng, depth - 1),
        ),
        2 => Invariant::or(
            random_invariant(rng, depth - 1),
            random_invariant(rng, depth - 1),
        ),
        3 => Invariant::implies(
            random_invariant(rng, depth - 1),
            random_invariant(rng, depth - 1),
        ),
        4 => {
            let n = rng.gen_range(0..=4);
            Invariant::big_and((0..n).map(|_| random_invariant(rng, depth - 1)).collect())
        }
        _ => {
            let n = rng.gen_range(0..=4);
            Invariant::big_or((0..n).map(|_| random_invariant(rng, depth - 1)).collect())
        }
    }
}

/// A random implication in guarded normal form on a `[0, 20]^2` grid with
/// times in `0..=10`: the guard is a conjunction of time/owner atoms and the
/// conclusion is box or point geometry.
pub(crate) fn random_guarded_implication(rng: &mut StdRng) -> Invariant {
    let time_atom = match rng.gen_range(0..3) {
        0 => None,
        1 => Some(Invariant::time_point(rng.gen_range(0..=10))),
        _ => {
            let a = rng.gen_range(0..=10);
            let b = rng.gen_range(0..=10);
            Some(Invariant::time_interval(a.min(b), a.max(b)))
        }
    };
    let owner_atom = if rng.gen_bool(0.7) {
        Some(Invariant::owner(random_label(rng)))
    } else {
        None
    };
    let guard = match (time_atom, owner_atom) {
        (Some(t), Some(o)) => Invariant::and(t, o),
        (Some(t), None) => t,
        (None, Some(o)) => o,
        // Guards always carry at least one atom.
        (None, None) => Invariant::time_point(rng.gen_range(0..=10)),
    };
    let conclusion = match rng.gen_range(0..3) {
        0 => {
            let x = rng.gen_range(0..=20);
            let y = rng.gen_range(0..=20);
            Invariant::occupy_point(x, y)
        }
        _ => {
            let (a, b, c, d) = random_quad(rng, 0..=20);
            Invariant::occupy_box(a, b, c, d)
        }
    };
    Invariant::implies(guard, conclusion)
}

/// A random guarded-normal-form model with `1..=max_implications` children.
pub(crate) fn random_guarded_model(rng: &mut StdRng, max_implications: usize) -> Invariant {
    let n = rng.gen_range(1..=max_implications);
    Invariant::big_and((0..n).map(|_| random_guarded_implication(rng)).collect())
}

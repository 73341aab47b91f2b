//! Random model generation shared by the integration test suites.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use stinv::Invariant;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_label(rng: &mut StdRng) -> String {
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
        8 => Invariant::occupy_point(rng.gen_range(-50..=50), rng.gen_range(-50..=50)),
        9 => Invariant::occupy_box(
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
        ),
        10 => Invariant::own_box(
            random_label(rng),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
        ),
        _ => Invariant::occupy_node(random_label(rng)),
    }
}

/// A random term of the full language with tree depth at most `depth`.
pub fn random_invariant(rng: &mut StdRng, depth: usize) -> Invariant {
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

/// One guarded implication on a `[0, 20]^2` grid with times in `0..=10`,
/// returned with the pieces the semantics checks need: whether the guard
/// mentions a time point.
pub struct GuardedPart {
    pub implication: Invariant,
    pub has_time_point: bool,
}

pub fn random_guarded_part(rng: &mut StdRng) -> GuardedPart {
    let time_atom = match rng.gen_range(0..3) {
        0 => None,
        1 => Some((Invariant::time_point(rng.gen_range(0..=10)), true)),
        _ => {
            let a = rng.gen_range(0..=10);
            let b = rng.gen_range(0..=10);
            Some((Invariant::time_interval(a.min(b), a.max(b)), false))
        }
    };
    let owner_atom = if rng.gen_bool(0.7) {
        Some(Invariant::owner(random_label(rng)))
    } else {
        None
    };
    let (guard, has_time_point) = match (time_atom, owner_atom) {
        (Some((t, tp)), Some(o)) => (Invariant::and(t, o), tp),
        (Some((t, tp)), None) => (t, tp),
        (None, Some(o)) => (o, false),
        (None, None) => (Invariant::time_point(rng.gen_range(0..=10)), true),
    };
    let conclusion = match rng.gen_range(0..3) {
        0 => Invariant::occupy_point(rng.gen_range(0..=20), rng.gen_range(0..=20)),
        _ => Invariant::occupy_box(
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
        ),
    };
    GuardedPart {
        implication: Invariant::implies(guard, conclusion),
        has_time_point,
    }
}

/// A random guarded-normal-form model plus its parts.
pub fn random_guarded_model(
    rng: &mut StdRng,
    max_implications: usize,
) -> (Invariant, Vec<GuardedPart>) {
    let n = rng.gen_range(1..=max_implications);
    let parts: Vec<GuardedPart> = (0..n).map(|_| random_guarded_part(rng)).collect();
    let model = Invariant::big_and(parts.iter().map(|p| p.implication.clone()).collect());
    (model, parts)
}

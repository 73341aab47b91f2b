//! Canonical normalization.
//!
//! Normalization makes invariants comparable: equal invariants get the same
//! representation, so comparison reduces to structural equality (and, via
//! [`crate::io`], to byte equality of compact serializations). The pipeline
//! is a chain of invariant processors in the sense of
//! [`InvariantProcessor`]:
//!
//! 1. [`crate::rewrite::simplify`] — boolean rewriting to a fixpoint,
//! 2. [`deduplicate`] — removes duplicate conjunction/disjunction members,
//! 3. [`order`] — sorts conjunction/disjunction members canonically,
//! 4. [`flatten`] — splices nested conjunctions/disjunctions to one level,
//! 5. a final canonicalization pass that re-establishes all four properties
//!    at once (flattening can juxtapose duplicates and unsort siblings, and
//!    deduplication can leave singleton wrappers, so a last combined
//!    bottom-up pass is needed for [`normalize_std`] to be idempotent).
//!
//! [`merge_owners`] additionally conjoins the conclusions of implications
//! with identical premises, turning a normalized guarded model into one
//! implication per owner.

use thiserror::Error;

use crate::ast::Invariant;
use crate::rewrite::simplify;

/// A normalization step: a total function from invariants to invariants.
pub type InvariantProcessor = fn(Invariant) -> Invariant;

/// Splices nested conjunctions into single-level ones (and dually for
/// disjunctions): no `AND`/`BIGAND` child of a `BIGAND` survives, and binary
/// `AND` chains become `BIGAND`s. Child order is preserved left-to-right;
/// the rewrite is applied recursively below `IMPLIES` and `NOT` as well. A
/// binary `AND` whose children are not conjunctions is left alone.
pub fn flatten(inv: Invariant) -> Invariant {
    fn splice_conjunction(inv: Invariant, out: &mut Vec<Invariant>) {
        match inv {
            Invariant::And(a, b) => {
                out.push(*a);
                out.push(*b);
            }
            Invariant::BigAnd(ts) => out.extend(ts),
            other => out.push(other),
        }
    }
    fn splice_disjunction(inv: Invariant, out: &mut Vec<Invariant>) {
        match inv {
            Invariant::Or(a, b) => {
                out.push(*a);
                out.push(*b);
            }
            Invariant::BigOr(ts) => out.extend(ts),
            other => out.push(other),
        }
    }
    match inv {
        Invariant::Not(t) => Invariant::not(flatten(*t)),
        Invariant::Implies(p, c) => Invariant::implies(flatten(*p), flatten(*c)),
        Invariant::And(a, b) => {
            let fa = flatten(*a);
            let fb = flatten(*b);
            if matches!(fa, Invariant::And(..) | Invariant::BigAnd(_))
                || matches!(fb, Invariant::And(..) | Invariant::BigAnd(_))
            {
                let mut children = Vec::new();
                splice_conjunction(fa, &mut children);
                splice_conjunction(fb, &mut children);
                Invariant::BigAnd(children)
            } else {
                Invariant::and(fa, fb)
            }
        }
        Invariant::Or(a, b) => {
            let fa = flatten(*a);
            let fb = flatten(*b);
            if matches!(fa, Invariant::Or(..) | Invariant::BigOr(_))
                || matches!(fb, Invariant::Or(..) | Invariant::BigOr(_))
            {
                let mut children = Vec::new();
                splice_disjunction(fa, &mut children);
                splice_disjunction(fb, &mut children);
                Invariant::BigOr(children)
            } else {
                Invariant::or(fa, fb)
            }
        }
        Invariant::BigAnd(ts) => {
            let mut children = Vec::new();
            for t in ts {
                splice_conjunction(flatten(t), &mut children);
            }
            Invariant::BigAnd(children)
        }
        Invariant::BigOr(ts) => {
            let mut children = Vec::new();
            for t in ts {
                splice_disjunction(flatten(t), &mut children);
            }
            Invariant::BigOr(children)
        }
        atom => atom,
    }
}

/// Sorts the children of every `BIGAND`/`BIGOR` by the canonical term order.
/// The sort is stable, so repeated application changes nothing.
pub fn order(inv: Invariant) -> Invariant {
    match inv {
        Invariant::Not(t) => Invariant::not(order(*t)),
        Invariant::Implies(p, c) => Invariant::implies(order(*p), order(*c)),
        Invariant::And(a, b) => Invariant::and(order(*a), order(*b)),
        Invariant::Or(a, b) => Invariant::or(order(*a), order(*b)),
        Invariant::BigAnd(ts) => {
            let mut ts: Vec<Invariant> = ts.into_iter().map(order).collect();
            ts.sort();
            Invariant::BigAnd(ts)
        }
        Invariant::BigOr(ts) => {
            let mut ts: Vec<Invariant> = ts.into_iter().map(order).collect();
            ts.sort();
            Invariant::BigOr(ts)
        }
        atom => atom,
    }
}

/// Removes structurally equal siblings from every `BIGAND`/`BIGOR`, keeping
/// the first occurrence. The wrapper is kept even when one child remains.
pub fn deduplicate(inv: Invariant) -> Invariant {
    fn dedup_keep_first(ts: Vec<Invariant>) -> Vec<Invariant> {
        let mut kept: Vec<Invariant> = Vec::with_capacity(ts.len());
        for t in ts {
            if !kept.contains(&t) {
                kept.push(t);
            }
        }
        kept
    }
    match inv {
        Invariant::Not(t) => Invariant::not(deduplicate(*t)),
        Invariant::Implies(p, c) => Invariant::implies(deduplicate(*p), deduplicate(*c)),
        Invariant::And(a, b) => Invariant::and(deduplicate(*a), deduplicate(*b)),
        Invariant::Or(a, b) => Invariant::or(deduplicate(*a), deduplicate(*b)),
        Invariant::BigAnd(ts) => {
            Invariant::BigAnd(dedup_keep_first(ts.into_iter().map(deduplicate).collect()))
        }
        Invariant::BigOr(ts) => {
            Invariant::BigOr(dedup_keep_first(ts.into_iter().map(deduplicate).collect()))
        }
        atom => atom,
    }
}

/// The final combined pass: bottom-up, at every conjunction/disjunction,
/// splice nested children, sort, deduplicate, and unwrap singletons; a
/// binary `AND`/`OR` of two equal children collapses to one. On input that
/// is already a simplification fixpoint this establishes every normal-form
/// property in a single pass.
fn canonicalize(inv: Invariant) -> Invariant {
    fn rebuild(mut children: Vec<Invariant>, conjunction: bool) -> Invariant {
        children.sort();
        children.dedup();
        match children.len() {
            1 => children.pop().expect("one element"),
            _ if conjunction => Invariant::BigAnd(children),
            _ => Invariant::BigOr(children),
        }
    }
    fn splice(inv: Invariant, conjunction: bool, out: &mut Vec<Invariant>) {
        match inv {
            Invariant::And(a, b) if conjunction => {
                out.push(*a);
                out.push(*b);
            }
            Invariant::BigAnd(ts) if conjunction => out.extend(ts),
            Invariant::Or(a, b) if !conjunction => {
                out.push(*a);
                out.push(*b);
            }
            Invariant::BigOr(ts) if !conjunction => out.extend(ts),
            other => out.push(other),
        }
    }
    match inv {
        Invariant::Not(t) => Invariant::not(canonicalize(*t)),
        Invariant::Implies(p, c) => Invariant::implies(canonicalize(*p), canonicalize(*c)),
        Invariant::And(a, b) => {
            let ca = canonicalize(*a);
            let cb = canonicalize(*b);
            if matches!(ca, Invariant::And(..) | Invariant::BigAnd(_))
                || matches!(cb, Invariant::And(..) | Invariant::BigAnd(_))
            {
                let mut children = Vec::new();
                splice(ca, true, &mut children);
                splice(cb, true, &mut children);
                rebuild(children, true)
            } else if ca == cb {
                ca
            } else {
                Invariant::and(ca, cb)
            }
        }
        Invariant::Or(a, b) => {
            let ca = canonicalize(*a);
            let cb = canonicalize(*b);
            if matches!(ca, Invariant::Or(..) | Invariant::BigOr(_))
                || matches!(cb, Invariant::Or(..) | Invariant::BigOr(_))
            {
                let mut children = Vec::new();
                splice(ca, false, &mut children);
                splice(cb, false, &mut children);
                rebuild(children, false)
            } else if ca == cb {
                ca
            } else {
                Invariant::or(ca, cb)
            }
        }
        Invariant::BigAnd(ts) => {
            let mut children = Vec::new();
            for t in ts {
                splice(canonicalize(t), true, &mut children);
            }
            if children.is_empty() {
                Invariant::BigAnd(children)
            } else {
                rebuild(children, true)
            }
        }
        Invariant::BigOr(ts) => {
            let mut children = Vec::new();
            for t in ts {
                splice(canonicalize(t), false, &mut children);
            }
            if children.is_empty() {
                Invariant::BigOr(children)
            } else {
                rebuild(children, false)
            }
        }
        atom => atom,
    }
}

/// The standard normalization pipeline: simplify, deduplicate, order,
/// flatten, then the final canonicalization pass. Idempotent, and
/// permutations of conjunction/disjunction children converge to the same
/// representative.
pub fn normalize_std(inv: Invariant) -> Invariant {
    canonicalize(flatten(order(deduplicate(simplify(inv)))))
}

/// Input to [`merge_owners`] that is not a conjunction of implications.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("merge expects a conjunction of implications, got {0}")]
pub struct MergeShapeError(pub String);

/// Conjoins the conclusions of implications with structurally identical
/// premises: `BIGAND(IMPLIES(A, X), IMPLIES(B, Y), IMPLIES(A, Z))` becomes
/// `BIGAND(IMPLIES(A, AND(X, Z)), IMPLIES(B, Y))`.
///
/// The input must be a `BIGAND` of implications (a bare implication counts
/// as a one-element conjunction). Groups keep the first-occurrence order of
/// their premises and conclusions; a group of one keeps its conclusion, two
/// conclusions join with `AND`, three or more with `BIGAND`. When no group
/// has two or more conclusions the input is returned unchanged.
pub fn merge_owners(inv: Invariant) -> Result<Invariant, MergeShapeError> {
    let implications: Vec<(&Invariant, &Invariant)> = match &inv {
        Invariant::BigAnd(ts) => {
            let mut pairs = Vec::with_capacity(ts.len());
            for t in ts {
                match t {
                    Invariant::Implies(p, c) => pairs.push((p.as_ref(), c.as_ref())),
                    other => return Err(MergeShapeError(other.to_string())),
                }
            }
            pairs
        }
        Invariant::Implies(p, c) => vec![(p.as_ref(), c.as_ref())],
        other => return Err(MergeShapeError(other.to_string())),
    };

    let mut groups: Vec<(&Invariant, Vec<&Invariant>)> = Vec::new();
    for (premise, conclusion) in implications {
        match groups.iter_mut().find(|(p, _)| *p == premise) {
            Some((_, conclusions)) => conclusions.push(conclusion),
            None => groups.push((premise, vec![conclusion])),
        }
    }
    if groups.iter().all(|(_, cs)| cs.len() == 1) {
        return Ok(inv);
    }

    let mut merged: Vec<Invariant> = groups
        .into_iter()
        .map(|(premise, mut conclusions)| {
            let conclusion = match conclusions.len() {
                1 => conclusions.pop().expect("one element").clone(),
                2 => Invariant::and(conclusions[0].clone(), conclusions[1].clone()),
                _ => Invariant::BigAnd(conclusions.into_iter().cloned().collect()),
            };
            Invariant::implies(premise.clone(), conclusion)
        })
        .collect();
    Ok(if matches!(inv, Invariant::Implies(..)) {
        merged
            .pop()
            .expect("a bare implication forms exactly one group")
    } else {
        Invariant::BigAnd(merged)
    })
}

/// Normalization for owner-occupancy data: [`normalize_std`] followed by
/// [`merge_owners`], with a resulting one-element conjunction unwrapped to
/// the bare implication (mirroring the singleton convention of the standard
/// pipeline, and making the composition idempotent on guarded models).
///
/// On a guarded-normal-form input the output is again in guarded normal
/// form, with one implication per distinct guard.
pub fn normalize_owner_occupied(inv: Invariant) -> Result<Invariant, MergeShapeError> {
    let merged = merge_owners(normalize_std(inv))?;
    Ok(match merged {
        Invariant::BigAnd(mut ts) if ts.len() == 1 => ts.pop().expect("one element"),
        other => other,
    })
}

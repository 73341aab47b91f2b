//! Fixpoint simplification.
//!
//! A fixed rule set of boolean simplifications is applied bottom-up until no
//! rule fires anywhere in the term. Every rule either strictly decreases the
//! node count or replaces an empty conjunction/disjunction by its neutral
//! element, so the fixpoint loop terminates. The rules are purely syntactic;
//! `AND(x, NOT(x))` and similar tautologies are deliberately not reduced.
//!
//! Rule table:
//!
//! ```text
//! IMPLIES(FALSE, t) => TRUE        IMPLIES(TRUE, t) => t    IMPLIES(t, TRUE) => TRUE
//! AND(TRUE, t) => t                AND(t, TRUE) => t
//! AND(FALSE, t) => FALSE           AND(t, FALSE) => FALSE
//! OR(FALSE, t) => t                OR(t, FALSE) => t
//! OR(TRUE, t) => TRUE              OR(t, TRUE) => TRUE
//! NOT(TRUE) => FALSE               NOT(FALSE) => TRUE
//! BIGAND: FALSE child => FALSE; TRUE children dropped; [] => TRUE; [x] => x
//! BIGOR:  TRUE child => TRUE; FALSE children dropped;  [] => FALSE; [x] => x
//! ```

use crate::ast::Invariant;

/// Applies the rule table at a single node, assuming the children are
/// already in whatever state the caller wants them in. Returns `None` when
/// no rule matches.
fn rule_at_node(inv: &Invariant) -> Option<Invariant> {
    match inv {
        Invariant::Implies(p, c) => match (p.as_ref(), c.as_ref()) {
            (Invariant::False, _) => Some(Invariant::True),
            (Invariant::True, _) => Some(c.as_ref().clone()),
            (_, Invariant::True) => Some(Invariant::True),
            _ => None,
        },
        Invariant::And(a, b) => match (a.as_ref(), b.as_ref()) {
            (Invariant::False, _) | (_, Invariant::False) => Some(Invariant::False),
            (Invariant::True, _) => Some(b.as_ref().clone()),
            (_, Invariant::True) => Some(a.as_ref().clone()),
            _ => None,
        },
        Invariant::Or(a, b) => match (a.as_ref(), b.as_ref()) {
            (Invariant::True, _) | (_, Invariant::True) => Some(Invariant::True),
            (Invariant::False, _) => Some(b.as_ref().clone()),
            (_, Invariant::False) => Some(a.as_ref().clone()),
            _ => None,
        },
        Invariant::Not(t) => match t.as_ref() {
            Invariant::True => Some(Invariant::False),
            Invariant::False => Some(Invariant::True),
            _ => None,
        },
        Invariant::BigAnd(ts) => {
            if ts.contains(&Invariant::False) {
                return Some(Invariant::False);
            }
            let keep: Vec<&Invariant> = ts.iter().filter(|t| **t != Invariant::True).collect();
            match (keep.len() == ts.len(), keep.as_slice()) {
                (_, []) => Some(Invariant::True),
                (_, [only]) => Some((*only).clone()),
                (true, _) => None,
                (false, _) => Some(Invariant::BigAnd(keep.into_iter().cloned().collect())),
            }
        }
        Invariant::BigOr(ts) => {
            if ts.contains(&Invariant::True) {
                return Some(Invariant::True);
            }
            let keep: Vec<&Invariant> = ts.iter().filter(|t| **t != Invariant::False).collect();
            match (keep.len() == ts.len(), keep.as_slice()) {
                (_, []) => Some(Invariant::False),
                (_, [only]) => Some((*only).clone()),
                (true, _) => None,
                (false, _) => Some(Invariant::BigOr(keep.into_iter().cloned().collect())),
            }
        }
        _ => None,
    }
}

/// One bottom-up pass over the whole term: children first, then the rule
/// table at each node. Returns the rewritten term and whether anything
/// changed. `applied == false` guarantees the input is a fixpoint of
/// [`simplify`].
pub fn apply_once(inv: Invariant) -> (Invariant, bool) {
    let (rebuilt, mut changed) = match inv {
        Invariant::Not(t) => {
            let (t, c) = apply_once(*t);
            (Invariant::not(t), c)
        }
        Invariant::And(a, b) => {
            let (a, ca) = apply_once(*a);
            let (b, cb) = apply_once(*b);
            (Invariant::and(a, b), ca || cb)
        }
        Invariant::Or(a, b) => {
            let (a, ca) = apply_once(*a);
            let (b, cb) = apply_once(*b);
            (Invariant::or(a, b), ca || cb)
        }
        Invariant::Implies(p, c) => {
            let (p, cp) = apply_once(*p);
            let (c, cc) = apply_once(*c);
            (Invariant::implies(p, c), cp || cc)
        }
        Invariant::BigAnd(ts) => {
            let mut changed = false;
            let ts = ts
                .into_iter()
                .map(|t| {
                    let (t, c) = apply_once(t);
                    changed |= c;
                    t
                })
                .collect();
            (Invariant::BigAnd(ts), changed)
        }
        Invariant::BigOr(ts) => {
            let mut changed = false;
            let ts = ts
                .into_iter()
                .map(|t| {
                    let (t, c) = apply_once(t);
                    changed |= c;
                    t
                })
                .collect();
            (Invariant::BigOr(ts), changed)
        }
        atom => (atom, false),
    };
    match rule_at_node(&rebuilt) {
        Some(next) => {
            changed = true;
            (next, changed)
        }
        None => (rebuilt, changed),
    }
}

/// Rewrites to the fixpoint of the rule table: no rule matches any subterm
/// of the result. Semantically equivalent to the input.
pub fn simplify(inv: Invariant) -> Invariant {
    let mut current = inv;
    loop {
        let (next, changed) = apply_once(current);
        current = next;
        if !changed {
            return current;
        }
    }
}

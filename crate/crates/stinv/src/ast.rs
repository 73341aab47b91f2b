//! The invariant term language.
//!
//! An [`Invariant`] is the basic logical entity: something that is supposed
//! to hold for a system throughout space and time. Invariants are built from
//! boolean connectives over atoms for time (integer time points and
//! intervals), two-dimensional grid occupancy (points and boxes), ownership,
//! events, component states, probabilities, and topology (nodes, edges,
//! transitions). Time values and grid coordinates are `i64`; labels are
//! strings.
//!
//! Terms are immutable values: every operation in this crate builds new terms
//! and never mutates in place, so invariants are safe to share and send
//! between threads.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

/// A probability in `[0, 1]`.
///
/// Wraps an `f64` that is guaranteed finite and in range, which makes
/// equality, ordering and hashing well defined (`-0.0` is normalized to
/// `0.0` on construction).
#[derive(Debug, Clone, Copy)]
pub struct Probability(f64);

/// Rejected probability value (outside `[0, 1]` or not finite).
#[derive(Debug, Clone, PartialEq, Error)]
#[error("probability {0} is not in [0, 1]")]
pub struct InvalidProbability(pub f64);

impl Probability {
    pub fn new(p: f64) -> Result<Self, InvalidProbability> {
        if p.is_finite() && (0.0..=1.0).contains(&p) {
            // +0.0 and -0.0 must compare and hash identically.
            Ok(Probability(p + 0.0))
        } else {
            Err(InvalidProbability(p))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl PartialEq for Probability {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}

impl Eq for Probability {}

impl PartialOrd for Probability {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Probability {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Hash for Probability {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

/// A term of the invariant language.
///
/// The variant declaration order is load-bearing: the derived `Ord` is the
/// canonical total order on terms, with the constructor rank as primary key
/// (`True` < `False` < `TimePoint` < ... < `BigOr`) and left-to-right
/// lexicographic field comparison as secondary key. Structural equality
/// coincides with `Ordering::Equal`.
///
/// Boxes are kept corner-ordered (`x1 <= x2`, `y1 <= y2`, `z1 <= z2`); use
/// the [`Invariant::occupy_box`] family of constructors, which normalize by
/// swapping corners, rather than building the variants directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    True,
    False,
    TimePoint(i64),
    TimeInterval {
        t1: i64,
        t2: i64,
    },
    Owner(String),
    Event(String),
    ComponentState(String),
    Prob(Probability),
    OccupyPoint {
        x: i64,
        y: i64,
    },
    OccupyBox {
        x1: i64,
        y1: i64,
        x2: i64,
        y2: i64,
    },
    OwnPoint {
        owner: String,
        x: i64,
        y: i64,
    },
    OwnBox {
        owner: String,
        x1: i64,
        y1: i64,
        x2: i64,
        y2: i64,
    },
    Occupy3DPoint {
        x: i64,
        y: i64,
        z: i64,
    },
    Occupy3DBox {
        x1: i64,
        y1: i64,
        z1: i64,
        x2: i64,
        y2: i64,
        z2: i64,
    },
    OccupyCircle {
        x: i64,
        y: i64,
        radius: i64,
    },
    OccupyNode(String),
    Edge {
        source: String,
        target: String,
    },
    Transition {
        source: String,
        event: String,
        target: String,
    },
    Not(Box<Invariant>),
    And(Box<Invariant>, Box<Invariant>),
    Or(Box<Invariant>, Box<Invariant>),
    Implies(Box<Invariant>, Box<Invariant>),
    BigAnd(Vec<Invariant>),
    BigOr(Vec<Invariant>),
}

impl Invariant {
    // Named after the connective, not the trait.
    #[allow(clippy::should_implement_trait)]
    pub fn not(t: Invariant) -> Invariant {
        Invariant::Not(Box::new(t))
    }

    pub fn and(t1: Invariant, t2: Invariant) -> Invariant {
        Invariant::And(Box::new(t1), Box::new(t2))
    }

    pub fn or(t1: Invariant, t2: Invariant) -> Invariant {
        Invariant::Or(Box::new(t1), Box::new(t2))
    }

    pub fn implies(premise: Invariant, conclusion: Invariant) -> Invariant {
        Invariant::Implies(Box::new(premise), Box::new(conclusion))
    }

    pub fn big_and(children: Vec<Invariant>) -> Invariant {
        Invariant::BigAnd(children)
    }

    pub fn big_or(children: Vec<Invariant>) -> Invariant {
        Invariant::BigOr(children)
    }

    pub fn time_point(t: i64) -> Invariant {
        Invariant::TimePoint(t)
    }

    pub fn time_interval(t1: i64, t2: i64) -> Invariant {
        debug_assert!(t1 <= t2, "time interval bounds out of order");
        Invariant::TimeInterval { t1, t2 }
    }

    pub fn owner(label: impl Into<String>) -> Invariant {
        Invariant::Owner(label.into())
    }

    pub fn event(label: impl Into<String>) -> Invariant {
        Invariant::Event(label.into())
    }

    pub fn component_state(label: impl Into<String>) -> Invariant {
        Invariant::ComponentState(label.into())
    }

    pub fn prob(p: f64) -> Result<Invariant, InvalidProbability> {
        Ok(Invariant::Prob(Probability::new(p)?))
    }

    pub fn occupy_point(x: i64, y: i64) -> Invariant {
        Invariant::OccupyPoint { x, y }
    }

    /// Builds an `OccupyBox` from any two opposite corners; the stored box is
    /// corner-ordered so that `(x1, y1)` is the lower-left and `(x2, y2)` the
    /// upper-right corner. `occupy_box(a, b, c, d) == occupy_box(c, d, a, b)`.
    pub fn occupy_box(x1: i64, y1: i64, x2: i64, y2: i64) -> Invariant {
        Invariant::OccupyBox {
            x1: x1.min(x2),
            y1: y1.min(y2),
            x2: x1.max(x2),
            y2: y1.max(y2),
        }
    }

    pub fn own_point(owner: impl Into<String>, x: i64, y: i64) -> Invariant {
        Invariant::OwnPoint {
            owner: owner.into(),
            x,
            y,
        }
    }

    /// Corner-ordering constructor for `OwnBox`; see [`Invariant::occupy_box`].
    pub fn own_box(owner: impl Into<String>, x1: i64, y1: i64, x2: i64, y2: i64) -> Invariant {
        Invariant::OwnBox {
            owner: owner.into(),
            x1: x1.min(x2),
            y1: y1.min(y2),
            x2: x1.max(x2),
            y2: y1.max(y2),
        }
    }

    pub fn occupy_3d_point(x: i64, y: i64, z: i64) -> Invariant {
        Invariant::Occupy3DPoint { x, y, z }
    }

    /// Corner-ordering constructor for `Occupy3DBox`.
    pub fn occupy_3d_box(x1: i64, y1: i64, z1: i64, x2: i64, y2: i64, z2: i64) -> Invariant {
        Invariant::Occupy3DBox {
            x1: x1.min(x2),
            y1: y1.min(y2),
            z1: z1.min(z2),
            x2: x1.max(x2),
            y2: y1.max(y2),
            z2: z1.max(z2),
        }
    }

    pub fn occupy_circle(x: i64, y: i64, radius: i64) -> Invariant {
        Invariant::OccupyCircle { x, y, radius }
    }

    pub fn occupy_node(node: impl Into<String>) -> Invariant {
        Invariant::OccupyNode(node.into())
    }

    pub fn edge(source: impl Into<String>, target: impl Into<String>) -> Invariant {
        Invariant::Edge {
            source: source.into(),
            target: target.into(),
        }
    }

    pub fn transition(
        source: impl Into<String>,
        event: impl Into<String>,
        target: impl Into<String>,
    ) -> Invariant {
        Invariant::Transition {
            source: source.into(),
            event: event.into(),
            target: target.into(),
        }
    }

    /// True for leaf terms (no invariant children).
    pub fn is_atom(&self) -> bool {
        !matches!(
            self,
            Invariant::Not(_)
                | Invariant::And(..)
                | Invariant::Or(..)
                | Invariant::Implies(..)
                | Invariant::BigAnd(_)
                | Invariant::BigOr(_)
        )
    }

    /// Number of nodes in the term tree (atoms count 1, connectives count
    /// 1 plus their children).
    pub fn node_count(&self) -> usize {
        match self {
            Invariant::Not(t) => 1 + t.node_count(),
            Invariant::And(t1, t2) | Invariant::Or(t1, t2) | Invariant::Implies(t1, t2) => {
                1 + t1.node_count() + t2.node_count()
            }
            Invariant::BigAnd(ts) | Invariant::BigOr(ts) => {
                1 + ts.iter().map(Invariant::node_count).sum::<usize>()
            }
            _ => 1,
        }
    }
}

/// The canonical total order on terms; identical to `Ord::cmp` and exposed
/// under the name the rest of the crate uses for it.
pub fn compare(a: &Invariant, b: &Invariant) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::True => write!(f, "TRUE"),
            Invariant::False => write!(f, "FALSE"),
            Invariant::TimePoint(t) => write!(f, "TimePoint({t})"),
            Invariant::TimeInterval { t1, t2 } => write!(f, "TimeInterval({t1}, {t2})"),
            Invariant::Owner(o) => write!(f, "Owner({o:?})"),
            Invariant::Event(e) => write!(f, "Event({e:?})"),
            Invariant::ComponentState(s) => write!(f, "ComponentState({s:?})"),
            Invariant::Prob(p) => write!(f, "Prob({})", p.value()),
            Invariant::OccupyPoint { x, y } => write!(f, "OccupyPoint({x}, {y})"),
            Invariant::OccupyBox { x1, y1, x2, y2 } => {
                write!(f, "OccupyBox({x1}, {y1}, {x2}, {y2})")
            }
            Invariant::OwnPoint { owner, x, y } => write!(f, "OwnPoint({owner:?}, {x}, {y})"),
            Invariant::OwnBox {
                owner,
                x1,
                y1,
                x2,
                y2,
            } => {
                write!(f, "OwnBox({owner:?}, {x1}, {y1}, {x2}, {y2})")
            }
            Invariant::Occupy3DPoint { x, y, z } => write!(f, "Occupy3DPoint({x}, {y}, {z})"),
            Invariant::Occupy3DBox {
                x1,
                y1,
                z1,
                x2,
                y2,
                z2,
            } => {
                write!(f, "Occupy3DBox({x1}, {y1}, {z1}, {x2}, {y2}, {z2})")
            }
            Invariant::OccupyCircle { x, y, radius } => {
                write!(f, "OccupyCircle({x}, {y}, {radius})")
            }
            Invariant::OccupyNode(n) => write!(f, "OccupyNode({n:?})"),
            Invariant::Edge { source, target } => write!(f, "Edge({source:?}, {target:?})"),
            Invariant::Transition {
                source,
                event,
                target,
            } => {
                write!(f, "Transition({source:?}, {event:?}, {target:?})")
            }
            Invariant::Not(t) => write!(f, "NOT({t})"),
            Invariant::And(t1, t2) => write!(f, "AND({t1}, {t2})"),
            Invariant::Or(t1, t2) => write!(f, "OR({t1}, {t2})"),
            Invariant::Implies(p, c) => write!(f, "IMPLIES({p}, {c})"),
            Invariant::BigAnd(ts) => write_list(f, "BIGAND", ts),
            Invariant::BigOr(ts) => write_list(f, "BIGOR", ts),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, ts: &[Invariant]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, t) in ts.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{t}")?;
    }
    write!(f, ")")
}

//! Textual serialization of invariants (`.stinv` files).
//!
//! The wire format is a tree of JSON objects, each carrying an `"op"`
//! discriminator plus the fields of its constructor: connective children
//! under `"t"` / `"t1"`,`"t2"` / `"premise"`,`"conclusion"` / `"args"`, atom
//! fields under their constructor names (`"timepoint"`, `"owner"`, `"x1"`,
//! ...). Compact mode emits no insignificant whitespace and is
//! byte-deterministic, so the compact serialization of a normalized term is
//! a canonical fingerprint: two normalized terms are equal iff their
//! compact serializations are byte-equal.
//!
//! The parser is strict: unknown ops, missing fields, unexpected fields,
//! wrong field types, probabilities outside `[0, 1]` and reversed time
//! intervals are all rejected with an error naming the offending op or
//! field. Box corners are reordered on load, mirroring the box
//! constructors.
//!
//! A model file is either a versioned document `{"version":"1","root":...}`
//! or a bare invariant object; [`load_model`] accepts both.

use std::fmt::Write as _;

use serde_json::Value;
use thiserror::Error;

use crate::ast::{Invariant, Probability};

/// Serialization layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// No insignificant whitespace; byte-deterministic.
    Compact,
    /// Two-space indentation, one field per line.
    Pretty,
}

/// Why a text failed to parse into an invariant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    /// Not valid JSON at all.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// Valid JSON that does not match the schema.
    #[error("schema error: {0}")]
    Schema(String),
    /// A field value outside its domain.
    #[error("range error: {0}")]
    Range(String),
}

/// A versioned model file: format version and root invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelDocument {
    pub version: String,
    pub root: Invariant,
}

/// The current document version.
pub const DOCUMENT_VERSION: &str = "1";

impl ModelDocument {
    pub fn new(root: Invariant) -> Self {
        ModelDocument {
            version: DOCUMENT_VERSION.to_string(),
            root,
        }
    }

    pub fn to_text(&self, mode: Mode) -> String {
        let mut out = String::new();
        match mode {
            Mode::Compact => {
                out.push_str("{\"version\":");
                write_json_string(&mut out, &self.version);
                out.push_str(",\"root\":");
                write_invariant(&mut out, &self.root, mode, 0);
                out.push('}');
            }
            Mode::Pretty => {
                out.push_str("{\n  \"version\": ");
                write_json_string(&mut out, &self.version);
                out.push_str(",\n  \"root\": ");
                write_invariant(&mut out, &self.root, mode, 1);
                out.push_str("\n}");
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        let value = parse_json(text)?;
        let Value::Object(map) = &value else {
            return Err(ParseError::Schema("document must be an object".to_string()));
        };
        for key in map.keys() {
            if key != "version" && key != "root" {
                return Err(ParseError::Schema(format!(
                    "unexpected field `{key}` in document"
                )));
            }
        }
        let version = map
            .get("version")
            .ok_or_else(|| ParseError::Schema("document is missing `version`".to_string()))?
            .as_str()
            .ok_or_else(|| ParseError::Schema("`version` must be a string".to_string()))?;
        if version != DOCUMENT_VERSION {
            return Err(ParseError::Schema(format!(
                "unsupported document version {version:?}, expected \"{DOCUMENT_VERSION}\""
            )));
        }
        let root = map
            .get("root")
            .ok_or_else(|| ParseError::Schema("document is missing `root`".to_string()))?;
        Ok(ModelDocument {
            version: version.to_string(),
            root: invariant_from_value(root)?,
        })
    }
}

/// Serializes an invariant deterministically in the given mode.
pub fn serialize_invariant(inv: &Invariant, mode: Mode) -> String {
    let mut out = String::new();
    write_invariant(&mut out, inv, mode, 0);
    out
}

/// Parses the serialized form back; inverse of [`serialize_invariant`].
pub fn parse_invariant(text: &str) -> Result<Invariant, ParseError> {
    invariant_from_value(&parse_json(text)?)
}

/// Reads a model from text: a versioned document (an object with a
/// `"version"` field) or a bare invariant.
pub fn load_model(text: &str) -> Result<Invariant, ParseError> {
    let value = parse_json(text)?;
    if matches!(&value, Value::Object(map) if map.contains_key("version")) {
        // Re-parse through the document path for its stricter checks.
        Ok(ModelDocument::from_text(text)?.root)
    } else {
        invariant_from_value(&value)
    }
}

fn parse_json(text: &str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

// ---------------------------------------------------------------------------
// Writing

enum Field<'a> {
    Int(&'a str, i64),
    Float(&'a str, f64),
    Text(&'a str, &'a str),
    Child(&'a str, &'a Invariant),
    List(&'a str, &'a [Invariant]),
}

fn fields_of(inv: &Invariant) -> (&'static str, Vec<Field<'_>>) {
    use Field::*;
    match inv {
        Invariant::True => ("TRUE", vec![]),
        Invariant::False => ("FALSE", vec![]),
        Invariant::TimePoint(t) => ("TimePoint", vec![Int("timepoint", *t)]),
        Invariant::TimeInterval { t1, t2 } => (
            "TimeInterval",
            vec![Int("timepoint1", *t1), Int("timepoint2", *t2)],
        ),
        Invariant::Owner(o) => ("Owner", vec![Text("owner", o)]),
        Invariant::Event(e) => ("Event", vec![Text("event", e)]),
        Invariant::ComponentState(s) => ("ComponentState", vec![Text("state", s)]),
        Invariant::Prob(p) => ("Prob", vec![Float("p", p.value())]),
        Invariant::OccupyPoint { x, y } => ("OccupyPoint", vec![Int("x", *x), Int("y", *y)]),
        Invariant::OccupyBox { x1, y1, x2, y2 } => (
            "OccupyBox",
            vec![
                Int("x1", *x1),
                Int("y1", *y1),
                Int("x2", *x2),
                Int("y2", *y2),
            ],
        ),
        Invariant::OwnPoint { owner, x, y } => (
            "OwnPoint",
            vec![Text("owner", owner), Int("x", *x), Int("y", *y)],
        ),
        Invariant::OwnBox {
            owner,
            x1,
            y1,
            x2,
            y2,
        } => (
            "OwnBox",
            vec![
                Text("owner", owner),
                Int("x1", *x1),
                Int("y1", *y1),
                Int("x2", *x2),
                Int("y2", *y2),
            ],
        ),
        Invariant::Occupy3DPoint { x, y, z } => (
            "Occupy3DPoint",
            vec![Int("x", *x), Int("y", *y), Int("z", *z)],
        ),
        Invariant::Occupy3DBox {
            x1,
            y1,
            z1,
            x2,
            y2,
            z2,
        } => (
            "Occupy3DBox",
            vec![
                Int("x1", *x1),
                Int("y1", *y1),
                Int("z1", *z1),
                Int("x2", *x2),
                Int("y2", *y2),
                Int("z2", *z2),
            ],
        ),
        Invariant::OccupyCircle { x, y, radius } => (
            "OccupyCircle",
            vec![Int("x", *x), Int("y", *y), Int("radius", *radius)],
        ),
        Invariant::OccupyNode(n) => ("OccupyNode", vec![Text("node", n)]),
        Invariant::Edge { source, target } => {
            ("Edge", vec![Text("source", source), Text("target", target)])
        }
        Invariant::Transition {
            source,
            event,
            target,
        } => (
            "Transition",
            vec![
                Text("source", source),
                Text("event", event),
                Text("target", target),
            ],
        ),
        Invariant::Not(t) => ("NOT", vec![Child("t", t)]),
        Invariant::And(t1, t2) => ("AND", vec![Child("t1", t1), Child("t2", t2)]),
        Invariant::Or(t1, t2) => ("OR", vec![Child("t1", t1), Child("t2", t2)]),
        Invariant::Implies(p, c) => ("IMPLIES", vec![Child("premise", p), Child("conclusion", c)]),
        Invariant::BigAnd(ts) => ("BIGAND", vec![List("args", ts)]),
        Invariant::BigOr(ts) => ("BIGOR", vec![List("args", ts)]),
    }
}

fn write_invariant(out: &mut String, inv: &Invariant, mode: Mode, indent: usize) {
    let (op, fields) = fields_of(inv);
    match mode {
        Mode::Compact => {
            out.push_str("{\"op\":");
            write_json_string(out, op);
            for field in &fields {
                out.push(',');
                write_field_compact(out, field);
            }
            out.push('}');
        }
        Mode::Pretty => {
            let pad = "  ".repeat(indent + 1);
            out.push_str("{\n");
            let _ = write!(out, "{pad}\"op\": ");
            write_json_string(out, op);
            for field in &fields {
                out.push_str(",\n");
                out.push_str(&pad);
                write_field_pretty(out, field, indent + 1);
            }
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
    }
}

fn write_field_compact(out: &mut String, field: &Field<'_>) {
    match field {
        Field::Int(name, v) => {
            let _ = write!(out, "\"{name}\":{v}");
        }
        Field::Float(name, v) => {
            let _ = write!(out, "\"{name}\":{v}");
        }
        Field::Text(name, v) => {
            let _ = write!(out, "\"{name}\":");
            write_json_string(out, v);
        }
        Field::Child(name, child) => {
            let _ = write!(out, "\"{name}\":");
            write_invariant(out, child, Mode::Compact, 0);
        }
        Field::List(name, items) => {
            let _ = write!(out, "\"{name}\":[");
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_invariant(out, item, Mode::Compact, 0);
            }
            out.push(']');
        }
    }
}

fn write_field_pretty(out: &mut String, field: &Field<'_>, indent: usize) {
    match field {
        Field::Int(name, v) => {
            let _ = write!(out, "\"{name}\": {v}");
        }
        Field::Float(name, v) => {
            let _ = write!(out, "\"{name}\": {v}");
        }
        Field::Text(name, v) => {
            let _ = write!(out, "\"{name}\": ");
            write_json_string(out, v);
        }
        Field::Child(name, child) => {
            let _ = write!(out, "\"{name}\": ");
            write_invariant(out, child, Mode::Pretty, indent);
        }
        Field::List(name, items) => {
            let _ = write!(out, "\"{name}\": [");
            if items.is_empty() {
                out.push(']');
                return;
            }
            let pad = "  ".repeat(indent + 1);
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                out.push_str(&pad);
                write_invariant(out, item, Mode::Pretty, indent + 1);
            }
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
    }
}

fn write_json_string(out: &mut String, s: &str) {
    // serde_json handles all JSON escaping rules.
    out.push_str(&serde_json::to_string(s).expect("strings always serialize"));
}

// ---------------------------------------------------------------------------
// Reading

struct FieldReader<'a> {
    op: String,
    map: &'a serde_json::Map<String, Value>,
    taken: Vec<&'static str>,
}

impl<'a> FieldReader<'a> {
    fn get(&mut self, name: &'static str) -> Result<&'a Value, ParseError> {
        self.taken.push(name);
        self.map.get(name).ok_or_else(|| {
            ParseError::Schema(format!("op `{}` is missing field `{name}`", self.op))
        })
    }

    fn int(&mut self, name: &'static str) -> Result<i64, ParseError> {
        let value = self.get(name)?;
        value.as_i64().ok_or_else(|| {
            ParseError::Schema(format!(
                "field `{name}` of op `{}` must be an integer, got {value}",
                self.op
            ))
        })
    }

    fn float(&mut self, name: &'static str) -> Result<f64, ParseError> {
        let value = self.get(name)?;
        value.as_f64().ok_or_else(|| {
            ParseError::Schema(format!(
                "field `{name}` of op `{}` must be a number, got {value}",
                self.op
            ))
        })
    }

    fn text(&mut self, name: &'static str) -> Result<String, ParseError> {
        let value = self.get(name)?;
        value.as_str().map(str::to_string).ok_or_else(|| {
            ParseError::Schema(format!(
                "field `{name}` of op `{}` must be a string, got {value}",
                self.op
            ))
        })
    }

    fn child(&mut self, name: &'static str) -> Result<Invariant, ParseError> {
        let value = self.get(name)?;
        invariant_from_value(value)
    }

    fn list(&mut self, name: &'static str) -> Result<Vec<Invariant>, ParseError> {
        let value = self.get(name)?;
        let Value::Array(items) = value else {
            return Err(ParseError::Schema(format!(
                "field `{name}` of op `{}` must be an array",
                self.op
            )));
        };
        items.iter().map(invariant_from_value).collect()
    }

    fn finish(self) -> Result<(), ParseError> {
        for key in self.map.keys() {
            if key != "op" && !self.taken.contains(&key.as_str()) {
                return Err(ParseError::Schema(format!(
                    "unexpected field `{key}` for op `{}`",
                    self.op
                )));
            }
        }
        Ok(())
    }
}

fn invariant_from_value(value: &Value) -> Result<Invariant, ParseError> {
    let Value::Object(map) = value else {
        return Err(ParseError::Schema(format!(
            "expected an object, got {value}"
        )));
    };
    let op = map
        .get("op")
        .ok_or_else(|| ParseError::Schema("object is missing `op`".to_string()))?
        .as_str()
        .ok_or_else(|| ParseError::Schema("`op` must be a string".to_string()))?
        .to_string();
    let mut r = FieldReader {
        op: op.clone(),
        map,
        taken: Vec::new(),
    };
    let inv = match op.as_str() {
        "TRUE" => Invariant::True,
        "FALSE" => Invariant::False,
        "TimePoint" => Invariant::TimePoint(r.int("timepoint")?),
        "TimeInterval" => {
            let t1 = r.int("timepoint1")?;
            let t2 = r.int("timepoint2")?;
            if t1 > t2 {
                return Err(ParseError::Range(format!(
                    "time interval bounds out of order: {t1} > {t2}"
                )));
            }
            Invariant::TimeInterval { t1, t2 }
        }
        "Owner" => Invariant::Owner(r.text("owner")?),
        "Event" => Invariant::Event(r.text("event")?),
        "ComponentState" => Invariant::ComponentState(r.text("state")?),
        "Prob" => {
            let p = r.float("p")?;
            Invariant::Prob(Probability::new(p).map_err(|e| ParseError::Range(e.to_string()))?)
        }
        "OccupyPoint" => Invariant::occupy_point(r.int("x")?, r.int("y")?),
        "OccupyBox" => {
            Invariant::occupy_box(r.int("x1")?, r.int("y1")?, r.int("x2")?, r.int("y2")?)
        }
        "OwnPoint" => Invariant::own_point(r.text("owner")?, r.int("x")?, r.int("y")?),
        "OwnBox" => Invariant::own_box(
            r.text("owner")?,
            r.int("x1")?,
            r.int("y1")?,
            r.int("x2")?,
            r.int("y2")?,
        ),
        "Occupy3DPoint" => Invariant::occupy_3d_point(r.int("x")?, r.int("y")?, r.int("z")?),
        "Occupy3DBox" => Invariant::occupy_3d_box(
            r.int("x1")?,
            r.int("y1")?,
            r.int("z1")?,
            r.int("x2")?,
            r.int("y2")?,
            r.int("z2")?,
        ),
        "OccupyCircle" => Invariant::occupy_circle(r.int("x")?, r.int("y")?, r.int("radius")?),
        "OccupyNode" => Invariant::occupy_node(r.text("node")?),
        "Edge" => Invariant::edge(r.text("source")?, r.text("target")?),
        "Transition" => {
            Invariant::transition(r.text("source")?, r.text("event")?, r.text("target")?)
        }
        "NOT" => Invariant::not(r.child("t")?),
        "AND" => Invariant::and(r.child("t1")?, r.child("t2")?),
        "OR" => Invariant::or(r.child("t1")?, r.child("t2")?),
        "IMPLIES" => Invariant::implies(r.child("premise")?, r.child("conclusion")?),
        "BIGAND" => Invariant::BigAnd(r.list("args")?),
        "BIGOR" => Invariant::BigOr(r.list("args")?),
        unknown => {
            return Err(ParseError::Schema(format!("unknown op `{unknown}`")));
        }
    };
    r.finish()?;
    Ok(inv)
}

//! JSON and CSV rendering helpers.

use posetfree::lattice::{Set, SetFamily};
use serde_json::{json, Value};

use crate::formats::set_token;

/// A set as its family-file token: `"1,3"`, or `"{}"` when empty.
pub fn set(s: Set) -> Value {
    Value::String(set_token(s))
}

pub fn sets(list: &[Set]) -> Value {
    Value::Array(list.iter().map(|&s| set(s)).collect())
}

pub fn family(f: &SetFamily) -> Value {
    sets(f.members())
}

/// `(label, set)` pairs in the given order.
pub fn assignment<'a>(pairs: impl IntoIterator<Item = (String, Set)> + 'a) -> Value {
    Value::Array(
        pairs
            .into_iter()
            .map(|(label, s)| json!({ "element": label, "set": set(s) }))
            .collect(),
    )
}

/// An integer that may exceed the exactly representable JSON range.
pub fn big(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

/// A float, with non-finite values as null.
pub fn real(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::Null
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

/// A CSV field: plain if safe, else quoted with doubled quotes.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Six significant decimals; empty for non-finite values.
pub fn csv_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.6}")
    } else {
        String::new()
    }
}

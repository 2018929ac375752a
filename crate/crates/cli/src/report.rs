//! Deterministic JSON reports and the `--pretty` text rendering.

use std::fmt::Write as _;
use std::str::FromStr;

use ckspaces::DenseMatrix;
use serde_json::{Map, Number, Value};

/// A float rendered as `%.12e`; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    let text = format!("{mantissa}e{sign}{:02}", exp.abs());
    Value::Number(Number::from_str(&text).expect("valid JSON number"))
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn matrix(m: &DenseMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|i| nums(&m.row(i).iter().copied().collect::<Vec<_>>())).collect())
}

/// Object builder; `serde_json::Map` keeps keys sorted.
#[derive(Default)]
pub struct Obj(Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }
}

impl From<Obj> for Value {
    fn from(o: Obj) -> Value {
        Value::Object(o.0)
    }
}

pub struct Report {
    pub command: &'static str,
    pub signature: Vec<f64>,
    pub payload: Value,
}

impl Report {
    pub fn to_value(&self) -> Value {
        Obj::new()
            .set("command", self.command)
            .set("signature", nums(&self.signature))
            .set("payload", self.payload.clone())
            .set("version", env!("CARGO_PKG_VERSION"))
            .into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (ckspaces {})", self.command, env!("CARGO_PKG_VERSION"));
        let sig: Vec<String> = self.signature.iter().map(|w| format!("{w}")).collect();
        let _ = writeln!(out, "signature: ({})", sig.join(", "));
        render(&mut out, &self.payload, 0);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(match n.as_f64() {
            Some(x) if !n.is_u64() && !n.is_i64() => {
                if x == 0.0 || (1e-3..1e6).contains(&x.abs()) {
                    format!("{x:.6}")
                } else {
                    format!("{x:.3e}")
                }
            }
            _ => n.to_string(),
        }),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("none".into()),
        _ => None,
    }
}

fn row(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    let cells: Option<Vec<String>> = items.iter().map(|x| x.is_number().then(|| scalar(x)).flatten()).collect();
    cells.map(|c| c.iter().map(|s| format!("{s:>10}")).collect::<Vec<_>>().join(" "))
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if let Some(s) = scalar(x) {
                    let _ = writeln!(out, "{pad}{k}: {s}");
                } else if let Some(r) = row(x) {
                    let _ = writeln!(out, "{pad}{k}: {}", r.trim_start());
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    render(out, x, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if let Some(r) = row(x) {
                    let _ = writeln!(out, "{pad}{r}");
                } else if let Some(s) = scalar(x) {
                    let _ = writeln!(out, "{pad}- {s}");
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(out, x, depth + 1);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

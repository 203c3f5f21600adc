//! JSON and CSV rendering. Floats are written with 17 significant digits so
//! reruns diff cleanly and re-parse to the same bits.

use std::fmt::Write;

use serde_json::Value;

pub fn json(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn number(s: &mut String, n: &serde_json::Number) {
    if let Some(i) = n.as_i64() {
        write!(s, "{i}").unwrap();
    } else if let Some(u) = n.as_u64() {
        write!(s, "{u}").unwrap();
    } else {
        let f = n.as_f64().unwrap_or(f64::NAN);
        write!(s, "{f:.16e}").unwrap();
    }
}

fn indent(s: &mut String, depth: usize) {
    for _ in 0..depth {
        s.push_str("  ");
    }
}

fn write_value(s: &mut String, v: &Value, depth: usize) {
    match v {
        Value::Number(n) => number(s, n),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            s.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                write_value(s, x, depth);
            }
            s.push(']');
        }
        Value::Array(items) => {
            s.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                indent(s, depth + 1);
                write_value(s, x, depth + 1);
                s.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            indent(s, depth);
            s.push(']');
        }
        Value::Object(map) if map.is_empty() => s.push_str("{}"),
        Value::Object(map) => {
            s.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                indent(s, depth + 1);
                s.push_str(&Value::String(k.clone()).to_string());
                s.push_str(": ");
                write_value(s, x, depth + 1);
                s.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            indent(s, depth);
            s.push('}');
        }
        other => s.push_str(&other.to_string()),
    }
}

/// `key,value` rows with dotted paths for nested fields.
pub fn csv(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(v, String::new(), &mut rows);
    let mut s = String::from("key,value\n");
    for (k, x) in rows {
        writeln!(s, "{k},{x}").unwrap();
    }
    s
}

fn flatten(v: &Value, prefix: String, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(x, join(k), rows);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, join(&i.to_string()), rows);
            }
        }
        Value::Number(n) => {
            let mut s = String::new();
            number(&mut s, n);
            rows.push((prefix, s));
        }
        Value::String(t) if t.contains(',') || t.contains('"') => {
            rows.push((prefix, format!("\"{}\"", t.replace('"', "\"\""))));
        }
        Value::String(t) => rows.push((prefix, t.clone())),
        other => rows.push((prefix, other.to_string())),
    }
}

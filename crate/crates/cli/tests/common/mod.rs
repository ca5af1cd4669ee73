#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bwtrun").chain(args.iter().copied());
    let code = bwtrun::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

pub fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn schema(name: &str) -> Value {
    let path = crate_dir()
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks the keywords the committed schemas use: `type`, `enum`,
/// `required`, `properties`, `items`, `prefixItems`, `minimum` and
/// `pattern` (only the 64-digit hex form).
pub fn validate(value: &Value, schema: &Value, path: &str) -> Result<(), String> {
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => return Err(format!("{path}: bad type keyword")),
        };
        if !types.iter().any(|t| has_type(value, t)) {
            return Err(format!("{path}: {value} is not of type {types:?}"));
        }
    }
    if let Some(Value::Array(options)) = schema.get("enum") {
        if !options.contains(value) {
            return Err(format!("{path}: {value} not in {options:?}"));
        }
    }
    if let (Some(min), Some(v)) = (
        schema.get("minimum").and_then(Value::as_i64),
        value.as_i64(),
    ) {
        if v < min {
            return Err(format!("{path}: {v} < {min}"));
        }
    }
    if let (Some(p), Some(s)) = (
        schema.get("pattern").and_then(Value::as_str),
        value.as_str(),
    ) {
        assert_eq!(p, "^[0-9a-f]{64}$", "unsupported pattern");
        if s.len() != 64
            || !s
                .bytes()
                .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
        {
            return Err(format!("{path}: {s:?} is not a sha256 digest"));
        }
    }
    if let Value::Object(map) = value {
        if let Some(Value::Array(req)) = schema.get("required") {
            for k in req.iter().filter_map(Value::as_str) {
                if !map.contains_key(k) {
                    return Err(format!("{path}: missing {k}"));
                }
            }
        }
        if let Some(Value::Object(props)) = schema.get("properties") {
            for (k, sub) in props {
                if let Some(v) = map.get(k) {
                    validate(v, sub, &format!("{path}.{k}"))?;
                }
            }
        }
    }
    if let Value::Array(items) = value {
        if let Some(Value::Array(prefix)) = schema.get("prefixItems") {
            for (i, (v, sub)) in items.iter().zip(prefix).enumerate() {
                validate(v, sub, &format!("{path}[{i}]"))?;
            }
        }
        if let Some(sub) = schema.get("items") {
            for (i, v) in items.iter().enumerate() {
                validate(v, sub, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn has_type(v: &Value, t: &str) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        _ => false,
    }
}

/// Every line of `out` parsed and checked against `schemas/<name>.schema.json`.
pub fn check_json_lines(name: &str, out: &str) -> Vec<Value> {
    let schema = schema(name);
    out.lines()
        .map(|line| {
            let v: Value = serde_json::from_str(line).unwrap();
            validate(&v, &schema, name).unwrap_or_else(|e| panic!("{e}\n{line}"));
            v
        })
        .collect()
}

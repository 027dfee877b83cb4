//! JSON document form of a block matrix.
//!
//! ```text
//! {"kind":"zero","er":2,"ec":3}
//! {"kind":"scalar","er":2,"val":"1/2"}
//! {"kind":"matrix","entries":[["1","2"],["3","4+i"]]}
//! {"kind":"rblock","blocks":[[<doc>,<doc>],[<doc>,<doc>]]}
//! ```
//!
//! Scalars are written as strings in the canonical text form; integer JSON
//! numbers are accepted on input. Output is single-line with a fixed key
//! order.

use std::fmt::Write as _;

use blockmat::{BlockError, BlockMatrix, ElementGrid, Payload, Scalar};
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid document at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("invalid block matrix: {0}")]
    Block(#[from] BlockError),
}

pub fn parse_document(text: &str) -> Result<BlockMatrix, DocError> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let full = e.to_string();
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        DocError::Syntax { line: e.line(), column: e.column(), message }
    })?;
    let b = from_value(&value, "$")?;
    b.validate()?;
    Ok(b)
}

fn schema(path: &str, message: impl Into<String>) -> DocError {
    DocError::Schema { path: path.to_string(), message: message.into() }
}

fn count(obj: &Map<String, Value>, key: &str, path: &str) -> Result<usize, DocError> {
    match obj.get(key) {
        Some(Value::Number(n)) => n
            .as_u64()
            .filter(|&v| v > 0)
            .map(|v| v as usize)
            .ok_or_else(|| schema(path, format!("\"{key}\" must be a positive integer"))),
        Some(_) => Err(schema(path, format!("\"{key}\" must be a positive integer"))),
        None => Err(schema(path, format!("missing \"{key}\""))),
    }
}

fn scalar(v: &Value, path: &str) -> Result<Scalar, DocError> {
    match v {
        Value::String(s) => s.parse().map_err(|e: BlockError| schema(path, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::int)
            .ok_or_else(|| schema(path, "numeric scalars must be integers; use a string for fractions")),
        _ => Err(schema(path, "scalar must be a string or an integer")),
    }
}

fn array<'a>(v: &'a Value, path: &str, what: &str) -> Result<&'a Vec<Value>, DocError> {
    match v {
        Value::Array(a) if !a.is_empty() => Ok(a),
        _ => Err(schema(path, format!("{what} must be a non-empty array"))),
    }
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<(), DocError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(path, format!("unexpected key \"{k}\""))),
        None => Ok(()),
    }
}

fn from_value(v: &Value, path: &str) -> Result<BlockMatrix, DocError> {
    let Value::Object(obj) = v else {
        return Err(schema(path, "expected an object"));
    };
    let kind = match obj.get("kind") {
        Some(Value::String(k)) => k.as_str(),
        _ => return Err(schema(path, "missing string \"kind\"")),
    };
    match kind {
        "zero" => {
            check_keys(obj, &["kind", "er", "ec"], path)?;
            Ok(BlockMatrix::zero(count(obj, "er", path)?, count(obj, "ec", path)?)?)
        }
        "scalar" => {
            check_keys(obj, &["kind", "er", "ec", "val"], path)?;
            let n = count(obj, "er", path)?;
            if obj.contains_key("ec") && count(obj, "ec", path)? != n {
                return Err(schema(path, "scalar block must have er = ec"));
            }
            let val = obj.get("val").ok_or_else(|| schema(path, "missing \"val\""))?;
            Ok(BlockMatrix::scalar(n, scalar(val, &format!("{path}.val"))?)?)
        }
        "matrix" => {
            check_keys(obj, &["kind", "er", "ec", "entries"], path)?;
            let entries = obj.get("entries").ok_or_else(|| schema(path, "missing \"entries\""))?;
            let rows = array(entries, path, "\"entries\"")?
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let row_path = format!("{path}.entries[{i}]");
                    array(row, &row_path, "matrix row")?
                        .iter()
                        .enumerate()
                        .map(|(j, e)| scalar(e, &format!("{row_path}[{j}]")))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let grid = ElementGrid::from_rows(rows)?;
            for (key, actual) in [("er", grid.rows()), ("ec", grid.cols())] {
                if obj.contains_key(key) && count(obj, key, path)? != actual {
                    return Err(schema(path, format!("\"{key}\" disagrees with entries ({actual})")));
                }
            }
            Ok(BlockMatrix::leaf(grid))
        }
        "rblock" => {
            check_keys(obj, &["kind", "er", "ec", "blocks"], path)?;
            let blocks = obj.get("blocks").ok_or_else(|| schema(path, "missing \"blocks\""))?;
            let rows = array(blocks, path, "\"blocks\"")?
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let row_path = format!("{path}.blocks[{i}]");
                    array(row, &row_path, "block row")?
                        .iter()
                        .enumerate()
                        .map(|(j, e)| from_value(e, &format!("{row_path}[{j}]")))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let b = BlockMatrix::rblock_from_rows(rows)?;
            for (key, actual) in [("er", b.er()), ("ec", b.ec())] {
                if obj.contains_key(key) && count(obj, key, path)? != actual {
                    return Err(schema(path, format!("\"{key}\" disagrees with blocks ({actual})")));
                }
            }
            Ok(b)
        }
        other => Err(schema(path, format!("unknown kind \"{other}\""))),
    }
}

/// Single-line canonical document, no trailing newline.
pub fn write_document(b: &BlockMatrix) -> String {
    let mut out = String::new();
    write_node(b, &mut out);
    out
}

fn write_node(b: &BlockMatrix, out: &mut String) {
    // Scalar text never needs JSON escaping.
    match b.payload() {
        Payload::Zero => {
            let _ = write!(out, r#"{{"kind":"zero","er":{},"ec":{}}}"#, b.er(), b.ec());
        }
        Payload::ScalarDiag(s) => {
            let _ = write!(out, r#"{{"kind":"scalar","er":{},"val":"{s}"}}"#, b.er());
        }
        Payload::Leaf(g) => {
            out.push_str(r#"{"kind":"matrix","entries":["#);
            for (i, row) in g.iter_rows().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('[');
                for (j, e) in row.iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "\"{e}\"");
                }
                out.push(']');
            }
            out.push_str("]}");
        }
        Payload::RBlock(g) => {
            out.push_str(r#"{"kind":"rblock","blocks":["#);
            for (i, row) in g.iter_rows().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('[');
                for (j, child) in row.iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    write_node(child, out);
                }
                out.push(']');
            }
            out.push_str("]}");
        }
    }
}

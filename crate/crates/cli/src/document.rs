//! Frame documents on disk.
//!
//! JSON layout, with keys always in this order and one vector per line:
//!
//! ```text
//! {
//!   "field": "real",
//!   "dim": 2,
//!   "vectors": [
//!     [0.0, 1.0],
//!     [-0.8660254037844386, -0.5]
//!   ],
//!   "meta": {"construction":"simplex","dim":2}
//! }
//! ```
//!
//! Complex documents store every coordinate as `[re, im]`. Numbers use the
//! shortest decimal form that reads back to the same `f64`, so a document
//! survives read-then-write byte for byte. Real frames can also be read
//! from headerless CSV, one vector per row.

use std::fmt::Write as _;
use std::path::Path;

use framekit::{DenseMatrix, Field, Frame, C64};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct FrameDocument {
    pub frame: Frame,
    pub meta: Map<String, Value>,
}

fn number(x: f64) -> Result<String, String> {
    if !x.is_finite() {
        return Err(format!("cannot write non-finite number {x}"));
    }
    serde_json::to_string(&x).map_err(|e| e.to_string())
}

fn field_name(f: Field) -> &'static str {
    match f {
        Field::Real => "real",
        Field::Complex => "complex",
    }
}

fn parse_field(v: Option<&Value>) -> Result<Field, String> {
    match v.and_then(Value::as_str) {
        Some("real") => Ok(Field::Real),
        Some("complex") => Ok(Field::Complex),
        Some(other) => Err(format!("unknown field {other:?}; expected \"real\" or \"complex\"")),
        None => Err("missing \"field\"".into()),
    }
}

fn parse_dim(v: Option<&Value>) -> Result<usize, String> {
    match v.and_then(Value::as_u64) {
        Some(d) if d >= 1 => Ok(d as usize),
        _ => Err("\"dim\" must be a positive integer".into()),
    }
}

fn parse_entry(v: &Value, field: Field, at: &str) -> Result<C64, String> {
    match (field, v) {
        (Field::Real, Value::Number(n)) => Ok(C64::new(n.as_f64().ok_or_else(|| format!("{at}: bad number"))?, 0.0)),
        (Field::Complex, Value::Array(pair)) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(|| format!("{at}: real part is not a number"))?;
            let im = pair[1].as_f64().ok_or_else(|| format!("{at}: imaginary part is not a number"))?;
            Ok(C64::new(re, im))
        }
        (Field::Real, _) => Err(format!("{at}: expected a number")),
        (Field::Complex, _) => Err(format!("{at}: expected a [re, im] pair")),
    }
}

/// Rows of `dim` scalars; ragged rows are rejected.
pub fn parse_rows(v: Option<&Value>, dim: usize, field: Field, what: &str) -> Result<Vec<Vec<C64>>, String> {
    let rows = v.and_then(Value::as_array).ok_or_else(|| format!("\"{what}\" must be an array of rows"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.as_array().ok_or_else(|| format!("{what}[{i}] is not an array"))?;
            if row.len() != dim {
                return Err(format!("{what}[{i}] has {} entries, expected dim = {dim}", row.len()));
            }
            row.iter().enumerate().map(|(k, x)| parse_entry(x, field, &format!("{what}[{i}][{k}]"))).collect()
        })
        .collect()
}

impl FrameDocument {
    pub fn new(frame: Frame, meta: Map<String, Value>) -> Self {
        Self { frame, meta }
    }

    pub fn parse_json(text: &str) -> Result<Self, String> {
        let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
        let obj = value.as_object().ok_or("a frame document must be a JSON object")?;
        if let Some(k) = obj.keys().find(|k| !["field", "dim", "vectors", "meta"].contains(&k.as_str())) {
            return Err(format!("unknown key {k:?}"));
        }
        let field = parse_field(obj.get("field"))?;
        let dim = parse_dim(obj.get("dim"))?;
        let vectors = parse_rows(obj.get("vectors"), dim, field, "vectors")?;
        if vectors.is_empty() {
            return Err("\"vectors\" is empty".into());
        }
        if field == Field::Real && vectors.iter().flatten().any(|z| z.im != 0.0) {
            return Err("complex entries in a real document".into());
        }
        let meta = match obj.get("meta") {
            None => Map::new(),
            Some(Value::Object(m)) => m.clone(),
            Some(_) => return Err("\"meta\" must be an object".into()),
        };
        let frame = Frame::new(dim, vectors, field).map_err(|e| e.to_string())?;
        Ok(Self { frame, meta })
    }

    /// Headerless CSV, one real vector per row.
    pub fn parse_csv(text: &str) -> Result<Self, String> {
        let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
        let mut vectors = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| format!("CSV row {i}: {e}"))?;
            let row = record
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    s.parse::<f64>()
                        .map(|x| C64::new(x, 0.0))
                        .map_err(|_| format!("CSV row {i}, column {k}: {s:?} is not a number"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            vectors.push(row);
        }
        let dim = vectors.first().map(Vec::len).ok_or("CSV file has no rows")?;
        if dim == 0 {
            return Err("CSV rows are empty".into());
        }
        let frame = Frame::new(dim, vectors, Field::Real).map_err(|e| e.to_string())?;
        Ok(Self { frame, meta: Map::new() })
    }

    pub fn read(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        let parsed = if is_csv { Self::parse_csv(&text) } else { Self::parse_json(&text) };
        parsed.map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn to_json(&self) -> Result<String, String> {
        let f = &self.frame;
        let mut out = String::new();
        writeln!(out, "{{").unwrap();
        writeln!(out, "  \"field\": \"{}\",", field_name(f.field())).unwrap();
        writeln!(out, "  \"dim\": {},", f.dim()).unwrap();
        writeln!(out, "  \"vectors\": [").unwrap();
        write_rows(&mut out, f.vectors(), f.field())?;
        writeln!(out, "  ],").unwrap();
        let meta = serde_json::to_string(&Value::Object(self.meta.clone())).map_err(|e| e.to_string())?;
        writeln!(out, "  \"meta\": {meta}").unwrap();
        writeln!(out, "}}").unwrap();
        Ok(out)
    }
}

fn write_rows(out: &mut String, rows: &[Vec<C64>], field: Field) -> Result<(), String> {
    for (i, v) in rows.iter().enumerate() {
        let entries = v
            .iter()
            .map(|z| match field {
                Field::Real => number(z.re),
                Field::Complex => Ok(format!("[{}, {}]", number(z.re)?, number(z.im)?)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sep = if i + 1 < rows.len() { "," } else { "" };
        writeln!(out, "    [{}]{sep}", entries.join(", ")).unwrap();
    }
    Ok(())
}

/// A dense matrix in the document layout: `field`, `rows`, `cols`, then
/// `entries` with one matrix row per line.
pub fn matrix_text(m: &DenseMatrix) -> Result<String, String> {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"field\": \"{}\",", field_name(m.field())).unwrap();
    writeln!(out, "  \"rows\": {},", m.rows()).unwrap();
    writeln!(out, "  \"cols\": {},", m.cols()).unwrap();
    writeln!(out, "  \"entries\": [").unwrap();
    write_rows(&mut out, &m.row_vectors(), m.field())?;
    writeln!(out, "  ]").unwrap();
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// A dense matrix as a JSON value, complex entries as `[re, im]`.
pub fn matrix_json(m: &DenseMatrix) -> Value {
    let complex = m.field() == Field::Complex;
    let rows = m
        .row_vectors()
        .iter()
        .map(|r| {
            Value::Array(
                r.iter()
                    .map(|z| if complex { serde_json::json!([z.re, z.im]) } else { serde_json::json!(z.re) })
                    .collect(),
            )
        })
        .collect();
    serde_json::json!({ "field": field_name(m.field()), "rows": m.rows(), "cols": m.cols(), "entries": Value::Array(rows) })
}

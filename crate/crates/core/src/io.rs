//! File formats: JSON states and densities, CSV and JSON tables.
//!
//! Numbers in tables are written with six significant digits, magnitudes
//! below [`tolerance::DISPLAY_FLOOR`] print as `0`, and `-0` never appears,
//! so identical inputs give byte-identical files.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::error::{QpsError, Result};
use crate::linalg::{ComplexMatrix, StateVector};
use crate::phase_space::PhaseSpaceTable;
use crate::ring::SystemShape;
use crate::tolerance;

/// Real number with six significant digits, `%g`-style.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < tolerance::DISPLAY_FLOOR {
        return "0".into();
    }
    let sci = format!("{:.5e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let out = if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    };
    if out == "-0" {
        "0".into()
    } else {
        out
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `re+im i` / `re-im i`, each part with six significant digits.
pub fn format_complex(z: Complex64) -> String {
    let re = format_real(z.re);
    let im = format_real(z.im);
    match im.strip_prefix('-') {
        Some(abs) => format!("{re}-{abs}i"),
        None => format!("{re}+{im}i"),
    }
}

/// Header text for a basis position: global label then digit tuple, e.g. `3 (0,1)`.
pub fn label_header(shape: &SystemShape, i: usize) -> String {
    let digits: Vec<String> = shape.digits_at(i).digits().iter().map(i64::to_string).collect();
    format!("{} ({})", shape.label_at(i).value(), digits.join(","))
}

fn csv_escape(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Header row of labels, then one row per row label.
pub fn table_to_csv(table: &PhaseSpaceTable) -> String {
    let shape = &table.shape;
    let (row_axis, col_axis) = table.kind.axis_names();
    let mut out = String::new();
    let mut header = vec![format!("{row_axis}\\{col_axis}")];
    header.extend((0..table.size()).map(|c| label_header(shape, c)));
    out.push_str(&header.iter().map(|c| csv_escape(c)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for r in 0..table.size() {
        let mut row = vec![csv_escape(&label_header(shape, r))];
        for c in 0..table.size() {
            let v = table.value(r, c);
            row.push(if table.kind.is_real() {
                format_real(v.re)
            } else {
                format_complex(v)
            });
        }
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// A grid of reals with digit labels, e.g. a two-component correlator table.
pub fn grid_to_csv(corner: &str, row_labels: &[String], col_labels: &[String], grid: &[Vec<f64>]) -> String {
    let mut out = csv_escape(corner);
    for c in col_labels {
        out.push(',');
        out.push_str(&csv_escape(c));
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(grid) {
        out.push_str(&csv_escape(label));
        for &x in row {
            out.push(',');
            out.push_str(&format_real(x));
        }
        out.push('\n');
    }
    out
}

/// One row per basis position: label, then value.
pub fn vector_to_csv(shape: &SystemShape, axis: &str, values: &[f64]) -> String {
    let mut out = format!("{},value\n", csv_escape(axis));
    for (i, &x) in values.iter().enumerate() {
        out.push_str(&format!("{},{}\n", csv_escape(&label_header(shape, i)), format_real(x)));
    }
    out
}

/// Evolved or exported amplitudes, one row per position label.
pub fn amplitudes_to_csv(shape: &SystemShape, s: &StateVector) -> String {
    let mut out = String::from("label,amplitude\n");
    for (i, &z) in s.entries().iter().enumerate() {
        out.push_str(&format!(
            "{},{}\n",
            csv_escape(&label_header(shape, i)),
            format_complex(z)
        ));
    }
    out
}

#[derive(Debug, Serialize)]
struct JsonLabel {
    global: i64,
    digits: Vec<i64>,
}

#[derive(Debug, Serialize)]
struct JsonComplex {
    re: serde_json::Value,
    im: serde_json::Value,
}

#[derive(Debug, Serialize)]
struct JsonTable {
    formalism: String,
    kind: String,
    d: usize,
    n: usize,
    row_axis: String,
    col_axis: String,
    labels: Vec<JsonLabel>,
    values: Vec<Vec<serde_json::Value>>,
}

/// The six-digit text form as a JSON number.
fn json_number(x: f64) -> serde_json::Value {
    let text = format_real(x);
    serde_json::from_str(&text).unwrap_or(serde_json::Value::Null)
}

pub fn table_to_json(table: &PhaseSpaceTable) -> String {
    let shape = &table.shape;
    let (row_axis, col_axis) = table.kind.axis_names();
    let labels = json_labels(shape);
    let values = (0..table.size())
        .map(|r| {
            (0..table.size())
                .map(|c| {
                    let v = table.value(r, c);
                    if table.kind.is_real() {
                        json_number(v.re)
                    } else {
                        serde_json::to_value(JsonComplex {
                            re: json_number(v.re),
                            im: json_number(v.im),
                        })
                        .expect("plain struct")
                    }
                })
                .collect()
        })
        .collect();
    let doc = JsonTable {
        formalism: table.formalism.to_string(),
        kind: table.kind.to_string(),
        d: shape.d(),
        n: shape.n(),
        row_axis: row_axis.into(),
        col_axis: col_axis.into(),
        labels,
        values,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain struct");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct JsonVector {
    d: usize,
    n: usize,
    axis: String,
    labels: Vec<JsonLabel>,
    values: Vec<serde_json::Value>,
}

fn json_labels(shape: &SystemShape) -> Vec<JsonLabel> {
    (0..shape.dim())
        .map(|i| JsonLabel {
            global: shape.label_at(i).value(),
            digits: shape.digits_at(i).digits().to_vec(),
        })
        .collect()
}

/// A real vector over basis positions, labelled like the tables.
pub fn vector_to_json(shape: &SystemShape, axis: &str, values: &[f64]) -> String {
    let doc = JsonVector {
        d: shape.d(),
        n: shape.n(),
        axis: axis.into(),
        labels: json_labels(shape),
        values: values.iter().map(|&x| json_number(x)).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain struct");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    State,
    Density,
}

/// On-disk form of a state or density in the position basis.
///
/// Entries are `[re, im]` pairs in ascending global-label order; a density
/// stores its matrix row by row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantumFile {
    pub d: usize,
    pub n: usize,
    pub kind: EntryKind,
    pub basis: String,
    pub entries: Vec<[f64; 2]>,
}

/// A parsed state or density.
#[derive(Debug, Clone, PartialEq)]
pub enum QuantumData {
    State(StateVector),
    Density(DensityMatrix),
}

impl QuantumFile {
    pub fn from_state(shape: &SystemShape, s: &StateVector) -> Self {
        QuantumFile {
            d: shape.d(),
            n: shape.n(),
            kind: EntryKind::State,
            basis: "position".into(),
            entries: s.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn from_density(rho: &DensityMatrix) -> Self {
        QuantumFile {
            d: rho.shape().d(),
            n: rho.shape().n(),
            kind: EntryKind::Density,
            basis: "position".into(),
            entries: rho.matrix().as_slice().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain struct");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| QpsError::Format(e.to_string()))
    }

    /// Validates against a shape built with the given dimension cap.
    pub fn decode(&self, cap: usize) -> Result<(SystemShape, QuantumData)> {
        let shape = SystemShape::with_cap(self.d, self.n, cap)?;
        if self.basis != "position" {
            return Err(QpsError::Format(format!("unsupported basis {:?}", self.basis)));
        }
        let values: Vec<Complex64> = self.entries.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(QpsError::Format("entries must be finite".into()));
        }
        let data = match self.kind {
            EntryKind::State => {
                if values.len() != shape.dim() {
                    return Err(QpsError::DimensionMismatch {
                        expected: shape.dim(),
                        found: values.len(),
                    });
                }
                QuantumData::State(StateVector::new(values))
            }
            EntryKind::Density => {
                let m = ComplexMatrix::from_row_major(shape.dim(), shape.dim(), values)?;
                QuantumData::Density(DensityMatrix::new(shape, m)?)
            }
        };
        Ok((shape, data))
    }
}

//! Line-oriented text format for manifold descriptions.
//!
//! ```text
//! # comment
//! LABEL
//! free text on one line
//! DIM
//! 5
//! BRACKETS
//! 0 1 2 1/2        # i j k c : e_k-coefficient of [e_i, e_j] is c
//! METRIC
//! 1 0 0 0 0        # one row per line
//! ...
//! PHI              # row i, column j holds φ^i_j, i.e. column j is φ(e_j)
//! ...
//! XI
//! 1 0 0 0 0
//! ETA
//! 1 0 0 0 0
//! ```
//!
//! Rationals are written `p/q` or `p`. `BRACKETS` and `LABEL` may be omitted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::ratlin::{format_rational, parse_rational, Matrix, Rational};
use crate::structure::AlmostContactBMetricStructure;

/// `[e_i, e_j]` has `e_k`-coefficient `value`; always `i < j`, `value != 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldDescription {
    pub label: String,
    pub dim: usize,
    pub brackets: Vec<Bracket>,
    pub metric: Matrix,
    pub phi: Matrix,
    pub xi: Vec<Rational>,
    pub eta: Vec<Rational>,
}

impl ManifoldDescription {
    /// Validates and normalises: brackets are reoriented to `i < j`, sorted,
    /// and zero entries dropped.
    pub fn new(
        label: impl Into<String>,
        dim: usize,
        brackets: Vec<(usize, usize, usize, Rational)>,
        metric: Matrix,
        phi: Matrix,
        xi: Vec<Rational>,
        eta: Vec<Rational>,
    ) -> Result<Self> {
        let label = label.into();
        if label.contains(['#', '\n', '\r']) || label.trim() != label {
            return Err(Error::Validation(
                "label must be one trimmed line without '#'".into(),
            ));
        }
        if dim < 3 || dim.is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "dimension must be odd and at least 3, got {dim}"
            )));
        }
        let mut map: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for (i, j, k, v) in brackets {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Validation(format!(
                    "bracket index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if i == j {
                return Err(Error::Validation(format!(
                    "bracket [e_{i}, e_{i}] cannot be specified"
                )));
            }
            let (key, v) = if i < j { ((i, j, k), v) } else { ((j, i, k), -v) };
            if map.insert(key, v).is_some() {
                return Err(Error::Validation(format!(
                    "duplicate bracket entry for ({},{},{})",
                    key.0, key.1, key.2
                )));
            }
        }
        let brackets = map
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j, k), value)| Bracket { i, j, k, value })
            .collect();
        for (name, m) in [("METRIC", &metric), ("PHI", &phi)] {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Validation(format!(
                    "{name} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if !metric.is_symmetric() {
            return Err(Error::Validation("METRIC is not symmetric".into()));
        }
        for (name, v) in [("XI", &xi), ("ETA", &eta)] {
            if v.len() != dim {
                return Err(Error::Validation(format!(
                    "{name} has {} entries, expected {dim}",
                    v.len()
                )));
            }
        }
        Ok(Self {
            label,
            dim,
            brackets,
            metric,
            phi,
            xi,
            eta,
        })
    }

    pub fn algebra(&self) -> Result<LieAlgebra> {
        let entries: Vec<_> = self
            .brackets
            .iter()
            .map(|b| (b.i, b.j, b.k, b.value.clone()))
            .collect();
        LieAlgebra::from_brackets(self.dim, &entries)
    }

    pub fn to_structure(&self) -> Result<AlmostContactBMetricStructure> {
        AlmostContactBMetricStructure::new(
            self.algebra()?,
            self.metric.clone(),
            self.phi.clone(),
            self.xi.clone(),
            self.eta.clone(),
        )
    }

    /// Canonical text form; `parse_manifold(&d.serialize()) == Ok(d)`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if !self.label.is_empty() {
            let _ = writeln!(out, "LABEL\n{}", self.label);
        }
        let _ = writeln!(out, "DIM\n{}", self.dim);
        if !self.brackets.is_empty() {
            out.push_str("BRACKETS\n");
            for b in &self.brackets {
                let _ = writeln!(out, "{} {} {} {}", b.i, b.j, b.k, format_rational(&b.value));
            }
        }
        for (name, m) in [("METRIC", &self.metric), ("PHI", &self.phi)] {
            let _ = writeln!(out, "{name}");
            for i in 0..m.rows() {
                let _ = writeln!(out, "{}", join(m.row(i)));
            }
        }
        let _ = writeln!(out, "XI\n{}", join(&self.xi));
        let _ = writeln!(out, "ETA\n{}", join(&self.eta));
        out
    }
}

fn join(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

const SECTIONS: [&str; 7] = ["LABEL", "DIM", "BRACKETS", "METRIC", "PHI", "XI", "ETA"];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_row(line: usize, text: &str) -> Result<Vec<Rational>> {
    text.split_whitespace()
        .map(|tok| parse_rational(tok).map_err(|m| parse_err(line, m)))
        .collect()
}

/// Header line and numbered body lines of one section.
type Section = (usize, Vec<(usize, String)>);

/// Parses the text format; syntax problems are `Parse` errors (with line
/// numbers), semantic ones are `Validation` errors.
pub fn parse_manifold(text: &str) -> Result<ManifoldDescription> {
    let mut sections: BTreeMap<&'static str, Section> = BTreeMap::new();
    let mut current: Option<&'static str> = None;
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(&name) = SECTIONS.iter().find(|&&s| s == content) {
            if sections.contains_key(name) {
                return Err(parse_err(line_no, format!("duplicate section {name}")));
            }
            sections.insert(name, (line_no, Vec::new()));
            current = Some(name);
            continue;
        }
        let Some(name) = current else {
            return Err(parse_err(line_no, "content before any section header"));
        };
        sections
            .get_mut(name)
            .expect("current section exists")
            .1
            .push((line_no, content.to_string()));
    }

    let eof = text.lines().count().max(1);
    let required = |name: &'static str| {
        sections
            .get(name)
            .ok_or_else(|| parse_err(eof, format!("missing section {name}")))
    };

    let label = match sections.get("LABEL") {
        None => String::new(),
        Some((hdr, lines)) => match lines.as_slice() {
            [] => String::new(),
            [(_, l)] => l.clone(),
            _ => return Err(parse_err(*hdr, "LABEL takes a single line")),
        },
    };

    let (dim_hdr, dim_lines) = required("DIM")?;
    let dim: usize = match dim_lines.as_slice() {
        [(l, s)] => s
            .parse()
            .map_err(|_| parse_err(*l, format!("invalid dimension {s:?}")))?,
        _ => return Err(parse_err(*dim_hdr, "DIM takes a single integer line")),
    };
    if dim < 3 || dim.is_multiple_of(2) {
        return Err(Error::Validation(format!(
            "line {}: dimension must be odd and at least 3, got {dim}",
            dim_lines[0].0
        )));
    }

    let mut brackets = Vec::new();
    if let Some((_, lines)) = sections.get("BRACKETS") {
        for (l, s) in lines {
            let toks: Vec<&str> = s.split_whitespace().collect();
            let [i, j, k, v] = toks.as_slice() else {
                return Err(parse_err(*l, "bracket line needs `i j k value`"));
            };
            let idx = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(*l, format!("invalid index {t:?}")))
            };
            let (i, j, k) = (idx(i)?, idx(j)?, idx(k)?);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Validation(format!(
                    "line {l}: bracket index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            let v = parse_rational(v).map_err(|m| parse_err(*l, m))?;
            brackets.push((i, j, k, v));
        }
    }

    let matrix = |name: &'static str| -> Result<Matrix> {
        let (hdr, lines) = required(name)?;
        if lines.len() != dim {
            return Err(parse_err(
                *hdr,
                format!("{name} needs {dim} rows, found {}", lines.len()),
            ));
        }
        let rows = lines
            .iter()
            .map(|(l, s)| {
                let row = parse_row(*l, s)?;
                if row.len() != dim {
                    return Err(parse_err(
                        *l,
                        format!("{name} row needs {dim} entries, found {}", row.len()),
                    ));
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(rows))
    };
    let vector = |name: &'static str| -> Result<Vec<Rational>> {
        let (hdr, lines) = required(name)?;
        let [(l, s)] = lines.as_slice() else {
            return Err(parse_err(*hdr, format!("{name} takes a single line")));
        };
        let v = parse_row(*l, s)?;
        if v.len() != dim {
            return Err(parse_err(
                *l,
                format!("{name} needs {dim} entries, found {}", v.len()),
            ));
        }
        Ok(v)
    };

    let metric = matrix("METRIC")?;
    if !metric.is_symmetric() {
        return Err(Error::Validation(format!(
            "line {}: METRIC is not symmetric",
            sections["METRIC"].0
        )));
    }
    let phi = matrix("PHI")?;
    let xi = vector("XI")?;
    let eta = vector("ETA")?;
    ManifoldDescription::new(label, dim, brackets, metric, phi, xi, eta)
}

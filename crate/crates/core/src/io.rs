//! Graph ingestion and report serialization.
//!
//! Two input formats: a whitespace edge-list text format (`u v` per line,
//! `#` comments, optional `n <count>` header) and a JSON [`GraphDocument`].
//! Reports serialize to JSON (rationals as `{"num", "den"}` string pairs),
//! CSV, or an aligned text table. Emitted rationals are always in canonical
//! reduced form because [`Rational`] cannot represent anything else.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::rational::Rational;
use crate::report::TheoremReport;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed line {content:?} (expected \"u v\")")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: repeated vertex-count header")]
    RepeatedHeader { line: usize },
    #[error("empty document: no vertex count and no edges")]
    Empty,
    #[error("inconsistent document: {0}")]
    Inconsistent(String),
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("unknown format {0:?} (expected json, csv, or text)")]
    UnknownFormat(String),
}

/// A graph plus optional presentation metadata, as exchanged on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Named vertices, e.g. the `x`, `y` of a sharp example.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<BTreeMap<String, usize>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            n: g.n(),
            edges: g.edges(),
            labels: None,
            marked: None,
        }
    }

    /// Validates the document and builds the graph.
    pub fn graph(&self) -> Result<Graph, ParseError> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(ParseError::Inconsistent(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.n
                )));
            }
        }
        if let Some(marked) = &self.marked {
            for (name, &v) in marked {
                if v >= self.n {
                    return Err(ParseError::Inconsistent(format!(
                        "marked vertex {name} = {v} out of range for n = {}",
                        self.n
                    )));
                }
            }
        }
        Graph::new(self.n, &self.edges).map_err(|e| match e {
            GraphError::SelfLoop(v) => ParseError::SelfLoop { line: 0, vertex: v },
            GraphError::DuplicateEdge(u, v) => ParseError::DuplicateEdge { line: 0, u, v },
            GraphError::VertexOutOfRange { vertex, n } => {
                ParseError::OutOfRange { line: 0, vertex, n }
            }
            GraphError::Empty => ParseError::Empty,
            other => ParseError::Inconsistent(other.to_string()),
        })
    }

    /// Renders the edge-list text form, with an optional leading comment.
    pub fn to_edge_list(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(comment) = comment {
            for line in comment.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "n {}", self.n);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list text format. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<GraphDocument, ParseError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let malformed = || ParseError::Malformed {
            line,
            content: content.to_string(),
        };
        if tokens[0] == "n" {
            if declared_n.is_some() {
                return Err(ParseError::RepeatedHeader { line });
            }
            if tokens.len() != 2 {
                return Err(malformed());
            }
            declared_n = Some(tokens[1].parse().map_err(|_| malformed())?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(malformed());
        }
        let u: usize = tokens[0].parse().map_err(|_| malformed())?;
        let v: usize = tokens[1].parse().map_err(|_| malformed())?;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if edges.contains(&(u, v)) || edges.contains(&(v, u)) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
        edge_lines.push(line);
    }

    let max_index = edges.iter().map(|&(u, v)| u.max(v)).max();
    let n = match (declared_n, max_index) {
        (Some(n), _) => n,
        (None, Some(max)) => max + 1,
        (None, None) => return Err(ParseError::Empty),
    };
    for (&(u, v), &line) in edges.iter().zip(&edge_lines) {
        let worst = u.max(v);
        if worst >= n {
            return Err(ParseError::OutOfRange {
                line,
                vertex: worst,
                n,
            });
        }
    }
    Ok(GraphDocument {
        n,
        edges,
        labels: None,
        marked: None,
    })
}

/// Parses either input format: JSON when the first non-space byte is `{`,
/// the edge-list text format otherwise.
pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        doc.graph()?;
        Ok(doc)
    } else {
        parse_edge_list(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(ParseError::UnknownFormat(other.to_string())),
        }
    }
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

/// Serializes reports. CSV prints rationals in canonical display form
/// (`num` when integral, `num/den` otherwise); JSON keeps explicit
/// numerator/denominator pairs.
pub fn emit_report(reports: &[TheoremReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
        }
        ReportFormat::Csv => {
            let mut out = String::from("id,graph,pass,vacuous,lhs,rhs,margin\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.id,
                    csv_field(&r.graph),
                    r.pass,
                    r.vacuous,
                    r.lhs,
                    r.rhs,
                    r.margin
                );
            }
            out
        }
        ReportFormat::Text => {
            let header = ["check", "graph", "status", "lhs", "rhs", "margin"];
            let rows: Vec<[String; 6]> = reports
                .iter()
                .map(|r| {
                    let status = if r.vacuous {
                        "vacuous"
                    } else if r.pass {
                        "pass"
                    } else {
                        "FAIL"
                    };
                    [
                        r.id.to_string(),
                        r.graph.clone(),
                        status.to_string(),
                        r.lhs.to_string(),
                        r.rhs.to_string(),
                        r.margin.to_string(),
                    ]
                })
                .collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut out = String::new();
            let render = |cells: &[String], widths: &[usize], out: &mut String| {
                let line = cells
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ");
                let _ = writeln!(out, "{}", line.trim_end());
            };
            render(
                &header.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                &widths,
                &mut out,
            );
            for row in &rows {
                render(row, &widths, &mut out);
            }
            out
        }
    }
}

/// Parses the JSON report format back (round-trip inverse of
/// [`emit_report`] with [`ReportFormat::Json`]).
pub fn parse_report_json(text: &str) -> Result<Vec<TheoremReport>, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))
}

/// Per-edge curvature rows. CSV and JSON spell rationals as explicit
/// numerator/denominator pairs (`0` is printed `0/1`).
pub fn emit_curvatures(rows: &[(usize, usize, Rational)], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                u: usize,
                v: usize,
                #[serde(with = "crate::rational::rational_serde")]
                kappa: &'a Rational,
            }
            let rows: Vec<Row> = rows
                .iter()
                .map(|(u, v, kappa)| Row {
                    u: *u,
                    v: *v,
                    kappa,
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"
        }
        ReportFormat::Csv => {
            let mut out = String::from("u,v,kappa\n");
            for (u, v, kappa) in rows {
                let _ = writeln!(out, "{u},{v},{}/{}", kappa.numer(), kappa.denom());
            }
            out
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for (u, v, kappa) in rows {
                let _ = writeln!(out, "({u}, {v})  {kappa}");
            }
            out
        }
    }
}

//! CSV ingestion and JSON/CSV emission.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::metric::{FiniteMetricSpace, Norm, PointCloud};

/// Numeric rows of a CSV document. A first row that does not parse as numbers
/// is taken to be a header and skipped.
fn numeric_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (lineno, record) in reader.records().enumerate() {
        let record = record?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> =
            record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(row) => rows.push(row),
            Err(_) if lineno == 0 => continue,
            Err(e) => {
                return Err(Error::Parse(format!("row {}: {e}", lineno + 1)));
            }
        }
    }
    Ok(rows)
}

pub fn read_points_csv(text: &str, norm: Norm) -> Result<PointCloud> {
    PointCloud::new(numeric_rows(text)?, norm)
}

pub fn read_matrix_csv(text: &str) -> Result<Vec<Vec<f64>>> {
    let rows = numeric_rows(text)?;
    if rows.is_empty() {
        return Err(Error::Parse("empty distance matrix".into()));
    }
    Ok(rows)
}

/// One point per row; coordinates in shortest round-trip decimal form.
pub fn write_points_csv(cloud: &PointCloud) -> String {
    let mut out = String::new();
    for p in cloud.points() {
        let row: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

/// `{"m", "dist" (row-major lower triangle), "provenance"}`.
pub fn space_json(space: &FiniteMetricSpace) -> serde_json::Value {
    serde_json::json!({
        "m": space.len(),
        "dist": space.lower_triangle(),
        "provenance": space.provenance(),
    })
}

pub fn graph_json(g: &WeightedGraph) -> serde_json::Value {
    let edges: Vec<_> = g.edges().map(|e| (e.u, e.v, e.weight)).collect();
    serde_json::json!({
        "m": g.vertex_count(),
        "edges": edges,
    })
}

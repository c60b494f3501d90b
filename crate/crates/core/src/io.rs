//! The `premap-v1` and `rotation-v1` JSON formats.
//!
//! Both are single JSON objects tagged by a `format` field. Unknown fields
//! are rejected. Output is one compact line.

use serde::{Deserialize, Serialize};

use crate::build::{from_rotation_system, BuildError, HalfEdge, RotationSystem, Sign};
use crate::premap::{Premap, ValidationReport, Violation};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("syntax error: {0}")]
    SyntaxError(String),
    #[error("validation error: {0}")]
    ValidationError(ValidationReport),
    #[error(transparent)]
    Build(#[from] BuildError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::SyntaxError(e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PremapDoc {
    format: String,
    edges: usize,
    isolated_vertices: usize,
    tau: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RotationDoc {
    format: String,
    edges: usize,
    isolated_vertices: usize,
    signs: Vec<String>,
    vertices: Vec<Vec<String>>,
}

pub const PREMAP_FORMAT: &str = "premap-v1";
pub const ROTATION_FORMAT: &str = "rotation-v1";

/// Reads either format, dispatching on the `format` tag.
pub fn parse_map(text: &str) -> Result<Premap, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let format = value
        .get("format")
        .and_then(|f| f.as_str())
        .ok_or_else(|| FormatError::SyntaxError("missing string field `format`".into()))?;
    match format {
        PREMAP_FORMAT => premap_from_doc(serde_json::from_value(value)?),
        ROTATION_FORMAT => {
            let r = rotation_from_doc(serde_json::from_value(value)?)?;
            Ok(from_rotation_system(&r)?)
        }
        other => Err(FormatError::SyntaxError(format!("unknown format `{other}`"))),
    }
}

fn premap_from_doc(doc: PremapDoc) -> Result<Premap, FormatError> {
    let n = 4 * doc.edges;
    if let Some(&c) = doc.tau.iter().flatten().find(|&&c| c >= n) {
        return Err(FormatError::SyntaxError(format!(
            "cross {c} out of range for {} edges",
            doc.edges
        )));
    }
    if doc.tau.iter().any(|c| c.is_empty()) {
        return Err(FormatError::SyntaxError("empty cycle in `tau`".into()));
    }
    Premap::from_cycles(doc.edges, &doc.tau, doc.isolated_vertices)
        .map_err(|e| FormatError::ValidationError(e.0))
}

fn parse_sign(s: &str) -> Result<Sign, FormatError> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" | "\u{2212}" => Ok(Sign::Minus),
        _ => Err(FormatError::SyntaxError(format!("bad sign `{s}`"))),
    }
}

fn parse_half_edge(s: &str) -> Result<HalfEdge, FormatError> {
    let bad = || FormatError::SyntaxError(format!("bad half-edge reference `{s}`"));
    let (e, end) = s.split_once('.').ok_or_else(bad)?;
    let edge = e.parse().map_err(|_| bad())?;
    let end = match end {
        "0" => 0,
        "1" => 1,
        _ => return Err(bad()),
    };
    Ok(HalfEdge { edge, end })
}

fn rotation_from_doc(doc: RotationDoc) -> Result<RotationSystem, FormatError> {
    if doc.signs.len() != doc.edges {
        return Err(FormatError::SyntaxError(format!(
            "{} signs for {} edges",
            doc.signs.len(),
            doc.edges
        )));
    }
    let signs = doc
        .signs
        .iter()
        .map(|s| parse_sign(s))
        .collect::<Result<_, _>>()?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| v.iter().map(|h| parse_half_edge(h)).collect())
        .collect::<Result<_, _>>()?;
    Ok(RotationSystem {
        vertices,
        signs,
        isolated_vertices: doc.isolated_vertices,
    })
}

/// Reads a `rotation-v1` document without building the premap.
pub fn parse_rotation_system(text: &str) -> Result<RotationSystem, FormatError> {
    let doc: RotationDoc = serde_json::from_str(text)?;
    if doc.format != ROTATION_FORMAT {
        return Err(FormatError::SyntaxError(format!(
            "expected format `{ROTATION_FORMAT}`, found `{}`",
            doc.format
        )));
    }
    rotation_from_doc(doc)
}

/// `premap-v1` text. Cycles start at their minimum and are ordered by it,
/// so equal premaps give equal text.
pub fn serialize_map(p: &Premap) -> String {
    let doc = PremapDoc {
        format: PREMAP_FORMAT.into(),
        edges: p.edge_count(),
        isolated_vertices: p.isolated_count(),
        tau: p.tau_cycles(),
    };
    serde_json::to_string(&doc).expect("serializing plain data")
}

pub fn serialize_rotation_system(r: &RotationSystem) -> String {
    let doc = RotationDoc {
        format: ROTATION_FORMAT.into(),
        edges: r.signs.len(),
        isolated_vertices: r.isolated_vertices,
        signs: r
            .signs
            .iter()
            .map(|s| match s {
                Sign::Plus => "+".into(),
                Sign::Minus => "-".into(),
            })
            .collect(),
        vertices: r
            .vertices
            .iter()
            .map(|v| v.iter().map(|h| format!("{}.{}", h.edge, h.end)).collect())
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializing plain data")
}

impl FormatError {
    /// The first premap violation, if this is a validation failure.
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            FormatError::ValidationError(r) => r.violations.first(),
            _ => None,
        }
    }
}

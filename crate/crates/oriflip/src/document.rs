//! JSON documents pairing a pattern descriptor with a total MV
//! assignment, deterministic enough to diff and to golden-test.
//!
//! Schema, format_version 1:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "pattern": { "family": "miura", "params": { "rows": 2, "cols": 3, "alpha": "60" } },
//!   "assignment": [ { "edge": "h:0:0", "mv": "M" }, ... ],
//!   "metadata": { }
//! }
//! ```
//!
//! Families: square, miura, triangle, huffman, twist. A triangle with a
//! radius parameter instead of rows/cols is the hexagonal star region.
//! alpha is an exact rational in degrees ("60", "45/2"), defaulting to
//! 60. The assignment lists every edge of the regenerated pattern exactly
//! once, canonical ids ascending; metadata is free-form and optional.

use crate::pattern::{BuildError, CreasePattern, EdgeId, Mv, MvAssignment, PatternSpec};
use crate::exact::{rat, Rat};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Error, Debug)]
pub enum DocError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0}; this tool reads version {FORMAT_VERSION}")]
    UnsupportedVersion(u32),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} needs the {param} parameter")]
    MissingParam { family: String, param: &'static str },
    #[error("family {family} does not take the {param} parameter")]
    UnexpectedParam { family: String, param: &'static str },
    #[error("alpha {0:?} is not a rational number of degrees")]
    BadAlpha(String),
    #[error("pattern could not be regenerated: {0}")]
    Build(#[from] BuildError),
    #[error("assignment lists edge {0:?} twice")]
    DuplicateEdge(String),
    #[error("pattern has no edge {0:?}")]
    UnknownEdge(String),
    #[error("assignment is missing edge {0:?}")]
    MissingEdge(String),
}

/// The on-disk form; field order here is the serialized key order.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format_version: u32,
    pub pattern: PatternDescriptor,
    pub assignment: Vec<Crease>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PatternDescriptor {
    pub family: String,
    pub params: Params,
}

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    /// Degrees, as an exact rational like "60" or "45/2".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Crease {
    pub edge: String,
    pub mv: MvLetter,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvLetter {
    M,
    V,
}

impl From<Mv> for MvLetter {
    fn from(mv: Mv) -> MvLetter {
        match mv {
            Mv::Mountain => MvLetter::M,
            Mv::Valley => MvLetter::V,
        }
    }
}

impl From<MvLetter> for Mv {
    fn from(l: MvLetter) -> Mv {
        match l {
            MvLetter::M => Mv::Mountain,
            MvLetter::V => Mv::Valley,
        }
    }
}

/// "n" or "n/d" with d nonzero, exactly.
fn parse_alpha(s: &str) -> Result<Rat, DocError> {
    let bad = || DocError::BadAlpha(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: i64 = n.trim().parse().map_err(|_| bad())?;
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(rat(n, d))
}

pub fn descriptor_of(spec: &PatternSpec) -> PatternDescriptor {
    let mut params = Params::default();
    let family = match *spec {
        PatternSpec::Square { rows, cols } => {
            params.rows = Some(rows);
            params.cols = Some(cols);
            "square"
        }
        PatternSpec::Miura { rows, cols, alpha } => {
            params.rows = Some(rows);
            params.cols = Some(cols);
            params.alpha = Some(alpha.to_string());
            "miura"
        }
        PatternSpec::Triangle { rows, cols } => {
            params.rows = Some(rows);
            params.cols = Some(cols);
            "triangle"
        }
        PatternSpec::HexStar { radius } => {
            params.radius = Some(radius);
            "triangle"
        }
        PatternSpec::Huffman { rows, cols, alpha } => {
            params.rows = Some(rows);
            params.cols = Some(cols);
            params.alpha = Some(alpha.to_string());
            "huffman"
        }
        PatternSpec::Twist { rows, cols } => {
            params.rows = Some(rows);
            params.cols = Some(cols);
            "twist"
        }
    };
    PatternDescriptor { family: family.to_string(), params }
}

pub fn spec_of(d: &PatternDescriptor) -> Result<PatternSpec, DocError> {
    let family = d.family.clone();
    let need = |x: Option<usize>, param| {
        x.ok_or_else(|| DocError::MissingParam { family: family.clone(), param })
    };
    let refuse = |x: Option<()>, param| match x {
        Some(()) => Err(DocError::UnexpectedParam { family: family.clone(), param }),
        None => Ok(()),
    };
    let no_alpha = |p: &Params| refuse(p.alpha.as_ref().map(drop), "alpha");
    let no_radius = |p: &Params| refuse(p.radius.map(drop), "radius");
    let alpha = |p: &Params| match &p.alpha {
        Some(s) => parse_alpha(s),
        None => Ok(rat(60, 1)),
    };
    let p = &d.params;
    match d.family.as_str() {
        "square" => {
            no_alpha(p)?;
            no_radius(p)?;
            Ok(PatternSpec::Square { rows: need(p.rows, "rows")?, cols: need(p.cols, "cols")? })
        }
        "miura" => {
            no_radius(p)?;
            Ok(PatternSpec::Miura {
                rows: need(p.rows, "rows")?,
                cols: need(p.cols, "cols")?,
                alpha: alpha(p)?,
            })
        }
        "triangle" => {
            no_alpha(p)?;
            if let Some(radius) = p.radius {
                refuse(p.rows.map(drop), "rows")?;
                refuse(p.cols.map(drop), "cols")?;
                Ok(PatternSpec::HexStar { radius })
            } else {
                Ok(PatternSpec::Triangle {
                    rows: need(p.rows, "rows")?,
                    cols: need(p.cols, "cols")?,
                })
            }
        }
        "huffman" => {
            no_radius(p)?;
            Ok(PatternSpec::Huffman {
                rows: need(p.rows, "rows")?,
                cols: need(p.cols, "cols")?,
                alpha: alpha(p)?,
            })
        }
        "twist" => {
            no_alpha(p)?;
            no_radius(p)?;
            Ok(PatternSpec::Twist { rows: need(p.rows, "rows")?, cols: need(p.cols, "cols")? })
        }
        other => Err(DocError::UnknownFamily(other.to_string())),
    }
}

pub fn make_document(p: &CreasePattern, mu: &MvAssignment) -> Document {
    let mut assignment: Vec<Crease> = p
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| Crease { edge: e.id.clone(), mv: mu.get(EdgeId(i)).into() })
        .collect();
    assignment.sort_by(|a, b| a.edge.cmp(&b.edge));
    Document {
        format_version: FORMAT_VERSION,
        pattern: descriptor_of(&p.spec),
        assignment,
        metadata: BTreeMap::new(),
    }
}

/// Regenerate the pattern from the descriptor and bind the assignment by
/// canonical edge id. The assignment must cover the pattern's edges
/// exactly: duplicates, unknown ids, and gaps are each named in errors.
pub fn document_to_parts(doc: &Document) -> Result<(CreasePattern, MvAssignment), DocError> {
    if doc.format_version != FORMAT_VERSION {
        return Err(DocError::UnsupportedVersion(doc.format_version));
    }
    let p = spec_of(&doc.pattern)?.build()?;
    let mut listed: BTreeMap<&str, Mv> = BTreeMap::new();
    for c in &doc.assignment {
        if listed.insert(c.edge.as_str(), c.mv.into()).is_some() {
            return Err(DocError::DuplicateEdge(c.edge.clone()));
        }
    }
    let known: BTreeSet<&str> = p.edges.iter().map(|e| e.id.as_str()).collect();
    if let Some(bad) = doc.assignment.iter().find(|c| !known.contains(c.edge.as_str())) {
        return Err(DocError::UnknownEdge(bad.edge.clone()));
    }
    let mut mu = MvAssignment::uniform(&p, Mv::Mountain);
    for (i, e) in p.edges.iter().enumerate() {
        match listed.get(e.id.as_str()) {
            Some(&mv) => mu.set(EdgeId(i), mv),
            None => return Err(DocError::MissingEdge(e.id.clone())),
        }
    }
    Ok((p, mu))
}

pub fn parse_document(text: &str) -> Result<(CreasePattern, MvAssignment), DocError> {
    let doc: Document = serde_json::from_str(text)?;
    document_to_parts(&doc)
}

/// Two-space-indented JSON plus a trailing newline; key and edge order
/// are fixed, so equal inputs serialize byte-identically.
pub fn serialize_document(p: &CreasePattern, mu: &MvAssignment) -> String {
    let mut text = serde_json::to_string_pretty(&make_document(p, mu))
        .expect("document serialization cannot fail");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{huffman, miura, square, triangle, twist};

    fn fixtures() -> Vec<(CreasePattern, MvAssignment)> {
        let mut out = Vec::new();
        let p = square::build_square_grid(2, 2).unwrap();
        let mu = square::canonical_mv(&p);
        out.push((p, mu));
        let p = miura::build_miura(2, 3, rat(60, 1)).unwrap();
        let mu = miura::canonical_mv(&p);
        out.push((p, mu));
        let p = miura::build_miura(2, 2, rat(45, 2)).unwrap();
        let mu = miura::canonical_mv(&p);
        out.push((p, mu));
        let p = triangle::build_triangle_region(2, 2).unwrap();
        let mu = triangle::canonical_mv(&p);
        out.push((p, mu));
        let p = triangle::build_hex_star(1).unwrap();
        let mu = triangle::canonical_mv(&p);
        out.push((p, mu));
        let p = huffman::build_huffman(2, 2, rat(72, 1)).unwrap();
        let mu = huffman::canonical_mv(&p);
        out.push((p, mu));
        let p = twist::build_square_twist(1, 1).unwrap();
        let mu = twist::canonical_mv(&p);
        out.push((p, mu));
        out
    }

    #[test]
    fn round_trips_every_family_byte_stably() {
        for (p, mu) in fixtures() {
            let text = serialize_document(&p, &mu);
            let (p2, mu2) = parse_document(&text).unwrap();
            assert_eq!(p2.spec, p.spec);
            assert_eq!(mu2.values, mu.values);
            assert_eq!(serialize_document(&p2, &mu2), text);
        }
    }

    #[test]
    fn assignment_is_sorted_by_edge_id() {
        let p = miura::build_miura(2, 3, rat(60, 1)).unwrap();
        let doc = make_document(&p, &miura::canonical_mv(&p));
        assert_eq!(doc.assignment.len(), p.edge_count());
        for w in doc.assignment.windows(2) {
            assert!(w[0].edge < w[1].edge);
        }
    }

    #[test]
    fn minimal_square_document_parses() {
        let text = r#"{
            "format_version": 1,
            "pattern": { "family": "square", "params": { "rows": 1, "cols": 1 } },
            "assignment": [
                { "edge": "h:0:0", "mv": "M" },
                { "edge": "h:1:0", "mv": "V" },
                { "edge": "v:0:0", "mv": "M" },
                { "edge": "v:0:1", "mv": "V" }
            ]
        }"#;
        let (p, mu) = parse_document(text).unwrap();
        assert_eq!(p.spec, PatternSpec::Square { rows: 1, cols: 1 });
        assert_eq!(mu.get(p.edge_by_id("h:0:0").unwrap()), Mv::Mountain);
        assert_eq!(mu.get(p.edge_by_id("v:0:1").unwrap()), Mv::Valley);
    }

    #[test]
    fn hexstar_descriptor_uses_radius() {
        let p = triangle::build_hex_star(2).unwrap();
        let d = descriptor_of(&p.spec);
        assert_eq!(d.family, "triangle");
        assert_eq!(d.params.radius, Some(2));
        assert_eq!(d.params.rows, None);
        assert_eq!(spec_of(&d).unwrap(), PatternSpec::HexStar { radius: 2 });
    }

    #[test]
    fn alpha_parses_exact_rationals_and_defaults_to_60() {
        assert_eq!(parse_alpha("60").unwrap(), rat(60, 1));
        assert_eq!(parse_alpha("45/2").unwrap(), rat(45, 2));
        assert!(matches!(parse_alpha("45/0"), Err(DocError::BadAlpha(_))));
        assert!(matches!(parse_alpha("sixty"), Err(DocError::BadAlpha(_))));
        let d = PatternDescriptor {
            family: "miura".into(),
            params: Params { rows: Some(2), cols: Some(2), ..Default::default() },
        };
        assert_eq!(
            spec_of(&d).unwrap(),
            PatternSpec::Miura { rows: 2, cols: 2, alpha: rat(60, 1) }
        );
    }

    #[test]
    fn schema_violations_are_rejected_with_names() {
        let p = square::build_square_grid(1, 1).unwrap();
        let mu = square::canonical_mv(&p);
        let good = make_document(&p, &mu);

        let mut doc = good.clone();
        doc.format_version = 2;
        assert!(matches!(document_to_parts(&doc), Err(DocError::UnsupportedVersion(2))));

        let mut doc = good.clone();
        doc.pattern.family = "hexagon".into();
        assert!(matches!(document_to_parts(&doc), Err(DocError::UnknownFamily(f)) if f == "hexagon"));

        let mut doc = good.clone();
        doc.pattern.params.rows = None;
        assert!(matches!(
            document_to_parts(&doc),
            Err(DocError::MissingParam { param: "rows", .. })
        ));

        let mut doc = good.clone();
        doc.pattern.params.alpha = Some("60".into());
        assert!(matches!(
            document_to_parts(&doc),
            Err(DocError::UnexpectedParam { param: "alpha", .. })
        ));

        let mut doc = good.clone();
        doc.pattern.params.rows = Some(0);
        assert!(matches!(document_to_parts(&doc), Err(DocError::Build(_))));

        let mut doc = good.clone();
        let dropped = doc.assignment.pop().unwrap();
        assert!(matches!(
            document_to_parts(&doc),
            Err(DocError::MissingEdge(id)) if id == dropped.edge
        ));

        let mut doc = good.clone();
        let first = doc.assignment[0].clone();
        doc.assignment.push(first);
        assert!(matches!(
            document_to_parts(&doc),
            Err(DocError::DuplicateEdge(id)) if id == good.assignment[0].edge
        ));

        let mut doc = good.clone();
        doc.assignment[0].edge = "h:9:9".into();
        assert!(matches!(
            document_to_parts(&doc),
            Err(DocError::UnknownEdge(id)) if id == "h:9:9"
        ));
    }

    #[test]
    fn json_level_violations_are_schema_errors() {
        assert!(matches!(parse_document("not json"), Err(DocError::Json(_))));
        // unknown keys, bad mv letters, and wrong types all fail in serde
        // with a path-addressed message
        let junk = r#"{ "format_version": 1, "pattern": { "family": "square",
            "params": { "rows": 1, "cols": 1 } }, "assignment": [], "extra": 1 }"#;
        assert!(matches!(parse_document(junk), Err(DocError::Json(_))));
        let badmv = r#"{ "format_version": 1, "pattern": { "family": "square",
            "params": { "rows": 1, "cols": 1 } },
            "assignment": [ { "edge": "h:0:0", "mv": "X" } ] }"#;
        assert!(matches!(parse_document(badmv), Err(DocError::Json(_))));
    }

    #[test]
    fn metadata_survives_reserialization() {
        let p = square::build_square_grid(1, 1).unwrap();
        let mut doc = make_document(&p, &square::canonical_mv(&p));
        doc.metadata.insert("note".into(), serde_json::json!("fixture"));
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let doc2: Document = serde_json::from_str(&text).unwrap();
        assert_eq!(doc2.metadata.get("note"), Some(&serde_json::json!("fixture")));
        assert!(document_to_parts(&doc2).is_ok());
    }
}

//! Output formats: the edge-list interchange format, a structured JSON
//! document and Graphviz DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labeler::EdgeLabeling;
use crate::tree::{Tree, TreeError};
use crate::verifier::vertex_sums;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Structured,
    Dot,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edge-list" => Ok(Format::EdgeList),
            "structured" => Ok(Format::Structured),
            "dot" => Ok(Format::Dot),
            other => Err(format!(
                "unknown format {other:?} (expected edge-list, structured or dot)"
            )),
        }
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("labeling has {labels} entries but the tree has {edges} edges")]
    LabelingMismatch { labels: usize, edges: usize },
    #[error("malformed structured document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// The machine-readable document shared by the CLI and tests.
///
/// `sums` and `residues` are empty when no complete labeling is attached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredDocument {
    pub n: usize,
    /// `(u, v, label)` in edge-id order.
    pub edges: Vec<(usize, usize, Option<usize>)>,
    pub sums: Vec<(usize, u64)>,
    pub modulus: u64,
    pub residues: Vec<(usize, u64)>,
}

impl StructuredDocument {
    pub fn new(t: &Tree, labeling: Option<&EdgeLabeling>) -> Result<Self, FormatError> {
        check_labeling(t, labeling)?;
        let edges = t
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| (u, v, labeling.and_then(|l| l.get(e))))
            .collect();
        let (sums, residues) = match labeling.map(|l| vertex_sums(t, l)) {
            Some(Ok(report)) => (
                report.sums.into_iter().enumerate().collect(),
                report.residues.into_iter().enumerate().collect(),
            ),
            _ => (Vec::new(), Vec::new()),
        };
        Ok(StructuredDocument {
            n: t.vertex_count(),
            edges,
            sums,
            modulus: t.edge_count() as u64 + 2,
            residues,
        })
    }

    /// Rebuilds the tree and whatever labels the document carries.
    pub fn to_tree(&self) -> Result<(Tree, EdgeLabeling), FormatError> {
        let tree =
            Tree::with_vertex_count(self.n, self.edges.iter().map(|&(u, v, _)| (u, v)).collect())?;
        let labels = self.edges.iter().map(|&(_, _, l)| l.unwrap_or(0)).collect();
        Ok((tree, EdgeLabeling::from_labels(labels)))
    }
}

fn check_labeling(t: &Tree, labeling: Option<&EdgeLabeling>) -> Result<(), FormatError> {
    match labeling {
        Some(l) if l.len() != t.edge_count() => Err(FormatError::LabelingMismatch {
            labels: l.len(),
            edges: t.edge_count(),
        }),
        _ => Ok(()),
    }
}

/// Renders `t`, with labels if given, in the requested format.
///
/// Labels in edge-list output ride in trailing comments so the text still
/// parses as a plain tree.
pub fn serialize(
    t: &Tree,
    labeling: Option<&EdgeLabeling>,
    format: Format,
) -> Result<String, FormatError> {
    check_labeling(t, labeling)?;
    match format {
        Format::EdgeList => {
            let mut out = String::with_capacity(t.edge_count() * 12);
            for (e, &(u, v)) in t.edges().iter().enumerate() {
                match labeling.and_then(|l| l.get(e)) {
                    Some(label) => writeln!(out, "{u} {v} # label={label}"),
                    None => writeln!(out, "{u} {v}"),
                }
                .expect("writing to a String cannot fail");
            }
            Ok(out)
        }
        Format::Structured => {
            let doc = StructuredDocument::new(t, labeling)?;
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Dot => Ok(to_dot(t, labeling)),
    }
}

fn to_dot(t: &Tree, labeling: Option<&EdgeLabeling>) -> String {
    let sums = labeling
        .and_then(|l| vertex_sums(t, l).ok())
        .map(|report| report.sums);
    let mut out = String::from("graph {\n");
    for v in t.vertices() {
        match &sums {
            Some(s) => writeln!(out, "  {v} [label=\"{v}\\ns={}\"];", s[v]),
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String cannot fail");
    }
    for (e, &(u, v)) in t.edges().iter().enumerate() {
        match labeling.and_then(|l| l.get(e)) {
            Some(label) => writeln!(out, "  {u} -- {v} [label=\"{label}\"];"),
            None => writeln!(out, "  {u} -- {v};"),
        }
        .expect("writing to a String cannot fail");
    }
    out.push_str("}\n");
    out
}

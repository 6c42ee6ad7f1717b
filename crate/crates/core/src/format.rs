//! JSON interchange documents and DOT export.
//!
//! Documents are written in canonical order (graph order of vertices and
//! edges), so write → read → write is byte-identical.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{Decomposition, Guarantee, Provenance};
use crate::graph::{Edge, Family, Graph, GraphError, VertexLabel};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0:?}")]
    Version(String),
    #[error("edge refers to unknown vertex {0:?}")]
    UnknownRef(String),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(String),
    #[error("edge {0} listed twice")]
    DuplicateEdge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexDoc {
    Atom {
        family: Family,
        index: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        layer: Option<u8>,
    },
    Pair {
        pair: Box<(VertexDoc, VertexDoc)>,
    },
}

impl VertexDoc {
    fn from_label(label: &VertexLabel) -> Self {
        match label {
            VertexLabel::Atom(a) => VertexDoc::Atom { family: a.family, index: a.index, layer: a.layer },
            VertexLabel::Pair(l, r) => VertexDoc::Pair { pair: Box::new((Self::from_label(l), Self::from_label(r))) },
        }
    }

    fn to_label(&self) -> VertexLabel {
        match self {
            VertexDoc::Atom { family, index, layer: Some(k) } => VertexLabel::layered(*family, *index, *k),
            VertexDoc::Atom { family, index, layer: None } => VertexLabel::new(*family, *index),
            VertexDoc::Pair { pair } => VertexLabel::pair(pair.0.to_label(), pair.1.to_label()),
        }
    }
}

/// Vertices plus edges given as pairs of vertex names (`x1_3`, `u_2`, ...).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: String,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[String; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            format_version: FORMAT_VERSION.to_string(),
            vertices: g.vertices().iter().map(VertexDoc::from_label).collect(),
            edges: g.edges().iter().map(|e| [e.first().to_string(), e.second().to_string()]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        check_version(&self.format_version)?;
        let mut by_name = BTreeMap::new();
        for doc in &self.vertices {
            let label = doc.to_label();
            let name = label.to_string();
            if by_name.insert(name.clone(), label).is_some() {
                return Err(FormatError::DuplicateVertex(name));
            }
        }
        let resolve = |name: &String| by_name.get(name).cloned().ok_or_else(|| FormatError::UnknownRef(name.clone()));
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for [a, b] in &self.edges {
            let (a, b) = (resolve(a)?, resolve(b)?);
            let e = Edge::new(a.clone(), b.clone()).ok_or(GraphError::SelfLoop(a.clone()))?;
            if !seen.insert(e.clone()) {
                return Err(FormatError::DuplicateEdge(e.to_string()));
            }
            edges.push((a, b));
        }
        Ok(Graph::new(by_name.into_values(), edges)?)
    }
}

fn check_version(v: &str) -> Result<(), FormatError> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(FormatError::Version(v.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDocument {
    pub format_version: String,
    pub target: GraphDocument,
    pub parts: Vec<GraphDocument>,
    pub guarantee: Guarantee,
    pub provenance: Provenance,
}

impl DecompositionDocument {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        DecompositionDocument {
            format_version: FORMAT_VERSION.to_string(),
            target: GraphDocument::from_graph(&d.target),
            parts: d.parts.iter().map(GraphDocument::from_graph).collect(),
            guarantee: d.guarantee,
            provenance: d.provenance.clone(),
        }
    }

    /// The decomposition as written, guarantee included; nothing is verified.
    pub fn to_decomposition(&self) -> Result<Decomposition, FormatError> {
        check_version(&self.format_version)?;
        Ok(Decomposition {
            target: self.target.to_graph()?,
            parts: self.parts.iter().map(GraphDocument::to_graph).collect::<Result<_, _>>()?,
            guarantee: self.guarantee,
            provenance: self.provenance.clone(),
        })
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

pub fn graph_to_json(g: &Graph) -> String {
    to_json(&GraphDocument::from_graph(g))
}

pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

pub fn decomposition_to_json(d: &Decomposition) -> String {
    to_json(&DecompositionDocument::from_decomposition(d))
}

pub fn decomposition_from_json(text: &str) -> Result<Decomposition, FormatError> {
    serde_json::from_str::<DecompositionDocument>(text)?.to_decomposition()
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for label in g.vertices() {
        let _ = writeln!(out, "  \"{label}\";");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", e.first(), e.second());
    }
    out.push_str("}\n");
    out
}

/// Target vertices, then each part's edges tagged with a `part` attribute.
pub fn decomposition_to_dot(d: &Decomposition) -> String {
    let mut out = String::from("graph G {\n");
    for label in d.target.vertices() {
        let _ = writeln!(out, "  \"{label}\";");
    }
    for (k, part) in d.parts.iter().enumerate() {
        for e in part.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\" [part={k}];", e.first(), e.second());
        }
    }
    out.push_str("}\n");
    out
}

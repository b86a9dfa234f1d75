//! Graph input and output formats.
//!
//! Two input formats are accepted:
//!
//! * a JSON document listing vertex labels, labelled edges, and optional
//!   `entry` / `exit` roles, and
//! * a small read-only subset of Graphviz DOT (`digraph` with plain node and
//!   edge statements, no attributes or subgraphs).
//!
//! Both parse into a [`LabeledGraph`]: a [`Digraph`] over dense vertex ids
//! plus the label table needed to print paths back in the user's own names.
//! JSON is also the output format, and parsing is idempotent: serialising a
//! parsed graph with [`to_json`] and parsing it again yields the same graph.

use pathcover::{Digraph, Path, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// On-disk JSON schema for a graph.
///
/// `vertices` fixes the dense id order (index in the array), `edges` refer to
/// vertices by label, and `entry` / `exit` optionally mark the roles needed
/// by coverage subcommands. Unknown fields are rejected so that typos in
/// hand-written documents fail loudly instead of being ignored.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    /// Optional human-readable name, carried through to reports.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Vertex labels; the array index is the dense vertex id.
    pub vertices: Vec<String>,
    /// Directed edges as `[from, to]` label pairs.
    pub edges: Vec<(String, String)>,
    /// Label of the entry vertex, if the document designates one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
    /// Label of the exit vertex, if the document designates one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exit: Option<String>,
}

/// Why a graph document could not be turned into a [`LabeledGraph`].
#[derive(Debug, Error)]
pub enum InputError {
    /// The text is not syntactically valid JSON or DOT.
    #[error("malformed graph document: {0}")]
    Malformed(String),
    /// The same label appears twice in the vertex table.
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    /// An edge endpoint does not name a declared vertex.
    #[error("edge ({from:?}, {to:?}) references unknown vertex {unknown:?}")]
    UnknownEndpoint {
        /// Source label of the offending edge.
        from: String,
        /// Target label of the offending edge.
        to: String,
        /// Whichever endpoint is undeclared.
        unknown: String,
    },
    /// The same directed edge is listed twice.
    #[error("duplicate edge ({0:?}, {1:?})")]
    DuplicateEdge(String, String),
    /// An `entry` or `exit` role names a label that is not a vertex.
    #[error("{role} label {label:?} is not a vertex")]
    UnknownRole {
        /// Which role was being resolved, `"entry"` or `"exit"`.
        role: &'static str,
        /// The label that failed to resolve.
        label: String,
    },
    /// The input file could not be read.
    #[error("failed to read input: {0}")]
    Io(#[from] std::io::Error),
}

/// A parsed graph together with its label table and optional roles.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    /// The dense-id graph all algorithms run on.
    pub graph: Digraph,
    /// Label of each vertex, indexed by dense id.
    pub labels: Vec<String>,
    /// Optional document name.
    pub name: Option<String>,
    /// Resolved entry vertex, if the document declared one.
    pub entry: Option<VertexId>,
    /// Resolved exit vertex, if the document declared one.
    pub exit: Option<VertexId>,
}

impl LabeledGraph {
    /// Label of vertex `v`.
    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    /// Renders a path as its comma-joined vertex labels.
    pub fn path_line(&self, path: &Path) -> String {
        let mut line = String::new();
        for (i, v) in path.vertices().iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(self.label(*v));
        }
        line
    }

    /// Resolves a label back to its vertex id.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| VertexId::new(i as u32))
    }
}

/// Parses a graph document, sniffing the format from the first
/// non-whitespace character: `{` means JSON, anything else is tried as DOT.
pub fn parse_graph(text: &str) -> Result<LabeledGraph, InputError> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        _ => parse_dot(text),
    }
}

/// Parses the JSON document format.
pub fn parse_json(text: &str) -> Result<LabeledGraph, InputError> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| InputError::Malformed(e.to_string()))?;
    build(doc)
}

/// Serialises a labelled graph back to the JSON document format.
pub fn to_json(labeled: &LabeledGraph) -> String {
    let doc = GraphDocument {
        name: labeled.name.clone(),
        vertices: labeled.labels.clone(),
        edges: labeled
            .graph
            .edges()
            .map(|(u, v)| (labeled.label(u).to_owned(), labeled.label(v).to_owned()))
            .collect(),
        entry: labeled.entry.map(|v| labeled.label(v).to_owned()),
        exit: labeled.exit.map(|v| labeled.label(v).to_owned()),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serialisation is infallible");
    text.push('\n');
    text
}

fn build(doc: GraphDocument) -> Result<LabeledGraph, InputError> {
    let mut index = std::collections::HashMap::with_capacity(doc.vertices.len());
    for (i, label) in doc.vertices.iter().enumerate() {
        if index.insert(label.clone(), i as u32).is_some() {
            return Err(InputError::DuplicateLabel(label.clone()));
        }
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (from, to) in &doc.edges {
        let resolve = |label: &String| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| InputError::UnknownEndpoint {
                    from: from.clone(),
                    to: to.clone(),
                    unknown: label.clone(),
                })
        };
        edges.push((resolve(from)?, resolve(to)?));
    }
    let graph = Digraph::from_edges(doc.vertices.len(), edges).map_err(|e| match e {
        pathcover::GraphError::DuplicateEdge { from, to } => InputError::DuplicateEdge(
            doc.vertices[from as usize].clone(),
            doc.vertices[to as usize].clone(),
        ),
        other => InputError::Malformed(other.to_string()),
    })?;
    let role = |label: &Option<String>, name: &'static str| match label {
        None => Ok(None),
        Some(l) => index
            .get(l)
            .map(|&i| Some(VertexId::new(i)))
            .ok_or_else(|| InputError::UnknownRole {
                role: name,
                label: l.clone(),
            }),
    };
    Ok(LabeledGraph {
        graph,
        labels: doc.vertices,
        name: doc.name,
        entry: role(&doc.entry, "entry")?,
        exit: role(&doc.exit, "exit")?,
    })
}

/// Parses the supported DOT subset.
///
/// Grammar: `digraph [name] { stmt* }` where a statement is a vertex name or
/// an edge chain `a -> b -> c`, optionally terminated by `;`. Names are bare
/// identifiers (letters, digits, `_`, `.`) or double-quoted strings, and
/// `//`, `/* */`, and `#` comments are skipped. Vertices get dense ids in
/// order of first appearance. Attributes, subgraphs, and undirected edges
/// are outside the subset and rejected.
pub fn parse_dot(text: &str) -> Result<LabeledGraph, InputError> {
    let tokens = tokenize_dot(text)?;
    let mut pos = 0usize;
    let expect_keyword = |tokens: &[DotToken], pos: &mut usize, word: &str| {
        match tokens.get(*pos) {
            Some(DotToken::Name(n)) if n.eq_ignore_ascii_case(word) => {
                *pos += 1;
                Ok(())
            }
            other => Err(InputError::Malformed(format!(
                "expected `{word}`, found {}",
                describe(other)
            ))),
        }
    };
    expect_keyword(&tokens, &mut pos, "digraph")?;
    let mut name = None;
    if let Some(DotToken::Name(n)) = tokens.get(pos) {
        name = Some(n.clone());
        pos += 1;
    }
    match tokens.get(pos) {
        Some(DotToken::OpenBrace) => pos += 1,
        other => {
            return Err(InputError::Malformed(format!(
                "expected `{{`, found {}",
                describe(other)
            )))
        }
    }

    let mut labels: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut edge_labels: Vec<(String, String)> = Vec::new();
    let intern = |label: &str,
                      labels: &mut Vec<String>,
                      index: &mut std::collections::HashMap<String, u32>| {
        *index.entry(label.to_owned()).or_insert_with(|| {
            labels.push(label.to_owned());
            labels.len() as u32 - 1
        })
    };
    loop {
        match tokens.get(pos) {
            Some(DotToken::CloseBrace) => {
                pos += 1;
                break;
            }
            Some(DotToken::Name(first)) => {
                pos += 1;
                intern(first, &mut labels, &mut index);
                let mut prev = first.clone();
                while let Some(DotToken::Arrow) = tokens.get(pos) {
                    pos += 1;
                    match tokens.get(pos) {
                        Some(DotToken::Name(next)) => {
                            pos += 1;
                            intern(next, &mut labels, &mut index);
                            edge_labels.push((prev.clone(), next.clone()));
                            prev = next.clone();
                        }
                        other => {
                            return Err(InputError::Malformed(format!(
                                "expected vertex name after `->`, found {}",
                                describe(other)
                            )))
                        }
                    }
                }
                if let Some(DotToken::Semicolon) = tokens.get(pos) {
                    pos += 1;
                }
            }
            other => {
                return Err(InputError::Malformed(format!(
                    "expected vertex name or `}}`, found {}",
                    describe(other)
                )))
            }
        }
    }
    if pos != tokens.len() {
        return Err(InputError::Malformed(format!(
            "trailing input after closing `}}`: {}",
            describe(tokens.get(pos))
        )));
    }

    let mut edges = Vec::with_capacity(edge_labels.len());
    for (from, to) in &edge_labels {
        edges.push((index[from], index[to]));
    }
    let graph = Digraph::from_edges(labels.len(), edges).map_err(|e| match e {
        pathcover::GraphError::DuplicateEdge { from, to } => {
            InputError::DuplicateEdge(labels[from as usize].clone(), labels[to as usize].clone())
        }
        other => InputError::Malformed(other.to_string()),
    })?;
    Ok(LabeledGraph {
        graph,
        labels,
        name,
        entry: None,
        exit: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum DotToken {
    Name(String),
    Arrow,
    OpenBrace,
    CloseBrace,
    Semicolon,
}

fn describe(token: Option<&DotToken>) -> String {
    match token {
        None => "end of input".to_owned(),
        Some(DotToken::Name(n)) => format!("`{n}`"),
        Some(DotToken::Arrow) => "`->`".to_owned(),
        Some(DotToken::OpenBrace) => "`{`".to_owned(),
        Some(DotToken::CloseBrace) => "`}`".to_owned(),
        Some(DotToken::Semicolon) => "`;`".to_owned(),
    }
}

fn tokenize_dot(text: &str) -> Result<Vec<DotToken>, InputError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            _ if c.is_whitespace() => i += 1,
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '/' if bytes.get(i + 1) == Some(&b'*') => {
                let close = text[i + 2..].find("*/").ok_or_else(|| {
                    InputError::Malformed("unterminated block comment".to_owned())
                })?;
                i += 2 + close + 2;
            }
            '{' => {
                tokens.push(DotToken::OpenBrace);
                i += 1;
            }
            '}' => {
                tokens.push(DotToken::CloseBrace);
                i += 1;
            }
            ';' => {
                tokens.push(DotToken::Semicolon);
                i += 1;
            }
            '-' if bytes.get(i + 1) == Some(&b'>') => {
                tokens.push(DotToken::Arrow);
                i += 2;
            }
            '"' => {
                let close = text[i + 1..]
                    .find('"')
                    .ok_or_else(|| InputError::Malformed("unterminated string".to_owned()))?;
                tokens.push(DotToken::Name(text[i + 1..i + 1 + close].to_owned()));
                i += close + 2;
            }
            _ if c.is_ascii_alphanumeric() || c == '_' || c == '.' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' || c == '.' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(DotToken::Name(text[start..i].to_owned()));
            }
            _ => {
                return Err(InputError::Malformed(format!(
                    "unsupported character {c:?}"
                )))
            }
        }
    }
    Ok(tokens)
}

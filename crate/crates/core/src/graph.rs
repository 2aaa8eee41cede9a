//! Per-release service dependency snapshots.
//!
//! A snapshot is a directed graph over named nodes, each tagged as a service
//! or a piece of database infrastructure. The on-disk format is one JSON
//! document per release:
//!
//! ```json
//! {
//!   "release": "v0.0.1",
//!   "nodes": [{"id": "ts-auth-service", "kind": "service"}],
//!   "edges": [{"source": "ts-auth-service", "target": "mysql"}]
//! }
//! ```
//!
//! Field names are normative. Duplicate edges collapse on parse; self-loops,
//! dangling endpoints, duplicate ids, and empty node sets are rejected.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Service,
    Database,
}

impl std::fmt::Display for NodeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NodeKind::Service => write!(f, "service"),
            NodeKind::Database => write!(f, "database"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ServiceNode {
    pub id: String,
    pub kind: NodeKind,
}

impl ServiceNode {
    pub fn service(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            kind: NodeKind::Service,
        }
    }

    pub fn database(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            kind: NodeKind::Database,
        }
    }
}

/// One release of the dependency network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    release: String,
    nodes: BTreeMap<String, NodeKind>,
    edges: BTreeSet<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct Document {
    release: String,
    nodes: Vec<ServiceNode>,
    edges: Vec<DocumentEdge>,
}

#[derive(Serialize, Deserialize)]
struct DocumentEdge {
    source: String,
    target: String,
}

impl Snapshot {
    /// Validates and builds a snapshot. Duplicate edges collapse silently.
    pub fn new(
        release: impl Into<String>,
        nodes: impl IntoIterator<Item = ServiceNode>,
        edges: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self> {
        let release = release.into();
        let mut node_map = BTreeMap::new();
        for node in nodes {
            if node.id.is_empty() {
                return Err(Error::EmptyNodeId(release));
            }
            if node_map.insert(node.id.clone(), node.kind).is_some() {
                return Err(Error::DuplicateNode {
                    release,
                    id: node.id,
                });
            }
        }
        if node_map.is_empty() {
            return Err(Error::EmptyNodeSet(release));
        }
        let mut edge_set = BTreeSet::new();
        for (source, target) in edges {
            if source == target {
                return Err(Error::SelfLoop {
                    release,
                    id: source,
                });
            }
            let missing = if !node_map.contains_key(&source) {
                Some(source.clone())
            } else if !node_map.contains_key(&target) {
                Some(target.clone())
            } else {
                None
            };
            if let Some(missing) = missing {
                return Err(Error::DanglingEndpoint {
                    source,
                    target,
                    missing,
                });
            }
            edge_set.insert((source, target));
        }
        Ok(Self {
            release,
            nodes: node_map,
            edges: edge_set,
        })
    }

    pub fn release(&self) -> &str {
        &self.release
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, id: &str) -> bool {
        self.nodes.contains_key(id)
    }

    pub fn kind_of(&self, id: &str) -> Option<NodeKind> {
        self.nodes.get(id).copied()
    }

    /// Node ids in lexicographic order.
    pub fn node_ids(&self) -> impl Iterator<Item = &str> {
        self.nodes.keys().map(String::as_str)
    }

    pub fn nodes(&self) -> impl Iterator<Item = ServiceNode> + '_ {
        self.nodes.iter().map(|(id, &kind)| ServiceNode {
            id: id.clone(),
            kind,
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges.iter().map(|(s, t)| (s.as_str(), t.as_str()))
    }

    pub fn has_edge(&self, source: &str, target: &str) -> bool {
        self.edges
            .contains(&(source.to_owned(), target.to_owned()))
    }

    /// Distinct neighbors ignoring edge direction.
    pub fn undirected_neighbors(&self, id: &str) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        for (s, t) in &self.edges {
            if s == id {
                out.insert(t.as_str());
            } else if t == id {
                out.insert(s.as_str());
            }
        }
        out
    }

    pub fn undirected_degree(&self, id: &str) -> usize {
        self.undirected_neighbors(id).len()
    }

    /// Subgraph induced on `keep`; edges with any endpoint outside drop.
    pub fn induced_subgraph(&self, keep: &BTreeSet<String>) -> Result<Snapshot> {
        let nodes = self
            .nodes
            .iter()
            .filter(|(id, _)| keep.contains(*id))
            .map(|(id, &kind)| ServiceNode {
                id: id.clone(),
                kind,
            });
        let edges = self
            .edges
            .iter()
            .filter(|(s, t)| keep.contains(s) && keep.contains(t))
            .cloned();
        Snapshot::new(self.release.clone(), nodes, edges)
    }

    /// Renders the snapshot back into its document form.
    pub fn to_document_string(&self) -> String {
        let doc = Document {
            release: self.release.clone(),
            nodes: self.nodes().collect(),
            edges: self
                .edges
                .iter()
                .map(|(s, t)| DocumentEdge {
                    source: s.clone(),
                    target: t.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("snapshot serializes")
    }
}

/// Parses a snapshot document (see module docs for the format).
pub fn parse_snapshot(document: &str) -> Result<Snapshot> {
    let doc: Document =
        serde_json::from_str(document).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    Snapshot::new(
        doc.release,
        doc.nodes,
        doc.edges.into_iter().map(|e| (e.source, e.target)),
    )
}

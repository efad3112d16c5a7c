//! Serializable views of the canonical decomposition.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::decomposition::{verify_tree_decomposition, DecompositionTree, TorsoKind};
use crate::error::Result;
use crate::matroid::Matroid;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsoReport {
    pub ground: Vec<String>,
    pub circuits: Vec<Vec<String>>,
    pub kind: TorsoKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeReport {
    pub id: usize,
    pub part: Vec<String>,
    pub torso: TorsoReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub a: usize,
    pub b: usize,
    /// The side of the induced 2-separation on the `a` end.
    pub separation: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub nodes: Vec<NodeReport>,
    pub edges: Vec<EdgeReport>,
    /// `None` for a single node.
    pub adhesion: Option<usize>,
    pub irredundant: bool,
}

impl DecompositionReport {
    pub fn new(m: &Matroid, dt: &DecompositionTree) -> Result<DecompositionReport> {
        let check = verify_tree_decomposition(m, &dt.tree)?;
        let nodes = (0..dt.node_count())
            .map(|v| {
                let t = &dt.torsos[v];
                NodeReport {
                    id: v,
                    part: m.labels_of(dt.tree.parts[v]),
                    torso: TorsoReport {
                        ground: t.labels().to_vec(),
                        circuits: t.circuits().iter().map(|&c| t.labels_of(c)).collect(),
                        kind: dt.kinds[v],
                    },
                }
            })
            .collect();
        let edges = dt
            .tree
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| EdgeReport {
                a,
                b,
                separation: m.labels_of(dt.tree.side(e, a)),
            })
            .collect();
        Ok(DecompositionReport {
            nodes,
            edges,
            adhesion: check.adhesion,
            irredundant: check.irredundant.unwrap_or(false),
        })
    }

    /// The torsos as matroids, in node order.
    pub fn torsos(&self) -> Result<Vec<Matroid>> {
        self.nodes
            .iter()
            .map(|n| {
                Matroid::from_labeled_circuits(
                    &n.torso.ground,
                    &n.torso.circuits,
                    crate::matroid::ValidationLevel::Full,
                )
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph decomposition {\n");
        for n in &self.nodes {
            let kind = match n.torso.kind {
                TorsoKind::ThreeConnected => "3-connected",
                TorsoKind::Circuit => "circuit",
                TorsoKind::Cocircuit => "cocircuit",
            };
            let _ = writeln!(
                out,
                "  n{} [label=\"{} {{{}}}\\n{}\"];",
                n.id,
                n.id,
                escape(&n.part.join(", ")),
                kind
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -- n{} [label=\"{{{}}}\"];",
                e.a,
                e.b,
                escape(&e.separation.join(", "))
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

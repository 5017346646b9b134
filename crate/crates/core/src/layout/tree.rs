//! Layout tree nodes and their JSON document form:
//! `{"kind", "bounds":[x,y,w,h], "category" (leaf), "rows"/"cols" (grid), "children" (non-leaf)}`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{union_bounds, BBox};
use crate::io::{parse_json, read_text, serialize_nums, write_json};

#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    Row,
    Column,
    Grid { rows: usize, cols: usize },
    Leaf { category: String },
}

impl NodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            NodeKind::Row => "row",
            NodeKind::Column => "column",
            NodeKind::Grid { .. } => "grid",
            NodeKind::Leaf { .. } => "leaf",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutNode {
    pub kind: NodeKind,
    pub bounds: BBox,
    pub children: Vec<LayoutNode>,
}

impl LayoutNode {
    pub fn leaf(category: impl Into<String>, bounds: BBox) -> Self {
        Self {
            kind: NodeKind::Leaf {
                category: category.into(),
            },
            bounds,
            children: Vec::new(),
        }
    }

    /// Container over `children`, with bounds set to their union. A single
    /// child is returned as is.
    pub fn container(kind: NodeKind, mut children: Vec<LayoutNode>) -> Self {
        debug_assert!(!children.is_empty());
        debug_assert!(!matches!(kind, NodeKind::Leaf { .. }));
        if children.len() == 1 {
            return children.pop().unwrap();
        }
        let bounds = union_bounds(children.iter().map(|c| &c.bounds)).expect("nonempty children");
        Self { kind, bounds, children }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf { .. })
    }

    pub fn category(&self) -> Option<&str> {
        match &self.kind {
            NodeKind::Leaf { category } => Some(category),
            _ => None,
        }
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&LayoutNode> {
        let mut out = Vec::new();
        self.walk(&mut |n| {
            if n.is_leaf() {
                out.push(n);
            }
        });
        out
    }

    pub fn internal_count(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |node| n += !node.is_leaf() as usize);
        n
    }

    /// Pre-order traversal.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a LayoutNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    /// Indented one-line-per-node rendering.
    pub fn outline(&self) -> String {
        fn go(n: &LayoutNode, depth: usize, out: &mut String) {
            let b = n.bounds;
            let _ = write!(out, "{:indent$}", "", indent = depth * 2);
            match &n.kind {
                NodeKind::Leaf { category } => {
                    let _ = write!(out, "{category}");
                }
                NodeKind::Grid { rows, cols } => {
                    let _ = write!(out, "grid {rows}x{cols}");
                }
                k => {
                    let _ = write!(out, "{}", k.name());
                }
            }
            let _ = writeln!(out, " [{}, {}, {}, {}]", b.x, b.y, b.w, b.h);
            for c in &n.children {
                go(c, depth + 1, out);
            }
        }
        let mut out = String::new();
        go(self, 0, &mut out);
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct NodeDoc {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    category: Option<String>,
    #[serde(serialize_with = "serialize_nums")]
    bounds: [f64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cols: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    children: Option<Vec<NodeDoc>>,
}

fn to_doc(node: &LayoutNode) -> NodeDoc {
    let (category, rows, cols) = match &node.kind {
        NodeKind::Leaf { category } => (Some(category.clone()), None, None),
        NodeKind::Grid { rows, cols } => (None, Some(*rows), Some(*cols)),
        _ => (None, None, None),
    };
    NodeDoc {
        kind: node.kind.name().to_string(),
        category,
        bounds: node.bounds.to_array(),
        rows,
        cols,
        children: (!node.is_leaf()).then(|| node.children.iter().map(to_doc).collect()),
    }
}

fn from_doc(doc: NodeDoc) -> Result<LayoutNode> {
    let invalid = |m: String| Error::InvalidTree(m);
    let [x, y, w, h] = doc.bounds;
    if !(w >= 0.0 && h >= 0.0) {
        return Err(invalid(format!("negative bounds size {w}x{h}")));
    }
    let bounds = BBox { x, y, w, h };
    if doc.kind == "leaf" {
        if doc.children.is_some() {
            return Err(invalid("leaf with children".into()));
        }
        let category = doc.category.ok_or_else(|| invalid("leaf without category".into()))?;
        return Ok(LayoutNode::leaf(category, bounds));
    }
    let kind = match doc.kind.as_str() {
        "row" => NodeKind::Row,
        "column" => NodeKind::Column,
        "grid" => match (doc.rows, doc.cols) {
            (Some(rows), Some(cols)) => NodeKind::Grid { rows, cols },
            _ => return Err(invalid("grid without rows/cols".into())),
        },
        other => return Err(invalid(format!("unknown kind \"{other}\""))),
    };
    if doc.category.is_some() {
        return Err(invalid(format!("{} node with a category", doc.kind)));
    }
    let children = doc
        .children
        .unwrap_or_default()
        .into_iter()
        .map(from_doc)
        .collect::<Result<Vec<_>>>()?;
    if children.len() < 2 {
        return Err(invalid(format!("{} node with {} children", doc.kind, children.len())));
    }
    if let NodeKind::Grid { rows, cols } = kind {
        if rows * cols != children.len() {
            return Err(invalid(format!("grid {rows}x{cols} with {} children", children.len())));
        }
    }
    Ok(LayoutNode { kind, bounds, children })
}

pub fn serialize_tree(tree: &LayoutNode) -> serde_json::Value {
    serde_json::to_value(to_doc(tree)).expect("layout trees always serialize")
}

/// Pretty-printed document text with fields in a fixed order.
pub fn tree_to_json(tree: &LayoutNode) -> String {
    serde_json::to_string_pretty(&to_doc(tree)).expect("layout trees always serialize")
}

pub fn parse_tree(doc: &serde_json::Value) -> Result<LayoutNode> {
    let doc = NodeDoc::deserialize(doc).map_err(|e| Error::json("layout tree", e))?;
    from_doc(doc)
}

pub fn read_tree(path: &Path) -> Result<LayoutNode> {
    let doc: NodeDoc = parse_json(&read_text(path)?, path)?;
    from_doc(doc)
}

pub fn write_tree(tree: &LayoutNode, path: &Path) -> Result<()> {
    write_json(&to_doc(tree), path)
}

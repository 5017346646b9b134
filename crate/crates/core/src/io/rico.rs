//! RICO-style view hierarchies: nodes with `bounds` in corner form,
//! an optional `componentLabel` and optional `children`.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::read_text;
use crate::annotation::{Element, ScreenAnnotation};
use crate::error::{Error, Result};
use crate::geometry::BBox;

#[derive(Debug, Deserialize)]
struct RicoNode {
    #[serde(default)]
    bounds: Option<[f64; 4]>,
    #[serde(default, rename = "componentLabel")]
    component_label: Option<String>,
    #[serde(default)]
    children: Option<Vec<Option<RicoNode>>>,
}

/// Flattens every labeled node into an element, clamped to the canvas.
///
/// Labeled nodes with children still become elements, so nested labels yield
/// nested elements. Nodes whose clamped area is zero are dropped. Raw view
/// hierarchy dumps wrapped as `{"activity": {"root": …}}` are unwrapped.
pub fn parse_rico_screen(doc: &Value, width: f64, height: f64) -> Result<ScreenAnnotation> {
    let root_value = doc.pointer("/activity/root").unwrap_or(doc);
    let root = RicoNode::deserialize(root_value).map_err(|e| Error::json("RICO hierarchy", e))?;

    let mut elements = Vec::new();
    let mut stack = vec![&root];
    while let Some(node) = stack.pop() {
        if let Some(label) = &node.component_label {
            let [x1, y1, x2, y2] = node.bounds.ok_or_else(|| Error::MissingBounds(label.clone()))?;
            if x2 < x1 || y2 < y1 {
                return Err(Error::InvertedBounds([x1, y1, x2, y2]));
            }
            if let Some(bbox) = BBox::from_corners(x1, y1, x2, y2).clamp_to(width, height) {
                elements.push(Element::new(label.clone(), bbox));
            }
        }
        if let Some(children) = &node.children {
            stack.extend(children.iter().rev().flatten());
        }
    }
    ScreenAnnotation::new(width, height, elements)
}

pub fn load_rico_screen(path: &Path, width: f64, height: f64) -> Result<ScreenAnnotation> {
    let text = read_text(path)?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Error::json(path.display().to_string(), e))?;
    parse_rico_screen(&doc, width, height)
}

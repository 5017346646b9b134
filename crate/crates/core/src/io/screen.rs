//! Screen annotation documents:
//! `{"width":…, "height":…, "elements":[{"category":…, "bbox":[x,y,w,h]}]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{parse_json, read_text, serialize_num, serialize_nums};
use crate::annotation::{Element, ScreenAnnotation};
use crate::error::Result;
use crate::geometry::BBox;

#[derive(Debug, Serialize, Deserialize)]
struct ScreenDoc {
    #[serde(serialize_with = "serialize_num")]
    width: f64,
    #[serde(serialize_with = "serialize_num")]
    height: f64,
    elements: Vec<ElementDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ElementDoc {
    category: String,
    #[serde(serialize_with = "serialize_nums")]
    bbox: [f64; 4],
}

pub fn screen_to_json(screen: &ScreenAnnotation) -> String {
    let doc = ScreenDoc {
        width: screen.width,
        height: screen.height,
        elements: screen
            .elements
            .iter()
            .map(|e| ElementDoc {
                category: e.category.clone(),
                bbox: e.bbox.to_array(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("screen documents always serialize")
}

pub fn screen_from_json(text: &str, context: &Path) -> Result<ScreenAnnotation> {
    let doc: ScreenDoc = parse_json(text, context)?;
    let elements = doc
        .elements
        .into_iter()
        .map(|e| {
            let [x, y, w, h] = e.bbox;
            Element::new(e.category, BBox { x, y, w, h })
        })
        .collect();
    ScreenAnnotation::new(doc.width, doc.height, elements)
}

pub fn read_screen(path: &Path) -> Result<ScreenAnnotation> {
    screen_from_json(&read_text(path)?, path)
}

pub fn write_screen(screen: &ScreenAnnotation, path: &Path) -> Result<()> {
    let mut text = screen_to_json(screen);
    text.push('\n');
    std::fs::write(path, text).map_err(|e| crate::error::Error::io(path, e))
}

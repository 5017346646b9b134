//! COCO ground-truth documents (`images`, `annotations`, `categories`).

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{parse_json, read_text, serialize_num, serialize_nums, write_json};
use crate::annotation::{Element, ElementLibrary, ScreenAnnotation};
use crate::error::{Error, Result};
use crate::geometry::BBox;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocoDataset {
    pub images: Vec<CocoImage>,
    pub annotations: Vec<CocoAnnotation>,
    pub categories: Vec<CocoCategory>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocoImage {
    pub id: u64,
    pub file_name: String,
    #[serde(serialize_with = "serialize_num")]
    pub width: f64,
    #[serde(serialize_with = "serialize_num")]
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocoAnnotation {
    pub id: u64,
    pub image_id: u64,
    pub category_id: u64,
    #[serde(serialize_with = "serialize_nums")]
    pub bbox: [f64; 4],
    #[serde(serialize_with = "serialize_num")]
    pub area: f64,
    #[serde(default)]
    pub iscrowd: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocoCategory {
    pub id: u64,
    pub name: String,
}

impl CocoDataset {
    /// Image ids and annotation ids are 1-based and dense in input order.
    pub fn build(screens: &[(ScreenAnnotation, String)], library: &ElementLibrary) -> Result<Self> {
        Self::from_category_names(screens, library.categories())
    }

    pub fn from_category_names(screens: &[(ScreenAnnotation, String)], categories: &[String]) -> Result<Self> {
        let ids: HashMap<&str, u64> = categories
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i as u64 + 1))
            .collect();
        let mut images = Vec::with_capacity(screens.len());
        let mut annotations = Vec::new();
        for (idx, (screen, file_name)) in screens.iter().enumerate() {
            let image_id = idx as u64 + 1;
            images.push(CocoImage {
                id: image_id,
                file_name: file_name.clone(),
                width: screen.width,
                height: screen.height,
            });
            for e in &screen.elements {
                let category_id = *ids
                    .get(e.category.as_str())
                    .ok_or_else(|| Error::UnknownCategory(e.category.clone()))?;
                annotations.push(CocoAnnotation {
                    id: annotations.len() as u64 + 1,
                    image_id,
                    category_id,
                    bbox: e.bbox.to_array(),
                    area: e.bbox.area(),
                    iscrowd: 0,
                });
            }
        }
        Ok(Self {
            images,
            annotations,
            categories: categories
                .iter()
                .enumerate()
                .map(|(i, n)| CocoCategory {
                    id: i as u64 + 1,
                    name: n.clone(),
                })
                .collect(),
        })
    }

    pub fn category_name(&self, id: u64) -> Option<&str> {
        self.categories.iter().find(|c| c.id == id).map(|c| c.name.as_str())
    }

    /// Rebuilds one screen per image, in image order.
    pub fn screens(&self) -> Result<Vec<(ScreenAnnotation, String)>> {
        let names: HashMap<u64, &str> = self.categories.iter().map(|c| (c.id, c.name.as_str())).collect();
        let index: HashMap<u64, usize> = self.images.iter().enumerate().map(|(i, im)| (im.id, i)).collect();
        let mut elements: Vec<Vec<Element>> = vec![Vec::new(); self.images.len()];
        for a in &self.annotations {
            let slot = *index
                .get(&a.image_id)
                .ok_or_else(|| Error::InvalidScreen(format!("annotation {} references unknown image {}", a.id, a.image_id)))?;
            let name = names
                .get(&a.category_id)
                .ok_or_else(|| Error::UnknownCategory(a.category_id.to_string()))?;
            let [x, y, w, h] = a.bbox;
            elements[slot].push(Element::new(*name, BBox { x, y, w, h }));
        }
        self.images
            .iter()
            .zip(elements)
            .map(|(im, els)| Ok((ScreenAnnotation::new(im.width, im.height, els)?, im.file_name.clone())))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("COCO documents always serialize")
    }
}

pub fn write_coco(screens: &[(ScreenAnnotation, String)], library: &ElementLibrary, out_path: &Path) -> Result<()> {
    write_json(&CocoDataset::build(screens, library)?, out_path)
}

pub fn read_coco(path: &Path) -> Result<CocoDataset> {
    parse_json(&read_text(path)?, path)
}

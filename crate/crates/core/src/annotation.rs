//! In-memory annotation types shared by ingestion, synthesis, layout,
//! rendering and evaluation.

use std::cmp::Ordering;

use image::GrayImage;

use crate::error::{Error, Result};
use crate::geometry::BBox;

/// A categorized, positioned UI element.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub category: String,
    pub bbox: BBox,
}

impl Element {
    pub fn new(category: impl Into<String>, bbox: BBox) -> Self {
        Self {
            category: category.into(),
            bbox,
        }
    }
}

/// Top-to-bottom, then left-to-right, then by category name.
pub fn reading_order(a: &Element, b: &Element) -> Ordering {
    a.bbox
        .y
        .total_cmp(&b.bbox.y)
        .then(a.bbox.x.total_cmp(&b.bbox.x))
        .then_with(|| a.category.cmp(&b.category))
}

pub fn sort_reading_order(elements: &mut [Element]) {
    elements.sort_by(reading_order);
}

/// A screen's dimensions plus its elements in reading order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScreenAnnotation {
    pub width: f64,
    pub height: f64,
    pub elements: Vec<Element>,
}

impl ScreenAnnotation {
    /// Validates the canvas and sorts `elements` into reading order.
    pub fn new(width: f64, height: f64, mut elements: Vec<Element>) -> Result<Self> {
        if !(width > 0.0 && height > 0.0) {
            return Err(Error::InvalidScreen(format!("canvas {width}x{height} must be positive")));
        }
        let canvas = BBox::new(0.0, 0.0, width, height);
        for e in &elements {
            if e.category.is_empty() {
                return Err(Error::InvalidScreen("element with empty category".into()));
            }
            if !(e.bbox.w >= 0.0 && e.bbox.h >= 0.0) {
                return Err(Error::InvalidScreen(format!("element \"{}\" has negative size", e.category)));
            }
            if canvas.intersection_area(&e.bbox) <= 0.0 {
                return Err(Error::InvalidScreen(format!(
                    "element \"{}\" at {:?} does not intersect the canvas",
                    e.category,
                    e.bbox.to_array()
                )));
            }
        }
        sort_reading_order(&mut elements);
        Ok(Self {
            width,
            height,
            elements,
        })
    }
}

/// One labeled sketch raster.
#[derive(Debug, Clone)]
pub struct ElementAsset {
    pub category: String,
    pub image: GrayImage,
    pub source_id: String,
}

#[derive(Debug, Clone, Default)]
pub struct ElementLibrary {
    categories: Vec<String>,
    assets: Vec<Vec<ElementAsset>>,
}

impl ElementLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a category with its assets. Category ids follow insertion order.
    pub fn add_category(&mut self, name: impl Into<String>, assets: Vec<ElementAsset>) -> Result<()> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::InvalidConfig("category name must be nonempty".into()));
        }
        if self.categories.contains(&name) {
            return Err(Error::DuplicateCategory(name));
        }
        if assets.is_empty() {
            return Err(Error::EmptyCategory(name));
        }
        for a in &assets {
            if a.category != name {
                return Err(Error::InvalidConfig(format!(
                    "asset {} labeled \"{}\" listed under \"{name}\"",
                    a.source_id, a.category
                )));
            }
            if a.image.width() == 0 || a.image.height() == 0 {
                return Err(Error::InvalidConfig(format!("asset {} is empty", a.source_id)));
            }
        }
        self.categories.push(name);
        self.assets.push(assets);
        Ok(())
    }

    pub fn categories(&self) -> &[String] {
        &self.categories
    }

    pub fn assets_of(&self, category_index: usize) -> &[ElementAsset] {
        &self.assets[category_index]
    }

    pub fn assets(&self) -> impl Iterator<Item = &ElementAsset> {
        self.assets.iter().flatten()
    }

    pub fn asset_count(&self) -> usize {
        self.assets.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    /// 1-based id used in COCO exports.
    pub fn category_id(&self, name: &str) -> Option<u64> {
        self.categories.iter().position(|c| c == name).map(|i| i as u64 + 1)
    }
}

/// One scored detector output.
#[derive(Debug, Clone, PartialEq)]
pub struct DetectionRecord {
    pub image_id: u64,
    pub category_id: u64,
    pub bbox: BBox,
    pub score: f64,
}

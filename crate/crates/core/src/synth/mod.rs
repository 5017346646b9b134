//! Synthetic lo-fi sketch screens built by stitching library assets at
//! random positions and scales.
//!
//! Draw order per screen, which fixes the output bytes for a seed:
//! element count; then per element the category, the asset within it, the
//! scale, and up to `max_attempts` `(x, y)` position pairs.

mod dataset;
pub mod rng;

pub use dataset::{generate_dataset, image_file_name, DatasetSummary, ANNOTATION_FILE};

use image::{GrayImage, Luma};

use crate::annotation::{Element, ElementAsset, ElementLibrary, ScreenAnnotation};
use crate::error::{Error, Result};
use crate::geometry::{iou, BBox};
use rng::SketchRng;

#[derive(Debug, Clone, PartialEq)]
pub struct ComposeConfig {
    pub canvas_w: u32,
    pub canvas_h: u32,
    pub min_elements: u32,
    pub max_elements: u32,
    pub scale_min: f64,
    pub scale_max: f64,
    pub max_overlap_iou: f64,
    /// Position draws per element before it is skipped.
    pub max_attempts: u32,
    pub background: u8,
}

impl Default for ComposeConfig {
    fn default() -> Self {
        Self {
            canvas_w: 600,
            canvas_h: 800,
            min_elements: 5,
            max_elements: 15,
            scale_min: 0.5,
            scale_max: 1.5,
            max_overlap_iou: 0.05,
            max_attempts: 50,
            background: 255,
        }
    }
}

impl ComposeConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if self.canvas_w == 0 || self.canvas_h == 0 {
            return fail("canvas dimensions must be positive");
        }
        if !(self.scale_min > 0.0 && self.scale_min <= self.scale_max && self.scale_max.is_finite()) {
            return fail("scale bounds must satisfy 0 < scale_min <= scale_max");
        }
        if self.min_elements < 1 || self.min_elements > self.max_elements {
            return fail("element counts must satisfy 1 <= min_elements <= max_elements");
        }
        if !(0.0..=1.0).contains(&self.max_overlap_iou) {
            return fail("max_overlap_iou must lie in [0, 1]");
        }
        if self.max_attempts < 1 {
            return fail("max_attempts must be at least 1");
        }
        Ok(())
    }
}

/// Where one asset landed and at which scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub category: String,
    pub source_id: String,
    pub asset_w: u32,
    pub asset_h: u32,
    pub scale: f64,
    pub bbox: BBox,
}

#[derive(Debug, Clone)]
pub struct ComposedScreen {
    pub image: GrayImage,
    pub annotation: ScreenAnnotation,
    /// Placements in drawing order.
    pub placements: Vec<Placement>,
    pub seed: u64,
}

pub fn compose_screen(library: &ElementLibrary, cfg: &ComposeConfig, seed: u64) -> Result<ComposedScreen> {
    if library.is_empty() {
        return Err(Error::EmptyLibrary);
    }
    cfg.validate()?;
    let (cw, ch) = (cfg.canvas_w as f64, cfg.canvas_h as f64);
    if !library.assets().any(|a| max_fit_scale(a, cw, ch) >= cfg.scale_min) {
        return Err(Error::NothingFits {
            canvas_w: cfg.canvas_w,
            canvas_h: cfg.canvas_h,
        });
    }

    let mut rng = SketchRng::new(seed);
    let mut image = GrayImage::from_pixel(cfg.canvas_w, cfg.canvas_h, Luma([cfg.background]));
    let mut placements: Vec<Placement> = Vec::new();

    let n = rng.between(cfg.min_elements as u64, cfg.max_elements as u64);
    for _ in 0..n {
        let category = rng.below(library.categories().len() as u64) as usize;
        let assets = library.assets_of(category);
        let asset = &assets[rng.below(assets.len() as u64) as usize];
        let sampled = rng.uniform(cfg.scale_min, cfg.scale_max);

        // An asset that cannot fit even at scale_min is skipped rather than
        // shrunk below the configured range.
        let fit = max_fit_scale(asset, cw, ch);
        if fit < cfg.scale_min {
            continue;
        }
        let scale = sampled.min(fit);
        let (aw, ah) = asset.image.dimensions();
        let sw = ((aw as f64 * scale).round() as u32).clamp(1, cfg.canvas_w);
        let sh = ((ah as f64 * scale).round() as u32).clamp(1, cfg.canvas_h);

        for _ in 0..cfg.max_attempts {
            let x = rng.between(0, (cfg.canvas_w - sw) as u64) as f64;
            let y = rng.between(0, (cfg.canvas_h - sh) as u64) as f64;
            let bbox = BBox::new(x, y, sw as f64, sh as f64);
            if placements.iter().all(|p| iou(&p.bbox, &bbox) <= cfg.max_overlap_iou) {
                composite_min(&mut image, &asset.image, x as u32, y as u32, sw, sh);
                placements.push(Placement {
                    category: asset.category.clone(),
                    source_id: asset.source_id.clone(),
                    asset_w: aw,
                    asset_h: ah,
                    scale,
                    bbox,
                });
                break;
            }
        }
    }

    let elements = placements.iter().map(|p| Element::new(p.category.clone(), p.bbox)).collect();
    let annotation = ScreenAnnotation::new(cw, ch, elements)?;
    Ok(ComposedScreen {
        image,
        annotation,
        placements,
        seed,
    })
}

fn max_fit_scale(asset: &ElementAsset, cw: f64, ch: f64) -> f64 {
    let (aw, ah) = asset.image.dimensions();
    (cw / aw as f64).min(ch / ah as f64)
}

/// Nearest-neighbour resample of `src` to `w`x`h`, combined with the canvas
/// by keeping the darker pixel.
fn composite_min(canvas: &mut GrayImage, src: &GrayImage, x0: u32, y0: u32, w: u32, h: u32) {
    let (sw, sh) = src.dimensions();
    for dy in 0..h {
        let sy = (((2 * dy as u64 + 1) * sh as u64) / (2 * h as u64)).min(sh as u64 - 1) as u32;
        for dx in 0..w {
            let sx = (((2 * dx as u64 + 1) * sw as u64) / (2 * w as u64)).min(sw as u64 - 1) as u32;
            let v = src.get_pixel(sx, sy)[0];
            let dst = canvas.get_pixel_mut(x0 + dx, y0 + dy);
            if v < dst[0] {
                dst[0] = v;
            }
        }
    }
}

//! Procedurally drawn placeholder sketches.
//!
//! Real element sketches come from a hand-drawn corpus loaded through a
//! manifest. This module draws wobbly pencil-style glyphs for a handful of
//! categories so the pipelines can run without one.

use std::fs;
use std::path::{Path, PathBuf};

use image::{GrayImage, Luma};

use crate::annotation::{ElementAsset, ElementLibrary};
use crate::error::{Error, Result};
use crate::io::library::{write_manifest, Manifest, ManifestCategory};
use crate::synth::rng::{mix64, SketchRng};

pub const SAMPLE_CATEGORIES: [&str; 8] = [
    "button",
    "checkbox",
    "text_field",
    "image",
    "switch",
    "slider",
    "label",
    "radio_button",
];

const BLANK: u8 = 255;

struct Pen<'a> {
    img: &'a mut GrayImage,
    rng: SketchRng,
    ink: u8,
}

impl Pen<'_> {
    fn dot(&mut self, x: f64, y: f64) {
        let (w, h) = self.img.dimensions();
        for (dx, dy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let px = x.round() as i64 + dx;
            let py = y.round() as i64 + dy;
            if px >= 0 && py >= 0 && (px as u32) < w && (py as u32) < h {
                let p = self.img.get_pixel_mut(px as u32, py as u32);
                p[0] = p[0].min(self.ink);
            }
        }
    }

    fn jitter(&mut self) -> f64 {
        self.rng.uniform(-1.5, 1.5)
    }

    fn line(&mut self, x0: f64, y0: f64, x1: f64, y1: f64) {
        let (x0, y0) = (x0 + self.jitter(), y0 + self.jitter());
        let (x1, y1) = (x1 + self.jitter(), y1 + self.jitter());
        let steps = ((x1 - x0).abs().max((y1 - y0).abs()) * 2.0).ceil().max(1.0) as usize;
        for i in 0..=steps {
            let t = i as f64 / steps as f64;
            self.dot(x0 + (x1 - x0) * t, y0 + (y1 - y0) * t);
        }
    }

    fn rect(&mut self, x: f64, y: f64, w: f64, h: f64) {
        self.line(x, y, x + w, y);
        self.line(x + w, y, x + w, y + h);
        self.line(x + w, y + h, x, y + h);
        self.line(x, y + h, x, y);
    }

    fn ellipse(&mut self, cx: f64, cy: f64, rx: f64, ry: f64) {
        let steps = ((rx + ry) * 4.0).ceil() as usize;
        for i in 0..=steps {
            let a = i as f64 / steps as f64 * std::f64::consts::TAU;
            self.dot(cx + rx * a.cos(), cy + ry * a.sin());
        }
    }

    fn scribble(&mut self, x: f64, y: f64, w: f64) {
        let mut cx = x;
        while cx < x + w {
            let seg = self.rng.uniform(3.0, 7.0);
            let amp = self.rng.uniform(2.0, 4.0);
            self.line(cx, y + amp, cx + seg / 2.0, y - amp);
            self.line(cx + seg / 2.0, y - amp, cx + seg, y + amp);
            cx += seg;
        }
    }
}

fn draw(category: &str, variant: u64) -> GrayImage {
    let (w, h): (u32, u32) = match category {
        "button" => (120, 48),
        "checkbox" => (36, 36),
        "text_field" => (200, 44),
        "image" => (140, 110),
        "switch" => (64, 32),
        "slider" => (180, 28),
        "label" => (150, 24),
        _ => (34, 34),
    };
    let mut img = GrayImage::from_pixel(w, h, Luma([BLANK]));
    let seed = mix64(variant.wrapping_add(category.bytes().fold(0u64, |acc, b| acc.wrapping_mul(31).wrapping_add(b as u64))));
    let mut pen = Pen {
        img: &mut img,
        rng: SketchRng::new(seed),
        ink: 40,
    };
    let (fw, fh) = (w as f64, h as f64);
    match category {
        "button" => {
            pen.rect(3.0, 3.0, fw - 6.0, fh - 6.0);
            pen.scribble(fw * 0.25, fh / 2.0, fw * 0.5);
        }
        "checkbox" => {
            pen.rect(3.0, 3.0, fw - 6.0, fh - 6.0);
            pen.line(9.0, fh / 2.0, fw / 2.0 - 2.0, fh - 10.0);
            pen.line(fw / 2.0 - 2.0, fh - 10.0, fw - 8.0, 9.0);
        }
        "text_field" => {
            pen.rect(3.0, 3.0, fw - 6.0, fh - 6.0);
            pen.line(10.0, 10.0, 10.0, fh - 10.0);
        }
        "image" => {
            pen.rect(3.0, 3.0, fw - 6.0, fh - 6.0);
            pen.line(3.0, 3.0, fw - 3.0, fh - 3.0);
            pen.line(fw - 3.0, 3.0, 3.0, fh - 3.0);
        }
        "switch" => {
            pen.ellipse(fw / 2.0, fh / 2.0, fw / 2.0 - 3.0, fh / 2.0 - 3.0);
            pen.ellipse(fw * 0.7, fh / 2.0, fh / 2.0 - 7.0, fh / 2.0 - 7.0);
        }
        "slider" => {
            pen.line(4.0, fh / 2.0, fw - 4.0, fh / 2.0);
            pen.ellipse(fw * 0.4, fh / 2.0, 9.0, 9.0);
        }
        "label" => pen.scribble(4.0, fh / 2.0, fw - 8.0),
        _ => {
            pen.ellipse(fw / 2.0, fh / 2.0, fw / 2.0 - 3.0, fh / 2.0 - 3.0);
            pen.ellipse(fw / 2.0, fh / 2.0, 5.0, 5.0);
        }
    }
    img
}

/// Builds an in-memory library with `variants` sketches per category.
pub fn sample_library(variants: usize) -> ElementLibrary {
    let mut lib = ElementLibrary::new();
    for cat in SAMPLE_CATEGORIES {
        let assets = (0..variants.max(1))
            .map(|v| ElementAsset {
                category: cat.to_string(),
                image: draw(cat, v as u64),
                source_id: format!("{cat}_{v:03}.png"),
            })
            .collect();
        lib.add_category(cat, assets).expect("sample categories are unique");
    }
    lib
}

/// Writes the sample sketches as PNGs plus `library.json` under `dir` and
/// returns the manifest path.
pub fn write_sample_library(dir: &Path, variants: usize) -> Result<PathBuf> {
    let sketches = dir.join("sketches");
    fs::create_dir_all(&sketches).map_err(|e| Error::io(&sketches, e))?;
    let lib = sample_library(variants);
    let mut manifest = Manifest { categories: Vec::new() };
    for (i, cat) in lib.categories().iter().enumerate() {
        let mut assets = Vec::new();
        for a in lib.assets_of(i) {
            let rel = format!("sketches/{}", a.source_id);
            let path = dir.join(&rel);
            a.image.save(&path).map_err(|source| Error::Image { path, source })?;
            assets.push(rel);
        }
        manifest.categories.push(ManifestCategory {
            name: cat.clone(),
            assets,
        });
    }
    let path = dir.join("library.json");
    write_manifest(&manifest, &path)?;
    Ok(path)
}

//! Element-library manifests.
//!
//! ```json
//! {"categories": [{"name": "button", "assets": ["sketches/button_001.png"]}]}
//! ```
//!
//! Relative asset paths resolve against the manifest's directory. Category
//! order in the manifest fixes the 1-based export ids.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{parse_json, read_text, write_json};
use crate::annotation::{ElementAsset, ElementLibrary};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub categories: Vec<ManifestCategory>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestCategory {
    pub name: String,
    pub assets: Vec<String>,
}

pub fn load_element_library(manifest_path: &Path) -> Result<ElementLibrary> {
    let manifest: Manifest = parse_json(&read_text(manifest_path)?, manifest_path)?;
    let base = manifest_path.parent().map(Path::to_path_buf).unwrap_or_default();

    // Structural checks come before any image decoding.
    for (i, c) in manifest.categories.iter().enumerate() {
        if manifest.categories[..i].iter().any(|prev| prev.name == c.name) {
            return Err(Error::DuplicateCategory(c.name.clone()));
        }
        if c.assets.is_empty() {
            return Err(Error::EmptyCategory(c.name.clone()));
        }
    }

    let mut library = ElementLibrary::new();
    for c in manifest.categories {
        let assets = c
            .assets
            .iter()
            .map(|rel| {
                let path = resolve(&base, rel);
                let image = image::open(&path)
                    .map_err(|source| match source {
                        image::ImageError::IoError(e) => Error::io(&path, e),
                        source => Error::Image { path: path.clone(), source },
                    })?
                    .to_luma8();
                Ok(ElementAsset {
                    category: c.name.clone(),
                    image,
                    source_id: rel.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        library.add_category(c.name, assets)?;
    }
    Ok(library)
}

pub fn write_manifest(manifest: &Manifest, path: &Path) -> Result<()> {
    write_json(manifest, path)
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

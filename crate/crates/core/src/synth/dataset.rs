use std::fs;
use std::path::Path;

use rayon::prelude::*;

use super::rng::screen_seed;
use super::{compose_screen, ComposeConfig};
use crate::annotation::{ElementLibrary, ScreenAnnotation};
use crate::error::{Error, Result};
use crate::io::coco::CocoDataset;

/// Ground-truth document written next to the images.
pub const ANNOTATION_FILE: &str = "annotations.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatasetSummary {
    pub screens: usize,
    pub elements: usize,
}

pub fn image_file_name(index: usize) -> String {
    format!("syn_{index:06}.png")
}

/// Writes `count` screens plus one COCO document into `out_dir`.
///
/// Screens are composed on the ambient rayon pool; run inside
/// `ThreadPool::install` to bound the worker count. Output bytes do not
/// depend on the number of workers.
pub fn generate_dataset(
    library: &ElementLibrary,
    cfg: &ComposeConfig,
    count: usize,
    base_seed: u64,
    out_dir: &Path,
) -> Result<DatasetSummary> {
    if count < 1 {
        return Err(Error::InvalidConfig("count must be at least 1".into()));
    }
    cfg.validate()?;
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;

    let screens = (0..count)
        .into_par_iter()
        .map(|i| {
            let screen = compose_screen(library, cfg, screen_seed(base_seed, i as u64))?;
            let name = image_file_name(i);
            let path = out_dir.join(&name);
            screen.image.save(&path).map_err(|source| match source {
                image::ImageError::IoError(e) => Error::io(&path, e),
                source => Error::Image { path: path.clone(), source },
            })?;
            Ok((screen.annotation, name))
        })
        .collect::<Result<Vec<(ScreenAnnotation, String)>>>()?;

    let coco = CocoDataset::build(&screens, library)?;
    let path = out_dir.join(ANNOTATION_FILE);
    let mut text = coco.to_json();
    text.push('\n');
    fs::write(&path, text).map_err(|e| Error::io(&path, e))?;

    Ok(DatasetSummary {
        screens: screens.len(),
        elements: coco.annotations.len(),
    })
}

//! Score a noisy stand-in detector against synthetic ground truth.

use bbx::eval::evaluate;
use bbx::io::coco::CocoDataset;
use bbx::sample::sample_library;
use bbx::synth::rng::SketchRng;
use bbx::synth::{compose_screen, image_file_name, ComposeConfig};
use bbx::{BBox, DetectionRecord};

fn main() -> bbx::Result<()> {
    let library = sample_library(2);
    let cfg = ComposeConfig::default();
    let screens = (0..25)
        .map(|i| Ok((compose_screen(&library, &cfg, i)?.annotation, image_file_name(i as usize))))
        .collect::<bbx::Result<Vec<_>>>()?;
    let gt = CocoDataset::build(&screens, &library)?;

    // Jitter every box, mislabel some, drop some and add a few false alarms.
    let mut rng = SketchRng::new(2024);
    let n_cat = gt.categories.len() as u64;
    let mut dets = Vec::new();
    for a in &gt.annotations {
        if rng.unit() < 0.1 {
            continue;
        }
        let [x, y, w, h] = a.bbox;
        let jx = rng.uniform(-0.15, 0.15) * w;
        let jy = rng.uniform(-0.15, 0.15) * h;
        let category_id = if rng.unit() < 0.1 { 1 + rng.below(n_cat) } else { a.category_id };
        dets.push(DetectionRecord {
            image_id: a.image_id,
            category_id,
            bbox: BBox::new((x + jx).max(0.0), (y + jy).max(0.0), w, h),
            score: rng.uniform(0.3, 1.0),
        });
    }
    for img in &gt.images {
        dets.push(DetectionRecord {
            image_id: img.id,
            category_id: 1 + rng.below(n_cat),
            bbox: BBox::new(rng.uniform(0.0, 500.0), rng.uniform(0.0, 700.0), 60.0, 40.0),
            score: rng.uniform(0.0, 0.6),
        });
    }

    for thr in [0.5, 0.75] {
        println!("{}", evaluate(&gt, &dets, thr)?.to_table());
    }
    Ok(())
}

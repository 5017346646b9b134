#![allow(dead_code)]

use bbx::annotation::{Element, ElementAsset, ElementLibrary, ScreenAnnotation};
use bbx::eval::GroundTruthBox;
use bbx::geometry::BBox;
use bbx::io::coco::{CocoAnnotation, CocoCategory, CocoDataset, CocoImage};
use bbx::layout::{LayoutNode, NodeKind};
use bbx::synth::rng::SketchRng;
use bbx::DetectionRecord;
use image::GrayImage;

pub const CATEGORIES: [&str; 4] = ["button", "icon", "label", "image"];

pub fn tiny_library(names: &[&str]) -> ElementLibrary {
    let mut lib = ElementLibrary::new();
    for n in names {
        let asset = ElementAsset {
            category: n.to_string(),
            image: GrayImage::new(1, 1),
            source_id: format!("{n}.png"),
        };
        lib.add_category(*n, vec![asset]).unwrap();
    }
    lib
}

fn overlaps_any(placed: &[Element], b: &BBox) -> bool {
    placed.iter().any(|e| e.bbox.intersection_area(b) > 0.0)
}

/// 2–30 non-overlapping integer-aligned elements on a 600×800 canvas. About
/// half of the screens are seeded with a same-category block (grid-like) and
/// an aligned row so grid and alignment paths get exercised.
pub fn random_screen(seed: u64) -> ScreenAnnotation {
    let mut rng = SketchRng::new(seed);
    let (cw, ch) = (600u64, 800u64);
    let target = rng.between(2, 30) as usize;
    let mut placed: Vec<Element> = Vec::new();

    if rng.below(2) == 0 {
        let cat = CATEGORIES[rng.below(CATEGORIES.len() as u64) as usize];
        let (rows, cols) = (rng.between(1, 3), rng.between(2, 4));
        let (w, h) = (rng.between(20, 60), rng.between(20, 60));
        let gap = rng.between(2, 20);
        let (x0, y0) = (rng.between(0, 200), rng.between(0, 400));
        for r in 0..rows {
            for c in 0..cols {
                if placed.len() >= target {
                    break;
                }
                let jitter = rng.between(0, 2) as f64;
                let b = BBox::new((x0 + c * (w + gap)) as f64 + jitter, (y0 + r * (h + gap)) as f64, w as f64, h as f64);
                if b.right() <= cw as f64 && b.bottom() <= ch as f64 && !overlaps_any(&placed, &b) {
                    placed.push(Element::new(cat, b));
                }
            }
        }
    }

    let mut attempts = 0;
    while placed.len() < target && attempts < 2000 {
        attempts += 1;
        let w = rng.between(8, 240);
        let h = rng.between(8, 120);
        let x = rng.between(0, cw - w);
        let y = rng.between(0, ch - h);
        let b = BBox::new(x as f64, y as f64, w as f64, h as f64);
        if !overlaps_any(&placed, &b) {
            let cat = CATEGORIES[rng.below(CATEGORIES.len() as u64) as usize];
            placed.push(Element::new(cat, b));
        }
    }
    ScreenAnnotation::new(cw as f64, ch as f64, placed).unwrap()
}

pub fn translate_screen(s: &ScreenAnnotation, dx: f64, dy: f64) -> ScreenAnnotation {
    let els = s.elements.iter().map(|e| Element::new(e.category.clone(), e.bbox.translate(dx, dy))).collect();
    ScreenAnnotation::new(s.width + dx, s.height + dy, els).unwrap()
}

pub fn scale_screen(s: &ScreenAnnotation, k: f64) -> ScreenAnnotation {
    let els = s.elements.iter().map(|e| Element::new(e.category.clone(), e.bbox.scale(k))).collect();
    ScreenAnnotation::new(s.width * k, s.height * k, els).unwrap()
}

fn close(a: &BBox, b: &BBox) -> bool {
    let tol = 1e-9 * (1.0 + a.x.abs().max(a.y.abs()).max(a.w).max(a.h));
    (a.x - b.x).abs() <= tol && (a.y - b.y).abs() <= tol && (a.w - b.w).abs() <= tol && (a.h - b.h).abs() <= tol
}

/// Same kinds, categories and child structure; `map` relates bounds of `a`
/// to bounds of `b`.
pub fn isomorphic(a: &LayoutNode, b: &LayoutNode, map: &dyn Fn(&BBox) -> BBox) -> bool {
    a.kind == b.kind
        && close(&map(&a.bounds), &b.bounds)
        && a.children.len() == b.children.len()
        && a.children.iter().zip(&b.children).all(|(x, y)| isomorphic(x, y, map))
}

pub fn bounds_consistent(n: &LayoutNode) -> bool {
    match n.kind {
        NodeKind::Leaf { .. } => n.children.is_empty(),
        _ => {
            n.children.len() >= 2
                && bbx::union_bounds(n.children.iter().map(|c| &c.bounds)).unwrap() == n.bounds
                && n.children.iter().all(bounds_consistent)
        }
    }
}

pub fn sorted_elements(mut v: Vec<Element>) -> Vec<Element> {
    bbx::annotation::sort_reading_order(&mut v);
    v
}

pub fn leaf_elements(tree: &LayoutNode) -> Vec<Element> {
    tree.leaves()
        .into_iter()
        .map(|l| Element::new(l.category().unwrap(), l.bounds))
        .collect()
}

// ---------------------------------------------------------------------------
// Detection-metric oracle. Written against corner-form boxes and a global
// score ranking, independent of the library's matching and AP code.

#[derive(Debug, Clone)]
pub struct EvalInstance {
    pub gt: CocoDataset,
    pub dets: Vec<DetectionRecord>,
}

pub fn random_eval_instance(seed: u64) -> EvalInstance {
    let mut rng = SketchRng::new(seed);
    let n_images = rng.between(1, 5);
    let mut images = Vec::new();
    let mut annotations = Vec::new();
    let mut dets = Vec::new();
    for image_id in 1..=n_images {
        images.push(CocoImage {
            id: image_id,
            file_name: format!("{image_id}.png"),
            width: 200.0,
            height: 200.0,
        });
        for _ in 0..rng.between(0, 6) {
            let category_id = rng.between(1, 2);
            let (w, h) = (rng.between(10, 60) as f64, rng.between(10, 60) as f64);
            let (x, y) = (rng.between(0, 140) as f64, rng.between(0, 140) as f64);
            annotations.push(CocoAnnotation {
                id: annotations.len() as u64 + 1,
                image_id,
                category_id,
                bbox: [x, y, w, h],
                area: w * h,
                iscrowd: 0,
            });
            // Zero to two detections near this box, sometimes in the wrong class.
            for _ in 0..rng.between(0, 2) {
                let jx = rng.between(0, 16) as f64 - 8.0;
                let jy = rng.between(0, 16) as f64 - 8.0;
                let cat = if rng.below(5) == 0 { 3 - category_id } else { category_id };
                dets.push(DetectionRecord {
                    image_id,
                    category_id: cat,
                    bbox: BBox::new(x + jx, y + jy, w, h),
                    score: quantized_score(&mut rng),
                });
            }
        }
        for _ in 0..rng.between(0, 2) {
            dets.push(DetectionRecord {
                image_id,
                category_id: rng.between(1, 2),
                bbox: BBox::new(rng.between(0, 150) as f64, rng.between(0, 150) as f64, 30.0, 30.0),
                score: quantized_score(&mut rng),
            });
        }
    }
    EvalInstance {
        gt: CocoDataset {
            images,
            annotations,
            categories: vec![
                CocoCategory { id: 1, name: "button".into() },
                CocoCategory { id: 2, name: "checkbox".into() },
            ],
        },
        dets,
    }
}

/// Scores on a 0.05 grid in (0, 1] so ties occur.
fn quantized_score(rng: &mut SketchRng) -> f64 {
    rng.between(1, 20) as f64 * 0.05
}

fn corner_iou(a: [f64; 4], b: [f64; 4]) -> f64 {
    let ix = (a[2].min(b[2]) - a[0].max(b[0])).max(0.0);
    let iy = (a[3].min(b[3]) - a[1].max(b[1])).max(0.0);
    let inter = ix * iy;
    let area = |r: [f64; 4]| (r[2] - r[0]) * (r[3] - r[1]);
    let union = area(a) + area(b) - inter;
    if union > 0.0 {
        inter / union
    } else {
        0.0
    }
}

fn corners(b: &BBox) -> [f64; 4] {
    [b.x, b.y, b.x + b.w, b.y + b.h]
}

/// Per-class AP (classes with ground truth only) by brute force: global
/// ranking, per-image greedy claiming, every rank prefix enumerated as a PR
/// point, and the precision envelope integrated over recall on a 1e-4 grid
/// refined at every PR breakpoint.
pub fn oracle_aps(gt: &[GroundTruthBox], dets: &[DetectionRecord], thr: f64) -> Vec<(u64, f64)> {
    let mut classes: Vec<u64> = gt.iter().map(|g| g.category_id).collect();
    classes.sort();
    classes.dedup();
    let mut out = Vec::new();
    for class in classes {
        let total = gt.iter().filter(|g| g.category_id == class).count();
        let mut ranked: Vec<usize> = (0..dets.len()).filter(|&i| dets[i].category_id == class).collect();
        ranked.sort_by(|&a, &b| dets[b].score.partial_cmp(&dets[a].score).unwrap().then(a.cmp(&b)));

        let mut used = vec![false; gt.len()];
        let mut hits = Vec::new();
        for &d in &ranked {
            let det = &dets[d];
            let mut best = -1.0;
            let mut best_g = None;
            for (g, gb) in gt.iter().enumerate() {
                if used[g] || gb.category_id != class || gb.image_id != det.image_id {
                    continue;
                }
                let v = corner_iou(corners(&det.bbox), corners(&gb.bbox));
                if v > best {
                    best = v;
                    best_g = Some(g);
                }
            }
            let hit = best_g.is_some() && best >= thr;
            if hit {
                used[best_g.unwrap()] = true;
            }
            hits.push(hit);
        }

        let mut points = Vec::new();
        for k in 1..=hits.len() {
            let tp = hits[..k].iter().filter(|&&h| h).count();
            points.push((tp as f64 / total as f64, tp as f64 / k as f64));
        }
        let envelope = |r: f64| points.iter().filter(|p| p.0 >= r).map(|p| p.1).fold(0.0, f64::max);

        let mut marks: Vec<f64> = (0..=10_000).map(|i| i as f64 * 1e-4).collect();
        marks.extend(points.iter().map(|p| p.0));
        marks.sort_by(|a, b| a.partial_cmp(b).unwrap());
        marks.dedup();
        let mut area = 0.0;
        for w in marks.windows(2) {
            if w[1] > w[0] {
                area += (w[1] - w[0]) * envelope((w[0] + w[1]) / 2.0);
            }
        }
        out.push((class, area));
    }
    out
}

pub fn gt_boxes(ds: &CocoDataset) -> Vec<GroundTruthBox> {
    ds.annotations
        .iter()
        .map(|a| GroundTruthBox {
            image_id: a.image_id,
            category_id: a.category_id,
            bbox: BBox::new(a.bbox[0], a.bbox[1], a.bbox[2], a.bbox[3]),
        })
        .collect()
}

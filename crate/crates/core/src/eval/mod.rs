//! Detector scoring: IoU matching, precision-recall, per-class AP and mAP.
//!
//! The protocol is single-threshold greedy matching with all-point
//! interpolated AP. The report always echoes the threshold used.

mod ap;
mod matching;

pub use ap::average_precision;
pub use matching::{match_detections, ClassMatches, GroundTruthBox, MatchResult, RankedDetection};

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::annotation::DetectionRecord;
use crate::error::{Error, Result};
use crate::geometry::BBox;
use crate::io::coco::{read_coco, CocoDataset};
use crate::io::detections::read_detections;

pub const DEFAULT_IOU_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassAp {
    pub category_id: u64,
    pub name: String,
    pub ap: f64,
    pub gt_count: usize,
    pub detections: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalCounts {
    pub images: usize,
    pub gt_boxes: usize,
    pub detections: usize,
    /// Detections of classes that have no ground truth; they do not enter mAP.
    pub ignored_detections: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub iou_threshold: f64,
    /// Classes with at least one ground-truth box, in category order.
    pub per_class: Vec<ClassAp>,
    pub map: f64,
    pub counts: EvalCounts,
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let name_w = self.per_class.iter().map(|c| c.name.len()).max().unwrap_or(0).max("category".len());
        let mut out = String::new();
        let _ = writeln!(out, "{:>4}  {:<name_w$}  {:>6}  {:>6}  {:>8}", "id", "category", "gt", "dets", "AP");
        for c in &self.per_class {
            let _ = writeln!(
                out,
                "{:>4}  {:<name_w$}  {:>6}  {:>6}  {:>8.4}",
                c.category_id, c.name, c.gt_count, c.detections, c.ap
            );
        }
        let _ = writeln!(out, "mAP@{} = {:.4}", self.iou_threshold, self.map);
        let _ = writeln!(
            out,
            "images {}  gt boxes {}  detections {}  ignored {}",
            self.counts.images, self.counts.gt_boxes, self.counts.detections, self.counts.ignored_detections
        );
        out
    }
}

/// Scores `dets` against a COCO ground-truth document.
pub fn evaluate(gt: &CocoDataset, dets: &[DetectionRecord], iou_threshold: f64) -> Result<EvalReport> {
    if !(iou_threshold > 0.0 && iou_threshold <= 1.0) {
        return Err(Error::InvalidConfig(format!("iou threshold {iou_threshold} outside (0, 1]")));
    }
    let image_ids: HashSet<u64> = gt.images.iter().map(|i| i.id).collect();
    let category_ids: HashSet<u64> = gt.categories.iter().map(|c| c.id).collect();
    for (index, d) in dets.iter().enumerate() {
        if !image_ids.contains(&d.image_id) {
            return Err(Error::UnknownImage {
                index,
                image_id: d.image_id,
            });
        }
        if !category_ids.contains(&d.category_id) {
            return Err(Error::UnknownCategoryId {
                index,
                category_id: d.category_id,
            });
        }
    }

    let boxes: Vec<GroundTruthBox> = gt
        .annotations
        .iter()
        .map(|a| {
            let [x, y, w, h] = a.bbox;
            GroundTruthBox {
                image_id: a.image_id,
                category_id: a.category_id,
                bbox: BBox { x, y, w, h },
            }
        })
        .collect();
    let matches = match_detections(&boxes, dets, iou_threshold);

    let mut per_class = Vec::new();
    let mut ignored = 0;
    let order: HashMap<u64, usize> = gt.categories.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    let mut classes: Vec<&ClassMatches> = matches.classes.values().collect();
    classes.sort_by_key(|c| order.get(&c.category_id).copied().unwrap_or(usize::MAX));
    for class in classes {
        match average_precision(class) {
            Some(ap) => per_class.push(ClassAp {
                category_id: class.category_id,
                name: gt.category_name(class.category_id).unwrap_or_default().to_string(),
                ap,
                gt_count: class.gt_count,
                detections: class.ranked.len(),
            }),
            None => ignored += class.ranked.len(),
        }
    }
    let map = if per_class.is_empty() {
        0.0
    } else {
        per_class.iter().map(|c| c.ap).sum::<f64>() / per_class.len() as f64
    };

    Ok(EvalReport {
        iou_threshold,
        per_class,
        map,
        counts: EvalCounts {
            images: gt.images.len(),
            gt_boxes: gt.annotations.len(),
            detections: dets.len(),
            ignored_detections: ignored,
        },
    })
}

pub fn evaluate_files(gt_path: &Path, det_path: &Path, iou_threshold: f64) -> Result<EvalReport> {
    let gt = read_coco(gt_path)?;
    let dets = read_detections(det_path)?;
    evaluate(&gt, &dets, iou_threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::coco::{CocoAnnotation, CocoCategory, CocoImage};

    fn dataset() -> CocoDataset {
        let ann = |id, image_id, category_id, bbox| CocoAnnotation {
            id,
            image_id,
            category_id,
            bbox,
            area: bbox[2] * bbox[3],
            iscrowd: 0,
        };
        CocoDataset {
            images: (1..=2)
                .map(|id| CocoImage {
                    id,
                    file_name: format!("{id}.png"),
                    width: 100.0,
                    height: 100.0,
                })
                .collect(),
            annotations: vec![
                ann(1, 1, 1, [0.0, 0.0, 10.0, 10.0]),
                ann(2, 1, 2, [20.0, 20.0, 10.0, 10.0]),
                ann(3, 2, 1, [50.0, 50.0, 20.0, 20.0]),
            ],
            categories: ["button", "checkbox", "unused"]
                .iter()
                .enumerate()
                .map(|(i, n)| CocoCategory {
                    id: i as u64 + 1,
                    name: n.to_string(),
                })
                .collect(),
        }
    }

    fn perfect(gt: &CocoDataset) -> Vec<DetectionRecord> {
        gt.annotations
            .iter()
            .map(|a| DetectionRecord {
                image_id: a.image_id,
                category_id: a.category_id,
                bbox: BBox::new(a.bbox[0], a.bbox[1], a.bbox[2], a.bbox[3]),
                score: 1.0,
            })
            .collect()
    }

    #[test]
    fn perfect_and_empty_detectors() {
        let gt = dataset();
        let r = evaluate(&gt, &perfect(&gt), 0.5).unwrap();
        assert_eq!(r.map, 1.0);
        assert!(r.per_class.iter().all(|c| c.ap == 1.0));
        assert_eq!(r.per_class.len(), 2);
        let r = evaluate(&gt, &[], 0.5).unwrap();
        assert_eq!(r.map, 0.0);
    }

    #[test]
    fn classes_without_ground_truth_are_ignored() {
        let gt = dataset();
        let mut dets = perfect(&gt);
        dets.push(DetectionRecord {
            image_id: 1,
            category_id: 3,
            bbox: BBox::new(0.0, 0.0, 5.0, 5.0),
            score: 0.9,
        });
        let r = evaluate(&gt, &dets, 0.5).unwrap();
        assert_eq!(r.map, 1.0);
        assert_eq!(r.counts.ignored_detections, 1);
    }

    #[test]
    fn unknown_references() {
        let gt = dataset();
        let bad_image = DetectionRecord {
            image_id: 9,
            category_id: 1,
            bbox: BBox::new(0.0, 0.0, 1.0, 1.0),
            score: 0.5,
        };
        assert!(matches!(evaluate(&gt, std::slice::from_ref(&bad_image), 0.5), Err(Error::UnknownImage { .. })));
        let bad_cat = DetectionRecord {
            image_id: 1,
            category_id: 42,
            ..bad_image
        };
        assert!(matches!(evaluate(&gt, &[bad_cat], 0.5), Err(Error::UnknownCategoryId { .. })));
        assert!(evaluate(&gt, &[], 0.0).is_err());
    }

    #[test]
    fn report_formats() {
        let gt = dataset();
        let r = evaluate(&gt, &perfect(&gt), 0.5).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["iou_threshold"], 0.5);
        assert_eq!(v["per_class"][0]["name"], "button");
        assert_eq!(v["counts"]["gt_boxes"], 3);
        assert!(r.to_table().contains("mAP@0.5 = 1.0000"));
    }
}

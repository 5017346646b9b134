use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::annotation::DetectionRecord;
use crate::geometry::{iou, BBox};

#[derive(Debug, Clone, PartialEq)]
pub struct GroundTruthBox {
    pub image_id: u64,
    pub category_id: u64,
    pub bbox: BBox,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedDetection {
    /// Position in the detection input.
    pub index: usize,
    pub score: f64,
    pub true_positive: bool,
    /// Index into the ground-truth input of the box this detection claimed.
    pub matched_gt: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassMatches {
    pub category_id: u64,
    pub gt_count: usize,
    /// Descending score, ties by input order.
    pub ranked: Vec<RankedDetection>,
}

impl ClassMatches {
    pub fn true_positives(&self) -> usize {
        self.ranked.iter().filter(|d| d.true_positive).count()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatchResult {
    pub classes: BTreeMap<u64, ClassMatches>,
}

/// Greedy per-(image, class) matching.
///
/// Detections are visited by descending score (ties by input order). Each
/// claims the unmatched ground-truth box of its image and class with the
/// highest IoU; it is a true positive when that IoU reaches
/// `iou_threshold`, and only then is the box removed from the pool.
///
/// Groups are matched on the ambient rayon pool; the result does not depend
/// on the worker count.
pub fn match_detections(gt: &[GroundTruthBox], dets: &[DetectionRecord], iou_threshold: f64) -> MatchResult {
    debug_assert!(iou_threshold > 0.0 && iou_threshold <= 1.0);
    let mut groups: BTreeMap<(u64, u64), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (i, g) in gt.iter().enumerate() {
        groups.entry((g.image_id, g.category_id)).or_default().0.push(i);
    }
    for (i, d) in dets.iter().enumerate() {
        groups.entry((d.image_id, d.category_id)).or_default().1.push(i);
    }

    let groups: Vec<_> = groups.into_iter().collect();
    let matched: Vec<(u64, usize, Vec<RankedDetection>)> = groups
        .par_iter()
        .map(|((_, category_id), (gt_idx, det_idx))| {
            (*category_id, gt_idx.len(), match_group(gt, gt_idx, dets, det_idx, iou_threshold))
        })
        .collect();

    let mut result = MatchResult::default();
    for (category_id, gt_count, ranked) in matched {
        let class = result.classes.entry(category_id).or_insert_with(|| ClassMatches {
            category_id,
            gt_count: 0,
            ranked: Vec::new(),
        });
        class.gt_count += gt_count;
        class.ranked.extend(ranked);
    }
    for class in result.classes.values_mut() {
        class.ranked.sort_by(|a, b| b.score.total_cmp(&a.score).then(a.index.cmp(&b.index)));
    }
    result
}

fn match_group(
    gt: &[GroundTruthBox],
    gt_idx: &[usize],
    dets: &[DetectionRecord],
    det_idx: &[usize],
    iou_threshold: f64,
) -> Vec<RankedDetection> {
    let mut order = det_idx.to_vec();
    order.sort_by(|&a, &b| dets[b].score.total_cmp(&dets[a].score).then(a.cmp(&b)));
    let mut taken = vec![false; gt_idx.len()];
    order
        .into_iter()
        .map(|di| {
            let det = &dets[di];
            let mut best: Option<(usize, f64)> = None;
            for (slot, &gi) in gt_idx.iter().enumerate() {
                if taken[slot] {
                    continue;
                }
                let v = iou(&det.bbox, &gt[gi].bbox);
                if best.is_none_or(|(_, b)| v > b) {
                    best = Some((slot, v));
                }
            }
            let hit = best.filter(|&(_, v)| v >= iou_threshold);
            if let Some((slot, _)) = hit {
                taken[slot] = true;
            }
            RankedDetection {
                index: di,
                score: det.score,
                true_positive: hit.is_some(),
                matched_gt: hit.map(|(slot, _)| gt_idx[slot]),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gt(b: BBox) -> GroundTruthBox {
        GroundTruthBox {
            image_id: 1,
            category_id: 1,
            bbox: b,
        }
    }

    fn det(b: BBox, score: f64) -> DetectionRecord {
        DetectionRecord {
            image_id: 1,
            category_id: 1,
            bbox: b,
            score,
        }
    }

    fn flags(m: &MatchResult) -> Vec<bool> {
        m.classes[&1].ranked.iter().map(|d| d.true_positive).collect()
    }

    #[test]
    fn identical_detection_is_tp() {
        let b = BBox::new(0.0, 0.0, 10.0, 10.0);
        assert_eq!(flags(&match_detections(&[gt(b)], &[det(b, 0.7)], 0.5)), [true]);
    }

    #[test]
    fn ground_truth_is_consumed_once() {
        let b = BBox::new(0.0, 0.0, 10.0, 10.0);
        let m = match_detections(&[gt(b)], &[det(b, 0.8), det(b, 0.9)], 0.5);
        assert_eq!(flags(&m), [true, false]);
        assert_eq!(m.classes[&1].ranked[0].index, 1);
    }

    #[test]
    fn below_threshold_is_fp() {
        // 40 / 100 overlap with equal areas: IoU = 40 / 160 = 0.25.
        let m = match_detections(&[gt(BBox::new(0.0, 0.0, 10.0, 10.0))], &[det(BBox::new(6.0, 0.0, 10.0, 10.0), 0.9)], 0.5);
        assert_eq!(flags(&m), [false]);
        // IoU exactly 0.4 against the sole box.
        let a = BBox::new(0.0, 0.0, 10.0, 10.0);
        let d = BBox::new(0.0, 0.0, 4.0, 10.0);
        assert!((iou(&a, &d) - 0.4).abs() < 1e-12);
        assert_eq!(flags(&match_detections(&[gt(a)], &[det(d, 0.9)], 0.5)), [false]);
    }

    #[test]
    fn fp_does_not_consume_ground_truth() {
        let a = BBox::new(0.0, 0.0, 10.0, 10.0);
        let m = match_detections(&[gt(a)], &[det(BBox::new(7.0, 0.0, 10.0, 10.0), 0.9), det(a, 0.5)], 0.5);
        assert_eq!(flags(&m), [false, true]);
    }

    #[test]
    fn classes_and_images_are_separate() {
        let b = BBox::new(0.0, 0.0, 10.0, 10.0);
        let g = vec![gt(b), GroundTruthBox { image_id: 2, ..gt(b) }];
        let d = vec![DetectionRecord { image_id: 2, ..det(b, 0.3) }, DetectionRecord { category_id: 2, ..det(b, 0.9) }];
        let m = match_detections(&g, &d, 0.5);
        assert_eq!(m.classes[&1].gt_count, 2);
        assert_eq!(flags(&m), [true]);
        assert_eq!(m.classes[&2].gt_count, 0);
        assert!(!m.classes[&2].ranked[0].true_positive);
    }
}

use super::matching::ClassMatches;

/// All-point interpolated average precision of one class.
///
/// Every true positive raises recall by `1 / gt_count`, and the precision
/// envelope over that step is the best precision at any rank at or below it,
/// so the area is `sum over TP ranks i of max_{j >= i} precision(j)`,
/// divided by `gt_count`. `None` when the class has no ground truth.
pub fn average_precision(class: &ClassMatches) -> Option<f64> {
    if class.gt_count == 0 {
        return None;
    }
    let mut tp = 0usize;
    let precision: Vec<f64> = class
        .ranked
        .iter()
        .enumerate()
        .map(|(rank, d)| {
            tp += d.true_positive as usize;
            tp as f64 / (rank + 1) as f64
        })
        .collect();

    let mut envelope = vec![0.0; precision.len()];
    let mut best = 0.0f64;
    for i in (0..precision.len()).rev() {
        best = best.max(precision[i]);
        envelope[i] = best;
    }

    let mut area = 0.0;
    for (i, d) in class.ranked.iter().enumerate() {
        if d.true_positive {
            area += envelope[i];
        }
    }
    Some(area / class.gt_count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::matching::RankedDetection;

    fn class(gt_count: usize, flags: &[bool]) -> ClassMatches {
        ClassMatches {
            category_id: 1,
            gt_count,
            ranked: flags
                .iter()
                .enumerate()
                .map(|(i, &tp)| RankedDetection {
                    index: i,
                    score: 1.0 - i as f64 * 0.01,
                    true_positive: tp,
                    matched_gt: None,
                })
                .collect(),
        }
    }

    #[test]
    fn fixtures() {
        assert_eq!(average_precision(&class(3, &[true, true, true])), Some(1.0));
        assert_eq!(average_precision(&class(2, &[])), Some(0.0));
        assert_eq!(average_precision(&class(2, &[false, false])), Some(0.0));
        assert_eq!(average_precision(&class(0, &[false])), None);
        let ap = average_precision(&class(3, &[true, false, true])).unwrap();
        assert!((ap - 5.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn late_hits_are_lifted_by_envelope() {
        // Ranks: FP, TP, TP with 2 GT. Precisions 0, 1/2, 2/3; envelope 2/3 for both hits.
        let ap = average_precision(&class(2, &[false, true, true])).unwrap();
        assert!((ap - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn trailing_fp_is_exactly_neutral() {
        let base = average_precision(&class(4, &[true, false, true, false, true])).unwrap();
        let more = average_precision(&class(4, &[true, false, true, false, true, false])).unwrap();
        assert_eq!(base.to_bits(), more.to_bits());
    }
}

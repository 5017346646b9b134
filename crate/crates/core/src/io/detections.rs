//! Detector output arrays: `[{"image_id", "category_id", "bbox":[x,y,w,h], "score"}]`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{parse_json, read_text, serialize_num, serialize_nums, write_json};
use crate::annotation::DetectionRecord;
use crate::error::{Error, Result};
use crate::geometry::BBox;

#[derive(Debug, Serialize, Deserialize)]
struct RawDetection {
    image_id: u64,
    category_id: u64,
    #[serde(default)]
    bbox: Vec<f64>,
    score: f64,
}

#[derive(Serialize)]
struct OutDetection {
    image_id: u64,
    category_id: u64,
    #[serde(serialize_with = "serialize_nums")]
    bbox: [f64; 4],
    #[serde(serialize_with = "serialize_num")]
    score: f64,
}

pub fn parse_detections(text: &str, context: &Path) -> Result<Vec<DetectionRecord>> {
    let raw: Vec<RawDetection> = parse_json(text, context)?;
    raw.into_iter()
        .enumerate()
        .map(|(index, r)| {
            let invalid = |reason: String| Error::InvalidDetection { index, reason };
            if !(0.0..=1.0).contains(&r.score) {
                return Err(invalid(format!("score {} outside [0, 1]", r.score)));
            }
            if r.category_id < 1 {
                return Err(invalid("category_id must be >= 1".into()));
            }
            let [x, y, w, h]: [f64; 4] = r
                .bbox
                .as_slice()
                .try_into()
                .map_err(|_| invalid(format!("bbox has {} values, expected 4", r.bbox.len())))?;
            if !(w >= 0.0 && h >= 0.0) || !(x.is_finite() && y.is_finite()) {
                return Err(invalid(format!("bbox [{x}, {y}, {w}, {h}] is not a valid box")));
            }
            Ok(DetectionRecord {
                image_id: r.image_id,
                category_id: r.category_id,
                bbox: BBox { x, y, w, h },
                score: r.score,
            })
        })
        .collect()
}

pub fn read_detections(path: &Path) -> Result<Vec<DetectionRecord>> {
    parse_detections(&read_text(path)?, path)
}

pub fn write_detections(dets: &[DetectionRecord], path: &Path) -> Result<()> {
    let out: Vec<_> = dets
        .iter()
        .map(|d| OutDetection {
            image_id: d.image_id,
            category_id: d.category_id,
            bbox: d.bbox.to_array(),
            score: d.score,
        })
        .collect();
    write_json(&out, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Vec<DetectionRecord>> {
        parse_detections(text, Path::new("mem"))
    }

    #[test]
    fn fixtures() {
        let one = parse(r#"[{"image_id":1,"category_id":2,"bbox":[0,0,10,10],"score":0.9}]"#).unwrap();
        assert_eq!(
            one,
            vec![DetectionRecord {
                image_id: 1,
                category_id: 2,
                bbox: BBox::new(0.0, 0.0, 10.0, 10.0),
                score: 0.9
            }]
        );
        assert!(parse("[]").unwrap().is_empty());
        let err = parse(r#"[{"image_id":1,"category_id":2,"bbox":[0,0,10,10],"score":1.5}]"#).unwrap_err();
        assert!(err.to_string().contains("score"));
        let err = parse(r#"[{"image_id":1,"category_id":2,"bbox":[0,0,10],"score":0.5}]"#).unwrap_err();
        assert!(err.to_string().contains("bbox"));
    }

    #[test]
    fn order_is_preserved() {
        let d = parse(
            r#"[{"image_id":2,"category_id":1,"bbox":[0,0,1,1],"score":0.1},
                {"image_id":1,"category_id":1,"bbox":[0,0,1,1],"score":0.9}]"#,
        )
        .unwrap();
        assert_eq!(d[0].image_id, 2);
        assert_eq!(d[1].image_id, 1);
    }
}

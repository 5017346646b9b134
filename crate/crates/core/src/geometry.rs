//! Axis-aligned rectangle arithmetic.
//!
//! Boxes are closed regions stored as `(x, y, w, h)` in pixels. Corner form
//! `(x1, y1, x2, y2)` is only ever produced by conversion.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BBox {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl BBox {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        debug_assert!(w >= 0.0 && h >= 0.0, "negative box size {w}x{h}");
        Self { x, y, w, h }
    }

    /// Builds a box from corner form. Callers must ensure `x2 >= x1` and `y2 >= y1`.
    pub fn from_corners(x1: f64, y1: f64, x2: f64, y2: f64) -> Self {
        Self::new(x1, y1, x2 - x1, y2 - y1)
    }

    pub fn to_corners(&self) -> [f64; 4] {
        [self.x, self.y, self.right(), self.bottom()]
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.x, self.y, self.w, self.h]
    }

    pub fn right(&self) -> f64 {
        self.x + self.w
    }

    pub fn bottom(&self) -> f64 {
        self.y + self.h
    }

    pub fn center_x(&self) -> f64 {
        self.x + self.w / 2.0
    }

    pub fn center_y(&self) -> f64 {
        self.y + self.h / 2.0
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }

    pub fn intersection_area(&self, other: &BBox) -> f64 {
        let iw = self.right().min(other.right()) - self.x.max(other.x);
        let ih = self.bottom().min(other.bottom()) - self.y.max(other.y);
        if iw <= 0.0 || ih <= 0.0 {
            0.0
        } else {
            iw * ih
        }
    }

    pub fn iou(&self, other: &BBox) -> f64 {
        iou(self, other)
    }

    /// Clips the box to `[0, width] x [0, height]`. Returns `None` when nothing
    /// of positive area remains.
    pub fn clamp_to(&self, width: f64, height: f64) -> Option<BBox> {
        let x1 = self.x.max(0.0);
        let y1 = self.y.max(0.0);
        let x2 = self.right().min(width);
        let y2 = self.bottom().min(height);
        if x2 > x1 && y2 > y1 {
            Some(BBox::from_corners(x1, y1, x2, y2))
        } else {
            None
        }
    }

    pub fn translate(&self, dx: f64, dy: f64) -> BBox {
        BBox::new(self.x + dx, self.y + dy, self.w, self.h)
    }

    pub fn scale(&self, s: f64) -> BBox {
        BBox::new(self.x * s, self.y * s, self.w * s, self.h * s)
    }

    pub fn contains(&self, other: &BBox) -> bool {
        other.x >= self.x
            && other.y >= self.y
            && other.right() <= self.right()
            && other.bottom() <= self.bottom()
    }
}

/// Intersection over union. Zero when the union has no area.
pub fn iou(a: &BBox, b: &BBox) -> f64 {
    let inter = a.intersection_area(b);
    let union = a.area() + b.area() - inter;
    if union <= 0.0 {
        0.0
    } else {
        (inter / union).clamp(0.0, 1.0)
    }
}

/// Smallest box containing every input.
pub fn union_bounds<'a, I>(boxes: I) -> Result<BBox>
where
    I: IntoIterator<Item = &'a BBox>,
{
    let mut iter = boxes.into_iter();
    let first = iter.next().ok_or(Error::EmptyUnion)?;
    let [mut x1, mut y1, mut x2, mut y2] = first.to_corners();
    for b in iter {
        x1 = x1.min(b.x);
        y1 = y1.min(b.y);
        x2 = x2.max(b.right());
        y2 = y2.max(b.bottom());
    }
    Ok(BBox::from_corners(x1, y1, x2, y2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pixel_oracle_iou(a: &BBox, b: &BBox) -> f64 {
        // Counts unit cells whose centers fall in each integer-aligned box.
        let inside = |r: &BBox, px: f64, py: f64| px > r.x && px < r.right() && py > r.y && py < r.bottom();
        let (mut inter, mut uni) = (0u32, 0u32);
        for i in 0..40 {
            for j in 0..40 {
                let (px, py) = (i as f64 + 0.5, j as f64 + 0.5);
                let (ia, ib) = (inside(a, px, py), inside(b, px, py));
                inter += (ia && ib) as u32;
                uni += (ia || ib) as u32;
            }
        }
        inter as f64 / uni as f64
    }

    #[test]
    fn iou_fixtures() {
        let a = BBox::new(0.0, 0.0, 10.0, 10.0);
        assert_eq!(iou(&a, &a), 1.0);
        assert_eq!(iou(&a, &BBox::new(20.0, 20.0, 10.0, 10.0)), 0.0);
        let b = BBox::new(5.0, 0.0, 10.0, 10.0);
        let oracle = pixel_oracle_iou(&a, &b);
        assert!((oracle - 50.0 / 150.0).abs() < 1e-12);
        assert!((iou(&a, &b) - oracle).abs() < 1e-12);
    }

    #[test]
    fn touching_edges_have_zero_iou() {
        let a = BBox::new(0.0, 0.0, 10.0, 10.0);
        let b = BBox::new(10.0, 0.0, 10.0, 10.0);
        assert_eq!(iou(&a, &b), 0.0);
    }

    #[test]
    fn degenerate_boxes() {
        let z = BBox::new(3.0, 3.0, 0.0, 0.0);
        assert_eq!(iou(&z, &z), 0.0);
        assert_eq!(iou(&z, &BBox::new(0.0, 0.0, 10.0, 10.0)), 0.0);
    }

    #[test]
    fn union_fixtures() {
        let one = BBox::new(3.0, 4.0, 5.0, 6.0);
        assert_eq!(union_bounds(&[one]).unwrap(), one);
        let u = union_bounds(&[BBox::new(0.0, 0.0, 1.0, 1.0), BBox::new(2.0, 2.0, 1.0, 1.0)]).unwrap();
        assert_eq!(u, BBox::new(0.0, 0.0, 3.0, 3.0));
        let err = union_bounds(&[]).unwrap_err();
        assert_eq!(err.to_string(), "empty bounds union");
    }

    #[test]
    fn clamp_drops_offscreen() {
        assert_eq!(BBox::new(-5.0, -5.0, 10.0, 10.0).clamp_to(100.0, 100.0), Some(BBox::new(0.0, 0.0, 5.0, 5.0)));
        assert_eq!(BBox::new(100.0, 0.0, 10.0, 10.0).clamp_to(100.0, 100.0), None);
    }

    #[test]
    fn iou_symmetric_randomized() {
        // Fixed-seed LCG so the 1000 trials are reproducible.
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 200) as f64 / 2.0
        };
        for _ in 0..1000 {
            let a = BBox::new(next(), next(), next(), next());
            let b = BBox::new(next(), next(), next(), next());
            assert_eq!(iou(&a, &b), iou(&b, &a));
        }
    }

    fn arb_box() -> impl Strategy<Value = BBox> {
        (-100.0..100.0f64, -100.0..100.0f64, 0.0..80.0f64, 0.0..80.0f64)
            .prop_map(|(x, y, w, h)| BBox::new(x, y, w, h))
    }

    proptest! {
        #[test]
        fn iou_bounded(a in arb_box(), b in arb_box()) {
            let v = iou(&a, &b);
            prop_assert!((0.0..=1.0).contains(&v));
            prop_assert!(a.intersection_area(&b) <= a.area().min(b.area()) + 1e-9);
        }

        #[test]
        fn self_iou_is_one(a in arb_box()) {
            prop_assume!(a.area() > 0.0);
            prop_assert!((iou(&a, &a) - 1.0).abs() < 1e-12);
        }

        #[test]
        fn union_idempotent(boxes in prop::collection::vec(arb_box(), 1..8)) {
            let u = union_bounds(&boxes).unwrap();
            prop_assert_eq!(union_bounds(&[u]).unwrap(), u);
            for b in &boxes {
                prop_assert!(b.x >= u.x && b.y >= u.y);
                prop_assert!(b.right() <= u.right() + 1e-9 && b.bottom() <= u.bottom() + 1e-9);
            }
        }
    }
}

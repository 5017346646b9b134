//! Snap a hand-drawn form whose edges are a few pixels off.

use bbx::layout::snap_alignments;
use bbx::{BBox, Element};

fn main() {
    let form = vec![
        Element::new("label", BBox::new(40.0, 100.0, 120.0, 30.0)),
        Element::new("text_field", BBox::new(43.0, 140.0, 518.0, 44.0)),
        Element::new("label", BBox::new(38.0, 210.0, 90.0, 30.0)),
        Element::new("text_field", BBox::new(41.0, 250.0, 521.0, 46.0)),
        Element::new("button", BBox::new(238.0, 340.0, 124.0, 48.0)),
    ];
    for tol in [0.0, 2.0, 4.0] {
        println!("tolerance {tol}");
        for (before, after) in form.iter().zip(snap_alignments(&form, tol)) {
            println!("  {:<10} {:?} -> {:?}", before.category, before.bbox.to_array(), after.bbox.to_array());
        }
    }
}

//! Infer a row/column/grid layout tree for a small settings screen.

use bbx::layout::{infer_layout, tree_to_json, LayoutConfig};
use bbx::{BBox, Element, ScreenAnnotation};

fn main() -> bbx::Result<()> {
    let mut elements = vec![
        Element::new("image", BBox::new(20.0, 20.0, 48.0, 48.0)),
        Element::new("label", BBox::new(84.0, 30.0, 300.0, 28.0)),
    ];
    // A 3x3 gallery drawn with tight, slightly uneven spacing.
    for r in 0..3 {
        for c in 0..3 {
            let jitter = ((r * 3 + c) % 2) as f64;
            elements.push(Element::new("image", BBox::new(20.0 + c as f64 * 176.0 + jitter, 110.0 + r as f64 * 156.0, 170.0, 150.0)));
        }
    }
    elements.push(Element::new("button", BBox::new(20.0, 640.0, 260.0, 56.0)));
    elements.push(Element::new("button", BBox::new(320.0, 640.0, 260.0, 56.0)));

    let screen = ScreenAnnotation::new(600.0, 800.0, elements)?;
    let tree = infer_layout(&screen, &LayoutConfig::default())?;
    println!("{}", tree.outline());
    print!("{}", tree_to_json(&tree));
    Ok(())
}

//! Render a screen and its layout groups as an SVG blueprint.
//!
//! cargo run --example blueprint_svg > blueprint.svg

use bbx::blueprint::{render_blueprint, BlueprintStyle};
use bbx::layout::{infer_layout, LayoutConfig};
use bbx::{BBox, Element, ScreenAnnotation};

fn main() -> bbx::Result<()> {
    let screen = ScreenAnnotation::new(
        360.0,
        640.0,
        vec![
            Element::new("image", BBox::new(130.0, 40.0, 100.0, 100.0)),
            Element::new("text_field", BBox::new(30.0, 180.0, 300.0, 44.0)),
            Element::new("text_field", BBox::new(30.0, 240.0, 300.0, 44.0)),
            Element::new("checkbox", BBox::new(30.0, 310.0, 24.0, 24.0)),
            Element::new("label", BBox::new(64.0, 310.0, 160.0, 24.0)),
            Element::new("button", BBox::new(30.0, 380.0, 140.0, 48.0)),
            Element::new("button", BBox::new(190.0, 380.0, 140.0, 48.0)),
        ],
    )?;
    let tree = infer_layout(&screen, &LayoutConfig::default())?;
    let style = BlueprintStyle { scale: 1.5, ..BlueprintStyle::default() };
    print!("{}", render_blueprint(&screen, Some(&tree), &style)?);
    Ok(())
}

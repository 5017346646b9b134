//! Blueprint-style SVG rendering of a screen and its layout groups.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::annotation::ScreenAnnotation;
use crate::error::{Error, Result};
use crate::geometry::BBox;
use crate::layout::LayoutNode;

#[derive(Debug, Clone, PartialEq)]
pub struct BlueprintStyle {
    pub background_color: String,
    pub stroke_color: String,
    pub group_stroke_color: String,
    pub label_color: String,
    pub stroke_width: f64,
    pub font_size: f64,
    pub show_groups: bool,
    pub scale: f64,
}

impl Default for BlueprintStyle {
    fn default() -> Self {
        Self {
            background_color: "#ffffff".into(),
            stroke_color: "#1f5fbf".into(),
            group_stroke_color: "#7aa7e6".into(),
            label_color: "#1f5fbf".into(),
            stroke_width: 2.0,
            font_size: 12.0,
            show_groups: true,
            scale: 1.0,
        }
    }
}

/// Renders one outlined, labeled rect per element and, when `show_groups`
/// is set and a tree is given, one dashed rect per internal tree node.
///
/// The tree must describe the same elements as the screen: same count and
/// the same multiset of categories. Leaf bounds are allowed to differ since
/// layout inference snaps them.
pub fn render_blueprint(screen: &ScreenAnnotation, tree: Option<&LayoutNode>, style: &BlueprintStyle) -> Result<String> {
    let positive = |v: f64| v > 0.0;
    if !positive(style.stroke_width) || !positive(style.scale) {
        return Err(Error::InvalidConfig("stroke_width and scale must be positive".into()));
    }
    if let Some(tree) = tree {
        check_correspondence(screen, tree)?;
    }
    let s = style.scale;
    let mut out = String::new();
    let (w, h) = (screen.width * s, screen.height * s);
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" style="background-color:{}">"#,
        escape(&style.background_color)
    );

    if let (true, Some(tree)) = (style.show_groups, tree) {
        let dash = format!("{} {}", 3.0 * style.stroke_width * s, 2.0 * style.stroke_width * s);
        tree.walk(&mut |n| {
            if n.is_leaf() {
                return;
            }
            let _ = writeln!(
                out,
                r#"  <g class="bbx-group" data-kind="{}">{}</g>"#,
                n.kind.name(),
                rect(&n.bounds, s, &style.group_stroke_color, style.stroke_width * s, Some(&dash))
            );
        });
    }

    let pad = style.stroke_width * s;
    for e in &screen.elements {
        let b = &e.bbox;
        let _ = writeln!(
            out,
            r#"  <g class="bbx-element">{}<svg x="{}" y="{}" width="{}" height="{}"><text x="{pad}" y="{}" font-family="sans-serif" font-size="{}" fill="{}">{}</text></svg></g>"#,
            rect(b, s, &style.stroke_color, style.stroke_width * s, None),
            b.x * s,
            b.y * s,
            b.w * s,
            b.h * s,
            pad + style.font_size * s,
            style.font_size * s,
            escape(&style.label_color),
            escape(&e.category)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn rect(b: &BBox, s: f64, stroke: &str, width: f64, dash: Option<&str>) -> String {
    let dash = dash.map(|d| format!(r#" stroke-dasharray="{d}""#)).unwrap_or_default();
    format!(
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="{}" stroke-width="{width}"{dash}/>"#,
        b.x * s,
        b.y * s,
        b.w * s,
        b.h * s,
        escape(stroke)
    )
}

fn check_correspondence(screen: &ScreenAnnotation, tree: &LayoutNode) -> Result<()> {
    let mut counts: HashMap<&str, isize> = HashMap::new();
    for e in &screen.elements {
        *counts.entry(&e.category).or_default() += 1;
    }
    for leaf in tree.leaves() {
        *counts.entry(leaf.category().unwrap_or_default()).or_default() -= 1;
    }
    if counts.values().all(|&c| c == 0) {
        Ok(())
    } else {
        Err(Error::TreeMismatch)
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

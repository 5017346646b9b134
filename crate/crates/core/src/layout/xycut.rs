use super::snap::snap_alignments;
use super::tree::{LayoutNode, NodeKind};
use super::LayoutConfig;
use crate::annotation::{sort_reading_order, Element, ScreenAnnotation};
use crate::error::{Error, Result};
use crate::geometry::{union_bounds, BBox};

/// Relative slack on gap-threshold comparisons so that scaling every
/// coordinate does not flip a borderline decision through rounding.
const REL_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    /// Splits along y: horizontal whitespace bands, yielding a column.
    Horizontal,
    /// Splits along x: vertical whitespace bands, yielding a row.
    Vertical,
}

impl Axis {
    fn span(self, b: &BBox) -> (f64, f64) {
        match self {
            Axis::Horizontal => (b.y, b.bottom()),
            Axis::Vertical => (b.x, b.right()),
        }
    }

    fn length(self, b: &BBox) -> f64 {
        match self {
            Axis::Horizontal => b.h,
            Axis::Vertical => b.w,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Gap {
    start: f64,
    end: f64,
}

impl Gap {
    fn thickness(&self) -> f64 {
        self.end - self.start
    }
}

/// Infers a row/column/grid tree over the screen's elements.
///
/// Elements are snapped first, then split recursively at whitespace bands
/// that are at least `max(gap_min_px, gap_fraction * region length)` thick.
/// The axis with the thicker widest band wins, horizontal bands on ties.
/// Sets with no such band become a grid when they form a regular arrangement
/// of same-category, similar-size elements, and otherwise a row or column
/// along their longer extent.
pub fn infer_layout(screen: &ScreenAnnotation, cfg: &LayoutConfig) -> Result<LayoutNode> {
    if screen.elements.is_empty() {
        return Err(Error::NoElements);
    }
    cfg.validate()?;
    let snapped = snap_alignments(&screen.elements, cfg.snap_tolerance);
    Ok(build(snapped, cfg))
}

fn build(mut items: Vec<Element>, cfg: &LayoutConfig) -> LayoutNode {
    if items.len() == 1 {
        let e = items.pop().unwrap();
        return LayoutNode::leaf(e.category, e.bbox);
    }
    let region = union_bounds(items.iter().map(|e| &e.bbox)).expect("nonempty set");

    let eligible = |axis: Axis| -> Vec<Gap> {
        let threshold = cfg.gap_min_px.max(cfg.gap_fraction * axis.length(&region));
        gaps(&items, axis)
            .into_iter()
            .filter(|g| g.thickness() >= threshold * (1.0 - REL_EPS))
            .collect()
    };
    let widest = |gs: &[Gap]| gs.iter().map(Gap::thickness).fold(None, |m: Option<f64>, t| Some(m.map_or(t, |m| m.max(t))));

    let h_gaps = eligible(Axis::Horizontal);
    let v_gaps = eligible(Axis::Vertical);
    let axis = match (widest(&h_gaps), widest(&v_gaps)) {
        (None, None) => return group_without_gaps(items, cfg),
        (Some(_), None) => Axis::Horizontal,
        (None, Some(_)) => Axis::Vertical,
        (Some(h), Some(v)) => {
            if h >= v {
                Axis::Horizontal
            } else {
                Axis::Vertical
            }
        }
    };
    let cuts = if axis == Axis::Horizontal { h_gaps } else { v_gaps };

    let mut parts: Vec<Vec<Element>> = vec![Vec::new(); cuts.len() + 1];
    for e in items {
        let start = axis.span(&e.bbox).0;
        let part = cuts.iter().take_while(|g| g.end <= start).count();
        parts[part].push(e);
    }
    let children: Vec<LayoutNode> = parts.into_iter().map(|p| build(p, cfg)).collect();
    let kind = match axis {
        Axis::Horizontal => NodeKind::Column,
        Axis::Vertical => NodeKind::Row,
    };
    merge_grid(LayoutNode::container(kind, children), cfg)
}

/// Maximal open intervals along `axis` that no element's projection covers.
fn gaps(items: &[Element], axis: Axis) -> Vec<Gap> {
    let mut spans: Vec<(f64, f64)> = items.iter().map(|e| axis.span(&e.bbox)).collect();
    spans.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut out = Vec::new();
    let mut reach = spans[0].1;
    for &(s, e) in &spans[1..] {
        if s > reach {
            out.push(Gap { start: reach, end: s });
        }
        reach = reach.max(e);
    }
    out
}

/// Groups of indices whose projections along `axis` touch or overlap,
/// ordered by position.
fn bands(items: &[Element], axis: Axis) -> Vec<usize> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| axis.span(&items[a].bbox).0.total_cmp(&axis.span(&items[b].bbox).0));
    let mut band_of = vec![0; items.len()];
    let mut band = 0;
    let mut reach = f64::NEG_INFINITY;
    for (k, &i) in order.iter().enumerate() {
        let (s, e) = axis.span(&items[i].bbox);
        if k > 0 && s > reach {
            band += 1;
        }
        band_of[i] = band;
        reach = reach.max(e);
    }
    band_of
}

/// Returns a grid node when `items` form a k×m arrangement (k, m ≥ 2) of
/// same-category elements whose sizes agree within the configured ratio.
fn as_grid(items: &[Element], cfg: &LayoutConfig) -> Option<LayoutNode> {
    let n = items.len();
    if n < 4 || items.iter().any(|e| e.category != items[0].category) {
        return None;
    }
    let similar = |f: fn(&BBox) -> f64| {
        let (lo, hi) = items
            .iter()
            .map(|e| f(&e.bbox))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        lo > 0.0 && hi / lo <= cfg.grid_size_ratio
    };
    if !similar(|b| b.w) || !similar(|b| b.h) {
        return None;
    }
    let row_of = bands(items, Axis::Horizontal);
    let col_of = bands(items, Axis::Vertical);
    let rows = row_of.iter().max()? + 1;
    let cols = col_of.iter().max()? + 1;
    if rows < 2 || cols < 2 || rows * cols != n {
        return None;
    }
    let mut cells: Vec<Option<&Element>> = vec![None; n];
    for (i, e) in items.iter().enumerate() {
        let slot = &mut cells[row_of[i] * cols + col_of[i]];
        if slot.is_some() {
            return None;
        }
        *slot = Some(e);
    }
    let children = cells
        .into_iter()
        .map(|c| {
            let e = c.expect("k*m cells with n distinct occupants are all filled");
            LayoutNode::leaf(e.category.clone(), e.bbox)
        })
        .collect();
    Some(LayoutNode::container(NodeKind::Grid { rows, cols }, children))
}

fn group_without_gaps(mut items: Vec<Element>, cfg: &LayoutConfig) -> LayoutNode {
    if let Some(grid) = as_grid(&items, cfg) {
        return grid;
    }
    let region = union_bounds(items.iter().map(|e| &e.bbox)).expect("nonempty set");
    sort_reading_order(&mut items);
    let kind = if region.w >= region.h { NodeKind::Row } else { NodeKind::Column };
    let children = items.into_iter().map(|e| LayoutNode::leaf(e.category, e.bbox)).collect();
    LayoutNode::container(kind, children)
}

/// A column of rows (or row of columns) made only of leaves collapses into a
/// grid when those leaves satisfy the grid test.
fn merge_grid(node: LayoutNode, cfg: &LayoutConfig) -> LayoutNode {
    let inner = match node.kind {
        NodeKind::Column => NodeKind::Row,
        NodeKind::Row => NodeKind::Column,
        _ => return node,
    };
    let mergeable = node
        .children
        .iter()
        .all(|c| c.kind == inner && c.children.iter().all(LayoutNode::is_leaf));
    if !mergeable {
        return node;
    }
    let leaves: Vec<Element> = node
        .children
        .iter()
        .flat_map(|c| &c.children)
        .map(|l| Element::new(l.category().unwrap_or_default(), l.bounds))
        .collect();
    as_grid(&leaves, cfg).unwrap_or(node)
}

//! Layout-tree inference from a flat list of positioned elements.
//!
//! Alignment snapping pulls nearly aligned edges together, recursive
//! whitespace cuts split the screen into rows and columns, and runs of
//! same-category, similar-size elements laid out in a regular arrangement
//! become grids.

mod snap;
mod tree;
mod xycut;

pub use snap::snap_alignments;
pub use tree::{parse_tree, read_tree, serialize_tree, tree_to_json, write_tree, LayoutNode, NodeKind};
pub use xycut::infer_layout;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutConfig {
    /// Minimum split gap as a fraction of the region's length along the split axis.
    pub gap_fraction: f64,
    /// Minimum split gap in pixels.
    pub gap_min_px: f64,
    /// Edge-snapping linking distance in pixels.
    pub snap_tolerance: f64,
    /// Largest max/min size ratio still considered "same size" for grids.
    pub grid_size_ratio: f64,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        Self {
            gap_fraction: 0.02,
            gap_min_px: 8.0,
            snap_tolerance: 4.0,
            grid_size_ratio: 1.25,
        }
    }
}

impl LayoutConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.gap_fraction > 0.0 && self.gap_fraction.is_finite()) {
            return Err(Error::InvalidConfig("gap_fraction must be positive".into()));
        }
        if !(self.gap_min_px > 0.0 && self.gap_min_px.is_finite()) {
            return Err(Error::InvalidConfig("gap_min_px must be positive".into()));
        }
        if !(self.snap_tolerance >= 0.0 && self.snap_tolerance.is_finite()) {
            return Err(Error::InvalidConfig("snap_tolerance must be non-negative".into()));
        }
        if !(self.grid_size_ratio >= 1.0 && self.grid_size_ratio.is_finite()) {
            return Err(Error::InvalidConfig("grid_size_ratio must be at least 1".into()));
        }
        Ok(())
    }

    /// Same config with pixel thresholds multiplied by `s`.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            gap_min_px: self.gap_min_px * s,
            snap_tolerance: self.snap_tolerance * s,
            ..self.clone()
        }
    }
}

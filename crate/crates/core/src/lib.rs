//! Non-neural machinery for AI-assisted UI design tooling.
//!
//! * [`synth`] stitches labeled element sketches into synthetic lo-fi screens
//!   with COCO ground truth, for training UI-element detectors.
//! * [`io::rico`] flattens Android view hierarchies into [`ScreenAnnotation`]s.
//! * [`layout`] infers row/column/grid layout trees from positioned elements.
//! * [`blueprint`] renders screens and their groups as SVG blueprints.
//! * [`eval`] scores detector output with IoU matching, AP and mAP.
//!
//! Every stage is deterministic: identical inputs (and seeds) give
//! byte-identical outputs regardless of thread count.

pub mod annotation;
pub mod blueprint;
pub mod cli;
mod error;
pub mod eval;
pub mod geometry;
pub mod io;
pub mod layout;
pub mod sample;
pub mod synth;

pub use annotation::{DetectionRecord, Element, ElementAsset, ElementLibrary, ScreenAnnotation};
pub use error::{Error, Result};
pub use geometry::{iou, union_bounds, BBox};

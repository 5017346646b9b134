//! Write a small synthetic dataset (PNG sketches plus COCO ground truth).
//!
//! cargo run --release --example synth_dataset -- [out_dir] [count]

use std::path::PathBuf;

use bbx::io::library::load_element_library;
use bbx::sample::write_sample_library;
use bbx::synth::{generate_dataset, ComposeConfig, ANNOTATION_FILE};

fn main() -> bbx::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "syn_out".into()));
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);

    // The manifest round-trip is what `bbx synth --library` would read.
    let manifest = write_sample_library(&out.join("library"), 4)?;
    let library = load_element_library(&manifest)?;
    println!("library: {} categories, {} assets", library.categories().len(), library.asset_count());

    let summary = generate_dataset(&library, &ComposeConfig::default(), count, 7, &out.join("data"))?;
    println!(
        "{} screens, {} elements, ground truth in {}",
        summary.screens,
        summary.elements,
        out.join("data").join(ANNOTATION_FILE).display()
    );
    Ok(())
}

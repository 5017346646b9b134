//! Compose one synthetic sketch screen and print where each element landed.
//!
//! cargo run --example compose_screen -- [seed] [out.png]

use bbx::sample::sample_library;
use bbx::synth::{compose_screen, ComposeConfig};

fn main() -> bbx::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let out = args.next().unwrap_or_else(|| "screen.png".into());

    let library = sample_library(3);
    let cfg = ComposeConfig { min_elements: 8, max_elements: 12, ..ComposeConfig::default() };
    let screen = compose_screen(&library, &cfg, seed)?;

    println!("seed {seed}: {} elements on {}x{}", screen.placements.len(), cfg.canvas_w, cfg.canvas_h);
    for p in &screen.placements {
        let [x, y, w, h] = p.bbox.to_array();
        println!("  {:<12} {:>4} {:>4} {:>4}x{:<4} scale {:.2}  ({})", p.category, x, y, w, h, p.scale, p.source_id);
    }
    screen.image.save(&out).map_err(|source| bbx::Error::Image { path: out.clone().into(), source })?;
    println!("raster written to {out}");
    Ok(())
}

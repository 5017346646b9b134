//! The `bbx` command line: `synth`, `ingest`, `layout`, `blueprint` and `eval`.
//!
//! Exit codes: 0 on success, 2 on usage errors, 1 on runtime errors. Data
//! goes to files or standard output; diagnostics go to standard error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::blueprint::{render_blueprint, BlueprintStyle};
use crate::error::{Error, Result};
use crate::eval::{evaluate_files, DEFAULT_IOU_THRESHOLD};
use crate::io::library::load_element_library;
use crate::io::rico::load_rico_screen;
use crate::io::screen::{read_screen, write_screen};
use crate::layout::{infer_layout, read_tree, write_tree, LayoutConfig};
use crate::synth::{generate_dataset, ComposeConfig};

#[derive(Debug, Parser)]
#[command(name = "bbx", version, about = "Lo-fi sketch synthesis, UI layout inference, blueprints and detector scoring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a synthetic sketch dataset with COCO ground truth.
    Synth(SynthArgs),
    /// Convert a RICO view hierarchy into a screen annotation.
    Ingest(IngestArgs),
    /// Infer a layout tree from a screen annotation.
    Layout(LayoutArgs),
    /// Render a screen (and optionally its layout tree) as an SVG blueprint.
    Blueprint(BlueprintArgs),
    /// Score detections against COCO ground truth.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Size {
    w: u32,
    h: u32,
}

fn parse_size(s: &str) -> std::result::Result<Size, String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got \"{s}\""))?;
    let parse = |v: &str| v.trim().parse::<u32>().map_err(|e| format!("bad dimension \"{v}\": {e}"));
    let size = Size { w: parse(w)?, h: parse(h)? };
    if size.w == 0 || size.h == 0 {
        return Err("dimensions must be positive".into());
    }
    Ok(size)
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long)]
    library: PathBuf,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_parser = parse_size, default_value = "600x800")]
    canvas: Size,
    #[arg(long = "min-elems", default_value_t = 5)]
    min_elems: u32,
    #[arg(long = "max-elems", default_value_t = 15)]
    max_elems: u32,
    #[arg(long = "scale-min", default_value_t = 0.5)]
    scale_min: f64,
    #[arg(long = "scale-max", default_value_t = 1.5)]
    scale_max: f64,
    #[arg(long = "max-overlap", default_value_t = 0.05)]
    max_overlap: f64,
    #[arg(long = "max-attempts", default_value_t = 50)]
    max_attempts: u32,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Args)]
struct IngestArgs {
    #[arg(long)]
    rico: PathBuf,
    #[arg(long, value_parser = parse_size)]
    size: Size,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct LayoutArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long = "gap-fraction", default_value_t = 0.02)]
    gap_fraction: f64,
    #[arg(long = "gap-min-px", default_value_t = 8.0)]
    gap_min_px: f64,
    #[arg(long = "snap-tol", default_value_t = 4.0)]
    snap_tol: f64,
    #[arg(long = "grid-ratio", default_value_t = 1.25)]
    grid_ratio: f64,
}

#[derive(Debug, Args)]
struct BlueprintArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    tree: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long = "show-groups")]
    show_groups: bool,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    gt: PathBuf,
    #[arg(long)]
    det: PathBuf,
    #[arg(long, default_value_t = DEFAULT_IOU_THRESHOLD)]
    iou: f64,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Synth(a) => synth(a),
        Command::Ingest(a) => {
            let screen = load_rico_screen(&a.rico, a.size.w as f64, a.size.h as f64)?;
            write_screen(&screen, &a.out)
        }
        Command::Layout(a) => {
            let screen = read_screen(&a.input)?;
            let cfg = LayoutConfig {
                gap_fraction: a.gap_fraction,
                gap_min_px: a.gap_min_px,
                snap_tolerance: a.snap_tol,
                grid_size_ratio: a.grid_ratio,
            };
            write_tree(&infer_layout(&screen, &cfg)?, &a.out)
        }
        Command::Blueprint(a) => {
            let screen = read_screen(&a.input)?;
            let tree = a.tree.as_deref().map(read_tree).transpose()?;
            let style = BlueprintStyle {
                show_groups: a.show_groups,
                scale: a.scale,
                ..BlueprintStyle::default()
            };
            let svg = render_blueprint(&screen, tree.as_ref(), &style)?;
            write_file(&a.out, svg.as_bytes())
        }
        Command::Eval(a) => {
            let report = with_jobs(a.jobs, || evaluate_files(&a.gt, &a.det, a.iou))??;
            if let Some(path) = &a.report {
                let mut text = report.to_json();
                text.push('\n');
                write_file(path, text.as_bytes())?;
            }
            print!("{}", report.to_table());
            Ok(())
        }
    }
}

fn synth(a: SynthArgs) -> Result<()> {
    let library = load_element_library(&a.library)?;
    let cfg = ComposeConfig {
        canvas_w: a.canvas.w,
        canvas_h: a.canvas.h,
        min_elements: a.min_elems,
        max_elements: a.max_elems,
        scale_min: a.scale_min,
        scale_max: a.scale_max,
        max_overlap_iou: a.max_overlap,
        max_attempts: a.max_attempts,
        ..ComposeConfig::default()
    };
    let summary = with_jobs(a.jobs, || generate_dataset(&library, &cfg, a.count, a.seed, &a.out))??;
    println!(
        "wrote {} screens with {} elements to {}",
        summary.screens,
        summary.elements,
        a.out.display()
    );
    Ok(())
}

fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(f))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_size("600x800"), Ok(Size { w: 600, h: 800 }));
        assert!(parse_size("600").is_err());
        assert!(parse_size("0x5").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["bbx", "synth"]), 2);
        assert_eq!(run(["bbx"]), 2);
        assert_eq!(run(["bbx", "layout", "--input", "a", "--out", "b", "--bogus"]), 2);
        assert_eq!(run(["bbx", "frobnicate"]), 2);
    }

    #[test]
    fn help_exits_0() {
        assert_eq!(run(["bbx", "--help"]), 0);
    }
}

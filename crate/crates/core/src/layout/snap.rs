use crate::annotation::Element;
use crate::geometry::BBox;

/// Snaps nearly aligned edges and centers together.
///
/// Per axis, start edges, end edges and centers are clustered by single
/// linkage within `tolerance`; each value in a cluster of two or more moves
/// to the cluster median, which becomes an alignment line. A box is rebuilt
/// from its snapped start/end pair, falling back to one edge with the length
/// kept, then to its center. Centers only take part for boxes with neither
/// edge snapped.
///
/// Moving one edge of a box can carry its other edge next to another line,
/// so passes repeat until nothing moves. Lines created by earlier passes stay
/// fixed and later values join the nearest line within `tolerance`; new lines
/// form only from values near no line. A box whose snapped edges would cross
/// keeps its start and drops out of the end family. Whole runs repeat until
/// one moves nothing, so snapping the output again is a no-op. Output order
/// equals input order.
pub fn snap_alignments(elements: &[Element], tolerance: f64) -> Vec<Element> {
    if tolerance <= 0.0 || elements.len() < 2 {
        return elements.to_vec();
    }
    let mut xs: Vec<Span> = elements.iter().map(|e| Span::new(e.bbox.x, e.bbox.w)).collect();
    let mut ys: Vec<Span> = elements.iter().map(|e| Span::new(e.bbox.y, e.bbox.h)).collect();
    snap_axis(&mut xs, tolerance);
    snap_axis(&mut ys, tolerance);
    elements
        .iter()
        .zip(xs.iter().zip(&ys))
        .map(|(e, (x, y))| Element::new(e.category.clone(), BBox::new(x.start, y.start, x.len, y.len)))
        .collect()
}

/// Upper bound on fresh runs. Bounding the work keeps every coordinate an
/// exact dyadic value.
const MAX_RUNS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Span {
    start: f64,
    len: f64,
}

impl Span {
    fn new(start: f64, len: f64) -> Self {
        Self { start, len }
    }

    fn end(&self) -> f64 {
        self.start + self.len
    }

    fn center(&self) -> f64 {
        self.start + self.len / 2.0
    }
}

fn snap_axis(spans: &mut [Span], tol: f64) {
    for _ in 0..MAX_RUNS {
        if !snap_run(spans, tol) {
            break;
        }
    }
}

/// One run from scratch. Returns whether anything moved.
fn snap_run(spans: &mut [Span], tol: f64) -> bool {
    let mut start_lines = Vec::new();
    let mut end_lines = Vec::new();
    let mut center_lines = Vec::new();
    let mut any = false;
    // Each pass either snaps a new edge or center, or changes nothing.
    for _ in 0..=3 * spans.len() {
        let starts = assign(&spans.iter().map(|s| Some(s.start)).collect::<Vec<_>>(), &mut start_lines, tol);
        let ends = assign_ends(spans, &starts, &mut end_lines, tol);
        let centers: Vec<Option<f64>> = spans
            .iter()
            .enumerate()
            .map(|(i, s)| (starts[i].is_none() && ends[i].is_none()).then(|| s.center()))
            .collect();
        let centers = assign(&centers, &mut center_lines, tol);

        let mut moved = false;
        for (i, span) in spans.iter_mut().enumerate() {
            let next = rebuild(*span, starts[i], ends[i], centers[i]);
            moved |= next != *span;
            *span = next;
        }
        if !moved {
            break;
        }
        any = true;
    }
    any
}

/// End edges whose line would fall at or before the box's snapped start are
/// left out of the end family, and the family is clustered again without them.
fn assign_ends(spans: &[Span], starts: &[Option<f64>], lines: &mut Vec<f64>, tol: f64) -> Vec<Option<f64>> {
    let mut values: Vec<Option<f64>> = spans.iter().map(|s| Some(s.end())).collect();
    loop {
        let mut trial = lines.clone();
        let ends = assign(&values, &mut trial, tol);
        let mut crossed = false;
        for i in 0..spans.len() {
            if let (Some(s), Some(e)) = (starts[i], ends[i]) {
                if e <= s {
                    values[i] = None;
                    crossed = true;
                }
            }
        }
        if !crossed {
            *lines = trial;
            return ends;
        }
    }
}

fn rebuild(span: Span, start: Option<f64>, end: Option<f64>, center: Option<f64>) -> Span {
    match (start, end, center) {
        (Some(s), Some(e), _) if s == span.start && e == span.end() => span,
        (Some(s), Some(e), _) => Span::new(s, e - s),
        (Some(s), None, _) => Span::new(s, span.len),
        (None, Some(e), _) => Span::new(e - span.len, span.len),
        (None, None, Some(c)) => Span::new(c - span.len / 2.0, span.len),
        (None, None, None) => span,
    }
}

/// Maps each participating value to an alignment line, or `None` if it
/// aligns with nothing. Values within `tol` of an existing line take the
/// nearest one (the lower on ties). The rest are chained by single linkage
/// and every chain of two or more creates a line at its median.
fn assign(values: &[Option<f64>], lines: &mut Vec<f64>, tol: f64) -> Vec<Option<f64>> {
    let mut out = vec![None; values.len()];
    let mut free: Vec<usize> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        let Some(v) = *v else { continue };
        let nearest = lines
            .iter()
            .copied()
            .filter(|l| (l - v).abs() <= tol)
            .min_by(|a, b| (a - v).abs().total_cmp(&(b - v).abs()).then(a.total_cmp(b)));
        match nearest {
            Some(l) => out[i] = Some(l),
            None => free.push(i),
        }
    }

    free.sort_by(|&a, &b| values[a].unwrap().total_cmp(&values[b].unwrap()).then(a.cmp(&b)));
    let value = |k: usize| values[free[k]].unwrap();
    let mut start = 0;
    while start < free.len() {
        let mut end = start + 1;
        while end < free.len() && value(end) - value(end - 1) <= tol {
            end += 1;
        }
        if end - start > 1 {
            let n = end - start;
            let mid = start + n / 2;
            let median = if n % 2 == 1 { value(mid) } else { (value(mid - 1) + value(mid)) / 2.0 };
            lines.push(median);
            for &i in &free[start..end] {
                out[i] = Some(median);
            }
        }
        start = end;
    }
    out
}

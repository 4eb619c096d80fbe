//! TikZ and SVG drawings of lattice paths: grid, dashed boundary line
//! `y = n - x + k`, the path in bold, and South-step labels to the left of
//! their steps.

use std::fmt::Write;

use naples_core::{LatticePath, Step};

/// Path vertices with collinear interior points dropped.
fn corners(path: &LatticePath) -> Vec<(usize, usize)> {
    let v = path.vertices();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (i, &p) in v.iter().enumerate() {
        let keep = i == 0
            || i + 1 == v.len()
            || path.steps[i - 1] != path.steps[i];
        if keep {
            out.push(p);
        }
    }
    out
}

/// `(x, y_bottom, label)` for each labeled South step.
fn label_positions(path: &LatticePath) -> Vec<(usize, usize, usize)> {
    let Some(labels) = &path.labels else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let (mut x, mut y) = (0, path.size());
    let mut idx = 0;
    for s in &path.steps {
        match s {
            Step::East => x += 1,
            Step::South => {
                y -= 1;
                out.push((x, y, labels[idx]));
                idx += 1;
            }
        }
    }
    out
}

pub fn tikz(path: &LatticePath, k: usize) -> String {
    let n = path.size();
    let mut s = String::new();
    s.push_str("\\begin{tikzpicture}[scale=0.8]\n");
    let _ = writeln!(s, "\\draw[help lines] (0,0) grid +({n},{n});");
    let _ = writeln!(s, "\\draw[dashed] ({k},{n}) -- ({n},{k});");
    let pts: Vec<String> = corners(path).iter().map(|(x, y)| format!("({x},{y})")).collect();
    let _ = writeln!(s, "\\draw [color=black, line width=2] {};", pts.join("--"));
    for (x, y, label) in label_positions(path) {
        let _ = writeln!(s, "\\draw ({},{}) node {{{label}}};", x as f64 - 0.25, y as f64 + 0.5);
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

pub fn svg(path: &LatticePath, k: usize) -> String {
    const UNIT: usize = 40;
    const MARGIN: usize = 30;
    let n = path.size();
    let side = n * UNIT + 2 * MARGIN;
    let px = |x: usize| MARGIN + x * UNIT;
    let py = |y: usize| MARGIN + (n - y) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    s.push_str("  <g stroke=\"#bbbbbb\" stroke-width=\"1\">\n");
    for i in 0..=n {
        let _ = writeln!(s, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(i), py(0), px(i), py(n));
        let _ = writeln!(s, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(i), px(n), py(i));
    }
    s.push_str("  </g>\n");
    let _ = writeln!(
        s,
        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-dasharray="6,4"/>"##,
        px(k.min(n)),
        py(n),
        px(n),
        py(k.min(n))
    );
    let pts: Vec<String> = corners(path)
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        s,
        r##"  <polyline points="{}" fill="none" stroke="#000000" stroke-width="4"/>"##,
        pts.join(" ")
    );
    for (x, y, label) in label_positions(path) {
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-size="16" text-anchor="middle" dominant-baseline="middle">{label}</text>"#,
            px(x) as f64 - UNIT as f64 * 0.25,
            py(y) as f64 - UNIT as f64 * 0.5
        );
    }
    s.push_str("</svg>\n");
    s
}

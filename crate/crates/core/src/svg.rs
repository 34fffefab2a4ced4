//! SVG 1.1 drawings. Coordinates here are for display only.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::duality::{AlternatingPath, SegmentFamily};
use crate::tree::Tree;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 170.0;
const LAYER_GAP: f64 = 60.0;
const SLOT: f64 = 36.0;
const MARGIN: f64 = 30.0;

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
}

/// Chords on a circle, labels clockwise from the top, plus an optional path.
pub fn render_segments(s: &SegmentFamily, path: Option<&AlternatingPath>) -> String {
    let count = s.label_count();
    let centre = SIZE / 2.0;
    let at = |label: usize, r: f64| {
        let angle = 2.0 * PI * label as f64 / count as f64;
        (centre + r * angle.sin(), centre - r * angle.cos())
    };
    let mut out = String::new();
    header(&mut out, SIZE, SIZE);
    let _ = writeln!(
        out,
        r##"  <circle cx="{centre:.0}" cy="{centre:.0}" r="{RADIUS:.0}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"  <g class="segments" stroke="#1f4e99" stroke-width="2">"##
    );
    for (i, &(a, b)) in s.pairs().iter().enumerate() {
        let (x1, y1) = at(a, RADIUS);
        let (x2, y2) = at(b, RADIUS);
        let _ = writeln!(
            out,
            r#"    <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" data-segment="{i}"/>"#
        );
    }
    let _ = writeln!(out, "  </g>");
    if let Some(p) = path {
        let points: Vec<String> = p
            .endpoints
            .iter()
            .map(|&l| {
                let (x, y) = at(l, RADIUS);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r##"  <polyline class="path" points="{}" fill="none" stroke="#d0402b" stroke-width="1.5" stroke-dasharray="4 3"/>"##,
            points.join(" ")
        );
    }
    let _ = writeln!(
        out,
        r#"  <g class="labels" font-family="sans-serif" font-size="10" text-anchor="middle">"#
    );
    for label in 0..count {
        let (x, y) = at(label, RADIUS + 14.0);
        let _ = writeln!(
            out,
            r#"    <text x="{x:.2}" y="{:.2}">{label}</text>"#,
            y + 3.5
        );
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

/// Layered drawing rooted at the smallest centroid; leaves take consecutive
/// slots and each parent sits over the mean of its children.
pub fn render_tree(t: &Tree) -> String {
    let n = t.vertex_count();
    let root = t.centroids()[0];
    let order = t.preorder(root);
    let (depth, parent) = t.bfs(root);
    let children = |v: usize| -> Vec<usize> {
        t.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != root && parent[w] == v)
            .collect()
    };
    let mut x = vec![0.0f64; n];
    let mut next_slot = 0.0;
    for &v in &order {
        if children(v).is_empty() {
            x[v] = next_slot;
            next_slot += 1.0;
        }
    }
    for &v in order.iter().rev() {
        let kids = children(v);
        if !kids.is_empty() {
            x[v] = kids.iter().map(|&c| x[c]).sum::<f64>() / kids.len() as f64;
        }
    }
    let height = depth.iter().max().copied().unwrap_or(0) as f64;
    let width = 2.0 * MARGIN + SLOT * (next_slot - 1.0).max(0.0);
    let pos = |v: usize| (MARGIN + SLOT * x[v], MARGIN + LAYER_GAP * depth[v] as f64);

    let mut out = String::new();
    header(&mut out, width, 2.0 * MARGIN + LAYER_GAP * height);
    let _ = writeln!(
        out,
        r##"  <g class="edges" stroke="#444444" stroke-width="1.5">"##
    );
    for &(u, v) in t.edges() {
        let (x1, y1) = pos(u);
        let (x2, y2) = pos(v);
        let _ = writeln!(
            out,
            r#"    <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(
        out,
        r##"  <g class="vertices" fill="#1f4e99" font-family="sans-serif" font-size="9">"##
    );
    for v in 0..n {
        let (cx, cy) = pos(v);
        let _ = writeln!(out, r#"    <circle cx="{cx:.2}" cy="{cy:.2}" r="4"/>"#);
        let _ = writeln!(
            out,
            r#"    <text x="{:.2}" y="{:.2}">{v}</text>"#,
            cx + 6.0,
            cy - 6.0
        );
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

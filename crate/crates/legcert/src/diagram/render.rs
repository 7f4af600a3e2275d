//! Deterministic SVG rendering.
//!
//! Layout: every edge is subdivided twice and every bounded face gets a
//! center vertex and an inner ring joined to its boundary; the unbounded
//! boundary is pinned to a circle and the rest is placed at neighbor
//! barycenters.

use std::fmt::Write;

use super::{DiagramError, LagrangianDiagram, Side};

#[derive(Debug, Clone)]
pub struct RenderOptions {
    /// Pixels per unit of layout radius per crossing.
    pub scale: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { scale: 60.0 }
    }
}

/// Planar positions of crossings, edge subdivision points and face centers,
/// y-up, inside the unit circle.
#[derive(Debug, Clone)]
pub struct Layout {
    pub crossings: Vec<(f64, f64)>,
    /// Two interior points per edge, tail side first.
    pub edges: Vec<[(f64, f64); 2]>,
    /// Center of each face; the unbounded face gets a point above the drawing.
    pub faces: Vec<(f64, f64)>,
}

impl Layout {
    /// Polyline of an edge from its tail crossing to its head crossing.
    pub fn polyline(&self, d: &LagrangianDiagram, e: usize) -> [(f64, f64); 4] {
        let edge = &d.edges()[e];
        let [p, q] = self.edges[e];
        [
            self.crossings[edge.tail.crossing],
            p,
            q,
            self.crossings[edge.head.crossing],
        ]
    }
}

const ITERATIONS: usize = 20_000;
const TOLERANCE: f64 = 1e-12;

pub fn layout(d: &LagrangianDiagram) -> Result<Layout, DiagramError> {
    let nc = d.crossings().len();
    let ne = d.edges().len();
    let nf = d.faces().len();
    let ubd = d.unbounded_face();
    let sub = |e: usize, k: usize| nc + 2 * e + k;
    let center = |f: usize| nc + 2 * ne + f;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nc + 2 * ne + nf];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (e, edge) in d.edges().iter().enumerate() {
        link(edge.tail.crossing, sub(e, 0), &mut adj);
        link(sub(e, 0), sub(e, 1), &mut adj);
        link(sub(e, 1), edge.head.crossing, &mut adj);
    }
    // Boundary cycle of each face as layout vertices, counterclockwise.
    let boundary = |f: usize| -> Vec<usize> {
        let mut out = Vec::new();
        for s in &d.faces()[f].sides {
            let edge = &d.edges()[s.edge];
            match s.side {
                Side::Left => out.extend([edge.tail.crossing, sub(s.edge, 0), sub(s.edge, 1)]),
                Side::Right => out.extend([edge.head.crossing, sub(s.edge, 1), sub(s.edge, 0)]),
            }
        }
        out
    };
    // Each bounded face gets an inner ring, one vertex per boundary vertex,
    // so that small faces such as curls are not attached through a 2-cut.
    for f in d.bounded_faces() {
        let b = boundary(f);
        let first = adj.len();
        adj.resize(first + b.len(), Vec::new());
        for (i, &v) in b.iter().enumerate() {
            link(first + i, v, &mut adj);
            link(first + i, first + (i + 1) % b.len(), &mut adj);
            link(first + i, center(f), &mut adj);
        }
    }
    let n = adj.len();
    let mut pos = vec![(0.0f64, 0.0f64); n];
    let mut fixed = vec![false; n];
    fixed[center(ubd)] = true;
    let outer = boundary(ubd);
    // The unbounded face is traversed with the face on the left, i.e. clockwise around the drawing.
    let m = outer.len() as f64;
    for (i, &v) in outer.iter().enumerate() {
        if !fixed[v] {
            let t = std::f64::consts::TAU * i as f64 / m;
            pos[v] = (t.cos(), -t.sin());
            fixed[v] = true;
        }
    }
    for _ in 0..ITERATIONS {
        let mut delta = 0.0f64;
        for v in 0..n {
            if fixed[v] || adj[v].is_empty() {
                continue;
            }
            let k = adj[v].len() as f64;
            let (sx, sy) = adj[v]
                .iter()
                .fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            let p = (sx / k, sy / k);
            delta = delta.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if delta < TOLERANCE {
            break;
        }
    }
    if pos.iter().any(|p| !p.0.is_finite() || !p.1.is_finite()) {
        return Err(DiagramError::LayoutFailure("non-finite coordinates".into()));
    }
    pos[center(ubd)] = (0.0, 1.12);
    Ok(Layout {
        crossings: pos[..nc].to_vec(),
        edges: (0..ne).map(|e| [pos[sub(e, 0)], pos[sub(e, 1)]]).collect(),
        faces: (0..nf).map(|f| pos[center(f)]).collect(),
    })
}

fn lerp(a: (f64, f64), b: (f64, f64), t: f64) -> (f64, f64) {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// SVG with three root groups: `strands`, `crossings`, `labels`.
pub fn render_svg(d: &LagrangianDiagram, opts: &RenderOptions) -> Result<Vec<u8>, DiagramError> {
    if !(opts.scale.is_finite() && opts.scale > 0.0) {
        return Err(DiagramError::LayoutFailure(format!("scale {}", opts.scale)));
    }
    let lay = layout(d)?;
    let r = opts.scale * (d.crossings().len() as f64).sqrt().max(2.0);
    let margin = 40.0;
    let size = 2.0 * (r + margin);
    let at = |p: (f64, f64)| (size / 2.0 + r * p.0, size / 2.0 - r * p.1);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    s.push_str("<g id=\"strands\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\">\n");
    // Gap left on either side of an under-crossing, as a fraction of the first segment.
    let gap = 0.35;
    for (e, edge) in d.edges().iter().enumerate() {
        let mut pts = lay.polyline(d, e);
        if !d.crossings()[edge.tail.crossing].is_over_slot(edge.tail.slot) {
            pts[0] = lerp(pts[0], pts[1], gap);
        }
        if !d.crossings()[edge.head.crossing].is_over_slot(edge.head.slot) {
            pts[3] = lerp(pts[3], pts[2], gap);
        }
        let pts: Vec<(f64, f64)> = pts.iter().map(|&p| at(p)).collect();
        let text: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(s, r#"<polyline id="{}" points="{}"/>"#, esc(&edge.id), text.join(" "));
        // Orientation arrow at the middle of the edge.
        let (m, (dx, dy)) = (lerp(pts[1], pts[2], 0.5), (pts[2].0 - pts[1].0, pts[2].1 - pts[1].1));
        let len = dx.hypot(dy);
        if len > 1e-9 {
            let (ux, uy) = (dx / len * 5.0, dy / len * 5.0);
            let tip = (m.0 + ux, m.1 + uy);
            let l = (m.0 - ux - uy * 0.8, m.1 - uy + ux * 0.8);
            let r = (m.0 - ux + uy * 0.8, m.1 - uy - ux * 0.8);
            let _ = writeln!(
                s,
                r#"<path d="M{:.2},{:.2} L{:.2},{:.2} L{:.2},{:.2} z" fill="black" stroke="none"/>"#,
                tip.0, tip.1, l.0, l.1, r.0, r.1
            );
        }
    }
    s.push_str("</g>\n<g id=\"crossings\">\n");
    for (c, x) in d.crossings().iter().enumerate() {
        let (px, py) = at(lay.crossings[c]);
        let fill = if x.sign > 0 { "#c0392b" } else { "#2c6fbb" };
        let _ = writeln!(
            s,
            r#"<circle id="{}" cx="{px:.2}" cy="{py:.2}" r="4" fill="{fill}"/>"#,
            esc(&x.id)
        );
    }
    s.push_str("</g>\n<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n");
    for (c, x) in d.crossings().iter().enumerate() {
        let (px, py) = at(lay.crossings[c]);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            px + 9.0,
            py - 7.0,
            esc(&x.label)
        );
    }
    for (f, face) in d.faces().iter().enumerate() {
        let (px, py) = at(lay.faces[f]);
        let _ = writeln!(
            s,
            r#"<text x="{px:.2}" y="{py:.2}" fill="gray">{}</text>"#,
            esc(&face.label)
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s.into_bytes())
}

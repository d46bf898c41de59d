//! Standalone SVG drawings. Output depends only on the input value.

use std::fmt::Write;

use tfpl_core::fpl::GridFpl;
use tfpl_core::puzzle::{triangles, Puzzle};
use tfpl_core::tfpl::{Arc, Edge, EdgeStatus, OrientedTfplConfig, Point, TfplConfig, TriangleGraph};

const UNIT: f64 = 40.0;
const PAD: f64 = 30.0;
const LABEL_COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];

pub enum Drawable<'a> {
    Fpl(&'a GridFpl),
    Tfpl(&'a TfplConfig),
    Oriented(&'a OrientedTfplConfig),
    Puzzle(&'a Puzzle),
}

pub fn render_svg(item: Drawable<'_>) -> String {
    match item {
        Drawable::Fpl(f) => fpl_svg(f),
        Drawable::Tfpl(f) => triangle_svg(&f.triangle(), f.edges(), None),
        Drawable::Oriented(f) => {
            let edges = f.underlying_edges();
            triangle_svg(&f.triangle(), &edges, Some(f.arcs()))
        }
        Drawable::Puzzle(p) => puzzle_svg(p),
    }
}

struct Canvas {
    body: String,
    width: f64,
    height: f64,
}

impl Canvas {
    fn new(width: f64, height: f64) -> Self {
        Canvas { body: String::new(), width, height }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64, extra: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="{width}"{extra}/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn circle(&mut self, c: (f64, f64), r: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{r}" fill="{fill}" stroke="black" stroke-width="1.5"/>"#,
            c.0, c.1
        );
    }

    fn polygon(&mut self, pts: &[(f64, f64)], fill: &str) {
        let coords: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", p.0, p.1)).collect();
        let _ = writeln!(self.body, r#"<polygon points="{}" fill="{fill}" stroke="none"/>"#, coords.join(" "));
    }

    fn finish(self, defs: &str) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n{defs}<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body,
            w = self.width,
            h = self.height
        )
    }
}

const ARROW: &str = "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"7\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/></marker></defs>\n";

fn triangle_svg(g: &TriangleGraph, edges: &[Edge], arcs: Option<&[Arc]>) -> String {
    let n = g.n() as f64;
    let width = (4.0 * n - 2.0) * UNIT + 2.0 * PAD;
    let height = (2.0 * n) * UNIT + 2.0 * PAD;
    let at = |p: Point| (PAD + p.0 as f64 * UNIT, height - PAD - (p.1 as f64 + 1.0) * UNIT);
    let mut c = Canvas::new(width, height);
    for e in g.edges() {
        if g.status(e) != Some(EdgeStatus::Forbidden) {
            c.line(at(e.a), at(e.b), "#dddddd", 1.0, "");
        }
    }
    for e in edges {
        let bold = g.status(e) == Some(EdgeStatus::Present);
        let width = if bold { 4.0 } else { 2.5 };
        match arcs.and_then(|a| a.iter().find(|a| a.edge() == *e)) {
            Some(a) => {
                // arrowhead at the middle of the edge
                let (p, q) = (at(a.from), at(a.to));
                let mid = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
                c.line(p, q, "black", width, "");
                c.line(p, mid, "black", width, r#" marker-end="url(#arrow)""#);
            }
            None => c.line(at(e.a), at(e.b), "black", width, ""),
        }
    }
    for &p in &g.nodes()[..g.vertex_count()] {
        let fill = if g.is_even(p) { "black" } else { "white" };
        c.circle(at(p), 4.5, fill);
    }
    c.finish(if arcs.is_some() { ARROW } else { "" })
}

fn fpl_svg(f: &GridFpl) -> String {
    let n = f.n() as f64;
    let side = (n + 1.0) * UNIT + 2.0 * PAD;
    let at = |x: i32, y: i32| (PAD + (x as f64 + 1.0) * UNIT, side - PAD - (y as f64 + 1.0) * UNIT);
    let mut c = Canvas::new(side, side);
    let m = f.n() as i32;
    for x in 0..m {
        for y in 0..m {
            if x + 1 < m {
                c.line(at(x, y), at(x + 1, y), "#dddddd", 1.0, "");
            }
            if y + 1 < m {
                c.line(at(x, y), at(x, y + 1), "#dddddd", 1.0, "");
            }
        }
    }
    for e in f.edges() {
        c.line(at(e[0], e[1]), at(e[2], e[3]), "black", 3.0, "");
    }
    for x in 0..m {
        for y in 0..m {
            c.circle(at(x, y), 4.0, "black");
        }
    }
    c.finish("")
}

fn puzzle_svg(p: &Puzzle) -> String {
    let side = 2 * p.n();
    let h = UNIT * 3f64.sqrt() / 2.0;
    let width = side as f64 * UNIT + 2.0 * PAD;
    let height = side as f64 * h + 2.0 * PAD;
    // lattice point k on line y, counted from the left side
    let at = |y: usize, k: usize| (PAD + (k as f64 + y as f64 / 2.0) * UNIT, height - PAD - y as f64 * h);
    let mut c = Canvas::new(width, height);
    for t in triangles(p.n()) {
        let (y, k) = (t.strip, t.k);
        let pts =
            if t.up { [at(y, k), at(y, k + 1), at(y + 1, k)] } else { [at(y, k + 1), at(y + 1, k + 1), at(y + 1, k)] };
        c.polygon(&pts, if t.up { "#f4f4f4" } else { "#e6e6e6" });
    }
    for y in 0..side {
        for k in 0..side - y {
            let hl = p.h(y, k) as usize;
            c.line(at(y, k), at(y, k + 1), LABEL_COLORS[hl], 3.0, "");
            let sl = p.s(y, k) as usize;
            c.line(at(y, k), at(y + 1, k), LABEL_COLORS[sl], 3.0, "");
            let bl = p.b(y, k) as usize;
            c.line(at(y, k + 1), at(y + 1, k), LABEL_COLORS[bl], 3.0, "");
        }
    }
    c.finish("")
}

#[cfg(test)]
mod tests {
    use super::*;
    use tfpl_core::dyck::DyckWord;
    use tfpl_core::puzzle::enumerate_puzzles;
    use tfpl_core::tfpl::{canonical_orientation, enumerate_tfpl};
    use tfpl_core::Limits;

    #[test]
    fn smallest_tfpl() {
        let m = DyckWord::minimal(1);
        let f = enumerate_tfpl(&m, &m, &m, &Limits::default()).unwrap().remove(0);
        let svg = render_svg(Drawable::Tfpl(&f));
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg, render_svg(Drawable::Tfpl(&f)));
        // two stubs plus the two boundary horizontals, all bold
        assert_eq!(svg.matches(r#"stroke="black" stroke-width="4""#).count(), 4);
        let o = render_svg(Drawable::Oriented(&canonical_orientation(&f)));
        assert!(o.contains("marker-end"));
    }

    #[test]
    fn puzzle_has_all_triangles() {
        let m = DyckWord::minimal(2);
        let p = enumerate_puzzles(&m, &m, &m, &Limits::default()).unwrap().remove(0);
        let svg = render_svg(Drawable::Puzzle(&p));
        assert_eq!(svg.matches("<polygon").count(), 16);
        assert_eq!(svg, render_svg(Drawable::Puzzle(&p)));
    }
}

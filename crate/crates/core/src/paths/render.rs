//! Plain-text and SVG pictures of path families.

use std::fmt::Write;

use super::{LatticePoint, PathFamily, Step};

fn bounds(pf: &PathFamily) -> Option<(i64, i64, i64, i64)> {
    let pts: Vec<LatticePoint> = pf.paths.iter().flat_map(|p| p.points()).chain(pf.ends.iter().copied()).collect();
    let x0 = pts.iter().map(|p| p.x).min()?;
    let x1 = pts.iter().map(|p| p.x).max()?;
    let y0 = pts.iter().map(|p| p.y).min()?;
    let y1 = pts.iter().map(|p| p.y).max()?;
    Some((x0, x1, y0, y1))
}

fn path_mark(i: usize) -> char {
    char::from_digit((i % 36) as u32, 36).unwrap_or('*')
}

/// Text picture, `y` growing upwards. Vertices show the index of the path
/// through them in base 36, unused lattice points are `.`; steps are drawn
/// with `-`, `|`, `/` and `=` for o-horizontal steps.
pub fn render_ascii(pf: &PathFamily) -> String {
    let Some((x0, x1, y0, y1)) = bounds(pf) else { return String::new() };
    let w = (2 * (x1 - x0) + 1) as usize;
    let h = (2 * (y1 - y0) + 1) as usize;
    let mut grid = vec![vec![' '; w]; h];
    let cell = |p: LatticePoint| ((2 * (p.y - y0)) as usize, (2 * (p.x - x0)) as usize);
    for y in y0..=y1 {
        for x in x0..=x1 {
            let (r, c) = cell(LatticePoint::new(x, y));
            grid[r][c] = '.';
        }
    }
    for (i, p) in pf.paths.iter().enumerate() {
        let mut q = p.start;
        for &s in &p.steps {
            let (r, c) = cell(q);
            match s {
                Step::Right => grid[r][c + 1] = '-',
                Step::Up => grid[r + 1][c] = '|',
                Step::Down => grid[r - 1][c] = '|',
                Step::Diag => grid[r + 1][c + 1] = '/',
                Step::OHoriz => {
                    for k in 1..4 {
                        grid[r][c + k] = '=';
                    }
                }
            }
            q = q.step(s);
        }
        for v in p.points() {
            let (r, c) = cell(v);
            grid[r][c] = path_mark(i);
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Standalone SVG, one polyline per path; o-horizontal steps are arcs.
pub fn render_svg(pf: &PathFamily) -> String {
    const UNIT: i64 = 30;
    const PAD: i64 = 20;
    let (x0, x1, y0, y1) = bounds(pf).unwrap_or((0, 0, 0, 0));
    let (w, h) = ((x1 - x0) * UNIT + 2 * PAD, (y1 - y0) * UNIT + 2 * PAD);
    let px = |p: LatticePoint| ((p.x - x0) * UNIT + PAD, (y1 - p.y) * UNIT + PAD);
    let colours = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    for y in y0..=y1 {
        for x in x0..=x1 {
            let (cx, cy) = px(LatticePoint::new(x, y));
            let _ = writeln!(s, r##"<circle cx="{cx}" cy="{cy}" r="1.5" fill="#bbb"/>"##);
        }
    }
    for (i, p) in pf.paths.iter().enumerate() {
        let colour = colours[i % colours.len()];
        let (sx, sy) = px(p.start);
        let mut d = format!("M {sx} {sy}");
        let mut q = p.start;
        for &st in &p.steps {
            let r = q.step(st);
            let (rx, ry) = px(r);
            if st == Step::OHoriz {
                let _ = write!(d, " A {} {} 0 0 1 {rx} {ry}", UNIT, UNIT);
            } else {
                let _ = write!(d, " L {rx} {ry}");
            }
            q = r;
        }
        let _ = writeln!(s, r#"<path d="{d}" fill="none" stroke="{colour}" stroke-width="2"/>"#);
        for v in p.points() {
            let (cx, cy) = px(v);
            let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="3" fill="{colour}"/>"#);
        }
    }
    s.push_str("</svg>\n");
    s
}

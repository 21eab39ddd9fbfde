//! The modified reflection principle.

use super::{LatticePoint, Path, Step};
use crate::error::{require, Error, Result};

/// Exponent vector of a unit-step path under the e-labelling anchored at its
/// start: the step from `(i,j)` has weight `x_{(i+j−a−b)/2+1}^{-1}` when
/// `i+j−a−b` is even and `x_{(i+j−a−b+1)/2}` when odd.
pub fn modified_weight(p: &Path, n: usize) -> Result<Vec<i32>> {
    let base = p.start.level();
    let mut w = vec![0i32; n];
    let mut q = p.start;
    for &s in &p.steps {
        match s {
            Step::Right => {
                let t = q.level() - base;
                require(t >= 0 && t < 2 * n as i64, || format!("label {t} outside 0..{}", 2 * n))?;
                w[(t / 2) as usize] += if t % 2 == 0 { -1 } else { 1 };
            }
            Step::Up => {}
            _ => return Err(Error::Precondition(format!("{s:?} is not a unit right/up step"))),
        }
        q = q.step(s);
    }
    Ok(w)
}

/// Reflects the part of `p` up to its first touch of `y = x + d`.
///
/// Even points and odd points without a turn are reflected as usual,
/// `(x,y) ↦ (y−d, x+d)`; an odd left turn goes to `(y−d+1, x+d−1)` and an
/// odd right turn to `(y−d−1, x+d+1)`, so turns keep their direction. The
/// rest of the path is kept. The map is its own inverse.
pub fn reflect_initial_segment(p: &Path, d: i64) -> Result<Path> {
    require(d % 2 == 0, || format!("d even fails: d = {d}"))?;
    require(p.start.level() % 2 == 0, || format!("start {} is not an even point", p.start))?;
    require(p.start.y != p.start.x + d, || format!("start {} lies on y = x{d:+}", p.start))?;
    if let Some(s) = p.steps.iter().find(|s| !matches!(s, Step::Right | Step::Up)) {
        return Err(Error::Precondition(format!("{s:?} is not a unit right/up step")));
    }
    let pts = p.points();
    let q = pts
        .iter()
        .position(|v| v.y == v.x + d)
        .ok_or_else(|| Error::Precondition(format!("path never touches y = x{d:+}")))?;
    let mut image = Vec::with_capacity(q + 1);
    for (k, &v) in pts.iter().enumerate().take(q + 1) {
        let (mut x, mut y) = (v.y - d, v.x + d);
        if v.level() % 2 != 0 {
            let (inc, out) = (p.steps[k - 1], p.steps[k]);
            match (inc, out) {
                (Step::Right, Step::Up) => {
                    x += 1;
                    y -= 1;
                }
                (Step::Up, Step::Right) => {
                    x -= 1;
                    y += 1;
                }
                _ => {}
            }
        }
        image.push(LatticePoint::new(x, y));
    }
    let mut steps = Vec::with_capacity(p.steps.len());
    for w in image.windows(2) {
        steps.push(match (w[1].x - w[0].x, w[1].y - w[0].y) {
            (1, 0) => Step::Right,
            (0, 1) => Step::Up,
            _ => return Err(Error::Precondition(format!("reflection breaks at {} -> {}", w[0], w[1]))),
        });
    }
    steps.extend_from_slice(&p.steps[q..]);
    Ok(Path::new(image[0], steps))
}

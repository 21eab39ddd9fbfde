//! Trapped positions and the sign-reversing involution on even orthogonal
//! path families.
//!
//! Both kinds of site live on an antidiagonal `x + y = 2D + 1`. A crossing is
//! an o-horizontal step `(D−1,D+1) → (D+1,D+1)` jumping over the vertical
//! steps `(D,D) → (D,D+1) → (D,D+2)` of another path. A trapped position is a
//! vacancy `V` on that antidiagonal strictly above `(D+1,D)` such that every
//! vertex from `(D+1,D)` up to `V + (1,−1)` is a left turn and `V + (−1,1)`
//! is a right turn. The involution turns the site of smallest `D` into the
//! other kind.

use std::collections::HashMap;

use super::{Layout, LatticePoint, PathFamily, Step};
use crate::error::{Error, Result};
use crate::symfunc::CharacterFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    /// Path `over` jumps over path `under` at `(D, D+1)`.
    Crossing { d: i64, over: usize, under: usize },
    Trapped { vacancy: LatticePoint, d: i64 },
}

impl Site {
    pub fn d(&self) -> i64 {
        match *self {
            Site::Crossing { d, .. } | Site::Trapped { d, .. } => d,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Turn {
    /// Horizontal in, vertical out.
    Left,
    /// Vertical in, horizontal out.
    Right,
    Other,
}

/// Which path visits each vertex, and at which index of its point list.
fn occupancy(pf: &PathFamily) -> HashMap<LatticePoint, (usize, usize)> {
    let mut occ = HashMap::new();
    for (i, p) in pf.paths.iter().enumerate() {
        for (k, v) in p.points().into_iter().enumerate() {
            occ.insert(v, (i, k));
        }
    }
    occ
}

fn turn_at(pf: &PathFamily, occ: &HashMap<LatticePoint, (usize, usize)>, v: LatticePoint) -> Option<Turn> {
    let &(i, k) = occ.get(&v)?;
    let steps = &pf.paths[i].steps;
    if k == 0 || k == steps.len() {
        return Some(Turn::Other);
    }
    Some(match (steps[k - 1], steps[k]) {
        (Step::Right, Step::Up) => Turn::Left,
        (Step::Up, Step::Right) => Turn::Right,
        _ => Turn::Other,
    })
}

/// How a trapped position looks. `Diagonal` is the only kind in the
/// columnwise layout; the other two occur hookwise when the vacancy reaches
/// the region `x ≤ 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Trap {
    /// Vacancy `V` on `x + y = 2D + 1` with a right turn at `V + (−1,1)`.
    Diagonal,
    /// Vacancy `V = (1, 2D)` and `(0, 2D)`, with a path stepping right from
    /// `(0, 2D+1)`.
    Axis,
    /// A path steps right to `(x1, 2D+1)`, down to `(x1, 2D)` and right along
    /// `y = 2D` to the left turn at `(1, 2D)`; the vacancy is `(x1−1, 2D)`.
    Left,
}

/// All vertices `(x, 2D+1−x)` for `lo ≤ x ≤ D+1` are left turns.
fn left_turn_chain(pf: &PathFamily, occ: &HashMap<LatticePoint, (usize, usize)>, d: i64, lo: i64) -> bool {
    (lo..=d + 1).all(|x| turn_at(pf, occ, LatticePoint::new(x, 2 * d + 1 - x)) == Some(Turn::Left))
}

fn trapped(pf: &PathFamily) -> Vec<(LatticePoint, i64, Trap)> {
    let occ = occupancy(pf);
    let vacant = |p: LatticePoint| !occ.contains_key(&p);
    let hook = pf.model.layout == Layout::Hookwise;
    let mut out = Vec::new();
    for p in &pf.paths {
        let pts = p.points();
        for k in 1..pts.len() {
            let (a, b) = (pts[k - 1], pts[k]);
            let next = p.steps.get(k).copied();
            match (p.steps[k - 1], next) {
                // right turn at b
                (Step::Up, Some(Step::Right)) => {
                    let v = LatticePoint::new(b.x + 1, b.y - 1);
                    let level = v.level();
                    if level % 2 != 0 && vacant(v) {
                        let d = (level - 1) / 2;
                        if v.x <= d && left_turn_chain(pf, &occ, d, v.x + 1) {
                            out.push((v, d, Trap::Diagonal));
                        }
                    }
                }
                (Step::Right, _) if hook && a.x == 0 && a.y % 2 == 1 => {
                    let d = (a.y - 1) / 2;
                    let (v, w) = (LatticePoint::new(1, 2 * d), LatticePoint::new(0, 2 * d));
                    if d >= 1 && vacant(v) && vacant(w) && left_turn_chain(pf, &occ, d, 2) {
                        out.push((v, d, Trap::Axis));
                    }
                }
                (Step::Right, Some(Step::Down)) if hook && b.y % 2 == 1 => {
                    let d = (b.y - 1) / 2;
                    let run = p.steps[k + 1..].iter().take_while(|&&s| s == Step::Right).count() as i64;
                    let v = LatticePoint::new(b.x - 1, 2 * d);
                    if d >= 1 && b.x + run == 1 && vacant(v) && left_turn_chain(pf, &occ, d, 1) {
                        out.push((v, d, Trap::Left));
                    }
                }
                _ => {}
            }
        }
    }
    out.sort_by_key(|&(v, d, _)| (d, v.x, v.y));
    out.dedup();
    out
}

/// Vacancies of all trapped positions, by increasing distance `2D + 1` from
/// the origin.
pub fn find_trapped_positions(pf: &PathFamily) -> Vec<LatticePoint> {
    trapped(pf).into_iter().map(|(v, _, _)| v).collect()
}

/// Crossings and trapped positions, by increasing `D`.
pub fn find_sites(pf: &PathFamily) -> Vec<Site> {
    if pf.model.family != CharacterFamily::OEven {
        return Vec::new();
    }
    let occ = occupancy(pf);
    let mut sites = Vec::new();
    for (i, p) in pf.paths.iter().enumerate() {
        let mut q = p.start;
        for &s in &p.steps {
            if s == Step::OHoriz {
                let mid = LatticePoint::new(q.x + 1, q.y);
                if let Some(&(j, _)) = occ.get(&mid) {
                    sites.push(Site::Crossing { d: q.x + 1, over: i, under: j });
                }
            }
            q = q.step(s);
        }
    }
    for (vacancy, d, _) in trapped(pf) {
        sites.push(Site::Trapped { vacancy, d });
    }
    sites.sort_by_key(|s| s.d());
    sites
}

/// Replaces the steps `a, b` through vertex `k` of path `i` by `b, a`.
fn flip_turn(pf: &mut PathFamily, i: usize, k: usize) {
    pf.paths[i].steps.swap(k - 1, k);
}

fn malformed(what: String) -> Error {
    Error::MalformedFamily(what)
}

fn resolve_crossing(pf: &PathFamily, d: i64, over: usize, under: usize) -> Result<PathFamily> {
    let occ = occupancy(pf);
    let corner = LatticePoint::new(d + 1, d);
    if occ.contains_key(&corner) {
        return Err(malformed(format!("crossing at D = {d} with {corner} occupied")));
    }
    let pp = &pf.paths[over];
    let qp = &pf.paths[under];
    let pk = pp.points().iter().position(|&v| v == LatticePoint::new(d - 1, d + 1)).expect("o-step start");
    let qk = qp.points().iter().position(|&v| v == LatticePoint::new(d, d)).ok_or_else(|| {
        malformed(format!("path {under} reaches ({d},{}) from the side", d + 1))
    })?;
    if qp.steps.get(qk) != Some(&Step::Up) || qp.steps.get(qk + 1) != Some(&Step::Up) {
        return Err(malformed(format!("path {under} does not pass ({d},{}) vertically", d + 1)));
    }
    let mut out = pf.clone();
    let mut new_under = qp.steps[..qk].to_vec();
    new_under.extend([Step::Right, Step::Up]);
    new_under.extend_from_slice(&pp.steps[pk + 1..]);
    let mut new_over = pp.steps[..pk].to_vec();
    new_over.extend([Step::Right, Step::Up]);
    new_over.extend_from_slice(&qp.steps[qk + 2..]);
    out.paths[under].steps = new_under;
    out.paths[over].steps = new_over;
    out.sigma.swap(under, over);

    // walk up the antidiagonal to the first vacancy and pull its left turn in
    let occ = occupancy(&out);
    let level = 2 * d + 1;
    let hook = out.model.layout == Layout::Hookwise;
    let mut x = d + 1;
    while occ.contains_key(&LatticePoint::new(x, level - x)) && !(hook && x == 1) {
        x -= 1;
    }
    let below = LatticePoint::new(x + 1, level - x - 1);
    if x == 1 && hook && occ.contains_key(&LatticePoint::new(1, 2 * d)) {
        // the chain reaches the axis: fold the run along y = 2D up by one
        let axis = LatticePoint::new(1, 2 * d);
        if turn_at(&out, &occ, axis) != Some(Turn::Left) {
            return Err(malformed(format!("no left turn at {axis}")));
        }
        let (i, k) = occ[&axis];
        let steps = &mut out.paths[i].steps;
        let run = steps[..k].iter().rev().take_while(|&&s| s == Step::Right).count();
        let j = k - run;
        if j == 0 || steps[j - 1] != Step::Down {
            return Err(malformed(format!("the run into {axis} does not start with a down step")));
        }
        if run == 1 {
            // down, right, up at the axis becomes a single right step
            steps.splice(j - 1..k + 1, [Step::Right]);
        } else {
            let corner = out.paths[i].points()[j];
            if occ.contains_key(&LatticePoint::new(corner.x + 1, corner.y + 1)) {
                return Err(malformed(format!("no room above {corner}")));
            }
            out.paths[i].steps.swap(j - 1, j);
        }
        return Ok(out);
    }
    if turn_at(&out, &occ, below) != Some(Turn::Left) {
        return Err(malformed(format!("no left turn at {below} under the vacancy")));
    }
    let (i, k) = occ[&below];
    flip_turn(&mut out, i, k);
    Ok(out)
}

fn release_trap(pf: &PathFamily, v: LatticePoint, d: i64) -> Result<PathFamily> {
    let (_, _, kind) = *trapped(pf)
        .iter()
        .find(|&&(w, e, _)| w == v && e == d)
        .ok_or_else(|| malformed(format!("{v} is not trapped")))?;
    let mut out = pf.clone();
    let occ = occupancy(&out);
    match kind {
        Trap::Diagonal => {
            let (i, k) = occ[&LatticePoint::new(v.x - 1, v.y + 1)];
            flip_turn(&mut out, i, k);
        }
        Trap::Axis => {
            let (i, k) = occ[&LatticePoint::new(0, 2 * d + 1)];
            out.paths[i].steps.splice(k..k + 1, [Step::Down, Step::Right, Step::Up]);
        }
        Trap::Left => {
            let (i, k) = occ[&LatticePoint::new(v.x + 1, v.y + 1)];
            flip_turn(&mut out, i, k);
        }
    }

    let occ = occupancy(&out);
    let (a, b) = (LatticePoint::new(d + 1, d), LatticePoint::new(d, d + 1));
    if turn_at(&out, &occ, a) != Some(Turn::Left) || turn_at(&out, &occ, b) != Some(Turn::Left) {
        return Err(malformed(format!("no pair of left turns at {a}, {b}")));
    }
    let (ia, ka) = occ[&a];
    let (ib, kb) = occ[&b];
    let pa = &out.paths[ia];
    let pb = &out.paths[ib];
    // path a: (D,D) → (D+1,D) → (D+1,D+1); path b: (D−1,D+1) → (D,D+1) → (D,D+2)
    let mut new_a = pa.steps[..ka - 1].to_vec();
    new_a.extend([Step::Up, Step::Up]);
    new_a.extend_from_slice(&pb.steps[kb + 1..]);
    let mut new_b = pb.steps[..kb - 1].to_vec();
    new_b.push(Step::OHoriz);
    new_b.extend_from_slice(&pa.steps[ka + 1..]);
    out.paths[ia].steps = new_a;
    out.paths[ib].steps = new_b;
    out.sigma.swap(ia, ib);
    Ok(out)
}

/// Applies the local change at the site of smallest `D`.
pub fn involution_step(pf: &PathFamily) -> Result<PathFamily> {
    let sites = find_sites(pf);
    let first = *sites.first().ok_or(Error::NoSite)?;
    if sites.get(1).is_some_and(|s| s.d() == first.d()) {
        return Err(malformed(format!("two sites with D = {}", first.d())));
    }
    let out = match first {
        Site::Crossing { d, over, under } => resolve_crossing(pf, d, over, under)?,
        Site::Trapped { vacancy, d } => release_trap(pf, vacancy, d)?,
    };
    if out.paths.iter().any(|p| !p.is_legal(&out.model)) {
        return Err(malformed("the local change leaves the model".into()));
    }
    Ok(out)
}

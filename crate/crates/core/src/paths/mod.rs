//! Lattice path models for the four families.
//!
//! Two layouts are supported. The columnwise layout reads a tableau column by
//! column, one path per column; the hookwise layout reads it along principal
//! hooks and underlies the Giambelli-type determinants.

use std::fmt;

use crate::laurent::LaurentPoly;
use crate::symfunc::CharacterFamily;

mod bijection;
mod gf;
mod involution;
mod lgv;
mod reflection;
mod render;

pub use bijection::{paths_to_tableau, tableau_to_paths, tableau_to_paths_hookwise};
pub use gf::{enumerate_paths, path_gf, path_gf_by_diag_count, path_gf_by_special_count};
pub use involution::{find_sites, find_trapped_positions, involution_step, Site};
pub use lgv::{
    columnwise_endpoints, hookwise_endpoints, is_strongly_non_intersecting, lgv_character, lgv_families,
    lgv_signed_sum, Endpoints,
};
pub use reflection::{modified_weight, reflect_initial_segment};
pub use render::{render_ascii, render_svg};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn step(self, s: Step) -> Self {
        let (dx, dy) = s.delta();
        LatticePoint { x: self.x + dx, y: self.y + dy }
    }

    /// `x + y`, the antidiagonal the point lies on.
    pub fn level(self) -> i64 {
        self.x + self.y
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Right,
    Up,
    Down,
    /// `(1,1)`, odd orthogonal models only, starting on `y = x`.
    Diag,
    /// `(2,0)`, even orthogonal models only, starting on `y = x + 2`.
    OHoriz,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Up => (0, 1),
            Step::Down => (0, -1),
            Step::Diag => (1, 1),
            Step::OHoriz => (2, 0),
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Step::Right | Step::OHoriz)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Step::Up | Step::Down)
    }

    /// Diagonal and o-horizontal steps.
    pub fn is_special(self) -> bool {
        matches!(self, Step::Diag | Step::OHoriz)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Layout {
    Columnwise,
    Hookwise,
}

/// Step set, boundary and weights of one path model.
///
/// `m` fixes the labelling origin: unit horizontal steps are numbered by
/// `x + y − 2m` (columnwise, and hookwise for `x ≥ 1`) or `y − 2m` (hookwise,
/// `x ≤ 0`). For the Schur model `m` plays the role of `l(μ)`. It may be
/// negative when the model is used on arbitrary endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PathModel {
    pub family: CharacterFamily,
    pub layout: Layout,
    pub n: usize,
    pub m: i64,
}

impl PathModel {
    pub fn columnwise(family: CharacterFamily, n: usize, m: i64) -> Self {
        PathModel { family, layout: Layout::Columnwise, n, m }
    }

    pub fn hookwise(family: CharacterFamily, n: usize, m: i64) -> Self {
        assert!(family != CharacterFamily::Gl, "the hookwise layout covers sp, so and o");
        PathModel { family, layout: Layout::Hookwise, n, m }
    }

    /// Boundary rules on a single vertex.
    pub fn point_ok(&self, p: LatticePoint) -> bool {
        match (self.layout, self.family) {
            (Layout::Columnwise, CharacterFamily::Gl) => true,
            (Layout::Columnwise, _) => p.y >= p.x - 1,
            (Layout::Hookwise, _) => {
                (p.x > 0 || p.y >= 2 * self.m) && (p.x < 0 || (p.y >= 2 * self.m - p.x && p.y >= p.x - 1))
            }
        }
    }

    /// Label of a unit horizontal step starting at `p`, counted from 0.
    fn label(&self, p: LatticePoint) -> i64 {
        if self.layout == Layout::Hookwise && p.x <= 0 {
            p.y - 2 * self.m
        } else {
            p.x + p.y - 2 * self.m
        }
    }

    /// Exponent vector of the step `s` taken from `p`, or `None` if the step
    /// is not allowed there. Boundary rules on the endpoint are included.
    pub fn step_weight(&self, p: LatticePoint, s: Step) -> Option<Vec<i32>> {
        let q = p.step(s);
        if !self.point_ok(p) || !self.point_ok(q) {
            return None;
        }
        let hook = self.layout == Layout::Hookwise;
        let mut w = vec![0i32; self.n];
        match s {
            Step::Right => {
                let t = self.label(p);
                if self.family == CharacterFamily::Gl {
                    if t < 0 || t >= self.n as i64 {
                        return None;
                    }
                    w[t as usize] = 1;
                } else {
                    if t < 0 || t >= 2 * self.n as i64 {
                        return None;
                    }
                    let v = (t / 2) as usize;
                    w[v] = if t % 2 == 0 { -1 } else { 1 };
                }
            }
            Step::Up if hook && p.x <= 0 => return None,
            Step::Down if !hook || p.x > 0 => return None,
            Step::Up | Step::Down => {}
            Step::Diag => {
                if self.family != CharacterFamily::SoOdd || p.x != p.y {
                    return None;
                }
            }
            Step::OHoriz => {
                if self.family != CharacterFamily::OEven || p.y != p.x + 2 || (hook && p.x < 0) {
                    return None;
                }
            }
        }
        Some(w)
    }

    /// Steps worth trying in this model.
    pub fn step_set(&self) -> &'static [Step] {
        match (self.layout, self.family) {
            (Layout::Columnwise, CharacterFamily::SoOdd) => &[Step::Right, Step::Up, Step::Diag],
            (Layout::Columnwise, CharacterFamily::OEven) => &[Step::Right, Step::Up, Step::OHoriz],
            (Layout::Columnwise, _) => &[Step::Right, Step::Up],
            (Layout::Hookwise, CharacterFamily::SoOdd) => &[Step::Right, Step::Up, Step::Down, Step::Diag],
            (Layout::Hookwise, CharacterFamily::OEven) => &[Step::Right, Step::Up, Step::Down, Step::OHoriz],
            (Layout::Hookwise, _) => &[Step::Right, Step::Up, Step::Down],
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        Path { start, steps }
    }

    /// Lattice vertices visited, including both endpoints. The midpoint of an
    /// o-horizontal step is not a vertex.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for &s in &self.steps {
            p = p.step(s);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> LatticePoint {
        self.steps.iter().fold(self.start, |p, &s| p.step(s))
    }

    /// Exponent vector of the path weight, or `None` if some step is illegal.
    pub fn weight_exps(&self, model: &PathModel) -> Option<Vec<i32>> {
        let mut w = vec![0i32; model.n];
        let mut p = self.start;
        for &s in &self.steps {
            let sw = model.step_weight(p, s)?;
            for (a, b) in w.iter_mut().zip(sw) {
                *a += b;
            }
            p = p.step(s);
        }
        Some(w)
    }

    pub fn weight(&self, model: &PathModel) -> Option<LaurentPoly> {
        self.weight_exps(model).map(|e| LaurentPoly::monomial(model.n, e, 1))
    }

    pub fn is_legal(&self, model: &PathModel) -> bool {
        self.weight_exps(model).is_some()
    }

    pub fn special_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.is_special()).count()
    }
}

/// Paths from `paths[i].start` to `ends[sigma[i]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PathFamily {
    pub model: PathModel,
    pub paths: Vec<Path>,
    pub ends: Vec<LatticePoint>,
    pub sigma: Vec<usize>,
}

impl PathFamily {
    pub fn starts(&self) -> Vec<LatticePoint> {
        self.paths.iter().map(|p| p.start).collect()
    }

    /// `sgn(σ)` as ±1.
    pub fn sign(&self) -> i32 {
        permutation_sign(&self.sigma)
    }

    /// Product of path weights, without the sign.
    pub fn weight_exps(&self) -> Option<Vec<i32>> {
        let mut w = vec![0i32; self.model.n];
        for p in &self.paths {
            for (a, b) in w.iter_mut().zip(p.weight_exps(&self.model)?) {
                *a += b;
            }
        }
        Some(w)
    }

    /// `sgn(σ)` times the product of path weights.
    pub fn signed_weight(&self) -> Option<LaurentPoly> {
        self.weight_exps().map(|e| LaurentPoly::monomial(self.model.n, e, self.sign()))
    }
}

pub(crate) fn permutation_sign(sigma: &[usize]) -> i32 {
    let mut seen = vec![false; sigma.len()];
    let mut sign = 1;
    for i in 0..sigma.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = sigma[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

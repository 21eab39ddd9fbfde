//! Path generating functions by memoized dynamic programming.

use std::collections::HashMap;

use super::{Layout, LatticePoint, Path, PathModel, Step};
use crate::laurent::LaurentPoly;

/// Whether `to` can still be reached from `p`, judged by monotonicity only.
fn may_reach(model: &PathModel, p: LatticePoint, to: LatticePoint) -> bool {
    if p.x > to.x {
        return false;
    }
    match model.layout {
        Layout::Columnwise => p.y <= to.y,
        // y only grows once x >= 1, and never drops below 2m − 1 there
        Layout::Hookwise => p.x <= 0 || p.y <= to.y,
    }
}

struct Dp<'a> {
    model: &'a PathModel,
    to: LatticePoint,
    memo: HashMap<LatticePoint, Vec<LaurentPoly>>,
}

impl Dp<'_> {
    /// Generating functions from `p` to the target, indexed by the number of
    /// special steps used.
    fn go(&mut self, p: LatticePoint) -> Vec<LaurentPoly> {
        if let Some(v) = self.memo.get(&p) {
            return v.clone();
        }
        let n = self.model.n;
        let mut out: Vec<LaurentPoly> = Vec::new();
        if p == self.to {
            out.push(LaurentPoly::one(n));
        } else if may_reach(self.model, p, self.to) {
            for &s in self.model.step_set() {
                let Some(w) = self.model.step_weight(p, s) else { continue };
                let sub = self.go(p.step(s));
                let shift = usize::from(s.is_special());
                for (k, g) in sub.iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    while out.len() <= k + shift {
                        out.push(LaurentPoly::zero(n));
                    }
                    out[k + shift].add_shifted(g, &w);
                }
            }
        }
        self.memo.insert(p, out.clone());
        out
    }
}

/// Weighted count of paths from `from` to `to`, split by the number of
/// diagonal or o-horizontal steps.
pub fn path_gf_by_special_count(model: &PathModel, from: LatticePoint, to: LatticePoint) -> Vec<LaurentPoly> {
    if !model.point_ok(from) || !model.point_ok(to) {
        return Vec::new();
    }
    let mut dp = Dp { model, to, memo: HashMap::new() };
    dp.go(from)
}

/// Weighted sum over all legal paths from `from` to `to`; 0 if unreachable.
pub fn path_gf(model: &PathModel, from: LatticePoint, to: LatticePoint) -> LaurentPoly {
    path_gf_by_special_count(model, from, to)
        .into_iter()
        .fold(LaurentPoly::zero(model.n), |acc, g| acc + g)
}

/// As [`path_gf`], restricted to paths with exactly `k` special steps.
pub fn path_gf_by_diag_count(model: &PathModel, from: LatticePoint, to: LatticePoint, k: usize) -> LaurentPoly {
    path_gf_by_special_count(model, from, to)
        .into_iter()
        .nth(k)
        .unwrap_or_else(|| LaurentPoly::zero(model.n))
}

/// Every legal path from `from` to `to`.
pub fn enumerate_paths(model: &PathModel, from: LatticePoint, to: LatticePoint) -> Vec<Path> {
    fn rec(model: &PathModel, p: LatticePoint, to: LatticePoint, cur: &mut Vec<Step>, out: &mut Vec<Path>, start: LatticePoint) {
        if p == to {
            out.push(Path::new(start, cur.clone()));
            return;
        }
        if !may_reach(model, p, to) {
            return;
        }
        for &s in model.step_set() {
            if model.step_weight(p, s).is_some() {
                cur.push(s);
                rec(model, p.step(s), to, cur, out, start);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if model.point_ok(from) && model.point_ok(to) {
        rec(model, from, to, &mut Vec::new(), &mut out, from);
    }
    out
}

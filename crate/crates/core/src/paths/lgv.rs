//! Start and end points of the character setups and a brute-force LGV engine.

use std::collections::HashSet;

use super::{enumerate_paths, LatticePoint, Path, PathFamily, PathModel, Step};
use crate::error::{require, Result};
use crate::laurent::LaurentPoly;
use crate::partition::SkewShape;
use crate::symfunc::CharacterFamily;
use crate::tableaux::check_shape;

/// Model plus matched start and end points. `sign` is the extra factor the
/// signed family sum must be multiplied by to give the character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoints {
    pub model: PathModel,
    pub starts: Vec<LatticePoint>,
    pub ends: Vec<LatticePoint>,
    pub sign: i32,
}

/// One path per column `c = 1..N`:
/// `S_c = (μ'_c−c+1, 2m−μ'_c+c−1)`, `E_c = (λ'_c−c+1, 2n+2m−λ'_c+c−1)`.
/// Schur paths use `n` in place of `2n` and take `m = l(μ)`.
pub fn columnwise_endpoints(
    family: CharacterFamily,
    shape: &SkewShape,
    n: usize,
    m: usize,
    big_n: usize,
) -> Result<Endpoints> {
    check_shape(family, shape, n, m)?;
    let lam1 = shape.outer.first_part();
    require(big_n >= lam1, || format!("N >= λ1 fails: {big_n} < {lam1}"))?;
    let (m, height) = if family == CharacterFamily::Gl {
        (shape.inner.len() as i64, n as i64)
    } else {
        (m as i64, 2 * n as i64)
    };
    let mut starts = Vec::with_capacity(big_n);
    let mut ends = Vec::with_capacity(big_n);
    for c in 1..=big_n {
        let ci = c as i64;
        let mc = shape.inner.conj_part(c) as i64;
        let lc = shape.outer.conj_part(c) as i64;
        starts.push(LatticePoint::new(mc - ci + 1, 2 * m - mc + ci - 1));
        ends.push(LatticePoint::new(lc - ci + 1, height + 2 * m - lc + ci - 1));
    }
    Ok(Endpoints { model: PathModel::columnwise(family, n, m), starts, ends, sign: 1 })
}

/// Principal-hook setup: starts `A_1..A_p, D_1..D_q`, ends `B_1..B_p,
/// C_1..C_q` with `λ = (α|β)`, `μ = (γ|δ)` and overall sign `(−1)^q`.
pub fn hookwise_endpoints(family: CharacterFamily, shape: &SkewShape, n: usize, m: usize) -> Result<Endpoints> {
    require(family != CharacterFamily::Gl, || "the hookwise layout covers sp, so and o".to_string())?;
    check_shape(family, shape, n, m)?;
    let fl = shape.outer.to_frobenius();
    let fm = shape.inner.to_frobenius();
    let (n2m, m2) = (2 * n as i64 + 2 * m as i64, 2 * m as i64);
    let mut starts = Vec::new();
    let mut ends = Vec::new();
    for &a in &fl.arms {
        starts.push(LatticePoint::new(-(a as i64), n2m - 1));
    }
    for &d in &fm.legs {
        starts.push(LatticePoint::new(d as i64 + 1, m2 - d as i64 - 1));
    }
    for &b in &fl.legs {
        ends.push(LatticePoint::new(b as i64 + 1, n2m - b as i64 - 1));
    }
    for &g in &fm.arms {
        ends.push(LatticePoint::new(-(g as i64), m2));
    }
    let sign = if fm.rank() % 2 == 1 { -1 } else { 1 };
    Ok(Endpoints { model: PathModel::hookwise(family, n, m as i64), starts, ends, sign })
}

struct Candidate {
    path: Path,
    verts: Vec<LatticePoint>,
}

/// Every weakly non-intersecting family (no shared lattice vertex) from
/// `starts` to a permutation of `ends`.
pub fn lgv_families(model: &PathModel, starts: &[LatticePoint], ends: &[LatticePoint]) -> Vec<PathFamily> {
    assert_eq!(starts.len(), ends.len(), "as many starts as ends");
    let k = starts.len();
    let cands: Vec<Vec<Vec<Candidate>>> = starts
        .iter()
        .map(|&s| {
            ends.iter()
                .map(|&e| {
                    enumerate_paths(model, s, e)
                        .into_iter()
                        .map(|path| Candidate { verts: path.points(), path })
                        .collect()
                })
                .collect()
        })
        .collect();

    struct Search<'a> {
        cands: &'a [Vec<Vec<Candidate>>],
        used_end: Vec<bool>,
        occupied: HashSet<LatticePoint>,
        chosen: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) {
            if i == self.cands.len() {
                self.out.push(self.chosen.clone());
                return;
            }
            for j in 0..self.cands[i].len() {
                if self.used_end[j] {
                    continue;
                }
                self.used_end[j] = true;
                for (idx, c) in self.cands[i][j].iter().enumerate() {
                    if c.verts.iter().any(|v| self.occupied.contains(v)) {
                        continue;
                    }
                    self.occupied.extend(c.verts.iter().copied());
                    self.chosen.push((j, idx));
                    self.go(i + 1);
                    self.chosen.pop();
                    for v in &c.verts {
                        self.occupied.remove(v);
                    }
                }
                self.used_end[j] = false;
            }
        }
    }
    let mut search = Search {
        cands: &cands,
        used_end: vec![false; k],
        occupied: HashSet::new(),
        chosen: Vec::with_capacity(k),
        out: Vec::new(),
    };
    search.go(0);
    search
        .out
        .into_iter()
        .map(|choice| PathFamily {
            model: *model,
            paths: choice.iter().enumerate().map(|(i, &(j, idx))| cands[i][j][idx].path.clone()).collect(),
            ends: ends.to_vec(),
            sigma: choice.iter().map(|&(j, _)| j).collect(),
        })
        .collect()
}

/// Brute-force `Σ sgn(σ) · weight` over weakly non-intersecting families.
pub fn lgv_signed_sum(model: &PathModel, starts: &[LatticePoint], ends: &[LatticePoint]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(model.n);
    for fam in lgv_families(model, starts, ends) {
        let w = fam.weight_exps().expect("enumerated paths are legal");
        acc.add_shifted(&LaurentPoly::constant(model.n, fam.sign()), &w);
    }
    acc
}

/// No two paths share a point of the plane. Beyond lattice vertices this
/// only adds the midpoints of o-horizontal steps.
pub fn is_strongly_non_intersecting(pf: &PathFamily) -> bool {
    let mut seen = HashSet::new();
    for p in &pf.paths {
        let mut q = p.start;
        let mut mine = vec![(2 * q.x, 2 * q.y)];
        for &s in &p.steps {
            let r = q.step(s);
            if s == Step::OHoriz {
                mine.push((2 * q.x + 2, 2 * q.y));
            }
            mine.push((2 * r.x, 2 * r.y));
            q = r;
        }
        for pt in mine {
            if !seen.insert(pt) {
                return false;
            }
        }
    }
    true
}

/// The character as a signed sum over columnwise path families, `N`
/// defaulting to `λ1`.
pub fn lgv_character(
    family: CharacterFamily,
    shape: &SkewShape,
    n: usize,
    m: usize,
    big_n: Option<usize>,
) -> Result<LaurentPoly> {
    let ep = columnwise_endpoints(family, shape, n, m, big_n.unwrap_or(shape.outer.first_part()))?;
    let sum = lgv_signed_sum(&ep.model, &ep.starts, &ep.ends);
    Ok(if ep.sign < 0 { -sum } else { sum })
}
